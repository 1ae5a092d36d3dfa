use crate::state::GameState;

/// Counts the legal move sequences of exactly `depth` plies from
/// `state`. A pass is a ply like any other; sequences that hit a
/// terminal state before reaching `depth` are not counted.
///
/// This is the standard move-generator correctness oracle: the counts
/// are compared against an independent naive generator in tests.
pub fn perft(state: &GameState, depth: u32) -> u64 {
    if depth == 0 {
        return 1;
    }
    if state.is_terminal() {
        return 0;
    }
    let moves = state
        .legal_moves()
        .expect("non-terminal state has legal moves");
    if depth == 1 {
        return moves.len() as u64;
    }
    moves
        .iter()
        .map(|&mv| {
            let next = state.apply_move(mv).expect("generated move is legal");
            perft(&next, depth - 1)
        })
        .sum()
}
