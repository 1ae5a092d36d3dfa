use std::time::Instant;

use othello_core::{GameState, PlayerColor};

use crate::heuristic::{evaluate, Heuristic};
use crate::{SearchError, SearchResult};

/// Exhaustive depth-limited minimax from the mover's perspective.
///
/// Ties at the root break to the first-best move in row-major
/// `legal_moves` order; negamax and alpha-beta follow the same rule, so
/// the three always agree on the chosen move.
pub fn minimax(
    state: &GameState,
    depth: u32,
    heuristic: &Heuristic,
) -> Result<SearchResult, SearchError> {
    if state.is_terminal() {
        return Err(SearchError::TerminalState);
    }
    if depth == 0 {
        return Err(SearchError::ZeroDepth);
    }
    let started = Instant::now();
    let perspective = state.to_move();
    let mut nodes = 1u64;
    let mut best = i32::MIN;
    let mut best_move = None;
    for mv in state.legal_moves().expect("state is not terminal") {
        let child = state.apply_move(mv).expect("generated move is legal");
        let value = minimax_value(&child, depth - 1, heuristic, perspective, &mut nodes);
        if value > best {
            best = value;
            best_move = Some(mv);
        }
    }
    Ok(SearchResult {
        best_move: best_move.expect("at least one legal move"),
        value: best,
        depth_completed: depth,
        nodes,
        elapsed: started.elapsed(),
    })
}

fn minimax_value(
    state: &GameState,
    depth: u32,
    heuristic: &Heuristic,
    perspective: PlayerColor,
    nodes: &mut u64,
) -> i32 {
    *nodes += 1;
    if depth == 0 || state.is_terminal() {
        return evaluate(state, heuristic, perspective);
    }
    // Whose level this is follows from the side to move, not from ply
    // parity; a pass hands consecutive turns to the same player.
    let maximizing = state.to_move() == perspective;
    let mut best = if maximizing { i32::MIN } else { i32::MAX };
    for mv in state.legal_moves().expect("state is not terminal") {
        let child = state.apply_move(mv).expect("generated move is legal");
        let value = minimax_value(&child, depth - 1, heuristic, perspective, nodes);
        best = if maximizing {
            best.max(value)
        } else {
            best.min(value)
        };
    }
    best
}

/// Depth-limited negamax: minimax folded into a single negated maximum,
/// relying on the evaluation being antisymmetric between the players.
/// Agrees with [`minimax`] in value and chosen move.
pub fn negamax(
    state: &GameState,
    depth: u32,
    heuristic: &Heuristic,
) -> Result<SearchResult, SearchError> {
    if state.is_terminal() {
        return Err(SearchError::TerminalState);
    }
    if depth == 0 {
        return Err(SearchError::ZeroDepth);
    }
    let started = Instant::now();
    let mut nodes = 1u64;
    let mut best = i32::MIN;
    let mut best_move = None;
    for mv in state.legal_moves().expect("state is not terminal") {
        let child = state.apply_move(mv).expect("generated move is legal");
        let value = -negamax_value(&child, depth - 1, heuristic, &mut nodes);
        if value > best {
            best = value;
            best_move = Some(mv);
        }
    }
    Ok(SearchResult {
        best_move: best_move.expect("at least one legal move"),
        value: best,
        depth_completed: depth,
        nodes,
        elapsed: started.elapsed(),
    })
}

fn negamax_value(state: &GameState, depth: u32, heuristic: &Heuristic, nodes: &mut u64) -> i32 {
    *nodes += 1;
    if depth == 0 || state.is_terminal() {
        return evaluate(state, heuristic, state.to_move());
    }
    let mut best = i32::MIN;
    for mv in state.legal_moves().expect("state is not terminal") {
        let child = state.apply_move(mv).expect("generated move is legal");
        best = best.max(-negamax_value(&child, depth - 1, heuristic, nodes));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use othello_core::Move;

    #[test]
    fn rejects_terminal_and_zero_depth() {
        let s = GameState::initial();
        let h = Heuristic::default();
        assert_eq!(minimax(&s, 0, &h).unwrap_err(), SearchError::ZeroDepth);
        let done = othello_core::GameState::from_parts(1, 2, PlayerColor::Black, 2).unwrap();
        assert_eq!(minimax(&done, 3, &h).unwrap_err(), SearchError::TerminalState);
        assert_eq!(negamax(&done, 3, &h).unwrap_err(), SearchError::TerminalState);
    }

    #[test]
    fn depth_one_is_evaluate_argmax() {
        let s = GameState::initial();
        let h = Heuristic::default();
        let result = minimax(&s, 1, &h).unwrap();
        let mut best = i32::MIN;
        let mut best_move = None;
        for mv in s.legal_moves().unwrap() {
            let v = evaluate(&s.apply_move(mv).unwrap(), &h, s.to_move());
            if v > best {
                best = v;
                best_move = Some(mv);
            }
        }
        assert_eq!(result.value, best);
        assert_eq!(result.best_move, best_move.unwrap());
        assert_eq!(negamax(&s, 1, &h).unwrap().value, best);
    }

    #[test]
    fn the_opening_is_symmetric_for_black() {
        // All four openings are rotations of each other; with the
        // symmetric default weights they tie and row-major order picks
        // d3 at every depth.
        let s = GameState::initial();
        let h = Heuristic::default();
        for depth in 1..=3 {
            let m = minimax(&s, depth, &h).unwrap();
            assert_eq!(m.best_move, Move::Place("d3".parse().unwrap()), "depth {depth}");
        }
    }
}
