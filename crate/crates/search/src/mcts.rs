use std::time::Instant;

use othello_core::{GameState, GameStatus, Move};
use rand::Rng;

use crate::{SearchError, SearchLimits, SearchResult};

/// A reasonable UCB1 exploration constant (sqrt(2)).
pub const DEFAULT_EXPLORATION: f64 = std::f64::consts::SQRT_2;

struct Node {
    state: GameState,
    /// Move that led here from the parent; unused on the root.
    edge: Move,
    parent: usize,
    children: Vec<usize>,
    untried: Vec<Move>,
    visits: u64,
    /// Win credit from the perspective of the player who moved into
    /// this node: 1 per win, 0.5 per draw.
    wins: f64,
}

/// UCT monte-carlo tree search: UCB1 child selection, one expansion per
/// iteration, uniform-random playout to the end of the game, and
/// win/draw/loss backpropagation. Returns the most-visited root child,
/// breaking ties toward the row-major earlier move.
///
/// The playout budget is `limits.node_budget` (one node = one playout),
/// bounded by `limits.time_budget` when set; `limits.max_depth` does
/// not apply. `SearchResult::value` is the chosen child's win rate
/// mapped to `[-10000, 10000]`.
pub fn mcts_choose<R: Rng + ?Sized>(
    state: &GameState,
    limits: &SearchLimits,
    exploration: f64,
    rng: &mut R,
) -> Result<SearchResult, SearchError> {
    run_mcts(state, limits, exploration, rng).map(|(result, _)| result)
}

/// Like [`mcts_choose`] but also returns the per-move visit counts of
/// the root children, for diagnostics.
pub fn mcts_root_visits<R: Rng + ?Sized>(
    state: &GameState,
    limits: &SearchLimits,
    exploration: f64,
    rng: &mut R,
) -> Result<(SearchResult, Vec<(Move, u64)>), SearchError> {
    run_mcts(state, limits, exploration, rng)
}

fn run_mcts<R: Rng + ?Sized>(
    state: &GameState,
    limits: &SearchLimits,
    exploration: f64,
    rng: &mut R,
) -> Result<(SearchResult, Vec<(Move, u64)>), SearchError> {
    if state.is_terminal() {
        return Err(SearchError::TerminalState);
    }
    if limits.node_budget.is_none() && limits.time_budget.is_none() {
        return Err(SearchError::NoLimit);
    }
    let started = Instant::now();
    let deadline = limits.time_budget.map(|budget| started + budget);
    let playout_budget = limits.node_budget.unwrap_or(u64::MAX);

    let mut nodes = vec![Node {
        state: *state,
        edge: Move::Pass,
        parent: usize::MAX,
        children: Vec::new(),
        untried: state.legal_moves().expect("state is not terminal"),
        visits: 0,
        wins: 0.0,
    }];
    let mut playouts = 0u64;
    let mut max_depth_seen = 0u32;

    while playouts < playout_budget {
        if playouts > 0 {
            if let Some(d) = deadline {
                if Instant::now() >= d {
                    break;
                }
            }
        }

        // Selection: walk UCB1-best children until a node still has
        // untried moves or the game is over there.
        let mut path = vec![0usize];
        let mut cur = 0usize;
        loop {
            if nodes[cur].state.is_terminal() {
                break;
            }
            if !nodes[cur].untried.is_empty() {
                // Expansion: attach one random untried move.
                let pick = rng.random_range(0..nodes[cur].untried.len());
                let mv = nodes[cur].untried.swap_remove(pick);
                let child_state = nodes[cur].state.apply_move(mv).expect("untried move is legal");
                let untried = if child_state.is_terminal() {
                    Vec::new()
                } else {
                    child_state.legal_moves().expect("state is not terminal")
                };
                let child = Node {
                    state: child_state,
                    edge: mv,
                    parent: cur,
                    children: Vec::new(),
                    untried,
                    visits: 0,
                    wins: 0.0,
                };
                nodes.push(child);
                let idx = nodes.len() - 1;
                nodes[cur].children.push(idx);
                path.push(idx);
                cur = idx;
                break;
            }
            let ln_parent = (nodes[cur].visits.max(1) as f64).ln();
            let next = *nodes[cur]
                .children
                .iter()
                .max_by(|&&a, &&b| {
                    let ucb = |i: usize| {
                        let n = &nodes[i];
                        n.wins / n.visits as f64
                            + exploration * (ln_parent / n.visits as f64).sqrt()
                    };
                    ucb(a).total_cmp(&ucb(b))
                })
                .expect("expanded node has children");
            path.push(next);
            cur = next;
        }
        max_depth_seen = max_depth_seen.max(path.len() as u32 - 1);

        // Playout: uniform random moves to the end of the game.
        let mut playout_state = nodes[cur].state;
        while !playout_state.is_terminal() {
            let moves = playout_state.legal_moves().expect("state is not terminal");
            let mv = moves[rng.random_range(0..moves.len())];
            playout_state = playout_state.apply_move(mv).expect("generated move is legal");
        }
        let winner = match playout_state.status() {
            GameStatus::Finished { winner, .. } => winner,
            GameStatus::Ongoing => unreachable!("playout ran to termination"),
        };

        // Backpropagation.
        for &idx in &path {
            nodes[idx].visits += 1;
            if idx != 0 {
                let mover = nodes[nodes[idx].parent].state.to_move();
                nodes[idx].wins += match winner {
                    Some(w) if w == mover => 1.0,
                    None => 0.5,
                    Some(_) => 0.0,
                };
            }
        }
        playouts += 1;
    }

    // Rank moves for the row-major tie-break.
    let move_rank = |mv: Move| match mv {
        Move::Place(c) => c.index(),
        Move::Pass => 64,
    };
    let &chosen = nodes[0]
        .children
        .iter()
        .max_by(|&&a, &&b| {
            (nodes[a].visits, std::cmp::Reverse(move_rank(nodes[a].edge)))
                .cmp(&(nodes[b].visits, std::cmp::Reverse(move_rank(nodes[b].edge))))
        })
        .expect("at least one playout expanded a root child");
    let win_rate = nodes[chosen].wins / nodes[chosen].visits as f64;
    let result = SearchResult {
        best_move: nodes[chosen].edge,
        value: ((win_rate * 2.0 - 1.0) * 10_000.0).round() as i32,
        depth_completed: max_depth_seen.max(1),
        nodes: playouts,
        elapsed: started.elapsed(),
    };
    let root_visits = nodes[0]
        .children
        .iter()
        .map(|&i| (nodes[i].edge, nodes[i].visits))
        .collect();
    Ok((result, root_visits))
}
