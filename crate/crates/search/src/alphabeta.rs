use std::time::Instant;

use othello_core::{GameState, Move};

use crate::heuristic::{evaluate, Heuristic};
use crate::tt::{Bound, TranspositionEntry, TranspositionTable};
use crate::zobrist::ZobristTable;
use crate::{SearchError, SearchLimits, SearchResult, VALUE_INF};

/// Iterative deepening never needs to go deeper than a full game.
const MAX_ID_DEPTH: u32 = 64;

/// Signals that a budget tripped mid-iteration; the partial result is
/// discarded.
struct Aborted;

struct AbContext<'a> {
    heuristic: &'a Heuristic,
    zobrist: &'static ZobristTable,
    tt: Option<&'a mut TranspositionTable>,
    nodes: u64,
    deadline: Option<Instant>,
    node_budget: Option<u64>,
    /// Depth-1 iterations run with enforcement off so a move always
    /// comes back, whatever the budget.
    enforce_limits: bool,
}

impl AbContext<'_> {
    #[inline]
    fn over_budget(&self) -> bool {
        if !self.enforce_limits {
            return false;
        }
        if matches!(self.node_budget, Some(budget) if self.nodes > budget) {
            return true;
        }
        // The clock is only consulted every 1024 nodes.
        if self.nodes & 1023 == 0 {
            if let Some(deadline) = self.deadline {
                return Instant::now() >= deadline;
            }
        }
        false
    }
}

/// Depth-limited alpha-beta search over the window `(alpha, beta)`.
///
/// Fail-soft: the returned value may fall outside the window, in which
/// case it bounds the true value. With the full window
/// `(-VALUE_INF, VALUE_INF)` the root value and chosen move are
/// identical to [`crate::minimax`] at the same depth, while visiting at
/// most as many nodes.
///
/// When a transposition table is supplied, cached values are reused
/// only at matching depth and verified against the full stored
/// position, which keeps the root value bit-identical to a table-free
/// search; cached best moves are additionally used to order interior
/// moves. Root moves are never reordered, preserving the row-major
/// tie-break.
pub fn alphabeta(
    state: &GameState,
    depth: u32,
    heuristic: &Heuristic,
    alpha: i32,
    beta: i32,
    tt: Option<&mut TranspositionTable>,
) -> Result<SearchResult, SearchError> {
    if state.is_terminal() {
        return Err(SearchError::TerminalState);
    }
    if depth == 0 {
        return Err(SearchError::ZeroDepth);
    }
    if alpha >= beta {
        return Err(SearchError::EmptyWindow);
    }
    let started = Instant::now();
    let mut ctx = AbContext {
        heuristic,
        zobrist: ZobristTable::global(),
        tt,
        nodes: 0,
        deadline: None,
        node_budget: None,
        enforce_limits: false,
    };
    let mut result = match ab_root(&mut ctx, state, depth, alpha, beta) {
        Ok(r) => r,
        Err(Aborted) => unreachable!("no budget was set"),
    };
    result.elapsed = started.elapsed();
    Ok(result)
}

/// [`alphabeta`] over the full window.
pub fn alphabeta_full(
    state: &GameState,
    depth: u32,
    heuristic: &Heuristic,
    tt: Option<&mut TranspositionTable>,
) -> Result<SearchResult, SearchError> {
    alphabeta(state, depth, heuristic, -VALUE_INF, VALUE_INF, tt)
}

/// Runs alpha-beta at depths 1, 2, ... until a limit trips, returning
/// the result of the deepest fully completed iteration. A move from an
/// aborted iteration is never returned, and depth 1 is exempt from
/// enforcement, so some legal move always comes back.
pub fn iterative_deepening(
    state: &GameState,
    limits: &SearchLimits,
    heuristic: &Heuristic,
    tt: &mut TranspositionTable,
) -> Result<SearchResult, SearchError> {
    limits.validate()?;
    if state.is_terminal() {
        return Err(SearchError::TerminalState);
    }
    let started = Instant::now();
    let deadline = limits.time_budget.map(|budget| started + budget);
    let max_depth = limits.max_depth.unwrap_or(MAX_ID_DEPTH);

    let mut best: Option<SearchResult> = None;
    let mut total_nodes = 0u64;
    for depth in 1..=max_depth {
        let mut ctx = AbContext {
            heuristic,
            zobrist: ZobristTable::global(),
            tt: Some(&mut *tt),
            nodes: total_nodes,
            deadline,
            node_budget: limits.node_budget,
            enforce_limits: depth > 1,
        };
        match ab_root(&mut ctx, state, depth, -VALUE_INF, VALUE_INF) {
            Ok(mut result) => {
                total_nodes = ctx.nodes;
                result.nodes = total_nodes;
                result.elapsed = started.elapsed();
                best = Some(result);
            }
            Err(Aborted) => break,
        }
        // Do not start an iteration that is already out of budget.
        if matches!(deadline, Some(d) if Instant::now() >= d) {
            break;
        }
        if matches!(limits.node_budget, Some(b) if total_nodes >= b) {
            break;
        }
    }
    let mut result = best.expect("depth 1 runs without enforcement");
    result.elapsed = started.elapsed();
    Ok(result)
}

fn ab_root(
    ctx: &mut AbContext<'_>,
    state: &GameState,
    depth: u32,
    alpha: i32,
    beta: i32,
) -> Result<SearchResult, Aborted> {
    ctx.nodes += 1;
    let hash = ctx.zobrist.hash(state);
    let moves = state.legal_moves().expect("state is not terminal");
    let mut best = i32::MIN;
    let mut best_move = None;
    let mut a = alpha;
    for mv in moves {
        let child = state.apply_move(mv).expect("generated move is legal");
        let child_hash = ctx.zobrist.update(hash, state, &child);
        let value = -ab_value(ctx, &child, child_hash, depth - 1, -beta, -a)?;
        if value > best {
            best = value;
            best_move = Some(mv);
        }
        a = a.max(best);
        if a >= beta {
            break;
        }
    }
    let best_move = best_move.expect("at least one legal move");
    store(ctx, hash, state, depth, best, alpha, beta, Some(best_move));
    Ok(SearchResult {
        best_move,
        value: best,
        depth_completed: depth,
        nodes: ctx.nodes,
        elapsed: std::time::Duration::ZERO,
    })
}

fn ab_value(
    ctx: &mut AbContext<'_>,
    state: &GameState,
    hash: u64,
    depth: u32,
    alpha: i32,
    beta: i32,
) -> Result<i32, Aborted> {
    ctx.nodes += 1;
    if ctx.over_budget() {
        return Err(Aborted);
    }
    if depth == 0 || state.is_terminal() {
        return Ok(evaluate(state, ctx.heuristic, state.to_move()));
    }

    let mut hint = None;
    if let Some(tt) = ctx.tt.as_deref() {
        if let Some(entry) = tt.probe(hash, state) {
            hint = entry.best_move;
            if entry.depth == depth {
                match entry.bound {
                    Bound::Exact => return Ok(entry.value),
                    Bound::Lower if entry.value >= beta => return Ok(entry.value),
                    Bound::Upper if entry.value <= alpha => return Ok(entry.value),
                    _ => {}
                }
            }
        }
    }

    let mut moves = state.legal_moves().expect("state is not terminal");
    if let Some(hint) = hint {
        if let Some(pos) = moves.iter().position(|&m| m == hint) {
            moves.remove(pos);
            moves.insert(0, hint);
        }
    }

    let mut best = i32::MIN;
    let mut best_move = None;
    let mut a = alpha;
    for mv in moves {
        let child = state.apply_move(mv).expect("generated move is legal");
        let child_hash = ctx.zobrist.update(hash, state, &child);
        let value = -ab_value(ctx, &child, child_hash, depth - 1, -beta, -a)?;
        if value > best {
            best = value;
            best_move = Some(mv);
        }
        a = a.max(best);
        if a >= beta {
            break;
        }
    }
    store(ctx, hash, state, depth, best, alpha, beta, best_move);
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn store(
    ctx: &mut AbContext<'_>,
    hash: u64,
    state: &GameState,
    depth: u32,
    value: i32,
    alpha: i32,
    beta: i32,
    best_move: Option<Move>,
) {
    let Some(tt) = ctx.tt.as_deref_mut() else {
        return;
    };
    let bound = if value <= alpha {
        Bound::Upper
    } else if value >= beta {
        Bound::Lower
    } else {
        Bound::Exact
    };
    tt.store(TranspositionEntry {
        key: hash,
        state: *state,
        depth,
        value,
        bound,
        best_move,
    });
}
