//! Adversarial search over othello positions.
//!
//! Three exhaustive depth-limited searches (plain minimax, its negamax
//! form, and alpha-beta pruning) share one board-evaluation function and
//! one tie-breaking rule, so they are interchangeable and cross-check
//! each other in tests. On top of alpha-beta sit a transposition table
//! keyed by Zobrist hashes and an iterative-deepening driver that honors
//! depth, node, and wall-clock budgets while always completing depth 1.
//! A UCT monte-carlo tree search is provided as an alternative engine.
//!
//! Values are integers in centidisks: 100 per disk of final margin. A
//! decided position is worth [`WIN_VALUE`] plus the margin, so wins
//! dominate any heuristic score.

mod alphabeta;
mod heuristic;
mod mcts;
mod minimax;
mod tt;
mod zobrist;

use std::time::Duration;

use othello_core::Move;

pub use alphabeta::{alphabeta, alphabeta_full, iterative_deepening};
pub use heuristic::{evaluate, Heuristic};
pub use mcts::{mcts_choose, mcts_root_visits, DEFAULT_EXPLORATION};
pub use minimax::{minimax, negamax};
pub use tt::{Bound, TranspositionEntry, TranspositionTable};
pub use zobrist::{ZobristTable, ZOBRIST_SEED};

/// Centidisks per disk of margin.
pub const CENTIDISKS: i32 = 100;

/// Base value of a decided game; the final margin in centidisks is
/// added on top so bigger wins score higher.
pub const WIN_VALUE: i32 = 1_000_000;

/// A bound safely above every representable position value; use
/// `(-VALUE_INF, VALUE_INF)` as the full alpha-beta window.
pub const VALUE_INF: i32 = 2_000_000;

/// Stop conditions for a search. At least one must be set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Deepest iteration to run, in plies.
    pub max_depth: Option<u32>,
    /// Wall-clock budget; iterative deepening still completes depth 1.
    pub time_budget: Option<Duration>,
    /// Node budget for tree searches, playout budget for MCTS.
    pub node_budget: Option<u64>,
}

impl SearchLimits {
    pub fn depth(max_depth: u32) -> SearchLimits {
        SearchLimits {
            max_depth: Some(max_depth),
            time_budget: None,
            node_budget: None,
        }
    }

    pub fn timed_ms(ms: u64) -> SearchLimits {
        SearchLimits {
            max_depth: None,
            time_budget: Some(Duration::from_millis(ms)),
            node_budget: None,
        }
    }

    pub fn nodes(node_budget: u64) -> SearchLimits {
        SearchLimits {
            max_depth: None,
            time_budget: None,
            node_budget: Some(node_budget),
        }
    }

    pub fn with_max_depth(mut self, max_depth: u32) -> SearchLimits {
        self.max_depth = Some(max_depth);
        self
    }

    pub fn with_node_budget(mut self, node_budget: u64) -> SearchLimits {
        self.node_budget = Some(node_budget);
        self
    }

    /// Tightens the time budget to at most `ms` milliseconds, setting
    /// it if absent. Used by agents to stay inside the server deadline.
    pub fn cap_time_ms(mut self, ms: u64) -> SearchLimits {
        let cap = Duration::from_millis(ms);
        self.time_budget = Some(match self.time_budget {
            Some(t) => t.min(cap),
            None => cap,
        });
        self
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.max_depth.is_none() && self.time_budget.is_none() && self.node_budget.is_none() {
            return Err(SearchError::NoLimit);
        }
        if self.max_depth == Some(0) {
            return Err(SearchError::ZeroDepth);
        }
        Ok(())
    }
}

/// Outcome of a search: the move to play plus diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchResult {
    pub best_move: Move,
    /// Root value in centidisks, from the mover's perspective.
    pub value: i32,
    /// Deepest fully completed depth, in plies.
    pub depth_completed: u32,
    /// States visited (tree searches) or playouts run (MCTS).
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("cannot search a finished game")]
    TerminalState,
    #[error("search depth must be at least 1")]
    ZeroDepth,
    #[error("alpha-beta window is empty (alpha >= beta)")]
    EmptyWindow,
    #[error("search limits name no stopping condition")]
    NoLimit,
    #[error("heuristic file error: {0}")]
    BadHeuristicFile(String),
}
