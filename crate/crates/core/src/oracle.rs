//! Naive reference implementation of the othello rules, used as a test
//! oracle (feature `test-oracle`).
//!
//! Everything here is written against a plain 64-cell array with
//! coordinate arithmetic and shares no helpers with the bitboard engine
//! in [`crate::GameState`]; the two paths meet only at the public
//! accessors. Slow on purpose, trusted for correctness.

use rand::Rng;

use crate::{Coord, GameState, Move, PlayerColor};

/// Array-of-cells board used by the oracle.
#[derive(Clone, PartialEq, Eq)]
pub struct NaiveBoard {
    pub cells: [Option<PlayerColor>; 64],
    pub to_move: PlayerColor,
    pub consecutive_passes: u8,
}

impl NaiveBoard {
    /// Reads a `GameState` cell by cell through its public accessors.
    pub fn from_state(state: &GameState) -> NaiveBoard {
        let mut cells = [None; 64];
        for c in Coord::all() {
            cells[c.index()] = state.cell(c);
        }
        NaiveBoard {
            cells,
            to_move: state.to_move(),
            consecutive_passes: state.consecutive_passes(),
        }
    }

    fn at(&self, col: i32, row: i32) -> Option<PlayerColor> {
        if (0..8).contains(&col) && (0..8).contains(&row) {
            self.cells[(row * 8 + col) as usize]
        } else {
            None
        }
    }

    /// Disks flipped by the side to move placing at (col, row), by
    /// walking each of the eight rays one step at a time.
    pub fn flips_at(&self, col: i32, row: i32) -> Vec<(i32, i32)> {
        let mut flipped = Vec::new();
        if self.at(col, row).is_some() {
            return flipped;
        }
        let me = self.to_move;
        for dc in -1..=1 {
            for dr in -1..=1 {
                if dc == 0 && dr == 0 {
                    continue;
                }
                let mut run = Vec::new();
                let (mut c, mut r) = (col + dc, row + dr);
                while self.at(c, r) == Some(me.opponent()) {
                    run.push((c, r));
                    c += dc;
                    r += dr;
                }
                if !run.is_empty() && self.at(c, r) == Some(me) {
                    flipped.extend(run);
                }
            }
        }
        flipped
    }

    pub fn is_terminal(&self) -> bool {
        self.consecutive_passes >= 2 || self.cells.iter().all(|c| c.is_some())
    }

    /// Legal moves in row-major order; `[Pass]` when no placement
    /// flips anything.
    pub fn legal_moves(&self) -> Vec<Move> {
        let mut moves = Vec::new();
        for row in 0..8 {
            for col in 0..8 {
                if !self.flips_at(col, row).is_empty() {
                    let coord = Coord::new(col as u8, row as u8).unwrap();
                    moves.push(Move::Place(coord));
                }
            }
        }
        if moves.is_empty() {
            moves.push(Move::Pass);
        }
        moves
    }

    pub fn apply(&self, mv: Move) -> NaiveBoard {
        let mut next = self.clone();
        match mv {
            Move::Pass => next.consecutive_passes += 1,
            Move::Place(coord) => {
                let (col, row) = (coord.col() as i32, coord.row() as i32);
                let flips = self.flips_at(col, row);
                assert!(!flips.is_empty(), "oracle asked to apply illegal move");
                next.cells[coord.index()] = Some(self.to_move);
                for (c, r) in flips {
                    next.cells[(r * 8 + c) as usize] = Some(self.to_move);
                }
                next.consecutive_passes = 0;
            }
        }
        next.to_move = self.to_move.opponent();
        next
    }

    /// Move-sequence count to exactly `depth` plies, mirroring the
    /// engine's perft definition.
    pub fn perft(&self, depth: u32) -> u64 {
        if depth == 0 {
            return 1;
        }
        if self.is_terminal() {
            return 0;
        }
        let moves = self.legal_moves();
        if depth == 1 {
            return moves.len() as u64;
        }
        moves.iter().map(|&mv| self.apply(mv).perft(depth - 1)).sum()
    }
}

/// Plays up to `plies` uniformly random legal moves from the opening
/// with the real engine, stopping early at a terminal state. Returns
/// the resulting state, terminal or not.
pub fn random_playout_state<R: Rng + ?Sized>(rng: &mut R, plies: u32) -> GameState {
    let mut state = GameState::initial();
    for _ in 0..plies {
        if state.is_terminal() {
            break;
        }
        let moves = state.legal_moves().unwrap();
        let mv = moves[rng.random_range(0..moves.len())];
        state = state.apply_move(mv).unwrap();
    }
    state
}

/// Like [`random_playout_state`] but never returns a terminal state:
/// backs off to fewer plies until the result is ongoing.
pub fn random_nonterminal_state<R: Rng + ?Sized>(rng: &mut R, plies: u32) -> GameState {
    let mut state = GameState::initial();
    for _ in 0..plies {
        let moves = state.legal_moves().unwrap();
        let mv = moves[rng.random_range(0..moves.len())];
        let next = state.apply_move(mv).unwrap();
        if next.is_terminal() {
            break;
        }
        state = next;
    }
    state
}
