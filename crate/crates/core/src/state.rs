use std::fmt;
use std::str::FromStr;

use crate::coord::Coord;
use crate::error::RulesError;

/// Number of cells on the board.
pub const BOARD_CELLS: usize = 64;

/// One of the two players.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlayerColor {
    Black,
    White,
}

impl PlayerColor {
    /// The other player.
    pub fn opponent(self) -> PlayerColor {
        match self {
            PlayerColor::Black => PlayerColor::White,
            PlayerColor::White => PlayerColor::Black,
        }
    }
}

impl fmt::Display for PlayerColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlayerColor::Black => f.write_str("black"),
            PlayerColor::White => f.write_str("white"),
        }
    }
}

/// A turn action: place a disk or pass.
///
/// Pass is an explicit move so that game logs are self-describing; it is
/// only legal when the mover has no placement anywhere on the board.
///
/// The text form is the algebraic coordinate ("d3") or the literal
/// "pass", both lowercase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Place(Coord),
    Pass,
}

/// Error parsing the text form of a move.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid move {0:?}: expected a coordinate like \"d3\" or \"pass\"")]
pub struct ParseMoveError(pub String);

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Place(c) => c.fmt(f),
            Move::Pass => f.write_str("pass"),
        }
    }
}

impl FromStr for Move {
    type Err = ParseMoveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "pass" {
            return Ok(Move::Pass);
        }
        s.parse::<Coord>()
            .map(Move::Place)
            .map_err(|_| ParseMoveError(s.to_string()))
    }
}

/// Outcome classification of a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameStatus {
    Ongoing,
    /// Game over: `winner` is `None` on a draw, counts are the final
    /// disks per color.
    Finished {
        winner: Option<PlayerColor>,
        black_count: u8,
        white_count: u8,
    },
}

impl GameStatus {
    pub fn is_finished(&self) -> bool {
        matches!(self, GameStatus::Finished { .. })
    }
}

// Bit 0 is a1, bit 63 is h8, row-major.
const FILE_A: u64 = 0x0101_0101_0101_0101;
const FILE_H: u64 = 0x8080_8080_8080_8080;

/// The eight ray directions, as (shift kind, wrap mask) pairs baked into
/// one shift function each.
#[derive(Clone, Copy)]
enum Dir {
    E,
    W,
    S,
    N,
    Se,
    Sw,
    Ne,
    Nw,
}

const DIRS: [Dir; 8] = [
    Dir::E,
    Dir::W,
    Dir::S,
    Dir::N,
    Dir::Se,
    Dir::Sw,
    Dir::Ne,
    Dir::Nw,
];

impl Dir {
    #[inline]
    fn shift(self, bb: u64) -> u64 {
        match self {
            Dir::E => (bb & !FILE_H) << 1,
            Dir::W => (bb & !FILE_A) >> 1,
            Dir::S => bb << 8,
            Dir::N => bb >> 8,
            Dir::Se => (bb & !FILE_H) << 9,
            Dir::Sw => (bb & !FILE_A) << 7,
            Dir::Ne => (bb & !FILE_H) >> 7,
            Dir::Nw => (bb & !FILE_A) >> 9,
        }
    }
}

/// Complete game position: disk placement, side to move, and the count
/// of consecutive passes (two passes in a row end the game).
///
/// Stored as one 64-bit occupancy mask per color; 18 bytes, `Copy`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    black: u64,
    white: u64,
    to_move: PlayerColor,
    consecutive_passes: u8,
}

impl GameState {
    /// The standard opening: d5 and e4 Black, d4 and e5 White, Black to
    /// move.
    pub fn initial() -> GameState {
        let e4 = Coord::new(4, 3).unwrap().mask();
        let d5 = Coord::new(3, 4).unwrap().mask();
        let d4 = Coord::new(3, 3).unwrap().mask();
        let e5 = Coord::new(4, 4).unwrap().mask();
        GameState {
            black: e4 | d5,
            white: d4 | e5,
            to_move: PlayerColor::Black,
            consecutive_passes: 0,
        }
    }

    /// Assembles a state from raw occupancy masks, validating the board
    /// invariants. Intended for deserialization and tests.
    pub fn from_parts(
        black: u64,
        white: u64,
        to_move: PlayerColor,
        consecutive_passes: u8,
    ) -> Result<GameState, RulesError> {
        if black & white != 0 {
            return Err(RulesError::OverlappingDisks);
        }
        if consecutive_passes > 2 {
            return Err(RulesError::BadPassCounter(consecutive_passes));
        }
        Ok(GameState {
            black,
            white,
            to_move,
            consecutive_passes,
        })
    }

    /// Occupancy mask of the given color.
    pub fn disks_of(&self, color: PlayerColor) -> u64 {
        match color {
            PlayerColor::Black => self.black,
            PlayerColor::White => self.white,
        }
    }

    /// The color occupying a cell, if any.
    pub fn cell(&self, coord: Coord) -> Option<PlayerColor> {
        if self.black & coord.mask() != 0 {
            Some(PlayerColor::Black)
        } else if self.white & coord.mask() != 0 {
            Some(PlayerColor::White)
        } else {
            None
        }
    }

    pub fn to_move(&self) -> PlayerColor {
        self.to_move
    }

    pub fn consecutive_passes(&self) -> u8 {
        self.consecutive_passes
    }

    pub fn black_count(&self) -> u8 {
        self.black.count_ones() as u8
    }

    pub fn white_count(&self) -> u8 {
        self.white.count_ones() as u8
    }

    pub fn empty_count(&self) -> u8 {
        (!(self.black | self.white)).count_ones() as u8
    }

    fn mover_and_opponent(&self) -> (u64, u64) {
        match self.to_move {
            PlayerColor::Black => (self.black, self.white),
            PlayerColor::White => (self.white, self.black),
        }
    }

    /// Mask of cells where `mover` could legally place against `opp`.
    #[inline]
    fn placements(mover: u64, opp: u64) -> u64 {
        let empty = !(mover | opp);
        let mut moves = 0;
        for dir in DIRS {
            // Grow runs of opponent disks adjacent to the mover's disks;
            // a run capped by an empty cell marks a legal placement.
            let mut run = dir.shift(mover) & opp;
            for _ in 0..5 {
                run |= dir.shift(run) & opp;
            }
            moves |= dir.shift(run) & empty;
        }
        moves
    }

    /// Mask of opponent disks flipped by placing on `placed` (a single
    /// bit). Zero means the placement is illegal.
    #[inline]
    fn flip_mask(mover: u64, opp: u64, placed: u64) -> u64 {
        let mut flips = 0;
        for dir in DIRS {
            let mut run = 0;
            let mut cur = dir.shift(placed);
            while cur & opp != 0 {
                run |= cur;
                cur = dir.shift(cur);
            }
            if cur & mover != 0 {
                flips |= run;
            }
        }
        flips
    }

    /// Mask of legal placements for the side to move. Empty means the
    /// mover must pass.
    pub fn placement_mask(&self) -> u64 {
        let (mover, opp) = self.mover_and_opponent();
        Self::placements(mover, opp)
    }

    /// Legal placements for `color` regardless of whose turn it is.
    /// Used by evaluation (mobility) and never affects game flow.
    pub fn placement_mask_for(&self, color: PlayerColor) -> u64 {
        let own = self.disks_of(color);
        let opp = self.disks_of(color.opponent());
        Self::placements(own, opp)
    }

    /// The opponent disks that placing on `coord` would flip, in
    /// row-major order. An empty list means the placement is illegal.
    pub fn flips_for(&self, coord: Coord) -> Result<Vec<Coord>, RulesError> {
        if (self.black | self.white) & coord.mask() != 0 {
            return Err(RulesError::Occupied(coord));
        }
        let (mover, opp) = self.mover_and_opponent();
        let mut flips = Self::flip_mask(mover, opp, coord.mask());
        let mut out = Vec::with_capacity(flips.count_ones() as usize);
        while flips != 0 {
            let idx = flips.trailing_zeros() as u8;
            out.push(Coord::from_index(idx).unwrap());
            flips &= flips - 1;
        }
        Ok(out)
    }

    /// True when the game is over: two consecutive passes or a full
    /// board.
    pub fn is_terminal(&self) -> bool {
        self.consecutive_passes >= 2 || (self.black | self.white) == u64::MAX
    }

    /// All legal moves for the side to move, placements in row-major
    /// order; exactly `[Pass]` when no placement exists.
    pub fn legal_moves(&self) -> Result<Vec<Move>, RulesError> {
        if self.is_terminal() {
            return Err(RulesError::GameOver);
        }
        let mut mask = self.placement_mask();
        if mask == 0 {
            return Ok(vec![Move::Pass]);
        }
        let mut moves = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let idx = mask.trailing_zeros() as u8;
            moves.push(Move::Place(Coord::from_index(idx).unwrap()));
            mask &= mask - 1;
        }
        Ok(moves)
    }

    /// Applies a legal move, returning the successor state.
    ///
    /// A placement sets the cell, recolors every flipped disk, and
    /// resets the pass counter; a pass leaves the board untouched and
    /// increments it. Either way the turn changes hands.
    pub fn apply_move(&self, mv: Move) -> Result<GameState, RulesError> {
        if self.is_terminal() {
            return Err(RulesError::GameOver);
        }
        match mv {
            Move::Pass => {
                if self.placement_mask() != 0 {
                    return Err(RulesError::PassWithMovesAvailable);
                }
                Ok(GameState {
                    black: self.black,
                    white: self.white,
                    to_move: self.to_move.opponent(),
                    consecutive_passes: self.consecutive_passes + 1,
                })
            }
            Move::Place(coord) => {
                if (self.black | self.white) & coord.mask() != 0 {
                    return Err(RulesError::Occupied(coord));
                }
                let (mover, opp) = self.mover_and_opponent();
                let flips = Self::flip_mask(mover, opp, coord.mask());
                if flips == 0 {
                    return Err(RulesError::NoFlips(coord));
                }
                let new_mover = mover | coord.mask() | flips;
                let new_opp = opp & !flips;
                let (black, white) = match self.to_move {
                    PlayerColor::Black => (new_mover, new_opp),
                    PlayerColor::White => (new_opp, new_mover),
                };
                Ok(GameState {
                    black,
                    white,
                    to_move: self.to_move.opponent(),
                    consecutive_passes: 0,
                })
            }
        }
    }

    /// Hands the turn to the opponent without touching the board or the
    /// pass counter.
    ///
    /// This is the forfeited-turn transition used when a server rules a
    /// move bad: the offender loses the turn, but the skip does not
    /// count toward double-pass termination.
    pub fn skip_turn(&self) -> GameState {
        GameState {
            black: self.black,
            white: self.white,
            to_move: self.to_move.opponent(),
            consecutive_passes: self.consecutive_passes,
        }
    }

    /// Classifies the state: finished when the board is full or both
    /// players passed in a row, with the majority holder as winner.
    pub fn status(&self) -> GameStatus {
        if !self.is_terminal() {
            return GameStatus::Ongoing;
        }
        let black_count = self.black_count();
        let white_count = self.white_count();
        let winner = match black_count.cmp(&white_count) {
            std::cmp::Ordering::Greater => Some(PlayerColor::Black),
            std::cmp::Ordering::Less => Some(PlayerColor::White),
            std::cmp::Ordering::Equal => None,
        };
        GameStatus::Finished {
            winner,
            black_count,
            white_count,
        }
    }
}

impl fmt::Debug for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GameState {{")?;
        for row in 0..8 {
            write!(f, "  ")?;
            for col in 0..8 {
                let c = Coord::new(col, row).unwrap();
                let ch = match self.cell(c) {
                    Some(PlayerColor::Black) => 'B',
                    Some(PlayerColor::White) => 'W',
                    None => '.',
                };
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "  to_move: {}, passes: {}",
            self.to_move, self.consecutive_passes
        )?;
        write!(f, "}}")
    }
}
