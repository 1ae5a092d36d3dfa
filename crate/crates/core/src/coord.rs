use std::fmt;
use std::str::FromStr;

/// A square on the 8x8 board.
///
/// Columns run a..h left to right, rows 1..8 top to bottom. The canonical
/// text form is algebraic: column letter then row digit, lowercase
/// ("a1".."h8"). Internally a coordinate is its row-major cell index,
/// `row * 8 + col`, so `a1` is index 0 and `h8` is index 63.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord(u8);

/// Error parsing an algebraic coordinate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid coordinate {0:?}: expected a column letter a-h and a row digit 1-8")]
pub struct ParseCoordError(pub String);

impl Coord {
    /// Builds a coordinate from zero-based column and row, both in 0..8.
    pub fn new(col: u8, row: u8) -> Option<Coord> {
        if col < 8 && row < 8 {
            Some(Coord(row * 8 + col))
        } else {
            None
        }
    }

    /// Builds a coordinate from a row-major cell index in 0..64.
    pub fn from_index(index: u8) -> Option<Coord> {
        if index < 64 {
            Some(Coord(index))
        } else {
            None
        }
    }

    /// Zero-based column, 0 = a .. 7 = h.
    pub fn col(self) -> u8 {
        self.0 % 8
    }

    /// Zero-based row, 0 = rank 1 .. 7 = rank 8.
    pub fn row(self) -> u8 {
        self.0 / 8
    }

    /// Row-major cell index in 0..64.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Single-bit board mask for this cell.
    pub fn mask(self) -> u64 {
        1u64 << self.0
    }

    /// All 64 coordinates in row-major order (a1..h1, a2..h8).
    pub fn all() -> impl Iterator<Item = Coord> {
        (0..64).map(Coord)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", (b'a' + self.col()) as char, self.row() + 1)
    }
}

// Debug prints the algebraic form; the raw index is useless in test output.
impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coord {
    type Err = ParseCoordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCoordError(s.to_string());
        let bytes = s.as_bytes();
        if bytes.len() != 2 {
            return Err(err());
        }
        let col = bytes[0].wrapping_sub(b'a');
        let row = bytes[1].wrapping_sub(b'1');
        Coord::new(col, row).ok_or_else(err)
    }
}
