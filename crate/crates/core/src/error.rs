use crate::coord::Coord;

/// Rule violations reported by the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RulesError {
    /// A placement targeted a cell that already holds a disk.
    #[error("cell {0} is occupied")]
    Occupied(Coord),
    /// A placement would flip no opponent disks.
    #[error("placement at {0} flips no disks")]
    NoFlips(Coord),
    /// Pass was attempted while at least one placement was available.
    #[error("pass is not allowed while placements are available")]
    PassWithMovesAvailable,
    /// The operation requires an ongoing game.
    #[error("the game is over")]
    GameOver,
    /// Both colors claimed the same cell when assembling a state.
    #[error("black and white disks overlap")]
    OverlappingDisks,
    /// The pass counter was outside 0..=2 when assembling a state.
    #[error("consecutive pass counter {0} is out of range")]
    BadPassCounter(u8),
}
