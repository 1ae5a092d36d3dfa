//! Othello rules engine.
//!
//! This crate is the single source of truth for the game rules: board
//! representation, legal-move generation, move application with disk
//! flipping, termination, and scoring. Everything else in the workspace
//! (search, protocol, tournament server, agents, replay) builds on the
//! types defined here.
//!
//! The board is 8x8 with the fixed othello opening (two disks per color
//! in the center), Black moves first, and a player with no legal
//! placement must pass. Two consecutive passes or a full board end the
//! game; the color with the disk majority wins.
//!
//! All operations are pure functions on small `Copy` values and are safe
//! to call concurrently.

mod coord;
mod error;
mod perft;
mod state;

#[cfg(feature = "test-oracle")]
pub mod oracle;

pub use coord::{Coord, ParseCoordError};
pub use error::RulesError;
pub use perft::perft;
pub use state::{GameState, GameStatus, Move, ParseMoveError, PlayerColor, BOARD_CELLS};
