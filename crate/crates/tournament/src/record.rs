use othello_core::{GameState, Move, PlayerColor};
use othello_protocol::BadMoveKind;

/// One scheduled game: who plays Black, who plays White.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub game_id: String,
    /// Client id of the Black player.
    pub black: String,
    /// Client id of the White player.
    pub white: String,
}

impl Pairing {
    pub fn player_of(&self, color: PlayerColor) -> &str {
        match color {
            PlayerColor::Black => &self.black,
            PlayerColor::White => &self.white,
        }
    }

    pub fn involves(&self, client_id: &str) -> bool {
        self.black == client_id || self.white == client_id
    }
}

/// The server's ruling on one turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveVerdict {
    /// Legal reply, applied to the board.
    Ok,
    /// Reply decoded but broke the rules; turn forfeited.
    BadMoveIllegal,
    /// No reply before the deadline; turn forfeited.
    BadMoveTimeout,
    /// Undecodable reply; turn forfeited.
    BadMoveMalformed,
}

impl MoveVerdict {
    pub fn is_bad(self) -> bool {
        self != MoveVerdict::Ok
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MoveVerdict::Ok => "ok",
            MoveVerdict::BadMoveIllegal => "illegal",
            MoveVerdict::BadMoveTimeout => "timeout",
            MoveVerdict::BadMoveMalformed => "malformed",
        }
    }

    pub fn from_token(s: &str) -> Option<MoveVerdict> {
        Some(match s {
            "ok" => MoveVerdict::Ok,
            "illegal" => MoveVerdict::BadMoveIllegal,
            "timeout" => MoveVerdict::BadMoveTimeout,
            "malformed" => MoveVerdict::BadMoveMalformed,
            _ => return None,
        })
    }

    pub fn bad_move_kind(self) -> Option<BadMoveKind> {
        match self {
            MoveVerdict::Ok => None,
            MoveVerdict::BadMoveIllegal => Some(BadMoveKind::Illegal),
            MoveVerdict::BadMoveTimeout => Some(BadMoveKind::Timeout),
            MoveVerdict::BadMoveMalformed => Some(BadMoveKind::Malformed),
        }
    }
}

/// One turn as the server saw it.
///
/// `mv` is the move that was applied (verdict `Ok`) or the rejected
/// attempt (verdict `BadMoveIllegal`); timeouts and malformed replies
/// carry no move. `replied_at_ms` is the server-clocked arrival of the
/// reply, absent on timeouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveRecord {
    pub ply: u32,
    pub player: PlayerColor,
    pub requested_at_ms: u64,
    pub replied_at_ms: Option<u64>,
    pub mv: Option<Move>,
    pub verdict: MoveVerdict,
}

/// How a game ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// The rules ended it: full board or double pass.
    Normal,
    /// One player accumulated the bad-move cap and forfeited.
    BadMoveCap,
    /// One player disconnected mid-game and forfeited.
    Disconnect,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::Normal => "normal",
            Termination::BadMoveCap => "bad_move_cap",
            Termination::Disconnect => "disconnect",
        }
    }

    pub fn from_token(s: &str) -> Option<Termination> {
        Some(match s {
            "normal" => Termination::Normal,
            "bad_move_cap" => Termination::BadMoveCap,
            "disconnect" => Termination::Disconnect,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameResult {
    /// `None` only on a drawn, normally terminated game; forfeits
    /// always name a winner.
    pub winner: Option<PlayerColor>,
    pub black_count: u8,
    pub white_count: u8,
    pub termination: Termination,
}

/// Append-only account of one finished game. Replaying its `Ok` moves
/// (bad moves become forfeited turns) from the opening reproduces
/// `final_state` and `result`; `crate::replay::verify_replay` checks
/// exactly that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameRecord {
    pub pairing: Pairing,
    pub black_name: String,
    pub white_name: String,
    pub moves: Vec<MoveRecord>,
    pub final_state: GameState,
    pub result: GameResult,
    pub black_bad_moves: u32,
    pub white_bad_moves: u32,
    pub started_at_ms: u64,
    pub ended_at_ms: u64,
}

impl GameRecord {
    pub fn game_id(&self) -> &str {
        &self.pairing.game_id
    }

    pub fn name_of(&self, color: PlayerColor) -> &str {
        match color {
            PlayerColor::Black => &self.black_name,
            PlayerColor::White => &self.white_name,
        }
    }

    pub fn bad_moves_of(&self, color: PlayerColor) -> u32 {
        match color {
            PlayerColor::Black => self.black_bad_moves,
            PlayerColor::White => self.white_bad_moves,
        }
    }
}
