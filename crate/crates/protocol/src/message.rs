use othello_core::{GameState, Move, PlayerColor};

/// Why the server rejected a reply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BadMoveKind {
    /// Decoded fine but violates the rules (occupied cell, no flips,
    /// pass with placements available).
    Illegal,
    /// No usable reply arrived before the deadline.
    Timeout,
    /// The reply was not a decodable move message.
    Malformed,
}

impl BadMoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BadMoveKind::Illegal => "illegal",
            BadMoveKind::Timeout => "timeout",
            BadMoveKind::Malformed => "malformed",
        }
    }
}

/// Final result of a game as it appears on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameOutcome {
    BlackWin,
    WhiteWin,
    Draw,
}

impl GameOutcome {
    pub fn from_winner(winner: Option<PlayerColor>) -> GameOutcome {
        match winner {
            Some(PlayerColor::Black) => GameOutcome::BlackWin,
            Some(PlayerColor::White) => GameOutcome::WhiteWin,
            None => GameOutcome::Draw,
        }
    }

    pub fn winner(self) -> Option<PlayerColor> {
        match self {
            GameOutcome::BlackWin => Some(PlayerColor::Black),
            GameOutcome::WhiteWin => Some(PlayerColor::White),
            GameOutcome::Draw => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GameOutcome::BlackWin => "black_win",
            GameOutcome::WhiteWin => "white_win",
            GameOutcome::Draw => "draw",
        }
    }
}

/// One protocol message. See the crate docs for the wire layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Message {
    /// Client to server: first frame on a connection.
    Register { name: String },
    /// Server to client: registration accepted under this id.
    Registered { client_id: String },
    Ping,
    Pong,
    /// Server to client: a game involving this agent begins.
    GameStart {
        game_id: String,
        your_color: PlayerColor,
        opponent_name: String,
    },
    /// Server to client: it is your turn; the full position is
    /// enclosed so clients can stay stateless.
    MoveRequest {
        game_id: String,
        state: GameState,
        deadline_ms: u64,
    },
    /// Client to server: the chosen move.
    MoveReply { game_id: String, mv: Move },
    /// Server to client: your reply was ruled bad; your turn is
    /// forfeited and the opponent plays next.
    BadMove {
        game_id: String,
        reason: BadMoveKind,
    },
    /// Server to client: the game is over.
    GameEnd {
        game_id: String,
        result: GameOutcome,
        black_count: u8,
        white_count: u8,
    },
    /// Either direction: a protocol-level complaint.
    Error { code: String, text: String },
}
