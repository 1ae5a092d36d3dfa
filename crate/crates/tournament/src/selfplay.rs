//! Network-free game runner with the same turn semantics as the live
//! server: legal replies are applied, anything else forfeits the turn,
//! and a player hitting the bad-move cap forfeits the game. Used by the
//! self-play harnesses and by tests that need realistic records without
//! sockets.

use othello_core::{GameState, GameStatus, PlayerColor};

use crate::record::{GameRecord, GameResult, MoveRecord, MoveVerdict, Pairing, Termination};

/// What a player did with its turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TurnReply {
    Move(othello_core::Move),
    /// Simulates a missed deadline.
    Timeout,
    /// Simulates an undecodable reply.
    Malformed,
}

/// A move source for one seat.
pub trait MovePicker {
    fn pick(&mut self, state: &GameState) -> TurnReply;
}

impl<F: FnMut(&GameState) -> TurnReply> MovePicker for F {
    fn pick(&mut self, state: &GameState) -> TurnReply {
        self(state)
    }
}

/// Plays one full game between two pickers and records it exactly the
/// way the server would.
pub fn play_game(
    pairing: Pairing,
    black_name: &str,
    white_name: &str,
    black: &mut dyn MovePicker,
    white: &mut dyn MovePicker,
    bad_move_cap: u32,
) -> GameRecord {
    let started_at_ms = now_ms();
    let mut state = GameState::initial();
    let mut moves: Vec<MoveRecord> = Vec::new();
    let mut bad = [0u32; 2];
    let seat = |c: PlayerColor| match c {
        PlayerColor::Black => 0usize,
        PlayerColor::White => 1usize,
    };

    let result = loop {
        if let GameStatus::Finished {
            winner,
            black_count,
            white_count,
        } = state.status()
        {
            break GameResult {
                winner,
                black_count,
                white_count,
                termination: Termination::Normal,
            };
        }
        let mover = state.to_move();
        let requested_at_ms = now_ms();
        let reply = match mover {
            PlayerColor::Black => black.pick(&state),
            PlayerColor::White => white.pick(&state),
        };
        let ply = moves.len() as u32;
        let (verdict, mv, next) = match reply {
            TurnReply::Move(mv) => match state.apply_move(mv) {
                Ok(next) => (MoveVerdict::Ok, Some(mv), Some(next)),
                Err(_) => (MoveVerdict::BadMoveIllegal, Some(mv), None),
            },
            TurnReply::Timeout => (MoveVerdict::BadMoveTimeout, None, None),
            TurnReply::Malformed => (MoveVerdict::BadMoveMalformed, None, None),
        };
        moves.push(MoveRecord {
            ply,
            player: mover,
            requested_at_ms,
            replied_at_ms: match verdict {
                MoveVerdict::BadMoveTimeout => None,
                _ => Some(now_ms()),
            },
            mv,
            verdict,
        });
        match next {
            Some(next) => state = next,
            None => {
                bad[seat(mover)] += 1;
                if bad[seat(mover)] >= bad_move_cap {
                    break GameResult {
                        winner: Some(mover.opponent()),
                        black_count: state.black_count(),
                        white_count: state.white_count(),
                        termination: Termination::BadMoveCap,
                    };
                }
                state = state.skip_turn();
            }
        }
    };

    GameRecord {
        pairing,
        black_name: black_name.to_string(),
        white_name: white_name.to_string(),
        moves,
        final_state: state,
        result,
        black_bad_moves: bad[0],
        white_bad_moves: bad[1],
        started_at_ms,
        ended_at_ms: now_ms(),
    }
}

pub(crate) fn now_ms() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}
