use othello_core::{Move, PlayerColor};
use serde_json::Value;

use crate::message::{BadMoveKind, GameOutcome, Message};
use crate::state_text::{parse_state, serialize_state};

/// Maximum frame size in bytes, LF terminator included.
pub const MAX_FRAME_LEN: usize = 8192;

/// Why a frame could not be decoded. Decoding failures are per-frame
/// and never fatal: the stream stays usable.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecodeError {
    #[error("frame exceeds {MAX_FRAME_LEN} bytes")]
    Oversize,
    #[error("malformed frame: {0}")]
    Malformed(String),
    #[error("unknown message type {0:?}")]
    UnknownType(String),
    #[error("missing field {0:?}")]
    MissingField(&'static str),
    #[error("invalid value for {field:?}: {detail}")]
    InvalidField {
        field: &'static str,
        detail: String,
    },
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Serializes a message in canonical form: `"type"` first, the
/// documented key order, no insignificant whitespace, one trailing LF.
/// Byte-exact output is part of the protocol contract.
pub fn encode_message(message: &Message) -> Vec<u8> {
    let body = match message {
        Message::Register { name } => {
            format!(r#"{{"type":"register","name":{}}}"#, json_str(name))
        }
        Message::Registered { client_id } => {
            format!(r#"{{"type":"registered","client_id":{}}}"#, json_str(client_id))
        }
        Message::Ping => r#"{"type":"ping"}"#.to_string(),
        Message::Pong => r#"{"type":"pong"}"#.to_string(),
        Message::GameStart {
            game_id,
            your_color,
            opponent_name,
        } => format!(
            r#"{{"type":"game_start","game_id":{},"your_color":"{}","opponent_name":{}}}"#,
            json_str(game_id),
            your_color,
            json_str(opponent_name)
        ),
        Message::MoveRequest {
            game_id,
            state,
            deadline_ms,
        } => format!(
            r#"{{"type":"move_request","game_id":{},"state":{},"consecutive_passes":{},"deadline_ms":{}}}"#,
            json_str(game_id),
            json_str(&serialize_state(state)),
            state.consecutive_passes(),
            deadline_ms
        ),
        Message::MoveReply { game_id, mv } => format!(
            r#"{{"type":"move","game_id":{},"move":"{}"}}"#,
            json_str(game_id),
            mv
        ),
        Message::BadMove { game_id, reason } => format!(
            r#"{{"type":"bad_move","game_id":{},"reason":"{}"}}"#,
            json_str(game_id),
            reason.as_str()
        ),
        Message::GameEnd {
            game_id,
            result,
            black_count,
            white_count,
        } => format!(
            r#"{{"type":"game_end","game_id":{},"result":"{}","black_count":{},"white_count":{}}}"#,
            json_str(game_id),
            result.as_str(),
            black_count,
            white_count
        ),
        Message::Error { code, text } => format!(
            r#"{{"type":"error","code":{},"text":{}}}"#,
            json_str(code),
            json_str(text)
        ),
    };
    let mut bytes = body.into_bytes();
    bytes.push(b'\n');
    bytes
}

fn get<'a>(obj: &'a serde_json::Map<String, Value>, field: &'static str) -> Result<&'a Value, DecodeError> {
    obj.get(field).ok_or(DecodeError::MissingField(field))
}

fn get_str(obj: &serde_json::Map<String, Value>, field: &'static str) -> Result<String, DecodeError> {
    get(obj, field)?
        .as_str()
        .map(str::to_string)
        .ok_or(DecodeError::InvalidField {
            field,
            detail: "expected a string".into(),
        })
}

fn get_u64(obj: &serde_json::Map<String, Value>, field: &'static str) -> Result<u64, DecodeError> {
    get(obj, field)?.as_u64().ok_or(DecodeError::InvalidField {
        field,
        detail: "expected a non-negative integer".into(),
    })
}

fn get_count(obj: &serde_json::Map<String, Value>, field: &'static str) -> Result<u8, DecodeError> {
    let n = get_u64(obj, field)?;
    u8::try_from(n)
        .ok()
        .filter(|&n| n <= 64)
        .ok_or(DecodeError::InvalidField {
            field,
            detail: format!("disk count {n} out of range"),
        })
}

fn get_color(obj: &serde_json::Map<String, Value>, field: &'static str) -> Result<PlayerColor, DecodeError> {
    match get_str(obj, field)?.as_str() {
        "black" => Ok(PlayerColor::Black),
        "white" => Ok(PlayerColor::White),
        other => Err(DecodeError::InvalidField {
            field,
            detail: format!("unknown color {other:?}"),
        }),
    }
}

/// Parses one frame into a message. The trailing LF (and an optional
/// CR before it) may be present or already stripped. Input is accepted
/// in any key order, with any insignificant whitespace; unknown keys
/// are ignored.
pub fn decode_message(frame: &[u8]) -> Result<Message, DecodeError> {
    if frame.len() > MAX_FRAME_LEN {
        return Err(DecodeError::Oversize);
    }
    let mut payload = frame;
    if payload.last() == Some(&b'\n') {
        payload = &payload[..payload.len() - 1];
    }
    if payload.last() == Some(&b'\r') {
        payload = &payload[..payload.len() - 1];
    }
    let value: Value = serde_json::from_slice(payload)
        .map_err(|e| DecodeError::Malformed(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| DecodeError::Malformed("frame is not a JSON object".into()))?;
    let kind = get_str(obj, "type")?;
    match kind.as_str() {
        "register" => Ok(Message::Register {
            name: get_str(obj, "name")?,
        }),
        "registered" => Ok(Message::Registered {
            client_id: get_str(obj, "client_id")?,
        }),
        "ping" => Ok(Message::Ping),
        "pong" => Ok(Message::Pong),
        "game_start" => Ok(Message::GameStart {
            game_id: get_str(obj, "game_id")?,
            your_color: get_color(obj, "your_color")?,
            opponent_name: get_str(obj, "opponent_name")?,
        }),
        "move_request" => {
            let passes = get_u64(obj, "consecutive_passes")?;
            let passes = u8::try_from(passes)
                .ok()
                .filter(|&p| p <= 2)
                .ok_or(DecodeError::InvalidField {
                    field: "consecutive_passes",
                    detail: format!("{passes} out of range"),
                })?;
            let state = parse_state(&get_str(obj, "state")?, passes)?;
            Ok(Message::MoveRequest {
                game_id: get_str(obj, "game_id")?,
                state,
                deadline_ms: get_u64(obj, "deadline_ms")?,
            })
        }
        "move" => {
            let text = get_str(obj, "move")?;
            let mv: Move = text.parse().map_err(|_| DecodeError::InvalidField {
                field: "move",
                detail: format!("{text:?} is not a move"),
            })?;
            Ok(Message::MoveReply {
                game_id: get_str(obj, "game_id")?,
                mv,
            })
        }
        "bad_move" => {
            let reason = match get_str(obj, "reason")?.as_str() {
                "illegal" => BadMoveKind::Illegal,
                "timeout" => BadMoveKind::Timeout,
                "malformed" => BadMoveKind::Malformed,
                other => {
                    return Err(DecodeError::InvalidField {
                        field: "reason",
                        detail: format!("unknown reason {other:?}"),
                    })
                }
            };
            Ok(Message::BadMove {
                game_id: get_str(obj, "game_id")?,
                reason,
            })
        }
        "game_end" => {
            let result = match get_str(obj, "result")?.as_str() {
                "black_win" => GameOutcome::BlackWin,
                "white_win" => GameOutcome::WhiteWin,
                "draw" => GameOutcome::Draw,
                other => {
                    return Err(DecodeError::InvalidField {
                        field: "result",
                        detail: format!("unknown result {other:?}"),
                    })
                }
            };
            Ok(Message::GameEnd {
                game_id: get_str(obj, "game_id")?,
                result,
                black_count: get_count(obj, "black_count")?,
                white_count: get_count(obj, "white_count")?,
            })
        }
        "error" => Ok(Message::Error {
            code: get_str(obj, "code")?,
            text: get_str(obj, "text")?,
        }),
        other => Err(DecodeError::UnknownType(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use othello_core::GameState;

    #[test]
    fn canonical_register_frame() {
        let bytes = encode_message(&Message::Register {
            name: "alice".into(),
        });
        assert_eq!(bytes, b"{\"type\":\"register\",\"name\":\"alice\"}\n");
    }

    #[test]
    fn canonical_move_frame() {
        let bytes = encode_message(&Message::MoveReply {
            game_id: "g1".into(),
            mv: "d3".parse().unwrap(),
        });
        assert_eq!(bytes, b"{\"type\":\"move\",\"game_id\":\"g1\",\"move\":\"d3\"}\n");
    }

    #[test]
    fn key_order_is_tolerated_on_input() {
        let m = decode_message(b"{\"name\":\"bob\",\"type\":\"register\"}\n").unwrap();
        assert_eq!(m, Message::Register { name: "bob".into() });
    }

    #[test]
    fn whitespace_is_tolerated_on_input() {
        let m = decode_message(b"  { \"type\" : \"ping\" }  ").unwrap();
        assert_eq!(m, Message::Ping);
    }

    #[test]
    fn unknown_type_is_a_distinct_error() {
        assert_eq!(
            decode_message(b"{\"type\":\"warp\"}\n").unwrap_err(),
            DecodeError::UnknownType("warp".into())
        );
    }

    #[test]
    fn missing_field_is_a_distinct_error() {
        assert_eq!(
            decode_message(b"{\"type\":\"register\"}\n").unwrap_err(),
            DecodeError::MissingField("name")
        );
    }

    #[test]
    fn oversize_frames_are_rejected() {
        let mut frame = vec![b'{'; 10_000];
        frame.push(b'\n');
        assert_eq!(decode_message(&frame).unwrap_err(), DecodeError::Oversize);
    }

    #[test]
    fn garbage_is_malformed() {
        assert!(matches!(
            decode_message(b"hello there\n"),
            Err(DecodeError::Malformed(_))
        ));
        assert!(matches!(
            decode_message(b"[1,2,3]\n"),
            Err(DecodeError::Malformed(_))
        ));
    }

    #[test]
    fn move_request_round_trips_the_position() {
        let state = GameState::initial().apply_move("d3".parse().unwrap()).unwrap();
        let m = Message::MoveRequest {
            game_id: "g7".into(),
            state,
            deadline_ms: 5000,
        };
        let decoded = decode_message(&encode_message(&m)).unwrap();
        assert_eq!(decoded, m);
    }
}
