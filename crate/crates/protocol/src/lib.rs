//! The wire protocol between the tournament server and agents.
//!
//! Every message is one UTF-8 text line: a flat JSON object whose first
//! key is `"type"`, terminated by a single LF. A line never contains a
//! raw LF or CR (JSON string escaping keeps arbitrary text one-line) and
//! is at most [`MAX_FRAME_LEN`] bytes including the terminator. The
//! format is deliberately debuggable with `nc` and a keyboard.
//!
//! Output is canonical: fixed key order, no insignificant whitespace.
//! Input is liberal: any key order, any insignificant whitespace,
//! unknown keys ignored.
//!
//! # Vocabulary
//!
//! Client to server:
//!
//! | type       | keys                | meaning                        |
//! |------------|---------------------|--------------------------------|
//! | `register` | `name`              | introduce agent, request a seat|
//! | `move`     | `game_id`, `move`   | reply to a `move_request`      |
//!
//! Server to client:
//!
//! | type           | keys                                                        |
//! |----------------|-------------------------------------------------------------|
//! | `registered`   | `client_id`                                                 |
//! | `game_start`   | `game_id`, `your_color`, `opponent_name`                    |
//! | `move_request` | `game_id`, `state`, `consecutive_passes`, `deadline_ms`     |
//! | `bad_move`     | `game_id`, `reason` (`illegal`/`timeout`/`malformed`)       |
//! | `game_end`     | `game_id`, `result` (`black_win`/`white_win`/`draw`), `black_count`, `white_count` |
//! | `error`        | `code`, `text`                                              |
//!
//! `ping`/`pong` flow in both directions. Moves are lowercase algebraic
//! ("d3") or the literal "pass". `state` is the 64-character row-major
//! board ('.', 'B', 'W') plus the side to move; the pass counter rides
//! alongside as an integer so a stateless client can reconstruct the
//! exact position.

mod codec;
mod framing;
mod message;
mod state_text;
mod transport;

pub use codec::{decode_message, encode_message, DecodeError, MAX_FRAME_LEN};
pub use framing::FrameReader;
pub use message::{BadMoveKind, GameOutcome, Message};
pub use state_text::{parse_state, serialize_state};
pub use transport::{MessageStream, Received};
