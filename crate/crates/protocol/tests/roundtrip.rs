//! Round-trip identity under canonical encoding and under hostile
//! re-encodings (different key order, injected whitespace), plus stream
//! reassembly from tiny chunks.

use othello_core::{GameState, Move, PlayerColor};
use othello_protocol::{
    decode_message, encode_message, BadMoveKind, DecodeError, FrameReader, GameOutcome, Message,
};
use proptest::prelude::*;

fn arb_color() -> impl Strategy<Value = PlayerColor> {
    prop_oneof![Just(PlayerColor::Black), Just(PlayerColor::White)]
}

fn arb_move() -> impl Strategy<Value = Move> {
    prop_oneof![
        (0u8..8, 0u8..8).prop_map(|(c, r)| Move::Place(othello_core::Coord::new(c, r).unwrap())),
        Just(Move::Pass),
    ]
}

fn arb_state() -> impl Strategy<Value = GameState> {
    (any::<u64>(), any::<u64>(), arb_color(), 0u8..3).prop_map(|(a, b, to_move, passes)| {
        let black = a & !b;
        let white = b & !a;
        GameState::from_parts(black, white, to_move, passes).unwrap()
    })
}

fn arb_text() -> impl Strategy<Value = String> {
    // Includes characters that need JSON escaping and multibyte UTF-8.
    proptest::string::string_regex("[a-zA-Z0-9 _\\-\"\\\\/\n\téλ☺]{0,40}").unwrap()
}

fn arb_outcome() -> impl Strategy<Value = GameOutcome> {
    prop_oneof![
        Just(GameOutcome::BlackWin),
        Just(GameOutcome::WhiteWin),
        Just(GameOutcome::Draw),
    ]
}

fn arb_reason() -> impl Strategy<Value = BadMoveKind> {
    prop_oneof![
        Just(BadMoveKind::Illegal),
        Just(BadMoveKind::Timeout),
        Just(BadMoveKind::Malformed),
    ]
}

fn arb_message() -> impl Strategy<Value = Message> {
    prop_oneof![
        arb_text().prop_map(|name| Message::Register { name }),
        arb_text().prop_map(|client_id| Message::Registered { client_id }),
        Just(Message::Ping),
        Just(Message::Pong),
        (arb_text(), arb_color(), arb_text()).prop_map(|(game_id, your_color, opponent_name)| {
            Message::GameStart {
                game_id,
                your_color,
                opponent_name,
            }
        }),
        (arb_text(), arb_state(), any::<u32>()).prop_map(|(game_id, state, deadline)| {
            Message::MoveRequest {
                game_id,
                state,
                deadline_ms: deadline as u64,
            }
        }),
        (arb_text(), arb_move()).prop_map(|(game_id, mv)| Message::MoveReply { game_id, mv }),
        (arb_text(), arb_reason()).prop_map(|(game_id, reason)| Message::BadMove { game_id, reason }),
        (arb_text(), arb_outcome(), 0u8..65, 0u8..65).prop_map(
            |(game_id, result, black_count, white_count)| Message::GameEnd {
                game_id,
                result,
                black_count,
                white_count,
            }
        ),
        (arb_text(), arb_text()).prop_map(|(code, text)| Message::Error { code, text }),
    ]
}

/// Re-encodes a canonical frame through serde_json's pretty printer:
/// keys get resorted alphabetically and whitespace is sprayed
/// everywhere. Raw newlines (which only the pretty printer introduces,
/// never string contents) are flattened to keep it a single line.
fn scramble(frame: &[u8]) -> Vec<u8> {
    let value: serde_json::Value = serde_json::from_slice(frame).unwrap();
    let pretty = serde_json::to_string_pretty(&value).unwrap();
    let mut bytes: Vec<u8> = pretty
        .into_bytes()
        .into_iter()
        .map(|b| if b == b'\n' { b' ' } else { b })
        .collect();
    bytes.push(b'\n');
    bytes
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2500))]

    #[test]
    fn canonical_round_trip(message in arb_message()) {
        let frame = encode_message(&message);
        prop_assert!(frame.len() <= othello_protocol::MAX_FRAME_LEN);
        prop_assert_eq!(frame.iter().filter(|&&b| b == b'\n').count(), 1, "single LF");
        prop_assert!(!frame[..frame.len() - 1].contains(&b'\n'), "no interior LF");
        prop_assert!(!frame.contains(&b'\r'), "no CR anywhere");
        let decoded = decode_message(&frame).unwrap();
        prop_assert_eq!(decoded, message);
    }

    #[test]
    fn scrambled_round_trip(message in arb_message()) {
        let scrambled = scramble(&encode_message(&message));
        let decoded = decode_message(&scrambled).unwrap();
        prop_assert_eq!(decoded, message);
    }

    #[test]
    fn one_byte_chunk_reassembly(messages in proptest::collection::vec(arb_message(), 1..6)) {
        let mut wire = Vec::new();
        for m in &messages {
            wire.extend(encode_message(m));
        }
        let mut reader = FrameReader::new();
        let mut decoded = Vec::new();
        for &b in &wire {
            for frame in reader.feed(&[b]) {
                decoded.push(decode_message(&frame.unwrap()).unwrap());
            }
        }
        prop_assert_eq!(decoded, messages);
        prop_assert_eq!(reader.pending_len(), 0);
    }
}

#[test]
fn bad_frame_does_not_poison_the_stream() {
    let mut reader = FrameReader::new();
    let mut wire = Vec::new();
    wire.extend_from_slice(b"this is not json\n");
    wire.extend(encode_message(&Message::Ping));
    wire.extend_from_slice(b"{\"type\":\"warp\"}\n");
    wire.extend(encode_message(&Message::Pong));

    let results: Vec<Result<Message, DecodeError>> = reader
        .feed(&wire)
        .into_iter()
        .map(|frame| decode_message(&frame.unwrap()))
        .collect();
    assert_eq!(results.len(), 4);
    assert!(matches!(results[0], Err(DecodeError::Malformed(_))));
    assert_eq!(results[1], Ok(Message::Ping));
    assert_eq!(results[2], Err(DecodeError::UnknownType("warp".into())));
    assert_eq!(results[3], Ok(Message::Pong));
}
