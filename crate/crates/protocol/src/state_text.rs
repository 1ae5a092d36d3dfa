use othello_core::{Coord, GameState, PlayerColor};

use crate::codec::DecodeError;

/// Renders a position as `"<64 board chars> <side to move>"`: the board
/// row-major with '.', 'B', 'W', then "black" or "white". The pass
/// counter is not part of this text; the enclosing message carries it
/// as an integer field.
pub fn serialize_state(state: &GameState) -> String {
    let mut text = String::with_capacity(64 + 6);
    for c in Coord::all() {
        text.push(match state.cell(c) {
            Some(PlayerColor::Black) => 'B',
            Some(PlayerColor::White) => 'W',
            None => '.',
        });
    }
    text.push(' ');
    text.push_str(&state.to_move().to_string());
    text
}

/// Parses the output of [`serialize_state`] back into a state, with the
/// separately transmitted pass counter.
pub fn parse_state(text: &str, consecutive_passes: u8) -> Result<GameState, DecodeError> {
    let bad = |detail: String| DecodeError::InvalidField {
        field: "state",
        detail,
    };
    let (board, side) = text
        .split_once(' ')
        .ok_or_else(|| bad("expected \"<board> <color>\"".into()))?;
    if board.chars().count() != 64 {
        return Err(bad(format!(
            "board must be 64 characters, got {}",
            board.chars().count()
        )));
    }
    let mut black = 0u64;
    let mut white = 0u64;
    for (i, ch) in board.chars().enumerate() {
        match ch {
            'B' => black |= 1 << i,
            'W' => white |= 1 << i,
            '.' => {}
            other => return Err(bad(format!("bad board character {other:?} at index {i}"))),
        }
    }
    let to_move = match side {
        "black" => PlayerColor::Black,
        "white" => PlayerColor::White,
        other => return Err(bad(format!("bad side to move {other:?}"))),
    };
    GameState::from_parts(black, white, to_move, consecutive_passes)
        .map_err(|e| bad(e.to_string()))
}
