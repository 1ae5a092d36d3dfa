//! Game-log files, replay verification, board rendering, and the
//! tournament report.
//!
//! A log is line-oriented text in the same family as the wire protocol:
//! each line is a flat JSON object with a `"type"` field. One file per
//! game: a `header` line, one `move` line per turn, and a `result`
//! line. Logs are self-contained; verification re-simulates the game
//! from the opening and flags every inconsistency instead of trusting
//! the writer.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use othello_core::{Coord, GameState, GameStatus, Move, PlayerColor};
use serde_json::Value;

use crate::record::{GameRecord, GameResult, MoveRecord, MoveVerdict, Pairing, Termination};
use crate::standings::{compute_standings, StandingsRow};

/// Rules identifier stamped into every log header.
pub const RULES_VERSION: &str = "othello-8x8-v1";

#[derive(Debug, thiserror::Error)]
pub enum ReplayError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {detail}")]
    Parse { line: usize, detail: String },
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn color_token(c: PlayerColor) -> &'static str {
    match c {
        PlayerColor::Black => "black",
        PlayerColor::White => "white",
    }
}

fn result_token(winner: Option<PlayerColor>) -> &'static str {
    match winner {
        Some(PlayerColor::Black) => "black_win",
        Some(PlayerColor::White) => "white_win",
        None => "draw",
    }
}

/// Serializes a record as one log file: header line, move lines, result
/// line.
pub fn write_game_log(record: &GameRecord, sink: &mut impl Write) -> io::Result<()> {
    writeln!(
        sink,
        r#"{{"type":"header","game_id":{},"black_id":{},"black_name":{},"white_id":{},"white_name":{},"started_at_ms":{},"ended_at_ms":{},"rules":{}}}"#,
        json_str(record.game_id()),
        json_str(&record.pairing.black),
        json_str(&record.black_name),
        json_str(&record.pairing.white),
        json_str(&record.white_name),
        record.started_at_ms,
        record.ended_at_ms,
        json_str(RULES_VERSION),
    )?;
    for m in &record.moves {
        let mut line = format!(
            r#"{{"type":"move","ply":{},"player":"{}","requested_at_ms":{}"#,
            m.ply,
            color_token(m.player),
            m.requested_at_ms
        );
        if let Some(at) = m.replied_at_ms {
            let _ = write!(line, r#","replied_at_ms":{at}"#);
        }
        if let Some(mv) = m.mv {
            let _ = write!(line, r#","move":"{mv}""#);
        }
        let _ = write!(line, r#","verdict":"{}"}}"#, m.verdict.as_str());
        writeln!(sink, "{line}")?;
    }
    writeln!(
        sink,
        r#"{{"type":"result","result":"{}","termination":"{}","black_count":{},"white_count":{},"black_bad_moves":{},"white_bad_moves":{},"final_state":{},"final_passes":{}}}"#,
        result_token(record.result.winner),
        record.result.termination.as_str(),
        record.result.black_count,
        record.result.white_count,
        record.black_bad_moves,
        record.white_bad_moves,
        json_str(&othello_protocol::serialize_state(&record.final_state)),
        record.final_state.consecutive_passes(),
    )?;
    Ok(())
}

/// Writes the log as `<game_id>.log` under `dir`.
pub fn save_game_log(record: &GameRecord, dir: &Path) -> io::Result<std::path::PathBuf> {
    let path = dir.join(format!("{}.log", record.game_id()));
    let mut file = io::BufWriter::new(fs::File::create(&path)?);
    write_game_log(record, &mut file)?;
    file.flush()?;
    Ok(path)
}

struct LineReader<'a> {
    number: usize,
    obj: &'a serde_json::Map<String, Value>,
}

impl LineReader<'_> {
    fn err(&self, detail: impl Into<String>) -> ReplayError {
        ReplayError::Parse {
            line: self.number,
            detail: detail.into(),
        }
    }

    fn str_field(&self, field: &str) -> Result<String, ReplayError> {
        self.obj
            .get(field)
            .and_then(Value::as_str)
            .map(str::to_string)
            .ok_or_else(|| self.err(format!("missing or non-string field {field:?}")))
    }

    fn u64_field(&self, field: &str) -> Result<u64, ReplayError> {
        self.obj
            .get(field)
            .and_then(Value::as_u64)
            .ok_or_else(|| self.err(format!("missing or non-integer field {field:?}")))
    }

    fn opt_u64_field(&self, field: &str) -> Result<Option<u64>, ReplayError> {
        match self.obj.get(field) {
            None => Ok(None),
            Some(v) => v
                .as_u64()
                .map(Some)
                .ok_or_else(|| self.err(format!("non-integer field {field:?}"))),
        }
    }

    fn color_field(&self, field: &str) -> Result<PlayerColor, ReplayError> {
        match self.str_field(field)?.as_str() {
            "black" => Ok(PlayerColor::Black),
            "white" => Ok(PlayerColor::White),
            other => Err(self.err(format!("bad color {other:?} in {field:?}"))),
        }
    }
}

/// Parses one log file back into a record; inverse of
/// [`write_game_log`].
pub fn load_game_log(source: &mut impl BufRead) -> Result<GameRecord, ReplayError> {
    let mut header: Option<(Pairing, String, String, u64, u64)> = None;
    let mut moves: Vec<MoveRecord> = Vec::new();
    let mut result: Option<(GameResult, u32, u32, GameState)> = None;

    for (idx, line) in source.lines().enumerate() {
        let number = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parse_err = |detail: String| ReplayError::Parse {
            line: number,
            detail,
        };
        let value: Value =
            serde_json::from_str(&line).map_err(|e| parse_err(format!("bad JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| parse_err("line is not a JSON object".into()))?;
        let reader = LineReader { number, obj };
        match reader.str_field("type")?.as_str() {
            "header" => {
                if header.is_some() {
                    return Err(reader.err("duplicate header line"));
                }
                header = Some((
                    Pairing {
                        game_id: reader.str_field("game_id")?,
                        black: reader.str_field("black_id")?,
                        white: reader.str_field("white_id")?,
                    },
                    reader.str_field("black_name")?,
                    reader.str_field("white_name")?,
                    reader.u64_field("started_at_ms")?,
                    reader.u64_field("ended_at_ms")?,
                ));
            }
            "move" => {
                let mv = match reader.obj.get("move") {
                    None => None,
                    Some(v) => {
                        let text = v
                            .as_str()
                            .ok_or_else(|| reader.err("non-string move"))?;
                        Some(text.parse::<Move>().map_err(|e| reader.err(e.to_string()))?)
                    }
                };
                let verdict_text = reader.str_field("verdict")?;
                let verdict = MoveVerdict::from_token(&verdict_text)
                    .ok_or_else(|| reader.err(format!("unknown verdict {verdict_text:?}")))?;
                moves.push(MoveRecord {
                    ply: reader.u64_field("ply")? as u32,
                    player: reader.color_field("player")?,
                    requested_at_ms: reader.u64_field("requested_at_ms")?,
                    replied_at_ms: reader.opt_u64_field("replied_at_ms")?,
                    mv,
                    verdict,
                });
            }
            "result" => {
                if result.is_some() {
                    return Err(reader.err("duplicate result line"));
                }
                let winner = match reader.str_field("result")?.as_str() {
                    "black_win" => Some(PlayerColor::Black),
                    "white_win" => Some(PlayerColor::White),
                    "draw" => None,
                    other => return Err(reader.err(format!("unknown result {other:?}"))),
                };
                let termination_text = reader.str_field("termination")?;
                let termination = Termination::from_token(&termination_text).ok_or_else(|| {
                    reader.err(format!("unknown termination {termination_text:?}"))
                })?;
                let passes = reader.u64_field("final_passes")?;
                let passes = u8::try_from(passes)
                    .ok()
                    .filter(|&p| p <= 2)
                    .ok_or_else(|| reader.err(format!("final_passes {passes} out of range")))?;
                let final_state =
                    othello_protocol::parse_state(&reader.str_field("final_state")?, passes)
                        .map_err(|e| reader.err(e.to_string()))?;
                result = Some((
                    GameResult {
                        winner,
                        black_count: reader.u64_field("black_count")? as u8,
                        white_count: reader.u64_field("white_count")? as u8,
                        termination,
                    },
                    reader.u64_field("black_bad_moves")? as u32,
                    reader.u64_field("white_bad_moves")? as u32,
                    final_state,
                ));
            }
            other => return Err(reader.err(format!("unknown line type {other:?}"))),
        }
    }

    let (pairing, black_name, white_name, started_at_ms, ended_at_ms) =
        header.ok_or(ReplayError::Parse {
            line: 0,
            detail: "missing header line".into(),
        })?;
    let (result, black_bad_moves, white_bad_moves, final_state) =
        result.ok_or(ReplayError::Parse {
            line: 0,
            detail: "missing result line".into(),
        })?;
    Ok(GameRecord {
        pairing,
        black_name,
        white_name,
        moves,
        final_state,
        result,
        black_bad_moves,
        white_bad_moves,
        started_at_ms,
        ended_at_ms,
    })
}

pub fn load_game_log_file(path: &Path) -> Result<GameRecord, ReplayError> {
    let file = fs::File::open(path)?;
    load_game_log(&mut io::BufReader::new(file))
}

/// One inconsistency found while re-simulating a log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    /// The ply the problem was detected at, when tied to one.
    pub ply: Option<u32>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub game_id: String,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Re-simulates a record from the opening position and checks it
/// against its own claims: every `Ok` move must be legal in context,
/// bad moves forfeit the turn, and the final position, counts, winner,
/// and bad-move tallies must all match. Returns every discrepancy
/// found; an empty list means the log is internally consistent.
pub fn verify_replay(record: &GameRecord) -> VerificationReport {
    let mut discrepancies = Vec::new();
    let mut state = GameState::initial();
    let mut sim_broken = false;

    for (i, m) in record.moves.iter().enumerate() {
        if m.ply != i as u32 {
            discrepancies.push(Discrepancy {
                ply: Some(m.ply),
                detail: format!("ply index {} at position {i}", m.ply),
            });
            sim_broken = true;
            break;
        }
        if sim_broken {
            break;
        }
        if state.is_terminal() {
            discrepancies.push(Discrepancy {
                ply: Some(m.ply),
                detail: "move recorded after the game ended".into(),
            });
            sim_broken = true;
            break;
        }
        if m.player != state.to_move() {
            discrepancies.push(Discrepancy {
                ply: Some(m.ply),
                detail: format!(
                    "recorded player {} but {} is to move",
                    m.player,
                    state.to_move()
                ),
            });
            sim_broken = true;
            break;
        }
        match m.verdict {
            MoveVerdict::Ok => {
                let Some(mv) = m.mv else {
                    discrepancies.push(Discrepancy {
                        ply: Some(m.ply),
                        detail: "ok verdict without a move".into(),
                    });
                    sim_broken = true;
                    break;
                };
                match state.apply_move(mv) {
                    Ok(next) => state = next,
                    Err(e) => {
                        discrepancies.push(Discrepancy {
                            ply: Some(m.ply),
                            detail: format!("recorded move {mv} is illegal here: {e}"),
                        });
                        sim_broken = true;
                        break;
                    }
                }
            }
            // Bad moves forfeit the turn: board and pass counter stay.
            _ => state = state.skip_turn(),
        }
    }

    // Tallies are independent of the simulation.
    let count_bad = |color: PlayerColor| {
        record
            .moves
            .iter()
            .filter(|m| m.player == color && m.verdict.is_bad())
            .count() as u32
    };
    for (color, claimed) in [
        (PlayerColor::Black, record.black_bad_moves),
        (PlayerColor::White, record.white_bad_moves),
    ] {
        let counted = count_bad(color);
        if counted != claimed {
            discrepancies.push(Discrepancy {
                ply: None,
                detail: format!(
                    "{color} bad-move tally is {claimed} but the moves show {counted}"
                ),
            });
        }
    }

    if !sim_broken {
        if state != record.final_state {
            discrepancies.push(Discrepancy {
                ply: None,
                detail: "final state does not match the replayed position".into(),
            });
        }
        let (black_count, white_count) = (state.black_count(), state.white_count());
        if (record.result.black_count, record.result.white_count) != (black_count, white_count) {
            discrepancies.push(Discrepancy {
                ply: None,
                detail: format!(
                    "counts {}-{} recorded but replay gives {black_count}-{white_count}",
                    record.result.black_count, record.result.white_count
                ),
            });
        }
        match record.result.termination {
            Termination::Normal => match state.status() {
                GameStatus::Finished { winner, .. } => {
                    if winner != record.result.winner {
                        discrepancies.push(Discrepancy {
                            ply: None,
                            detail: format!(
                                "result says {} but replay gives {}",
                                result_token(record.result.winner),
                                result_token(winner)
                            ),
                        });
                    }
                }
                GameStatus::Ongoing => discrepancies.push(Discrepancy {
                    ply: None,
                    detail: "normal termination claimed but the replayed game is not over".into(),
                }),
            },
            Termination::BadMoveCap | Termination::Disconnect => {
                if record.result.winner.is_none() {
                    discrepancies.push(Discrepancy {
                        ply: None,
                        detail: "forfeit without a winner".into(),
                    });
                }
            }
        }
    }

    VerificationReport {
        game_id: record.game_id().to_string(),
        discrepancies,
    }
}

/// Renders the board with rank/file labels, a side-to-move footer, and
/// a verdict line once the game is over.
pub fn render_ascii(state: &GameState) -> String {
    let mut out = String::with_capacity(256);
    out.push_str("  a b c d e f g h\n");
    for row in 0..8u8 {
        let _ = write!(out, "{}", row + 1);
        for col in 0..8u8 {
            let cell = state.cell(Coord::new(col, row).unwrap());
            out.push(' ');
            out.push(match cell {
                Some(PlayerColor::Black) => 'B',
                Some(PlayerColor::White) => 'W',
                None => '·',
            });
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "{} to move · B {} W {}",
        state.to_move(),
        state.black_count(),
        state.white_count()
    );
    if let GameStatus::Finished {
        winner,
        black_count,
        white_count,
    } = state.status()
    {
        let _ = match winner {
            Some(w) => writeln!(out, "game over · {w} wins {black_count}-{white_count}"),
            None => writeln!(out, "game over · draw {black_count}-{white_count}"),
        };
    }
    out
}

/// Standings plus the per-pairing results matrix.
#[derive(Debug, Clone)]
pub struct TournamentReport {
    pub standings: Vec<StandingsRow>,
    /// `(client_id, name)` in standings order; indexes the matrix.
    pub participants: Vec<(String, String)>,
    /// `matrix[i][j]`: outcomes of games with participant `i` as Black
    /// against `j` as White, one character per game (`W`/`D`/`L` from
    /// Black's side), empty if never played, `"·"` on the diagonal.
    pub matrix: Vec<Vec<String>>,
}

/// Summarizes a record set: standings (same computation the server
/// uses) plus the results matrix.
pub fn build_report(records: &[GameRecord], random_agent_id: Option<&str>) -> TournamentReport {
    let standings = compute_standings(records, random_agent_id);
    let participants: Vec<(String, String)> = standings
        .iter()
        .map(|r| (r.client_id.clone(), r.name.clone()))
        .collect();
    let index: std::collections::HashMap<&str, usize> = participants
        .iter()
        .enumerate()
        .map(|(i, (id, _))| (id.as_str(), i))
        .collect();
    let n = participants.len();
    let mut matrix = vec![vec![String::new(); n]; n];
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i].push('·');
    }
    for record in records {
        let (Some(&black), Some(&white)) = (
            index.get(record.pairing.black.as_str()),
            index.get(record.pairing.white.as_str()),
        ) else {
            continue;
        };
        matrix[black][white].push(match record.result.winner {
            Some(PlayerColor::Black) => 'W',
            Some(PlayerColor::White) => 'L',
            None => 'D',
        });
    }
    TournamentReport {
        standings,
        participants,
        matrix,
    }
}

/// Plain-text rendering of a report: standings table, then the matrix.
pub fn render_report(report: &TournamentReport) -> String {
    let mut out = String::new();
    out.push_str("standings\n");
    out.push_str(
        "rank  name                games  w-d-l      points  bad  diff   beat_random\n",
    );
    for row in &report.standings {
        let _ = writeln!(
            out,
            "{:<5} {:<19} {:<6} {:<10} {:<7} {:<4} {:<6} {}",
            row.rank,
            row.name,
            row.games,
            format!("{}-{}-{}", row.wins, row.draws, row.losses),
            format!("{:.1}", row.points),
            row.total_bad_moves,
            row.disc_diff,
            if row.beat_random { "yes" } else { "no" },
        );
    }
    if report.participants.is_empty() {
        return out;
    }
    out.push_str("\nresults matrix (row plays Black; W/D/L from the row player's side)\n");
    let _ = writeln!(
        out,
        "{:<19} {}",
        "black \\ white",
        report
            .participants
            .iter()
            .enumerate()
            .map(|(i, _)| format!("{:<4}", i + 1))
            .collect::<String>()
    );
    for (i, (_, name)) in report.participants.iter().enumerate() {
        let cells: String = report.matrix[i]
            .iter()
            .map(|c| format!("{:<4}", if c.is_empty() { "-" } else { c.as_str() }))
            .collect();
        let _ = writeln!(out, "{:<19} {}", format!("{} {}", i + 1, name), cells);
    }
    out
}
