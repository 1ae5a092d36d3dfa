//! Replay tooling: verify logs, step through a game as ASCII boards, or
//! rebuild the tournament report from a log directory.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use othello_core::GameState;
use othello_tournament::record::MoveVerdict;
use othello_tournament::{
    build_report, load_game_log_file, render_ascii, render_report, verify_replay, GameRecord,
};

#[derive(Parser)]
#[command(
    name = "replay",
    about = "Verify, display, and summarize othello game logs",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-simulate logs and report any inconsistency (exit 1 if found).
    Verify { paths: Vec<PathBuf> },
    /// Render a game move by move, or a single position with --ply.
    Show {
        path: PathBuf,
        /// Show only the board after this many plies.
        #[arg(long)]
        ply: Option<u32>,
    },
    /// Rebuild the standings and results matrix from a log directory.
    Report {
        dir: PathBuf,
        /// Also write the rendering to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { paths } => cmd_verify(&paths),
        Command::Show { path, ply } => cmd_show(&path, ply),
        Command::Report { dir, out } => cmd_report(&dir, out.as_deref()),
    };
    std::process::exit(code);
}

fn cmd_verify(paths: &[PathBuf]) -> i32 {
    if paths.is_empty() {
        eprintln!("error: no log files given");
        return 2;
    }
    let mut dirty = 0usize;
    for path in paths {
        match load_game_log_file(path) {
            Ok(record) => {
                let report = verify_replay(&record);
                if report.is_clean() {
                    println!("{}: ok", path.display());
                } else {
                    dirty += 1;
                    println!(
                        "{}: {} discrepancy(ies)",
                        path.display(),
                        report.discrepancies.len()
                    );
                    for d in &report.discrepancies {
                        match d.ply {
                            Some(ply) => println!("  ply {ply}: {}", d.detail),
                            None => println!("  {}", d.detail),
                        }
                    }
                }
            }
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
    }
    if dirty > 0 {
        1
    } else {
        0
    }
}

/// Board states after each recorded turn (bad moves forfeit the turn).
fn positions(record: &GameRecord) -> Vec<GameState> {
    let mut state = GameState::initial();
    let mut out = vec![state];
    for m in &record.moves {
        state = match (m.verdict, m.mv) {
            (MoveVerdict::Ok, Some(mv)) => match state.apply_move(mv) {
                Ok(next) => next,
                Err(_) => break,
            },
            _ => state.skip_turn(),
        };
        out.push(state);
    }
    out
}

fn cmd_show(path: &Path, ply: Option<u32>) -> i32 {
    let record = match load_game_log_file(path) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return 2;
        }
    };
    println!(
        "game {}: {} (black) vs {} (white)",
        record.game_id(),
        record.black_name,
        record.white_name
    );
    let boards = positions(&record);
    match ply {
        Some(n) => {
            let Some(board) = boards.get(n as usize + 1) else {
                eprintln!(
                    "error: game has only {} plies",
                    boards.len().saturating_sub(1)
                );
                return 2;
            };
            let turn = &record.moves[n as usize];
            println!(
                "after ply {n} ({} by {}, {}):",
                turn.mv.map(|m| m.to_string()).unwrap_or_else(|| "-".into()),
                turn.player,
                turn.verdict.as_str()
            );
            print!("{}", render_ascii(board));
        }
        None => {
            println!("opening:");
            print!("{}", render_ascii(&boards[0]));
            for (i, board) in boards.iter().enumerate().skip(1) {
                let turn = &record.moves[i - 1];
                println!(
                    "\nply {} — {} plays {} ({}):",
                    turn.ply,
                    turn.player,
                    turn.mv.map(|m| m.to_string()).unwrap_or_else(|| "-".into()),
                    turn.verdict.as_str()
                );
                print!("{}", render_ascii(board));
            }
        }
    }
    0
}

fn cmd_report(dir: &Path, out: Option<&Path>) -> i32 {
    let entries = match std::fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {}: {e}", dir.display());
            return 2;
        }
    };
    let mut records = Vec::new();
    for entry in entries.flatten() {
        let path = entry.path();
        if path.extension().is_some_and(|ext| ext == "log") {
            match load_game_log_file(&path) {
                Ok(record) => records.push(record),
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    return 2;
                }
            }
        }
    }
    records.sort_by_key(|r| r.started_at_ms);
    // The reference random agent is recognized by its reserved name.
    let random_id = records
        .iter()
        .flat_map(|r| {
            [
                (&r.pairing.black, &r.black_name),
                (&r.pairing.white, &r.white_name),
            ]
        })
        .find(|(_, name)| name.as_str() == othello_tournament::server::RANDOM_AGENT_NAME)
        .map(|(id, _)| id.clone());
    let report = build_report(&records, random_id.as_deref());
    let text = render_report(&report);
    print!("{text}");
    if let Some(out) = out {
        if let Err(e) = std::fs::write(out, &text) {
            eprintln!("error: cannot write {}: {e}", out.display());
            return 1;
        }
    }
    0
}
