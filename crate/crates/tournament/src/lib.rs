//! The tournament side of the stack: a TCP server that matchmakes every
//! connected agent against every other (both colors), enforces the
//! per-move deadline and the bad-move rule, and records every game; the
//! reference agents that connect to it; and the log/replay/standings
//! machinery that turns records into verifiable files and reports.

pub mod agent;
pub mod matchmaking;
pub mod record;
pub mod replay;
pub mod selfplay;
pub mod server;
pub mod standings;

pub use agent::{agent_loop, AgentConfig, AgentError, Strategy};
pub use matchmaking::{pairings_for_join, schedule_pairings};
pub use record::{GameRecord, GameResult, MoveRecord, MoveVerdict, Pairing, Termination};
pub use replay::{
    build_report, load_game_log, load_game_log_file, render_ascii, render_report, save_game_log,
    verify_replay, write_game_log, Discrepancy, ReplayError, TournamentReport, VerificationReport,
    RULES_VERSION,
};
pub use server::{
    ServerConfig, ServerHandle, ServerSnapshot, SessionInfo, TournamentServer, TournamentSummary,
};
pub use standings::{compute_standings, StandingsRow};
