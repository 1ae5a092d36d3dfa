//! Shared plumbing for the three binaries: configuration-file loading
//! and flag/file/default merging.
//!
//! Precedence everywhere: explicit flag, then configuration file, then
//! built-in default. Boolean switches are or-ed (a flag can enable but
//! not disable what the file enables). The log directory additionally
//! honors the `OTHELLO_LOGS` environment variable between file and
//! default.

use std::path::{Path, PathBuf};

use othello_search::{Heuristic, SearchLimits};
use othello_tournament::{AgentConfig, ServerConfig, Strategy};
use serde::Deserialize;

/// Environment variable naming the log directory.
pub const LOG_DIR_ENV: &str = "OTHELLO_LOGS";

pub const DEFAULT_LOG_DIR: &str = "tournament-logs";
pub const DEFAULT_MARGIN_MS: u64 = 500;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ServerFileConfig {
    pub bind: Option<String>,
    pub port: Option<u16>,
    pub time_limit_ms: Option<u64>,
    pub logs: Option<PathBuf>,
    pub random_agent: Option<bool>,
    pub bad_move_cap: Option<u32>,
    pub spectate: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AgentFileConfig {
    pub connect: Option<String>,
    pub name: Option<String>,
    pub strategy: Option<String>,
    pub seed: Option<u64>,
    pub max_depth: Option<u32>,
    pub time_budget_ms: Option<u64>,
    pub playouts: Option<u64>,
    pub exploration: Option<f64>,
    pub heuristic: Option<PathBuf>,
    pub margin_ms: Option<u64>,
}

pub fn load_file_config<T: for<'de> Deserialize<'de> + Default>(
    path: Option<&Path>,
) -> Result<T, String> {
    let Some(path) = path else {
        return Ok(T::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
}

/// Flags the server binary collects; `None` means "not given".
#[derive(Debug, Default)]
pub struct ServerFlags {
    pub bind: Option<String>,
    pub port: Option<u16>,
    pub time_limit_ms: Option<u64>,
    pub logs: Option<PathBuf>,
    pub random_agent: bool,
    pub bad_move_cap: Option<u32>,
    pub spectate: bool,
}

pub fn merge_server_config(
    flags: ServerFlags,
    file: ServerFileConfig,
    env_logs: Option<PathBuf>,
) -> Result<ServerConfig, String> {
    let port = flags.port.or(file.port).unwrap_or(8000);
    if port == 0 {
        return Err("port must be in 1..=65535".into());
    }
    let time_limit_ms = flags.time_limit_ms.or(file.time_limit_ms).unwrap_or(5000);
    if time_limit_ms < 100 {
        return Err("time limit must be at least 100 ms".into());
    }
    let log_dir = flags
        .logs
        .or(file.logs)
        .or(env_logs)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_LOG_DIR));
    Ok(ServerConfig {
        bind_addr: flags.bind.or(file.bind).unwrap_or_else(|| "127.0.0.1".into()),
        port,
        time_limit_ms,
        log_dir: Some(log_dir),
        include_random_agent: flags.random_agent || file.random_agent.unwrap_or(false),
        bad_move_cap: flags.bad_move_cap.or(file.bad_move_cap).unwrap_or(10),
        spectate: flags.spectate || file.spectate.unwrap_or(false),
    })
}

#[derive(Debug, Default)]
pub struct AgentFlags {
    pub connect: Option<String>,
    pub name: Option<String>,
    pub strategy: Option<String>,
    pub seed: Option<u64>,
    pub max_depth: Option<u32>,
    pub time_budget_ms: Option<u64>,
    pub playouts: Option<u64>,
    pub exploration: Option<f64>,
    pub heuristic: Option<PathBuf>,
    pub margin_ms: Option<u64>,
    pub quiet: bool,
}

pub fn merge_agent_config(flags: AgentFlags, file: AgentFileConfig) -> Result<AgentConfig, String> {
    let margin_ms = flags.margin_ms.or(file.margin_ms).unwrap_or(DEFAULT_MARGIN_MS);
    if margin_ms >= 5000 {
        return Err("reply safety margin must be below the 5000 ms deadline".into());
    }
    let seed = flags
        .seed
        .or(file.seed)
        .unwrap_or_else(|| std::time::UNIX_EPOCH.elapsed().map(|d| d.as_nanos() as u64).unwrap_or(1));
    let mut limits = SearchLimits {
        max_depth: flags.max_depth.or(file.max_depth),
        time_budget: flags
            .time_budget_ms
            .or(file.time_budget_ms)
            .map(std::time::Duration::from_millis),
        node_budget: flags.playouts.or(file.playouts),
    };
    let heuristic = match flags.heuristic.or(file.heuristic) {
        Some(path) => Heuristic::from_file(&path).map_err(|e| e.to_string())?,
        None => Heuristic::default(),
    };
    let strategy_name = flags
        .strategy
        .or(file.strategy)
        .unwrap_or_else(|| "alphabeta".into());
    let strategy = match strategy_name.as_str() {
        "random" => Strategy::Random { seed },
        "greedy" => Strategy::Greedy,
        "alphabeta" => Strategy::AlphaBeta { limits, heuristic },
        "mcts" => {
            // MCTS counts playouts, not tree nodes; keep the same flag.
            if limits.node_budget.is_none() && limits.time_budget.is_none() {
                limits.node_budget = Some(10_000);
            }
            Strategy::Mcts {
                limits,
                exploration: flags.exploration.or(file.exploration).unwrap_or(0.0),
                seed,
            }
        }
        other => {
            return Err(format!(
                "unknown strategy {other:?}: expected random, greedy, alphabeta, or mcts"
            ))
        }
    };
    Ok(AgentConfig {
        server_addr: flags
            .connect
            .or(file.connect)
            .unwrap_or_else(|| "127.0.0.1:8000".into()),
        name: flags.name.or(file.name).unwrap_or_else(|| "agent".into()),
        strategy,
        reply_safety_margin_ms: margin_ms,
        verbose: !flags.quiet,
    })
}
