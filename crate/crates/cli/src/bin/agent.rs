//! Agent entry point: connects to a tournament server and plays with
//! the selected strategy until the server closes the connection.

use std::path::PathBuf;

use clap::Parser;
use othello_cli::{load_file_config, merge_agent_config, AgentFileConfig, AgentFlags};
use othello_tournament::agent_loop;

#[derive(Parser)]
#[command(
    name = "agent",
    about = "Othello tournament agent with pluggable strategies",
    long_about = None
)]
struct Cli {
    /// JSON configuration file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Server address [default: 127.0.0.1:8000].
    #[arg(long)]
    connect: Option<String>,
    /// Name to register under [default: agent].
    #[arg(long)]
    name: Option<String>,
    /// Move selection: random, greedy, alphabeta, or mcts [default: alphabeta].
    #[arg(long)]
    strategy: Option<String>,
    /// RNG seed for the random and mcts strategies [default: time-derived].
    #[arg(long)]
    seed: Option<u64>,
    /// Depth cap for alphabeta, in plies.
    #[arg(long)]
    max_depth: Option<u32>,
    /// Per-move compute budget in milliseconds (further capped by the
    /// server deadline minus the safety margin).
    #[arg(long)]
    time_budget_ms: Option<u64>,
    /// Playout budget per move for mcts [default: 10000 when no time budget].
    #[arg(long)]
    playouts: Option<u64>,
    /// UCB1 exploration constant for mcts [default: sqrt(2)].
    #[arg(long)]
    exploration: Option<f64>,
    /// JSON file with heuristic weights for alphabeta.
    #[arg(long)]
    heuristic: Option<PathBuf>,
    /// Milliseconds reserved for network latency inside the deadline [default: 500].
    #[arg(long)]
    margin_ms: Option<u64>,
    /// Suppress per-event logging.
    #[arg(long)]
    quiet: bool,
}

fn main() {
    let cli = Cli::parse();
    let flags = AgentFlags {
        connect: cli.connect,
        name: cli.name,
        strategy: cli.strategy,
        seed: cli.seed,
        max_depth: cli.max_depth,
        time_budget_ms: cli.time_budget_ms,
        playouts: cli.playouts,
        exploration: cli.exploration,
        heuristic: cli.heuristic,
        margin_ms: cli.margin_ms,
        quiet: cli.quiet,
    };
    let file: AgentFileConfig = match load_file_config(cli.config.as_deref()) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    let config = match merge_agent_config(flags, file) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    match agent_loop(&config) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
