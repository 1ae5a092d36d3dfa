//! Tournament server entry point: binds, matchmakes, and plays games
//! until interrupted; on Ctrl-C the running game finishes, the queue is
//! cancelled, and the summary lands next to the logs.

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Duration;

use clap::Parser;
use othello_cli::{
    load_file_config, merge_server_config, ServerFileConfig, ServerFlags, LOG_DIR_ENV,
};
use othello_tournament::TournamentServer;

#[derive(Parser)]
#[command(
    name = "server",
    about = "Othello tournament server: all connected agents play a double round-robin",
    long_about = None
)]
struct Cli {
    /// JSON configuration file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Address to bind.
    #[arg(long)]
    bind: Option<String>,
    /// TCP port to listen on [default: 8000].
    #[arg(long)]
    port: Option<u16>,
    /// Per-move deadline in milliseconds [default: 5000].
    #[arg(long)]
    time_limit_ms: Option<u64>,
    /// Directory for game logs and the summary [default: ./tournament-logs, env OTHELLO_LOGS].
    #[arg(long)]
    logs: Option<PathBuf>,
    /// Keep a built-in random agent connected as the baseline opponent.
    #[arg(long)]
    random_agent: bool,
    /// Bad moves by one player in one game before it forfeits [default: 10].
    #[arg(long)]
    bad_move_cap: Option<u32>,
    /// Print boards and game events to stdout.
    #[arg(long)]
    spectate: bool,
}

static INTERRUPTED: AtomicBool = AtomicBool::new(false);

extern "C" fn on_sigint(_: libc::c_int) {
    INTERRUPTED.store(true, Ordering::SeqCst);
}

fn main() {
    let cli = Cli::parse();
    let flags = ServerFlags {
        bind: cli.bind,
        port: cli.port,
        time_limit_ms: cli.time_limit_ms,
        logs: cli.logs,
        random_agent: cli.random_agent,
        bad_move_cap: cli.bad_move_cap,
        spectate: cli.spectate,
    };
    let file: ServerFileConfig = match load_file_config(cli.config.as_deref()) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    let env_logs = std::env::var_os(LOG_DIR_ENV).map(PathBuf::from);
    let config = match merge_server_config(flags, file, env_logs) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };

    let log_dir = config.log_dir.clone();
    let handle = match TournamentServer::start(config) {
        Ok(h) => h,
        Err(e) => {
            eprintln!("error: cannot start server: {e}");
            std::process::exit(1);
        }
    };
    println!("listening on {}", handle.addr());
    if let Some(dir) = &log_dir {
        println!("logging to {}", dir.display());
    }
    println!("press Ctrl-C to end the tournament");

    unsafe {
        libc::signal(libc::SIGINT, on_sigint as *const () as libc::sighandler_t);
        libc::signal(libc::SIGTERM, on_sigint as *const () as libc::sighandler_t);
    }
    while !INTERRUPTED.load(Ordering::SeqCst) {
        std::thread::sleep(Duration::from_millis(100));
    }
    println!("interrupt received: finishing the running game, cancelling the queue");
    let summary = handle.join();
    println!(
        "tournament over: {} game(s) recorded",
        summary.records.len()
    );
    if let Some(path) = &summary.summary_path {
        println!("summary written to {}", path.display());
    }
    for row in &summary.standings {
        println!(
            "  #{} {} ({} pts, {} bad moves)",
            row.rank, row.name, row.points, row.total_bad_moves
        );
    }
}
