//! Reference agents: the protocol client loop plus pluggable
//! move-selection strategies.
//!
//! Agents are stateless between turns: every `move_request` carries the
//! full position, so an agent reconstructs everything from the wire.
//! The alpha-beta strategy keeps its transposition table across the
//! turns of one game purely as a speedup; it is cleared on `game_start`.

use std::io;
use std::net::TcpStream;

use othello_core::{GameState, Move};
use othello_protocol::{Message, MessageStream, Received};
use othello_search::{
    iterative_deepening, mcts_choose, Heuristic, SearchLimits, TranspositionTable,
    DEFAULT_EXPLORATION,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Built-in move-selection strategies.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)] // the heuristic table rides inline
pub enum Strategy {
    /// Uniform over the legal moves. The baseline every serious agent
    /// must beat.
    Random { seed: u64 },
    /// Maximizes disks flipped this turn; row-major tie-break.
    Greedy,
    /// Iterative-deepening alpha-beta with a transposition table.
    AlphaBeta {
        limits: SearchLimits,
        heuristic: Heuristic,
    },
    /// UCT monte-carlo tree search.
    Mcts {
        limits: SearchLimits,
        exploration: f64,
        seed: u64,
    },
}

/// Everything an agent process needs to run.
#[derive(Debug, Clone)]
pub struct AgentConfig {
    /// `host:port` of the tournament server.
    pub server_addr: String,
    pub name: String,
    pub strategy: Strategy,
    /// Slice of the deadline reserved for network and encoding; the
    /// search budget is `deadline - margin`.
    pub reply_safety_margin_ms: u64,
    /// Log protocol events to stderr.
    pub verbose: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum AgentError {
    #[error("connection error: {0}")]
    Io(#[from] io::Error),
}

/// Picks a move uniformly at random among the legal ones. Falls back
/// to a pass on a terminal state (the server never requests one).
pub fn choose_move_random<R: Rng + ?Sized>(state: &GameState, rng: &mut R) -> Move {
    match state.legal_moves() {
        Ok(moves) => moves[rng.random_range(0..moves.len())],
        Err(_) => Move::Pass,
    }
}

/// Picks the placement flipping the most disks right now, first-best in
/// row-major order; passes when nothing can be placed.
pub fn choose_move_greedy(state: &GameState) -> Move {
    let Ok(moves) = state.legal_moves() else {
        return Move::Pass;
    };
    let mut best = moves[0];
    let mut best_flips = 0usize;
    for mv in moves {
        if let Move::Place(coord) = mv {
            let flips = state
                .flips_for(coord)
                .expect("legal placement flips disks")
                .len();
            if flips > best_flips {
                best_flips = flips;
                best = mv;
            }
        }
    }
    best
}

/// Runs iterative-deepening alpha-beta inside the wire deadline: the
/// time budget is capped at `deadline_ms - margin_ms` (at least 1 ms)
/// on top of whatever `limits` already says.
pub fn choose_move_search(
    state: &GameState,
    limits: &SearchLimits,
    heuristic: &Heuristic,
    tt: &mut TranspositionTable,
    deadline_ms: u64,
    margin_ms: u64,
) -> Move {
    let capped = limits.cap_time_ms(deadline_ms.saturating_sub(margin_ms).max(1));
    match iterative_deepening(state, &capped, heuristic, tt) {
        Ok(result) => result.best_move,
        Err(_) => Move::Pass,
    }
}

/// Live strategy state: the RNG stream and the per-game table.
struct StrategyRuntime {
    strategy: Strategy,
    rng: ChaCha8Rng,
    tt: TranspositionTable,
}

impl StrategyRuntime {
    fn new(strategy: Strategy) -> StrategyRuntime {
        let seed = match &strategy {
            Strategy::Random { seed } => *seed,
            Strategy::Mcts { seed, .. } => *seed,
            _ => 0,
        };
        StrategyRuntime {
            strategy,
            rng: ChaCha8Rng::seed_from_u64(seed),
            tt: TranspositionTable::default(),
        }
    }

    fn on_game_start(&mut self) {
        self.tt.clear();
    }

    fn choose(&mut self, state: &GameState, deadline_ms: u64, margin_ms: u64) -> Move {
        match &self.strategy {
            Strategy::Random { .. } => choose_move_random(state, &mut self.rng),
            Strategy::Greedy => choose_move_greedy(state),
            Strategy::AlphaBeta { limits, heuristic } => {
                let (limits, heuristic) = (*limits, heuristic.clone());
                choose_move_search(state, &limits, &heuristic, &mut self.tt, deadline_ms, margin_ms)
            }
            Strategy::Mcts {
                limits,
                exploration,
                ..
            } => {
                let capped = limits.cap_time_ms(deadline_ms.saturating_sub(margin_ms).max(1));
                let exploration = if *exploration > 0.0 {
                    *exploration
                } else {
                    DEFAULT_EXPLORATION
                };
                match mcts_choose(state, &capped, exploration, &mut self.rng) {
                    Ok(result) => result.best_move,
                    Err(_) => Move::Pass,
                }
            }
        }
    }
}

/// Connects, registers, and serves the protocol until the server closes
/// the connection (clean exit) or the link drops.
///
/// Every `move_request` is answered within `deadline - margin`; pings
/// are answered between turns; `bad_move` notices are logged and play
/// continues.
pub fn agent_loop(config: &AgentConfig) -> Result<(), AgentError> {
    let stream = TcpStream::connect(&config.server_addr)?;
    stream.set_nodelay(true).ok();
    let mut link = MessageStream::new(stream);
    link.send(&Message::Register {
        name: config.name.clone(),
    })?;
    let mut runtime = StrategyRuntime::new(config.strategy.clone());
    let log = |text: String| {
        if config.verbose {
            eprintln!("[{}] {text}", config.name);
        }
    };

    loop {
        match link.recv()? {
            None => {
                log("server closed the connection".into());
                return Ok(());
            }
            Some(Received::Bad(e)) => log(format!("undecodable frame from server: {e}")),
            Some(Received::Message(message)) => match message {
                Message::Ping => link.send(&Message::Pong)?,
                Message::Pong => {}
                Message::Registered { client_id } => log(format!("registered as {client_id}")),
                Message::GameStart {
                    game_id,
                    your_color,
                    opponent_name,
                } => {
                    runtime.on_game_start();
                    log(format!("game {game_id}: playing {your_color} vs {opponent_name}"));
                }
                Message::MoveRequest {
                    game_id,
                    state,
                    deadline_ms,
                } => {
                    let received = std::time::Instant::now();
                    let mv = runtime.choose(&state, deadline_ms, config.reply_safety_margin_ms);
                    // A reply past the deadline is already a recorded
                    // timeout server-side; sending it anyway would get
                    // it ruled against a future position. Drop it.
                    if received.elapsed().as_millis() as u64 >= deadline_ms {
                        log(format!("game {game_id}: discarding reply past the deadline"));
                    } else {
                        link.send(&Message::MoveReply { game_id, mv })?;
                    }
                }
                Message::BadMove { game_id, reason } => {
                    log(format!("game {game_id}: bad move ruled ({})", reason.as_str()));
                }
                Message::GameEnd {
                    game_id,
                    result,
                    black_count,
                    white_count,
                } => log(format!(
                    "game {game_id}: {} ({black_count}-{white_count})",
                    result.as_str()
                )),
                Message::Error { code, text } => log(format!("server error {code}: {text}")),
                Message::Register { .. } | Message::MoveReply { .. } => {
                    log("ignoring client-bound message".into())
                }
            },
        }
    }
}
