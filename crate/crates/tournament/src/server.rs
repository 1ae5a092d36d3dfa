//! The tournament server.
//!
//! One acceptor thread hands sockets to per-connection reader threads;
//! everything they see funnels as events into a single coordinator
//! thread that owns all game state. Games run strictly one at a time
//! off a queue, while registrations, pings, and disconnects keep being
//! serviced: the coordinator never blocks without a timeout, so the
//! move deadline fires even when the mover is silent, on the server's
//! clock.

use std::collections::{HashMap, HashSet, VecDeque};
use std::io::Write as _;
use std::net::{Shutdown, SocketAddr, TcpListener, TcpStream};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::mpsc::{self, Receiver, RecvTimeoutError, Sender};
use std::sync::{Arc, Mutex};
use std::thread::{self, JoinHandle};
use std::time::{Duration, Instant};

use othello_core::{GameState, GameStatus, PlayerColor};
use othello_protocol::{
    encode_message, BadMoveKind, DecodeError, GameOutcome, Message, MessageStream, Received,
};

use crate::agent::{agent_loop, AgentConfig, Strategy};
use crate::matchmaking::pairings_for_join;
use crate::record::{GameRecord, GameResult, MoveRecord, MoveVerdict, Pairing, Termination};
use crate::replay::{build_report, render_ascii, render_report, save_game_log};
use crate::selfplay::now_ms;
use crate::standings::{compute_standings, StandingsRow};

/// Name under which the built-in random agent registers; the standings
/// single it out for the beat-the-random-agent metric.
pub const RANDOM_AGENT_NAME: &str = "random";

const REGISTER_TIMEOUT: Duration = Duration::from_secs(10);
const IDLE_POLL: Duration = Duration::from_millis(100);

#[derive(Debug, Clone)]
pub struct ServerConfig {
    pub bind_addr: String,
    /// TCP port; 0 lets the OS pick one (tests).
    pub port: u16,
    /// Per-move deadline sent in every move_request.
    pub time_limit_ms: u64,
    /// Where per-game logs and the summary go; `None` disables files.
    pub log_dir: Option<PathBuf>,
    /// Keep an in-process random agent connected, as a baseline.
    pub include_random_agent: bool,
    /// Bad moves by one player in one game before forfeiting it.
    pub bad_move_cap: u32,
    /// Print boards and game events to stdout.
    pub spectate: bool,
}

impl Default for ServerConfig {
    fn default() -> ServerConfig {
        ServerConfig {
            bind_addr: "127.0.0.1".into(),
            port: 8000,
            time_limit_ms: 5000,
            log_dir: None,
            include_random_agent: false,
            bad_move_cap: 10,
            spectate: false,
        }
    }
}

/// Handle to write to one client from any thread.
#[derive(Clone)]
struct SessionWriter(Arc<Mutex<TcpStream>>);

impl SessionWriter {
    fn send(&self, message: &Message) -> std::io::Result<()> {
        let mut stream = self.0.lock().expect("writer lock");
        stream.write_all(&encode_message(message))
    }

    fn close(&self) {
        if let Ok(stream) = self.0.lock() {
            let _ = stream.shutdown(Shutdown::Both);
        }
    }
}

struct Session {
    id: String,
    name: String,
    writer: SessionWriter,
    alive: bool,
    connected_at_ms: u64,
}

enum Event {
    Register {
        name: String,
        writer: SessionWriter,
        id_reply: Sender<String>,
    },
    Frame {
        client_id: String,
        message: Message,
    },
    BadFrame {
        client_id: String,
        error: DecodeError,
    },
    Disconnected {
        client_id: String,
    },
    Shutdown,
}

/// Point-in-time public view of the server, safe to poll from tests and
/// UIs.
#[derive(Debug, Clone, Default)]
pub struct ServerSnapshot {
    pub sessions: Vec<SessionInfo>,
    pub queue_len: usize,
    pub games_completed: usize,
    pub running_game: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SessionInfo {
    pub client_id: String,
    pub name: String,
    pub alive: bool,
    pub connected_at_ms: u64,
}

/// Everything the server produced: every record plus final standings.
#[derive(Debug)]
pub struct TournamentSummary {
    pub records: Vec<GameRecord>,
    pub standings: Vec<StandingsRow>,
    pub summary_path: Option<PathBuf>,
}

pub struct TournamentServer;

impl TournamentServer {
    /// Binds and serves. Returns once listening; games run on
    /// background threads until [`ServerHandle::shutdown`].
    pub fn start(config: ServerConfig) -> std::io::Result<ServerHandle> {
        if config.time_limit_ms < 100 {
            return Err(std::io::Error::new(
                std::io::ErrorKind::InvalidInput,
                "time limit must be at least 100 ms",
            ));
        }
        if let Some(dir) = &config.log_dir {
            std::fs::create_dir_all(dir)?;
        }
        let listener = TcpListener::bind((config.bind_addr.as_str(), config.port))?;
        let addr = listener.local_addr()?;
        let (events_tx, events_rx) = mpsc::channel::<Event>();
        let shutdown = Arc::new(AtomicBool::new(false));
        let shared = Arc::new(Mutex::new(ServerSnapshot::default()));

        let acceptor = {
            let events = events_tx.clone();
            let shutdown = Arc::clone(&shutdown);
            thread::spawn(move || acceptor_loop(listener, events, shutdown))
        };

        let coordinator = {
            let config = config.clone();
            let shutdown = Arc::clone(&shutdown);
            let shared = Arc::clone(&shared);
            thread::spawn(move || {
                Coordinator {
                    config,
                    events: events_rx,
                    sessions: HashMap::new(),
                    roster: Vec::new(),
                    used_names: HashSet::new(),
                    queue: VecDeque::new(),
                    records: Vec::new(),
                    next_client: 0,
                    next_game: 0,
                    current_game: None,
                    shutdown,
                    shared,
                }
                .run()
            })
        };

        if config.include_random_agent {
            let agent_config = AgentConfig {
                server_addr: addr.to_string(),
                name: RANDOM_AGENT_NAME.into(),
                strategy: Strategy::Random { seed: now_ms() },
                reply_safety_margin_ms: 50,
                verbose: false,
            };
            thread::spawn(move || {
                let _ = agent_loop(&agent_config);
            });
        }

        Ok(ServerHandle {
            addr,
            events: events_tx,
            shutdown,
            shared,
            acceptor: Some(acceptor),
            coordinator: Some(coordinator),
        })
    }
}

pub struct ServerHandle {
    addr: SocketAddr,
    events: Sender<Event>,
    shutdown: Arc<AtomicBool>,
    shared: Arc<Mutex<ServerSnapshot>>,
    acceptor: Option<JoinHandle<()>>,
    coordinator: Option<JoinHandle<TournamentSummary>>,
}

impl ServerHandle {
    pub fn addr(&self) -> SocketAddr {
        self.addr
    }

    pub fn snapshot(&self) -> ServerSnapshot {
        self.shared.lock().expect("snapshot lock").clone()
    }

    /// Requests shutdown: the running game finishes, the queue is
    /// cancelled, and the summary is written.
    pub fn shutdown(&self) {
        self.shutdown.store(true, Ordering::SeqCst);
        let _ = self.events.send(Event::Shutdown);
        // Unblock the acceptor.
        let _ = TcpStream::connect(self.addr);
    }

    /// Shuts down (if not already requested) and collects the summary.
    pub fn join(mut self) -> TournamentSummary {
        self.shutdown();
        if let Some(acceptor) = self.acceptor.take() {
            let _ = acceptor.join();
        }
        self.coordinator
            .take()
            .expect("join called once")
            .join()
            .expect("coordinator thread panicked")
    }
}

fn acceptor_loop(listener: TcpListener, events: Sender<Event>, shutdown: Arc<AtomicBool>) {
    loop {
        match listener.accept() {
            Ok((stream, _peer)) => {
                if shutdown.load(Ordering::SeqCst) {
                    return;
                }
                let events = events.clone();
                thread::spawn(move || reader_loop(stream, events));
            }
            Err(_) => {
                if shutdown.load(Ordering::SeqCst) {
                    return;
                }
            }
        }
    }
}

/// Per-connection thread: performs the registration handshake, then
/// forwards every frame as an event. Never kills the process; a dead
/// socket just ends the session.
fn reader_loop(stream: TcpStream, events: Sender<Event>) {
    stream.set_nodelay(true).ok();
    let Ok(write_half) = stream.try_clone() else {
        return;
    };
    let writer = SessionWriter(Arc::new(Mutex::new(write_half)));
    if stream.set_read_timeout(Some(REGISTER_TIMEOUT)).is_err() {
        return;
    }
    let mut link = MessageStream::new(stream);

    // First frame must be a registration.
    let name = match link.recv() {
        Ok(Some(Received::Message(Message::Register { name }))) => name,
        Ok(Some(_)) => {
            let _ = writer.send(&Message::Error {
                code: "expected_register".into(),
                text: "the first frame must be a register message".into(),
            });
            writer.close();
            return;
        }
        Ok(None) => return,
        Err(_) => {
            let _ = writer.send(&Message::Error {
                code: "register_timeout".into(),
                text: "no registration within 10 s".into(),
            });
            writer.close();
            return;
        }
    };

    let (id_tx, id_rx) = mpsc::channel();
    if events
        .send(Event::Register {
            name,
            writer: writer.clone(),
            id_reply: id_tx,
        })
        .is_err()
    {
        writer.close();
        return;
    }
    let Ok(client_id) = id_rx.recv() else {
        writer.close();
        return;
    };
    link.get_ref().set_read_timeout(None).ok();

    loop {
        match link.recv() {
            Ok(Some(Received::Message(message))) => {
                if events
                    .send(Event::Frame {
                        client_id: client_id.clone(),
                        message,
                    })
                    .is_err()
                {
                    return;
                }
            }
            Ok(Some(Received::Bad(error))) => {
                if events
                    .send(Event::BadFrame {
                        client_id: client_id.clone(),
                        error,
                    })
                    .is_err()
                {
                    return;
                }
            }
            Ok(None) | Err(_) => {
                let _ = events.send(Event::Disconnected { client_id });
                return;
            }
        }
    }
}

struct Coordinator {
    config: ServerConfig,
    events: Receiver<Event>,
    sessions: HashMap<String, Session>,
    /// Client ids in registration order.
    roster: Vec<String>,
    used_names: HashSet<String>,
    queue: VecDeque<Pairing>,
    records: Vec<GameRecord>,
    next_client: u32,
    next_game: u32,
    current_game: Option<String>,
    shutdown: Arc<AtomicBool>,
    shared: Arc<Mutex<ServerSnapshot>>,
}

/// How one turn resolved.
enum TurnOutcome {
    Applied(GameState),
    Bad(BadMoveKind),
    MoverDisconnected,
}

impl Coordinator {
    fn run(mut self) -> TournamentSummary {
        loop {
            if self.shutdown.load(Ordering::SeqCst) {
                break;
            }
            if let Some(pairing) = self.next_runnable_pairing() {
                let record = self.run_game(pairing);
                self.finish_game(record);
                continue;
            }
            match self.events.recv_timeout(IDLE_POLL) {
                Ok(event) => self.handle_background(event),
                Err(RecvTimeoutError::Timeout) => {}
                Err(RecvTimeoutError::Disconnected) => break,
            }
        }
        self.finalize()
    }

    fn spectate(&self, text: &str) {
        if self.config.spectate {
            println!("{text}");
        }
    }

    fn publish(&self) {
        let mut snap = self.shared.lock().expect("snapshot lock");
        snap.sessions = self
            .roster
            .iter()
            .filter_map(|id| self.sessions.get(id))
            .map(|s| SessionInfo {
                client_id: s.id.clone(),
                name: s.name.clone(),
                alive: s.alive,
                connected_at_ms: s.connected_at_ms,
            })
            .collect();
        snap.queue_len = self.queue.len();
        snap.games_completed = self.records.len();
        snap.running_game = self.current_game.clone();
    }

    fn random_agent_id(&self) -> Option<String> {
        self.roster
            .iter()
            .find(|id| {
                self.sessions
                    .get(*id)
                    .is_some_and(|s| s.name == RANDOM_AGENT_NAME)
            })
            .cloned()
    }

    /// Pops cancelled pairings (a side is gone) until a runnable one
    /// surfaces.
    fn next_runnable_pairing(&mut self) -> Option<Pairing> {
        while let Some(pairing) = self.queue.front() {
            let both_alive = [&pairing.black, &pairing.white]
                .iter()
                .all(|id| self.sessions.get(*id).is_some_and(|s| s.alive));
            if both_alive {
                return self.queue.pop_front();
            }
            self.queue.pop_front();
        }
        None
    }

    fn handle_background(&mut self, event: Event) {
        match event {
            Event::Register {
                name,
                writer,
                id_reply,
            } => {
                self.register(name, writer, id_reply);
                self.publish();
            }
            Event::Frame { client_id, message } => {
                self.handle_idle_frame(&client_id, message);
            }
            Event::BadFrame { client_id, error } => {
                self.reply_to(
                    &client_id,
                    &Message::Error {
                        code: "bad_frame".into(),
                        text: error.to_string(),
                    },
                );
            }
            Event::Disconnected { client_id } => {
                self.mark_disconnected(&client_id);
                self.publish();
            }
            Event::Shutdown => {
                self.shutdown.store(true, Ordering::SeqCst);
            }
        }
    }

    fn register(&mut self, name: String, writer: SessionWriter, id_reply: Sender<String>) {
        self.next_client += 1;
        let id = format!("c{}", self.next_client);
        let name = self.dedup_name(&name);
        let session = Session {
            id: id.clone(),
            name: name.clone(),
            writer,
            alive: true,
            connected_at_ms: now_ms(),
        };
        let _ = session.writer.send(&Message::Registered {
            client_id: id.clone(),
        });
        // Pair the newcomer against every live client, both colors.
        let existing: Vec<String> = self
            .roster
            .iter()
            .filter(|other| self.sessions.get(*other).is_some_and(|s| s.alive))
            .cloned()
            .collect();
        let new_games = pairings_for_join(&existing, &id, || {
            self.next_game += 1;
            format!("g{}", self.next_game)
        });
        self.spectate(&format!(
            "client {id} registered as {name:?}; {} game(s) queued",
            new_games.len()
        ));
        self.queue.extend(new_games);
        self.sessions.insert(id.clone(), session);
        self.roster.push(id.clone());
        let _ = id_reply.send(id);
    }

    fn dedup_name(&mut self, raw: &str) -> String {
        let mut base: String = raw.trim().chars().take(32).collect();
        if base.is_empty() {
            base = "agent".into();
        }
        let mut candidate = base.clone();
        let mut n = 1;
        while self.used_names.contains(&candidate) {
            n += 1;
            candidate = format!("{base}-{n}");
        }
        self.used_names.insert(candidate.clone());
        candidate
    }

    fn reply_to(&self, client_id: &str, message: &Message) {
        if let Some(session) = self.sessions.get(client_id) {
            if session.alive {
                let _ = session.writer.send(message);
            }
        }
    }

    /// Frames arriving outside of that client's turn.
    fn handle_idle_frame(&mut self, client_id: &str, message: Message) {
        match message {
            Message::Ping => self.reply_to(client_id, &Message::Pong),
            Message::Pong => {}
            Message::MoveReply { .. } => self.reply_to(
                client_id,
                &Message::Error {
                    code: "unexpected_move".into(),
                    text: "no move was requested from you".into(),
                },
            ),
            Message::Register { .. } => self.reply_to(
                client_id,
                &Message::Error {
                    code: "already_registered".into(),
                    text: "this connection is already registered".into(),
                },
            ),
            _ => self.reply_to(
                client_id,
                &Message::Error {
                    code: "unexpected_message".into(),
                    text: "the server does not accept this message type".into(),
                },
            ),
        }
    }

    fn mark_disconnected(&mut self, client_id: &str) {
        let mut gone_name = None;
        if let Some(session) = self.sessions.get_mut(client_id) {
            if session.alive {
                session.alive = false;
                session.writer.close();
                gone_name = Some(session.name.clone());
            }
        }
        if let Some(name) = gone_name {
            self.spectate(&format!("client {client_id} ({name}) disconnected"));
        }
        // Unplayed games involving the leaver are cancelled; finished
        // results stay.
        self.queue.retain(|p| !p.involves(client_id));
    }

    fn run_game(&mut self, pairing: Pairing) -> GameRecord {
        let game_id = pairing.game_id.clone();
        self.current_game = Some(game_id.clone());
        let names: HashMap<PlayerColor, String> = [PlayerColor::Black, PlayerColor::White]
            .into_iter()
            .map(|color| {
                let id = pairing.player_of(color);
                (
                    color,
                    self.sessions
                        .get(id)
                        .map(|s| s.name.clone())
                        .unwrap_or_else(|| id.to_string()),
                )
            })
            .collect();
        self.publish();
        self.spectate(&format!(
            "game {game_id}: {} (black) vs {} (white)",
            names[&PlayerColor::Black],
            names[&PlayerColor::White]
        ));
        for color in [PlayerColor::Black, PlayerColor::White] {
            self.reply_to(
                pairing.player_of(color),
                &Message::GameStart {
                    game_id: game_id.clone(),
                    your_color: color,
                    opponent_name: names[&color.opponent()].clone(),
                },
            );
        }

        let started_at_ms = now_ms();
        let mut state = GameState::initial();
        let mut moves: Vec<MoveRecord> = Vec::new();
        let mut bad: HashMap<PlayerColor, u32> =
            [(PlayerColor::Black, 0), (PlayerColor::White, 0)].into();

        let result = loop {
            if let GameStatus::Finished {
                winner,
                black_count,
                white_count,
            } = state.status()
            {
                break GameResult {
                    winner,
                    black_count,
                    white_count,
                    termination: Termination::Normal,
                };
            }
            let mover = state.to_move();
            let mover_id = pairing.player_of(mover).to_string();
            if !self.sessions.get(&mover_id).is_some_and(|s| s.alive) {
                break self.forfeit_result(&state, mover, Termination::Disconnect);
            }

            let ply = moves.len() as u32;
            let requested_at_ms = now_ms();
            let (outcome, record) =
                self.handle_turn(&game_id, &mover_id, mover, &state, ply, requested_at_ms);
            if let Some(record) = record {
                moves.push(record);
            }
            match outcome {
                TurnOutcome::Applied(next) => {
                    state = next;
                    if self.config.spectate {
                        println!("{}", render_ascii(&state));
                    }
                }
                TurnOutcome::Bad(kind) => {
                    *bad.get_mut(&mover).expect("both colors present") += 1;
                    self.reply_to(
                        &mover_id,
                        &Message::BadMove {
                            game_id: game_id.clone(),
                            reason: kind,
                        },
                    );
                    self.spectate(&format!(
                        "game {game_id}: bad move by {} ({})",
                        names[&mover],
                        kind.as_str()
                    ));
                    // The forfeited turn passes to the opponent even
                    // when it is the one that hits the cap, keeping the
                    // final state replayable move for move.
                    state = state.skip_turn();
                    if bad[&mover] >= self.config.bad_move_cap {
                        break self.forfeit_result(&state, mover, Termination::BadMoveCap);
                    }
                }
                TurnOutcome::MoverDisconnected => {
                    break self.forfeit_result(&state, mover, Termination::Disconnect);
                }
            }
        };

        let record = GameRecord {
            pairing,
            black_name: names[&PlayerColor::Black].clone(),
            white_name: names[&PlayerColor::White].clone(),
            moves,
            final_state: state,
            result,
            black_bad_moves: bad[&PlayerColor::Black],
            white_bad_moves: bad[&PlayerColor::White],
            started_at_ms,
            ended_at_ms: now_ms(),
        };
        let end = Message::GameEnd {
            game_id: game_id.clone(),
            result: GameOutcome::from_winner(result.winner),
            black_count: result.black_count,
            white_count: result.white_count,
        };
        self.reply_to(&record.pairing.black, &end);
        self.reply_to(&record.pairing.white, &end);
        self.spectate(&format!(
            "game {game_id}: {} ({}-{}, {})",
            GameOutcome::from_winner(result.winner).as_str(),
            result.black_count,
            result.white_count,
            result.termination.as_str()
        ));
        record
    }

    fn forfeit_result(
        &self,
        state: &GameState,
        offender: PlayerColor,
        termination: Termination,
    ) -> GameResult {
        GameResult {
            winner: Some(offender.opponent()),
            black_count: state.black_count(),
            white_count: state.white_count(),
            termination,
        }
    }

    /// Sends the move request and waits out the deadline, pumping
    /// unrelated events the whole time. The deadline is measured on
    /// this clock: whatever the client believes, a reply processed
    /// after `time_limit_ms` is a timeout.
    fn handle_turn(
        &mut self,
        game_id: &str,
        mover_id: &str,
        mover: PlayerColor,
        state: &GameState,
        ply: u32,
        requested_at_ms: u64,
    ) -> (TurnOutcome, Option<MoveRecord>) {
        let make_record = |verdict: MoveVerdict,
                           mv: Option<othello_core::Move>,
                           replied_at_ms: Option<u64>| {
            Some(MoveRecord {
                ply,
                player: mover,
                requested_at_ms,
                replied_at_ms,
                mv,
                verdict,
            })
        };

        let request = Message::MoveRequest {
            game_id: game_id.to_string(),
            state: *state,
            deadline_ms: self.config.time_limit_ms,
        };
        if let Some(session) = self.sessions.get(mover_id) {
            if session.writer.send(&request).is_err() {
                self.mark_disconnected(mover_id);
                return (TurnOutcome::MoverDisconnected, None);
            }
        } else {
            return (TurnOutcome::MoverDisconnected, None);
        }

        let deadline = Instant::now() + Duration::from_millis(self.config.time_limit_ms);
        loop {
            let remaining = deadline.saturating_duration_since(Instant::now());
            if remaining.is_zero() {
                return (
                    TurnOutcome::Bad(BadMoveKind::Timeout),
                    make_record(MoveVerdict::BadMoveTimeout, None, None),
                );
            }
            let event = match self.events.recv_timeout(remaining) {
                Ok(event) => event,
                Err(RecvTimeoutError::Timeout) => {
                    return (
                        TurnOutcome::Bad(BadMoveKind::Timeout),
                        make_record(MoveVerdict::BadMoveTimeout, None, None),
                    );
                }
                Err(RecvTimeoutError::Disconnected) => {
                    return (TurnOutcome::MoverDisconnected, None);
                }
            };
            match event {
                Event::Frame { client_id, message } if client_id == mover_id => match message {
                    Message::MoveReply { game_id: gid, mv } if gid == game_id => {
                        let replied_at_ms = now_ms();
                        return match state.apply_move(mv) {
                            Ok(next) => (
                                TurnOutcome::Applied(next),
                                make_record(MoveVerdict::Ok, Some(mv), Some(replied_at_ms)),
                            ),
                            Err(_) => (
                                TurnOutcome::Bad(BadMoveKind::Illegal),
                                make_record(
                                    MoveVerdict::BadMoveIllegal,
                                    Some(mv),
                                    Some(replied_at_ms),
                                ),
                            ),
                        };
                    }
                    Message::MoveReply { .. } => {
                        // Stale reply for some earlier game; not this turn.
                        self.reply_to(
                            &client_id,
                            &Message::Error {
                                code: "unexpected_move".into(),
                                text: "reply does not match the requested game".into(),
                            },
                        );
                    }
                    Message::Ping => self.reply_to(&client_id, &Message::Pong),
                    Message::Pong => {}
                    other => self.handle_idle_frame(&client_id, other),
                },
                Event::BadFrame { client_id, .. } if client_id == mover_id => {
                    return (
                        TurnOutcome::Bad(BadMoveKind::Malformed),
                        make_record(MoveVerdict::BadMoveMalformed, None, Some(now_ms())),
                    );
                }
                Event::Disconnected { client_id } if client_id == mover_id => {
                    self.mark_disconnected(&client_id);
                    return (TurnOutcome::MoverDisconnected, None);
                }
                other => self.handle_background(other),
            }
        }
    }

    fn finish_game(&mut self, record: GameRecord) {
        if let Some(dir) = self.config.log_dir.clone() {
            if let Err(e) = save_game_log(&record, &dir) {
                eprintln!("failed to write log for {}: {e}", record.game_id());
            }
        }
        self.records.push(record);
        self.current_game = None;
        self.publish();
    }

    fn finalize(mut self) -> TournamentSummary {
        let cancelled = self.queue.len();
        self.queue.clear();
        if cancelled > 0 {
            self.spectate(&format!("cancelled {cancelled} queued game(s)"));
        }
        let random_id = self.random_agent_id();
        let standings = compute_standings(&self.records, random_id.as_deref());
        let mut summary_path = None;
        if let Some(dir) = &self.config.log_dir {
            let report = build_report(&self.records, random_id.as_deref());
            let path = dir.join("summary.txt");
            if std::fs::write(&path, render_report(&report)).is_ok() {
                summary_path = Some(path);
            }
        }
        for session in self.sessions.values() {
            session.writer.close();
        }
        self.current_game = None;
        self.publish();
        TournamentSummary {
            records: self.records,
            standings,
            summary_path,
        }
    }
}
