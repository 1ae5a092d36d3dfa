use std::collections::HashMap;

use othello_core::PlayerColor;

use crate::record::{GameRecord, Termination};

/// One line of the tournament table.
#[derive(Debug, Clone, PartialEq)]
pub struct StandingsRow {
    pub client_id: String,
    pub name: String,
    pub games: u32,
    pub wins: u32,
    pub draws: u32,
    pub losses: u32,
    /// `wins + draws / 2`.
    pub points: f64,
    pub total_bad_moves: u64,
    /// Sum over all games of (own disks - opponent disks) at the end.
    pub disc_diff: i64,
    /// Ranked strictly better than the designated random agent.
    pub beat_random: bool,
    /// 1-based; ranks are a permutation of `1..=n`.
    pub rank: u32,
}

#[derive(Default)]
struct Tally {
    name: String,
    wins: u32,
    draws: u32,
    losses: u32,
    bad: u64,
    diff: i64,
    first_seen: usize,
}

/// Builds the standings from finished games.
///
/// Scoring is 1 / 0.5 / 0 per win / draw / loss. Ordering: points,
/// then fewer total bad moves, then aggregate disc differential, then
/// name. `random_agent_id` designates the reference random agent;
/// `beat_random` is set on every row ranked strictly above it (always
/// false when the id is absent from the records or `None`).
pub fn compute_standings(
    records: &[GameRecord],
    random_agent_id: Option<&str>,
) -> Vec<StandingsRow> {
    let mut tallies: HashMap<String, Tally> = HashMap::new();
    let mut order = 0usize;
    for record in records {
        for color in [PlayerColor::Black, PlayerColor::White] {
            let id = record.pairing.player_of(color).to_string();
            let entry = tallies.entry(id).or_insert_with(|| {
                order += 1;
                Tally {
                    first_seen: order,
                    ..Tally::default()
                }
            });
            entry.name = record.name_of(color).to_string();
            entry.bad += u64::from(record.bad_moves_of(color));
            let own = match color {
                PlayerColor::Black => record.result.black_count as i64,
                PlayerColor::White => record.result.white_count as i64,
            };
            let opp = match color {
                PlayerColor::Black => record.result.white_count as i64,
                PlayerColor::White => record.result.black_count as i64,
            };
            entry.diff += own - opp;
            match record.result.winner {
                Some(w) if w == color => entry.wins += 1,
                None => {
                    debug_assert_eq!(record.result.termination, Termination::Normal);
                    entry.draws += 1;
                }
                Some(_) => entry.losses += 1,
            }
        }
    }

    let mut rows: Vec<(usize, StandingsRow)> = tallies
        .into_iter()
        .map(|(client_id, t)| {
            let games = t.wins + t.draws + t.losses;
            let row = StandingsRow {
                client_id,
                name: t.name,
                games,
                wins: t.wins,
                draws: t.draws,
                losses: t.losses,
                points: f64::from(t.wins) + f64::from(t.draws) / 2.0,
                total_bad_moves: t.bad,
                disc_diff: t.diff,
                beat_random: false,
                rank: 0,
            };
            (t.first_seen, row)
        })
        .collect();

    // Half-points keep the primary sort in integers.
    let half_points = |r: &StandingsRow| u64::from(r.wins) * 2 + u64::from(r.draws);
    rows.sort_by(|(seen_a, a), (seen_b, b)| {
        half_points(b)
            .cmp(&half_points(a))
            .then(a.total_bad_moves.cmp(&b.total_bad_moves))
            .then(b.disc_diff.cmp(&a.disc_diff))
            .then(a.name.cmp(&b.name))
            .then(seen_a.cmp(seen_b))
    });
    let mut rows: Vec<StandingsRow> = rows.into_iter().map(|(_, r)| r).collect();
    for (i, row) in rows.iter_mut().enumerate() {
        row.rank = (i + 1) as u32;
    }
    if let Some(random_id) = random_agent_id {
        if let Some(random_rank) = rows
            .iter()
            .find(|r| r.client_id == random_id)
            .map(|r| r.rank)
        {
            for row in &mut rows {
                row.beat_random = row.rank < random_rank;
            }
        }
    }
    rows
}
