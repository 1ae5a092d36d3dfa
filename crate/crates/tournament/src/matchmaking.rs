//! Double round-robin pairing: every ordered pair of clients plays one
//! game, so every unordered pair meets twice with colors swapped,
//! neutralizing the first-player advantage.

use crate::record::Pairing;

/// Full double round-robin over a stable roster: one pairing per
/// ordered pair `(i, j)`, `i != j`, with `i` as Black. Fewer than two
/// clients yield nothing.
pub fn schedule_pairings(
    clients: &[String],
    mut make_game_id: impl FnMut() -> String,
) -> Vec<Pairing> {
    if clients.len() < 2 {
        return Vec::new();
    }
    let mut pairings = Vec::with_capacity(clients.len() * (clients.len() - 1));
    for black in clients {
        for white in clients {
            if black != white {
                pairings.push(Pairing {
                    game_id: make_game_id(),
                    black: black.clone(),
                    white: white.clone(),
                });
            }
        }
    }
    pairings
}

/// Incremental form used by the live server: games added when `joiner`
/// connects to a tournament already holding `existing`. The joiner
/// plays every existing client twice, once per color, appended in
/// existing-roster order with the existing client taking Black first.
pub fn pairings_for_join(
    existing: &[String],
    joiner: &str,
    mut make_game_id: impl FnMut() -> String,
) -> Vec<Pairing> {
    let mut pairings = Vec::with_capacity(existing.len() * 2);
    for other in existing {
        if other == joiner {
            continue;
        }
        pairings.push(Pairing {
            game_id: make_game_id(),
            black: other.clone(),
            white: joiner.to_string(),
        });
        pairings.push(Pairing {
            game_id: make_game_id(),
            black: joiner.to_string(),
            white: other.clone(),
        });
    }
    pairings
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn ids(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("c{i}")).collect()
    }

    fn game_id_gen() -> impl FnMut() -> String {
        let mut n = 0;
        move || {
            n += 1;
            format!("g{n}")
        }
    }

    #[test]
    fn two_clients_two_games() {
        let p = schedule_pairings(&ids(2), game_id_gen());
        assert_eq!(p.len(), 2);
        assert_eq!((p[0].black.as_str(), p[0].white.as_str()), ("c1", "c2"));
        assert_eq!((p[1].black.as_str(), p[1].white.as_str()), ("c2", "c1"));
    }

    #[test]
    fn four_clients_twelve_games() {
        let p = schedule_pairings(&ids(4), game_id_gen());
        assert_eq!(p.len(), 12);
        let unique: HashSet<(String, String)> =
            p.iter().map(|x| (x.black.clone(), x.white.clone())).collect();
        assert_eq!(unique.len(), 12, "no duplicate ordered pairs");
        let ids: HashSet<String> = p.iter().map(|x| x.game_id.clone()).collect();
        assert_eq!(ids.len(), 12, "no duplicate game ids");
    }

    #[test]
    fn fewer_than_two_is_empty() {
        assert!(schedule_pairings(&[], game_id_gen()).is_empty());
        assert!(schedule_pairings(&ids(1), game_id_gen()).is_empty());
    }

    #[test]
    fn join_adds_two_games_per_existing_client() {
        let p = pairings_for_join(&ids(3), "c4", game_id_gen());
        assert_eq!(p.len(), 6);
        for chunk in p.chunks(2) {
            assert_eq!(chunk[0].white, "c4");
            assert_eq!(chunk[1].black, "c4");
        }
    }

    #[test]
    fn successive_joins_build_the_full_round_robin() {
        let mut gen = game_id_gen();
        let mut roster: Vec<String> = Vec::new();
        let mut incremental: Vec<Pairing> = Vec::new();
        for id in ids(5) {
            incremental.extend(pairings_for_join(&roster, &id, &mut gen));
            roster.push(id);
        }
        let full = schedule_pairings(&roster, game_id_gen());
        let as_pairs = |v: &[Pairing]| -> HashSet<(String, String)> {
            v.iter().map(|p| (p.black.clone(), p.white.clone())).collect()
        };
        assert_eq!(as_pairs(&incremental), as_pairs(&full));
        assert_eq!(incremental.len(), 20);
    }
}
