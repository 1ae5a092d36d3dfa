//! Cross-checks the bitboard engine against the naive array-based
//! oracle, plus property tests for the rule invariants.

use std::collections::HashSet;

use othello_core::oracle::{random_playout_state, NaiveBoard};
use othello_core::{Coord, GameState, Move};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn legal_moves_match_oracle_within_four_plies() {
    // Breadth-first over every state reachable in at most 4 plies.
    let mut frontier = vec![GameState::initial()];
    let mut checked = 0usize;
    for _ply in 0..=4 {
        let mut next = Vec::new();
        for state in &frontier {
            if state.is_terminal() {
                continue;
            }
            let engine = state.legal_moves().unwrap();
            let oracle = NaiveBoard::from_state(state).legal_moves();
            assert_eq!(engine, oracle, "divergence at:\n{state:?}");
            checked += 1;
            for mv in engine {
                next.push(state.apply_move(mv).unwrap());
            }
        }
        frontier = next;
    }
    // 1 + 4 + 12 + 56 + 244 states, all compared.
    assert_eq!(checked, 317);
}

#[test]
fn perft_matches_oracle_to_depth_five() {
    let state = GameState::initial();
    let oracle = NaiveBoard::from_state(&state);
    for depth in 1..=5 {
        assert_eq!(
            othello_core::perft(&state, depth),
            oracle.perft(depth),
            "perft depth {depth}"
        );
    }
}

#[test]
fn flips_match_oracle_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let plies = rng.random_range(0..60);
        let state = random_playout_state(&mut rng, plies);
        if state.is_terminal() {
            continue;
        }
        let oracle = NaiveBoard::from_state(&state);
        for coord in Coord::all() {
            if state.cell(coord).is_some() {
                assert!(state.flips_for(coord).is_err());
                continue;
            }
            let engine: HashSet<Coord> =
                state.flips_for(coord).unwrap().into_iter().collect();
            let oracle_flips: HashSet<Coord> = oracle
                .flips_at(coord.col() as i32, coord.row() as i32)
                .into_iter()
                .map(|(c, r)| Coord::new(c as u8, r as u8).unwrap())
                .collect();
            assert_eq!(engine, oracle_flips, "flips at {coord} in:\n{state:?}");
        }
    }
}

fn arb_reachable_state() -> impl Strategy<Value = GameState> {
    (any::<u64>(), 0u32..60).prop_map(|(seed, plies)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_playout_state(&mut rng, plies)
    })
}

proptest! {
    #[test]
    fn placement_conserves_and_recolors(state in arb_reachable_state()) {
        prop_assume!(!state.is_terminal());
        let before_total = state.black_count() as i32 + state.white_count() as i32;
        for mv in state.legal_moves().unwrap() {
            let next = state.apply_move(mv).unwrap();
            let after_total = next.black_count() as i32 + next.white_count() as i32;
            match mv {
                Move::Pass => prop_assert_eq!(after_total, before_total),
                Move::Place(placed) => {
                    // Exactly one disk enters the board.
                    prop_assert_eq!(after_total, before_total + 1);
                    for c in Coord::all() {
                        let was = state.cell(c);
                        let now = next.cell(c);
                        // No cell ever empties, and a cell that changes
                        // color always changes from the opponent to the
                        // mover.
                        prop_assert!(!(was.is_some() && now.is_none()));
                        if was.is_none() && now.is_some() {
                            prop_assert!(c == placed);
                            prop_assert_eq!(now, Some(state.to_move()));
                        }
                        if was.is_some() && was != now {
                            prop_assert_eq!(was, Some(state.to_move().opponent()));
                            prop_assert_eq!(now, Some(state.to_move()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn legality_matches_flip_characterization(state in arb_reachable_state()) {
        prop_assume!(!state.is_terminal());
        let legal: HashSet<Coord> = state
            .legal_moves()
            .unwrap()
            .into_iter()
            .filter_map(|mv| match mv {
                Move::Place(c) => Some(c),
                Move::Pass => None,
            })
            .collect();
        for c in Coord::all() {
            let flips_nonempty = matches!(state.flips_for(c), Ok(f) if !f.is_empty());
            prop_assert_eq!(legal.contains(&c), flips_nonempty);
        }
    }

    #[test]
    fn counts_are_zero_sum(state in arb_reachable_state()) {
        let total = state.black_count() as u32
            + state.white_count() as u32
            + state.empty_count() as u32;
        prop_assert_eq!(total, 64);
    }

    #[test]
    fn coord_text_round_trip(col in 0u8..8, row in 0u8..8) {
        let c = Coord::new(col, row).unwrap();
        prop_assert_eq!(c.to_string().parse::<Coord>().unwrap(), c);
    }
}
