use std::path::Path;

use othello_core::{GameState, PlayerColor};
use serde::{Deserialize, Serialize};

use crate::{SearchError, CENTIDISKS, WIN_VALUE};

const CORNERS: u64 = 0x8100_0000_0000_0081;

/// Position-evaluation weights.
///
/// The score of a position is built from four differences between the
/// evaluated player and the opponent: raw disk count, mobility (number
/// of legal placements), per-cell placement weights, and corners held.
/// Each term is weighted and summed, so the evaluation is antisymmetric
/// between the two players by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Heuristic {
    /// Weight of each cell, indexed `[row][col]`, applied to every disk
    /// the player holds there.
    pub cell_weights: [[i32; 8]; 8],
    pub mobility_weight: i32,
    pub disc_weight: i32,
    pub corner_weight: i32,
}

impl Default for Heuristic {
    /// Folklore othello weights: corners are gold, the squares next to
    /// them are poison, edges are mildly good, the interior is neutral.
    /// Tunable via a heuristic file; nothing here is claimed optimal.
    fn default() -> Heuristic {
        let mut w = [[0i32; 8]; 8];
        w[0] = [10; 8];
        w[7] = [10; 8];
        for rank in &mut w {
            rank[0] = 10;
            rank[7] = 10;
        }
        // X-squares (diagonal neighbors of a corner).
        for (r, c) in [(1, 1), (1, 6), (6, 1), (6, 6)] {
            w[r][c] = -50;
        }
        // C-squares (orthogonal neighbors of a corner).
        for (r, c) in [
            (0, 1),
            (1, 0),
            (0, 6),
            (1, 7),
            (6, 0),
            (7, 1),
            (7, 6),
            (6, 7),
        ] {
            w[r][c] = -20;
        }
        for (r, c) in [(0, 0), (0, 7), (7, 0), (7, 7)] {
            w[r][c] = 100;
        }
        Heuristic {
            cell_weights: w,
            mobility_weight: 8,
            disc_weight: 1,
            corner_weight: 25,
        }
    }
}

impl Heuristic {
    /// Loads weights from a JSON file shaped like the serialization of
    /// this struct.
    pub fn from_file(path: &Path) -> Result<Heuristic, SearchError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SearchError::BadHeuristicFile(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| SearchError::BadHeuristicFile(format!("{}: {e}", path.display())))
    }

    fn cell_sum(&self, mut disks: u64) -> i32 {
        let mut sum = 0;
        while disks != 0 {
            let idx = disks.trailing_zeros() as usize;
            sum += self.cell_weights[idx / 8][idx % 8];
            disks &= disks - 1;
        }
        sum
    }
}

/// Value of a terminal position: the final margin in centidisks pushed
/// past [`WIN_VALUE`] so any decided game outranks any heuristic score.
fn terminal_value(state: &GameState, perspective: PlayerColor) -> i32 {
    let own = state.disks_of(perspective).count_ones() as i32;
    let opp = state.disks_of(perspective.opponent()).count_ones() as i32;
    let margin = (own - opp) * CENTIDISKS;
    match margin.cmp(&0) {
        std::cmp::Ordering::Greater => WIN_VALUE + margin,
        std::cmp::Ordering::Less => -WIN_VALUE + margin,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Scores `state` from `perspective`, in centidisks.
///
/// Terminal states score by final margin (see [`terminal_value`]).
/// Ongoing states sum four weighted differences, each taken
/// perspective-minus-opponent: disk count, mobility, cell weights over
/// held disks, and corners held.
pub fn evaluate(state: &GameState, heuristic: &Heuristic, perspective: PlayerColor) -> i32 {
    if state.is_terminal() {
        return terminal_value(state, perspective);
    }
    let own = state.disks_of(perspective);
    let opp = state.disks_of(perspective.opponent());

    let disc = own.count_ones() as i32 - opp.count_ones() as i32;
    let mobility = state.placement_mask_for(perspective).count_ones() as i32
        - state
            .placement_mask_for(perspective.opponent())
            .count_ones() as i32;
    let cells = heuristic.cell_sum(own) - heuristic.cell_sum(opp);
    let corners = (own & CORNERS).count_ones() as i32 - (opp & CORNERS).count_ones() as i32;

    heuristic.disc_weight * disc
        + heuristic.mobility_weight * mobility
        + cells
        + heuristic.corner_weight * corners
}
