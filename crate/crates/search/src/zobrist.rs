use std::sync::OnceLock;

use othello_core::{GameState, PlayerColor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed of the process-wide Zobrist table. Fixed so hashes are
/// reproducible across runs and in tests ("OTHELLO!" as ASCII bytes).
pub const ZOBRIST_SEED: u64 = 0x4F54_4845_4C4C_4F21;

/// Random keys for Zobrist hashing: one 64-bit value per (cell, color)
/// pair plus one side-to-move value. The hash of a position is the XOR
/// of the keys of its occupied cells, with the side key mixed in when
/// White is to move.
///
/// The consecutive-pass counter is deliberately not hashed; callers that
/// must distinguish such states (the transposition table) compare full
/// states on top of the hash.
pub struct ZobristTable {
    cell_keys: [[u64; 2]; 64],
    side_key: u64,
}

fn color_index(color: PlayerColor) -> usize {
    match color {
        PlayerColor::Black => 0,
        PlayerColor::White => 1,
    }
}

impl ZobristTable {
    pub fn from_seed(seed: u64) -> ZobristTable {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cell_keys = [[0u64; 2]; 64];
        for cell in &mut cell_keys {
            cell[0] = rng.random();
            cell[1] = rng.random();
        }
        ZobristTable {
            cell_keys,
            side_key: rng.random(),
        }
    }

    /// The table every search in this process shares.
    pub fn global() -> &'static ZobristTable {
        static TABLE: OnceLock<ZobristTable> = OnceLock::new();
        TABLE.get_or_init(|| ZobristTable::from_seed(ZOBRIST_SEED))
    }

    /// Hash of a state, from scratch.
    pub fn hash(&self, state: &GameState) -> u64 {
        let mut h = 0;
        for color in [PlayerColor::Black, PlayerColor::White] {
            let mut disks = state.disks_of(color);
            while disks != 0 {
                let idx = disks.trailing_zeros() as usize;
                h ^= self.cell_keys[idx][color_index(color)];
                disks &= disks - 1;
            }
        }
        if state.to_move() == PlayerColor::White {
            h ^= self.side_key;
        }
        h
    }

    /// Hash of `after` given the hash of `before`, by XORing the keys
    /// of every cell that changed plus the side-to-move key. O(changed
    /// cells) instead of O(occupied cells).
    pub fn update(&self, before_hash: u64, before: &GameState, after: &GameState) -> u64 {
        let mut h = before_hash;
        for color in [PlayerColor::Black, PlayerColor::White] {
            let mut changed = before.disks_of(color) ^ after.disks_of(color);
            while changed != 0 {
                let idx = changed.trailing_zeros() as usize;
                h ^= self.cell_keys[idx][color_index(color)];
                changed &= changed - 1;
            }
        }
        if before.to_move() != after.to_move() {
            h ^= self.side_key;
        }
        h
    }
}
