use othello_core::{GameState, Move};

/// How a stored value bounds the true value of the position at the
/// stored depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// The value is exact.
    Exact,
    /// The search failed high: the true value is at least this.
    Lower,
    /// The search failed low: the true value is at most this.
    Upper,
}

/// One cached search outcome.
#[derive(Debug, Clone, Copy)]
pub struct TranspositionEntry {
    /// Zobrist key of `state`.
    pub key: u64,
    /// The full position, stored so a probe can verify it and never act
    /// on a hash collision (the pass counter is not part of the hash).
    pub state: GameState,
    /// Search depth the value was computed at, in plies.
    pub depth: u32,
    pub value: i32,
    pub bound: Bound,
    /// Best move found, kept for move ordering even when the value is
    /// not usable.
    pub best_move: Option<Move>,
}

/// Fixed-size, power-of-two transposition table with depth-preferred
/// replacement: an entry is overwritten only by one of equal or greater
/// depth.
pub struct TranspositionTable {
    slots: Vec<Option<TranspositionEntry>>,
    mask: u64,
}

/// 2^16 entries by default, a few megabytes.
pub const DEFAULT_CAPACITY_LOG2: u32 = 16;

impl Default for TranspositionTable {
    fn default() -> TranspositionTable {
        TranspositionTable::new(DEFAULT_CAPACITY_LOG2)
    }
}

impl TranspositionTable {
    /// Creates a table with `1 << capacity_log2` slots.
    pub fn new(capacity_log2: u32) -> TranspositionTable {
        assert!(capacity_log2 > 0 && capacity_log2 < 32, "unreasonable table size");
        let len = 1usize << capacity_log2;
        TranspositionTable {
            slots: vec![None; len],
            mask: (len - 1) as u64,
        }
    }

    pub fn capacity(&self) -> usize {
        self.slots.len()
    }

    pub fn clear(&mut self) {
        self.slots.iter_mut().for_each(|s| *s = None);
    }

    /// Looks up `state`; returns the entry only if the stored position
    /// is identical (not merely hash-equal).
    pub fn probe(&self, key: u64, state: &GameState) -> Option<&TranspositionEntry> {
        let slot = self.slots[(key & self.mask) as usize].as_ref()?;
        (slot.key == key && slot.state == *state).then_some(slot)
    }

    pub fn store(&mut self, entry: TranspositionEntry) {
        let slot = &mut self.slots[(entry.key & self.mask) as usize];
        match slot {
            Some(existing) if entry.depth < existing.depth => {}
            _ => *slot = Some(entry),
        }
    }

    /// All live entries, for diagnostics and tests.
    pub fn entries(&self) -> impl Iterator<Item = &TranspositionEntry> {
        self.slots.iter().filter_map(|s| s.as_ref())
    }
}
