use serde::{Deserialize, Serialize};
use std::ops::AddAssign;

/// Deterministic operation tallies. Callers own one per call; nothing global.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkCounters {
    /// Full multiplications in a quotient ring.
    pub ring_muls: u64,
    /// Floor-sum blocks; a directly summed term counts as a block of one.
    pub blocks: u64,
    /// Sieve cells touched.
    pub sieve_cells: u64,
    /// Interval parity decisions issued.
    pub parity_queries: u64,
}

impl AddAssign for WorkCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.ring_muls += rhs.ring_muls;
        self.blocks += rhs.blocks;
        self.sieve_cells += rhs.sieve_cells;
        self.parity_queries += rhs.parity_queries;
    }
}
