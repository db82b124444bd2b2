//! Flips, exhaustive enumeration of pointed pseudo-triangulations and
//! triangulations, and the triangulation-count comparison.

mod counting;
mod flip;
pub mod oracle;
mod search;

pub use counting::{check_conjecture, min_max_degree, CountReport};
pub use flip::{flip, flip_triangulation, is_triangulation, seed_triangulation};
pub use oracle::{
    brute_force_all_pseudo_triangulations, brute_force_maximal_pointed, brute_force_triangulations,
};
pub use search::{enumerate_ppt, enumerate_triangulations};

use crate::error::{Error, Result};

/// Largest `n` accepted by each family of exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Flip-graph enumeration and counting.
    pub count: usize,
    /// Brute-force searches over pointed sets and triangulations.
    pub oracle: usize,
    /// Brute-force search over all pseudo-triangulations.
    pub all_pseudo_triangulations: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            count: 9,
            oracle: 7,
            all_pseudo_triangulations: 6,
        }
    }
}

impl Limits {
    /// Hard ceiling for any override of the counting limit.
    pub const MAX_COUNT: usize = 10;

    fn check(n: usize, limit: usize) -> Result<()> {
        if n > limit {
            return Err(Error::LimitExceeded { n, limit });
        }
        Ok(())
    }

    pub fn check_count(&self, n: usize) -> Result<()> {
        Self::check(n, self.count)
    }

    pub fn check_oracle(&self, n: usize) -> Result<()> {
        Self::check(n, self.oracle)
    }

    pub fn check_all(&self, n: usize) -> Result<()> {
        Self::check(n, self.all_pseudo_triangulations)
    }
}
