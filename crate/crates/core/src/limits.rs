use crate::error::{Error, Result};

/// Size limits and search budgets shared by every exact method.
///
/// Exceeding a limit is always an error; nothing is silently truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count for the partition dynamic program behind the
    /// chromatic polynomial.
    pub dp_max_vertices: usize,
    /// Largest vertex count for independent-set enumeration.
    pub subset_max_vertices: usize,
    /// Largest `k^n` the brute-force coloring counter will walk.
    pub coloring_budget: u64,
    /// Largest number of search nodes for matching enumeration.
    pub matching_budget: u64,
    /// Largest vertex count for exact canonical labelling.
    pub canon_max_vertices: usize,
    /// Largest number of labeled edge sets a census may scan.
    pub census_max_labeled: u64,
    /// Largest number of labeled candidates a witness search may scan.
    pub witness_budget: u64,
}

/// The chromatic dynamic program counts in `u64`; Bell(25) still fits.
pub const DP_HARD_MAX: usize = 25;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dp_max_vertices: 20,
            subset_max_vertices: 25,
            coloring_budget: 100_000_000,
            matching_budget: 100_000_000,
            canon_max_vertices: 12,
            census_max_labeled: 1 << 20,
            witness_budget: 100_000_000,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        if self.dp_max_vertices > DP_HARD_MAX {
            return Err(Error::InvalidArgument(format!(
                "dp limit {} above hard maximum {DP_HARD_MAX}",
                self.dp_max_vertices
            )));
        }
        if self.subset_max_vertices > 32 {
            return Err(Error::InvalidArgument(format!(
                "subset limit {} above hard maximum 32",
                self.subset_max_vertices
            )));
        }
        if self.canon_max_vertices > crate::hypergraph::MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "canonical-form limit {} above hard maximum {}",
                self.canon_max_vertices,
                crate::hypergraph::MAX_VERTICES
            )));
        }
        Ok(())
    }
}
