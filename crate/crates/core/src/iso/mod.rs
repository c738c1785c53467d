//! Canonical forms, isomorphism tests and orbit counting.
//!
//! Isomorphism here means an edge-preserving vertex bijection: `h` maps the
//! edge set of one hypergraph onto the edge set of the other.

mod burnside;
mod canon;

pub use burnside::{count_nonisomorphic_general, count_nonisomorphic_runiform, cycle_types, EdgeUniverse};
pub(crate) use canon::is_canonical_masks;
pub use canon::{canonical_form, canonical_labeling, CanonicalForm};

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;

/// True iff an edge-preserving bijection maps `a` onto `b`.
pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph, limits: &Limits) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut sa: Vec<usize> = a.edges().iter().map(|e| e.count_ones() as usize).collect();
    let mut sb: Vec<usize> = b.edges().iter().map(|e| e.count_ones() as usize).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a, limits)? == canonical_form(b, limits)?)
}
