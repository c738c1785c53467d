//! Exact computation of hypergraph polynomial invariants.
//!
//! The crate computes the chromatic, independence and matching polynomials of
//! small hypergraphs exactly, enumerates hypergraphs up to isomorphism, counts
//! how many are determined by each polynomial, and evaluates the counting
//! bounds that show such hypergraphs become rare as the order grows.
//!
//! Modules:
//! * [`hypergraph`], [`family`], [`format`]: the data model, named families
//!   and the text/JSON file formats;
//! * [`poly`]: polynomials, Stirling numbers and basis changes;
//! * [`iso`]: canonical forms and Burnside orbit counts;
//! * [`census`]: exhaustive censuses, witness searches and family checks;
//! * [`bounds`]: product bounds and log-ratio sequences;
//! * [`cli`]: the `hgpoly` command-line front end.

pub mod bounds;
pub mod census;
pub mod cli;
pub mod error;
pub mod family;
pub mod format;
pub mod hypergraph;
pub mod iso;
pub mod limits;
pub mod poly;
pub mod util;

pub use error::{Error, ErrorKind, Result};
pub use family::{generate_family, FamilySpec};
pub use hypergraph::{Hypergraph, Mask};
pub use limits::Limits;
pub use poly::{Basis, GraphPolynomial, PolyId};
