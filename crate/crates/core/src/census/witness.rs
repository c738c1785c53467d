//! Exhaustive search for hypergraphs sharing a polynomial with a target.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Mask};
use crate::iso::{canonical_form, CanonicalForm};
use crate::limits::Limits;
use crate::poly::{compute, native_counts, GraphPolynomial, PolyId};

use super::shards::{eligible_edges, shards};
use super::{candidate_masks, check_space, thread_pool, Mode};

/// The labeled space a witness search scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stratum {
    pub n: usize,
    pub mode: Mode,
    pub edge_count: Option<usize>,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mode::Uniform(r) => format!("{r}-uniform"),
            Mode::Sperner => "sperner".into(),
            Mode::All => "all".into(),
        };
        write!(f, "{mode}, n={}", self.n)?;
        match self.edge_count {
            Some(m) => write!(f, ", {m} edges"),
            None => f.write_str(", any edge count"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct WitnessResult {
    pub target: Hypergraph,
    pub poly: PolyId,
    pub polynomial: GraphPolynomial,
    pub stratum: Stratum,
    /// Labeled candidates visited.
    pub scanned: u64,
    /// Canonical representatives of the non-isomorphic mates, sorted by edge
    /// count and then masks.
    pub mates: Vec<Hypergraph>,
}

impl WitnessResult {
    pub fn is_unique(&self) -> bool {
        self.mates.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "target {:?}\npolynomial {} = {}\nstratum {}\nscanned {}\nmates {}\n",
            self.target,
            self.poly,
            self.polynomial,
            self.stratum,
            self.scanned,
            self.mates.len()
        );
        for m in &self.mates {
            s.push_str(&format!("  {m:?}\n"));
        }
        s
    }
}

fn check_stratum(target: &Hypergraph, s: &Stratum) -> Result<()> {
    if target.n() != s.n {
        return Err(Error::StratumMismatch(format!("target has {} vertices, stratum {}", target.n(), s.n)));
    }
    if !s.mode.admits(target) {
        return Err(Error::StratumMismatch(format!("target is not in mode {}", s.mode)));
    }
    if let Some(m) = s.edge_count {
        if target.edge_count() != m {
            return Err(Error::StratumMismatch(format!("target has {} edges, stratum {m}", target.edge_count())));
        }
    }
    Ok(())
}

/// Every hypergraph of `stratum` with exactly the polynomial of `target` that
/// is not isomorphic to it.
pub fn witness_search(
    target: &Hypergraph,
    poly: PolyId,
    stratum: Stratum,
    limits: &Limits,
    jobs: usize,
) -> Result<WitnessResult> {
    limits.validate()?;
    check_stratum(target, &stratum)?;
    let scanned =
        match check_space(stratum.n, stratum.mode, stratum.edge_count, limits.witness_budget, "witness", limits) {
            Err(Error::Feasibility { guard: "witness", detail }) => {
                return Err(Error::BudgetExceeded { budget: "witness_budget", detail })
            }
            other => other?,
        };
    let want = native_counts(poly, target, limits)?;
    let own = canonical_form(target, limits)?;
    let eligible = eligible_edges(stratum.n, stratum.mode);
    let all = shards(eligible.len(), stratum.edge_count);
    let pool = thread_pool(jobs)?;
    let found: Result<Vec<Vec<CanonicalForm>>> = pool.install(|| {
        all.par_iter()
            .map(|s| {
                let mut out = Vec::new();
                let mut buf: Vec<Mask> = Vec::new();
                let mut err = None;
                s.for_each(eligible.len(), |idx| {
                    if err.is_some() || !candidate_masks(stratum.mode, &eligible, idx, &mut buf) {
                        return;
                    }
                    let h = Hypergraph::from_masks(stratum.n, buf.iter().copied()).expect("eligible edges are valid");
                    match native_counts(poly, &h, limits) {
                        Ok(c) if c == want => match canonical_form(&h, limits) {
                            Ok(f) if f != own => out.push(f),
                            Ok(_) => {}
                            Err(e) => err = Some(e),
                        },
                        Ok(_) => {}
                        Err(e) => err = Some(e),
                    }
                });
                match err {
                    Some(e) => Err(e),
                    None => Ok(out),
                }
            })
            .collect()
    });
    let forms: BTreeSet<CanonicalForm> = found?.into_iter().flatten().collect();
    let mut forms: Vec<CanonicalForm> = forms.into_iter().collect();
    forms.sort_by(|a, b| a.edges().len().cmp(&b.edges().len()).then_with(|| a.edges().cmp(b.edges())));
    Ok(WitnessResult {
        target: target.clone(),
        poly,
        polynomial: compute(poly, target, limits)?,
        stratum,
        scanned,
        mates: forms.iter().map(CanonicalForm::to_hypergraph).collect(),
    })
}
