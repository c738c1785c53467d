//! Exhaustive censuses of small hypergraphs.
//!
//! A census walks every labeled edge set of a search space, keeps the ones
//! that are their own canonical form (one per isomorphism class), computes a
//! polynomial for each class and groups classes by polynomial. From the
//! grouping it reads off
//!
//! * `H`, the number of isomorphism classes;
//! * `B`, the number of distinct polynomials;
//! * `U`, the number of classes whose polynomial no other class shares.
//!
//! The labeled space is split into shards (see [`shards`]) that are processed
//! independently and merged in shard order, so the result does not depend on
//! the number of worker threads.

pub mod checkpoint;
pub mod claims;
pub mod shards;
pub mod witness;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{is_antichain, Hypergraph, Mask};
use crate::iso::{is_canonical_masks, CanonicalForm};
use crate::limits::Limits;
use crate::poly::{compute, PolyId};
use crate::util::{binomial_u64, digest64};

use checkpoint::{Checkpoint, Pair};
use shards::{eligible_edges, labeled_total, Shard};

pub use claims::{verify_family_claims, ClaimEntry, ClaimOutcome, ClaimsReport};
pub use witness::{witness_search, Stratum, WitnessResult};

/// Which hypergraphs a census ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `r`-uniform hypergraphs.
    Uniform(usize),
    /// Antichains: no edge contains another.
    Sperner,
    /// Every family of subsets of size at least two.
    All,
}

impl Mode {
    /// Whether `h` belongs to the class.
    pub fn admits(self, h: &Hypergraph) -> bool {
        match self {
            Mode::Uniform(r) => h.is_r_uniform(r),
            Mode::Sperner => h.is_sperner(),
            Mode::All => h.min_edge_size().is_none_or(|s| s >= 2),
        }
    }

    pub fn validate(self) -> Result<()> {
        if let Mode::Uniform(r) = self {
            if r < 2 {
                return Err(Error::InvalidArgument(format!("uniform mode needs r >= 2, got {r}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Uniform(r) => write!(f, "{r}"),
            Mode::Sperner => f.write_str("sperner"),
            Mode::All => f.write_str("all"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sperner" => Ok(Mode::Sperner),
            "all" => Ok(Mode::All),
            _ => {
                let r = s
                    .strip_prefix("uniform")
                    .unwrap_or(s)
                    .trim_start_matches(['(', ':', '='])
                    .trim_end_matches(')')
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("unknown census mode `{s}`")))?;
                let m = Mode::Uniform(r);
                m.validate()?;
                Ok(m)
            }
        }
    }
}

impl Serialize for Mode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub n: usize,
    pub mode: Mode,
    pub poly: PolyId,
    /// Restrict to hypergraphs with exactly this many edges.
    pub edge_count: Option<usize>,
    /// Worker threads; at least one.
    pub jobs: usize,
    /// Append-only checkpoint file; completed shards are skipped on rerun.
    pub checkpoint: Option<PathBuf>,
    /// Record elapsed wall-clock time in the report.
    pub timestamp: bool,
}

impl CensusConfig {
    pub fn new(n: usize, mode: Mode, poly: PolyId) -> Self {
        CensusConfig { n, mode, poly, edge_count: None, jobs: 1, checkpoint: None, timestamp: false }
    }

    fn digest(&self) -> u64 {
        let text =
            format!("hgpoly-census n={} mode={} poly={} edges={:?}", self.n, self.mode, self.poly, self.edge_count);
        digest64(text.as_bytes())
    }
}

/// One isomorphism class with its polynomial fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    /// Canonical edge masks in ascending order.
    pub edges: Vec<Mask>,
    pub canon_digest: u64,
    /// Monomial-basis coefficients.
    pub fingerprint: Vec<BigInt>,
    pub fp_digest: u64,
}

impl ClassRecord {
    pub fn hypergraph(&self, n: usize) -> Hypergraph {
        CanonicalForm::from_canonical(n, self.edges.clone()).to_hypergraph()
    }
}

/// Digest of a monomial coefficient vector.
pub fn fingerprint_digest(coeffs: &[BigInt]) -> u64 {
    let mut bytes = Vec::new();
    bytes.extend_from_slice(&(coeffs.len() as u64).to_le_bytes());
    for c in coeffs {
        let b = c.to_signed_bytes_le();
        bytes.extend_from_slice(&(b.len() as u32).to_le_bytes());
        bytes.extend_from_slice(&b);
    }
    digest64(&bytes)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CensusReport {
    pub n: usize,
    pub mode: Mode,
    pub poly: PolyId,
    pub edge_count: Option<usize>,
    pub h: u64,
    pub b: u64,
    pub u: u64,
    /// Polynomial-class size → number of polynomials with that many classes.
    pub class_size_histogram: BTreeMap<u64, u64>,
    pub labeled_scanned: u64,
    pub seconds: Option<f64>,
}

pub const CSV_HEADER: &str = "n,r_or_mode,P,H,B,U,U_over_H,B_over_H,seconds";

/// Reduced fraction `a/b` as text.
pub fn fraction(a: u64, b: u64) -> String {
    if b == 0 {
        return "undefined".into();
    }
    let g = a.gcd(&b);
    if b / g == 1 {
        format!("{}", a / g)
    } else {
        format!("{}/{}", a / g, b / g)
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        f64::NAN
    } else {
        a as f64 / b as f64
    }
}

impl CensusReport {
    pub fn csv_row(&self) -> String {
        let secs = self.seconds.map_or_else(|| "-".to_string(), |s| format!("{s:.3}"));
        format!(
            "{},{},{},{},{},{},{:.9},{:.9},{}",
            self.n,
            self.mode,
            self.poly,
            self.h,
            self.b,
            self.u,
            ratio(self.u, self.h),
            ratio(self.b, self.h),
            secs
        )
    }

    pub fn to_csv(&self) -> String {
        format!("{CSV_HEADER}\n{}\n", self.csv_row())
    }

    pub fn u_over_h(&self) -> String {
        fraction(self.u, self.h)
    }

    pub fn b_over_h(&self) -> String {
        fraction(self.b, self.h)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct HistogramBin {
            class_size: u64,
            polynomials: u64,
        }
        #[derive(Serialize)]
        struct Json<'a> {
            n: usize,
            mode: Mode,
            poly: &'a str,
            edge_count: Option<usize>,
            h: u64,
            b: u64,
            u: u64,
            u_over_h: String,
            b_over_h: String,
            class_size_histogram: Vec<HistogramBin>,
            labeled_scanned: u64,
            seconds: Option<f64>,
        }
        let j = Json {
            n: self.n,
            mode: self.mode,
            poly: self.poly.as_str(),
            edge_count: self.edge_count,
            h: self.h,
            b: self.b,
            u: self.u,
            u_over_h: self.u_over_h(),
            b_over_h: self.b_over_h(),
            class_size_histogram: self
                .class_size_histogram
                .iter()
                .map(|(&class_size, &polynomials)| HistogramBin { class_size, polynomials })
                .collect(),
            labeled_scanned: self.labeled_scanned,
            seconds: self.seconds,
        };
        serde_json::to_string_pretty(&j).expect("report serializes") + "\n"
    }
}

/// Number of eligible edges without materializing them.
fn eligible_count(n: usize, mode: Mode) -> Option<u64> {
    match mode {
        Mode::Uniform(r) => binomial_u64(n as u64, r as u64),
        Mode::Sperner | Mode::All => {
            if n >= 64 {
                None
            } else {
                Some((1u64 << n) - n as u64 - 1)
            }
        }
    }
}

/// Check the guards for scanning `(n, mode, edge_count)` against `budget`;
/// returns the labeled total.
pub(crate) fn check_space(
    n: usize,
    mode: Mode,
    edge_count: Option<usize>,
    budget: u64,
    guard: &'static str,
    limits: &Limits,
) -> Result<u64> {
    mode.validate()?;
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let too_big = |detail: String| Error::Feasibility { guard, detail };
    let eligible = eligible_count(n, mode)
        .filter(|&e| e < 64)
        .ok_or_else(|| too_big(format!("n={n} mode={mode}: more than 63 eligible edges")))?;
    let total = labeled_total(eligible as usize, edge_count)
        .map_err(|_| too_big(format!("n={n} mode={mode}: labeled space overflows u64")))?;
    if total > budget {
        return Err(too_big(format!(
            "n={n} mode={mode} edges={}: {total} labeled candidates exceed the limit {budget}",
            edge_count.map_or("any".to_string(), |m| m.to_string())
        )));
    }
    if n > limits.canon_max_vertices {
        return Err(Error::Feasibility {
            guard: "canon_max_vertices",
            detail: format!("exact canonical search limited to {} vertices, got {n}", limits.canon_max_vertices),
        });
    }
    Ok(total)
}

pub(crate) fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    if jobs == 0 {
        return Err(Error::InvalidArgument("worker count must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Error::Invariant(format!("thread pool: {e}")))
}

/// Masks of a candidate in ascending order, or `None` if the mode rejects it.
#[inline]
pub(crate) fn candidate_masks(mode: Mode, eligible: &[Mask], idx: &[usize], buf: &mut Vec<Mask>) -> bool {
    buf.clear();
    buf.extend(idx.iter().map(|&i| eligible[i]));
    if !matches!(mode, Mode::Uniform(_)) {
        buf.sort_unstable();
    }
    !(mode == Mode::Sperner && !is_antichain(buf))
}

fn shard_representatives(n: usize, mode: Mode, eligible: &[Mask], shard: &Shard) -> Vec<Vec<Mask>> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    shard.for_each(eligible.len(), |idx| {
        if candidate_masks(mode, eligible, idx, &mut buf) && is_canonical_masks(n, &buf) {
            out.push(buf.clone());
        }
    });
    out
}

fn prepare(n: usize, mode: Mode, edge_count: Option<usize>, limits: &Limits) -> Result<(Vec<Mask>, Vec<Shard>, u64)> {
    let total = check_space(n, mode, edge_count, limits.census_max_labeled, "census_max_labeled", limits)?;
    let eligible = eligible_edges(n, mode);
    let all = shards::shards(eligible.len(), edge_count);
    Ok((eligible, all, total))
}

fn sort_representatives(reps: &mut [Vec<Mask>]) {
    reps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// One representative per isomorphism class, ordered by edge count and then
/// by canonical masks.
pub fn enumerate_nonisomorphic(
    n: usize,
    mode: Mode,
    edge_count: Option<usize>,
    limits: &Limits,
    jobs: usize,
) -> Result<Vec<Hypergraph>> {
    let (eligible, all, _) = prepare(n, mode, edge_count, limits)?;
    let pool = thread_pool(jobs)?;
    let per_shard: Vec<Vec<Vec<Mask>>> =
        pool.install(|| all.par_iter().map(|s| shard_representatives(n, mode, &eligible, s)).collect());
    let mut reps: Vec<Vec<Mask>> = per_shard.into_iter().flatten().collect();
    sort_representatives(&mut reps);
    Ok(reps.into_iter().map(|e| CanonicalForm::from_canonical(n, e).to_hypergraph()).collect())
}

fn class_record(n: usize, poly: PolyId, edges: Vec<Mask>, limits: &Limits) -> Result<ClassRecord> {
    let form = CanonicalForm::from_canonical(n, edges);
    let h = form.to_hypergraph();
    let fingerprint = compute(poly, &h, limits)?.monomial_coeffs();
    let fp_digest = fingerprint_digest(&fingerprint);
    Ok(ClassRecord { canon_digest: form.digest(), edges: form.edges().to_vec(), fingerprint, fp_digest })
}

/// Every class with its fingerprint, in [`enumerate_nonisomorphic`] order.
pub fn class_records(config: &CensusConfig, limits: &Limits) -> Result<Vec<ClassRecord>> {
    let (eligible, all, _) = prepare(config.n, config.mode, config.edge_count, limits)?;
    let pool = thread_pool(config.jobs)?;
    let per_shard: Result<Vec<Vec<ClassRecord>>> = pool.install(|| {
        all.par_iter()
            .map(|s| {
                shard_representatives(config.n, config.mode, &eligible, s)
                    .into_iter()
                    .map(|e| class_record(config.n, config.poly, e, limits))
                    .collect()
            })
            .collect()
    });
    let mut recs: Vec<ClassRecord> = per_shard?.into_iter().flatten().collect();
    recs.sort_by(|a, b| a.edges.len().cmp(&b.edges.len()).then_with(|| a.edges.cmp(&b.edges)));
    Ok(recs)
}

/// Run a census; see the module documentation.
pub fn census(config: &CensusConfig, limits: &Limits) -> Result<CensusReport> {
    let start = Instant::now();
    limits.validate()?;
    let (eligible, all, total) = prepare(config.n, config.mode, config.edge_count, limits)?;
    let pool = thread_pool(config.jobs)?;

    let (ckpt, mut done) = match &config.checkpoint {
        Some(path) => {
            let (c, d) = Checkpoint::open(path, config.digest())?;
            (Some(Mutex::new(c)), d)
        }
        None => (None, BTreeMap::new()),
    };
    if let Some((&id, _)) = done.iter().find(|(&id, _)| id >= all.len()) {
        return Err(Error::Checkpoint(format!("shard {id} does not exist for this configuration")));
    }

    let todo: Vec<&Shard> = all.iter().filter(|s| !done.contains_key(&s.id)).collect();
    let fresh: Result<Vec<(usize, Vec<ClassRecord>)>> = pool.install(|| {
        todo.par_iter()
            .map(|s| {
                let recs: Vec<ClassRecord> = shard_representatives(config.n, config.mode, &eligible, s)
                    .into_iter()
                    .map(|e| class_record(config.n, config.poly, e, limits))
                    .collect::<Result<_>>()?;
                if let Some(c) = &ckpt {
                    let pairs: Vec<Pair> = recs.iter().map(|r| (r.canon_digest, r.fp_digest)).collect();
                    c.lock()
                        .map_err(|_| Error::Invariant("checkpoint lock poisoned".into()))?
                        .append_shard(s.id, &pairs)?;
                }
                Ok((s.id, recs))
            })
            .collect()
    });

    // Full fingerprints are only available for fresh shards; check those for
    // digest collisions.
    let mut seen: HashMap<u64, &Vec<BigInt>> = HashMap::new();
    let fresh = fresh?;
    for (_, recs) in &fresh {
        for r in recs {
            if let Some(prev) = seen.insert(r.fp_digest, &r.fingerprint) {
                if prev != &r.fingerprint {
                    return Err(Error::DigestCollision(format!("fingerprint digest {:016x}", r.fp_digest)));
                }
            }
        }
    }
    for (id, recs) in fresh {
        done.insert(id, recs.iter().map(|r| (r.canon_digest, r.fp_digest)).collect());
    }

    let pairs: Vec<Pair> = done.into_values().flatten().collect();
    let mut report = reduce(config, &pairs, total)?;
    if config.timestamp {
        report.seconds = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

fn reduce(config: &CensusConfig, pairs: &[Pair], total: u64) -> Result<CensusReport> {
    let mut canon: Vec<u64> = pairs.iter().map(|p| p.0).collect();
    canon.sort_unstable();
    if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DigestCollision(format!("canonical digest {:016x} seen twice", w[0])));
    }
    let mut per_poly: BTreeMap<u64, u64> = BTreeMap::new();
    for p in pairs {
        *per_poly.entry(p.1).or_default() += 1;
    }
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for &size in per_poly.values() {
        *hist.entry(size).or_default() += 1;
    }
    let h = pairs.len() as u64;
    let b = per_poly.len() as u64;
    let u = hist.get(&1).copied().unwrap_or(0);
    if !(u <= b && b <= h) {
        return Err(Error::Invariant(format!("U={u} B={b} H={h} violates U <= B <= H")));
    }
    Ok(CensusReport {
        n: config.n,
        mode: config.mode,
        poly: config.poly,
        edge_count: config.edge_count,
        h,
        b,
        u,
        class_size_histogram: hist,
        labeled_scanned: total,
        seconds: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(n: usize, mode: Mode, poly: PolyId) -> CensusReport {
        census(&CensusConfig::new(n, mode, poly), &Limits::default()).unwrap()
    }

    #[test]
    fn small_reports() {
        let r = run(4, Mode::Uniform(3), PolyId::Chi);
        assert_eq!((r.h, r.b, r.u), (5, 5, 5));
        let r = run(3, Mode::Uniform(3), PolyId::Ind);
        assert_eq!((r.h, r.b, r.u), (2, 2, 2));
        let r = run(1, Mode::All, PolyId::Match);
        assert_eq!((r.h, r.b, r.u), (1, 1, 1));
    }

    #[test]
    fn enumeration_counts() {
        let l = Limits::default();
        assert_eq!(enumerate_nonisomorphic(4, Mode::Uniform(3), None, &l, 1).unwrap().len(), 5);
        assert_eq!(enumerate_nonisomorphic(3, Mode::Uniform(3), None, &l, 1).unwrap().len(), 2);
        assert_eq!(enumerate_nonisomorphic(2, Mode::All, None, &l, 1).unwrap().len(), 2);
        // Antichains on three points with edges of size >= 2: {}, one pair,
        // two pairs, three pairs, the triple.
        assert_eq!(enumerate_nonisomorphic(3, Mode::Sperner, None, &l, 1).unwrap().len(), 5);
    }

    #[test]
    fn guards() {
        let l = Limits::default();
        let err = census(&CensusConfig::new(40, Mode::Uniform(3), PolyId::Chi), &l).unwrap_err();
        assert!(matches!(err, Error::Feasibility { .. }));
        let err = census(&CensusConfig::new(5, Mode::All, PolyId::Chi), &l).unwrap_err();
        assert!(matches!(err, Error::Feasibility { .. }));
        let mut c = CensusConfig::new(7, Mode::Uniform(3), PolyId::Chi);
        c.edge_count = Some(2);
        assert_eq!(census(&c, &l).unwrap().h, 3);
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("3".parse::<Mode>().unwrap(), Mode::Uniform(3));
        assert_eq!("uniform(2)".parse::<Mode>().unwrap(), Mode::Uniform(2));
        assert_eq!("sperner".parse::<Mode>().unwrap(), Mode::Sperner);
        assert!("1".parse::<Mode>().is_err());
        assert_eq!(fraction(4, 6), "2/3");
        assert_eq!(fraction(5, 5), "1");
    }
}
