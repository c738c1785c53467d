//! Counting bounds and the ratio sequences that tend to zero.
//!
//! `product_bound` gives the exact number of coefficient vectors a polynomial
//! can take on `n` vertices when each coefficient is bounded separately. The
//! ratio sequences divide the log of that bound by the log of the number of
//! hypergraphs; floats are evaluated in the log domain so they do not
//! overflow for large `n`.

use std::f64::consts::{E, LN_2, PI};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::{stirling_argmax, stirling_row, PolyId};
use crate::util::{binomial, factorial, log2_big};

pub const CHI_PRODUCT_MAX_N: usize = 500;
pub const BINOMIAL_PRODUCT_MAX_N: usize = 2000;
pub const RATIO_MAX_N: usize = 1_000_000;
pub const STIRLING_REPORT_MAX_N: usize = 300;
pub const LABELED_EXACT_MAX_EXPONENT: u64 = 1_000_000;

/// `prod_i S(n,i)` for `chi`, `prod_i C(n,i)` for `ind`, and
/// `prod_{i <= n/k} C(n/k, i)` for `match` (`k` defaults to 2).
pub fn product_bound(poly: PolyId, n: usize, k: Option<usize>) -> Result<BigUint> {
    let max = if poly == PolyId::Chi { CHI_PRODUCT_MAX_N } else { BINOMIAL_PRODUCT_MAX_N };
    if n > max {
        return Err(Error::Feasibility {
            guard: "product_bound_n",
            detail: format!("exact {poly} product limited to n <= {max}, got {n}"),
        });
    }
    let mut acc = BigUint::one();
    match poly {
        PolyId::Chi => {
            let row = stirling_row(n);
            for i in 1..=n {
                acc *= row.get(i);
            }
        }
        PolyId::Ind => {
            for i in 1..=n {
                acc *= binomial(n as u64, i as u64);
            }
        }
        PolyId::Match => {
            let k = k.unwrap_or(2);
            if k == 0 {
                return Err(Error::InvalidArgument("matching edge size k must be positive".into()));
            }
            let m = (n / k) as u64;
            for i in 1..=m {
                acc *= binomial(m, i);
            }
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioKind {
    ChiGeneral,
    ChiUniform(usize),
    IndGeneral,
    IndUniform(usize),
    /// General hypergraphs whose edges have at least `k` vertices.
    MatchGeneral(usize),
    MatchUniform(usize),
}

impl fmt::Display for RatioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatioKind::ChiGeneral => f.write_str("chi_general"),
            RatioKind::ChiUniform(r) => write!(f, "chi_uniform({r})"),
            RatioKind::IndGeneral => f.write_str("ind_general"),
            RatioKind::IndUniform(r) => write!(f, "ind_uniform({r})"),
            RatioKind::MatchGeneral(2) => f.write_str("match_general"),
            RatioKind::MatchGeneral(k) => write!(f, "match_general(k={k})"),
            RatioKind::MatchUniform(r) => write!(f, "match_uniform({r})"),
        }
    }
}

impl RatioKind {
    /// Parse `chi_general`, `chi_uniform(3)` and the like; `r` fills in a
    /// missing parameter.
    pub fn parse(s: &str, r: Option<usize>) -> Result<Self> {
        let (name, arg) = match s.find(['(', ':']) {
            Some(i) => {
                let arg = s[i + 1..].trim_end_matches(')').trim_start_matches("k=");
                let v = arg
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad parameter in ratio kind `{s}`")))?;
                (&s[..i], Some(v))
            }
            None => (s, None),
        };
        let arg = arg.or(r);
        let need = |a: Option<usize>| {
            a.filter(|&v| v >= 1).ok_or_else(|| Error::InvalidArgument(format!("ratio kind `{s}` needs a positive r")))
        };
        match name {
            "chi_general" => Ok(RatioKind::ChiGeneral),
            "ind_general" => Ok(RatioKind::IndGeneral),
            "match_general" => Ok(RatioKind::MatchGeneral(need(arg.or(Some(2)))?)),
            "chi_uniform" => Ok(RatioKind::ChiUniform(need(arg)?)),
            "ind_uniform" => Ok(RatioKind::IndUniform(need(arg)?)),
            "match_uniform" => Ok(RatioKind::MatchUniform(need(arg)?)),
            _ => Err(Error::InvalidArgument(format!("unknown ratio kind `{s}`"))),
        }
    }

    fn uniform_r(self) -> Option<usize> {
        match self {
            RatioKind::ChiUniform(r) | RatioKind::IndUniform(r) | RatioKind::MatchUniform(r) => Some(r),
            _ => None,
        }
    }

    /// `log2` of the ratio at `n`.
    pub fn log2_value(self, n: usize) -> f64 {
        let nf = n as f64;
        // log2 of the log of the hypergraph count, in the matching base.
        let log_den = match self.uniform_r() {
            Some(r) => log2_binomial(n, r),
            None => nf,
        };
        let log_num = match self {
            RatioKind::ChiGeneral | RatioKind::ChiUniform(_) => {
                ((nf * nf + nf) * nf.log2() + nf * nf * E.log2()).log2()
            }
            RatioKind::IndGeneral | RatioKind::IndUniform(_) => {
                let t = nf * (nf + 1.0) / 2.0;
                (t * (nf * E).ln() + nf * nf.ln()).log2() - LN_2.log2()
            }
            RatioKind::MatchGeneral(k) | RatioKind::MatchUniform(k) => {
                let m = (n / k) as f64;
                let t = m * (m + 1.0) / 2.0;
                (t * (nf * E).ln() + nf * nf.ln()).log2() - LN_2.log2()
            }
        };
        log_num - log_den
    }

    pub fn value(self, n: usize) -> f64 {
        self.log2_value(n).exp2()
    }
}

/// `log2 C(n, r)`, `-inf` when `r > n`.
fn log2_binomial(n: usize, r: usize) -> f64 {
    if r > n {
        return f64::NEG_INFINITY;
    }
    let r = r.min(n - r);
    (0..r).map(|i| ((n - i) as f64).log2() - ((i + 1) as f64).log2()).sum()
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Exact(BigUint),
    Log2(f64),
    Float(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    pub quantity: String,
    pub value: BoundValue,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}

pub const BOUNDS_CSV_HEADER: &str = "n,quantity,exact_or_log2,value";

impl BoundTable {
    pub fn push(&mut self, n: usize, quantity: impl Into<String>, value: BoundValue) {
        self.rows.push(BoundRow { n, quantity: quantity.into(), value });
    }

    pub fn extend(&mut self, other: BoundTable) {
        self.rows.extend(other.rows);
    }

    /// Rows of one quantity as `(n, float)` pairs; exact values are converted.
    pub fn series(&self, quantity: &str) -> Vec<(usize, f64)> {
        self.rows
            .iter()
            .filter(|r| r.quantity == quantity)
            .map(|r| {
                let v = match &r.value {
                    BoundValue::Exact(x) => x.to_f64().unwrap_or(f64::INFINITY),
                    BoundValue::Log2(l) => l.exp2(),
                    BoundValue::Float(f) => *f,
                };
                (r.n, v)
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("{BOUNDS_CSV_HEADER}\n");
        for r in &self.rows {
            let (tag, v) = match &r.value {
                BoundValue::Exact(x) => ("exact", x.to_string()),
                BoundValue::Log2(l) => ("log2", format!("{l:.12e}")),
                BoundValue::Float(f) => ("float", format!("{f:.12e}")),
            };
            s.push_str(&format!("{},{},{},{}\n", r.n, r.quantity, tag, v));
        }
        s
    }

    /// Two-column blocks, one per quantity, separated by blank lines.
    pub fn to_gnuplot(&self) -> String {
        let mut names: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !names.contains(&r.quantity.as_str()) {
                names.push(&r.quantity);
            }
        }
        let mut s = String::new();
        for (i, name) in names.iter().enumerate() {
            if i > 0 {
                s.push_str("\n\n");
            }
            s.push_str(&format!("# {name}\n"));
            for r in self.rows.iter().filter(|r| r.quantity == *name) {
                match &r.value {
                    BoundValue::Log2(l) => s.push_str(&format!("{} {:.12e}  # log2\n", r.n, l)),
                    BoundValue::Exact(x) => s.push_str(&format!("{} {}\n", r.n, x)),
                    BoundValue::Float(f) => s.push_str(&format!("{} {:.12e}\n", r.n, f)),
                }
            }
        }
        s
    }
}

/// The ratio for every `n` in `n_min..=n_max`. Values that underflow a double
/// are reported as `log2`.
pub fn ratio_sequence(kind: RatioKind, n_min: usize, n_max: usize) -> Result<BoundTable> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidArgument(format!("bad range {n_min}..={n_max}")));
    }
    if n_max > RATIO_MAX_N {
        return Err(Error::Feasibility {
            guard: "ratio_max_n",
            detail: format!("ratio sequences limited to n <= {RATIO_MAX_N}"),
        });
    }
    if let Some(r) = kind.uniform_r() {
        if n_min < r {
            return Err(Error::InvalidArgument(format!("{kind} needs n >= {r}")));
        }
    }
    let mut t = BoundTable::default();
    let name = kind.to_string();
    for n in n_min..=n_max {
        let l = kind.log2_value(n);
        let v = l.exp2();
        let value = if v > 0.0 && v.is_normal() { BoundValue::Float(v) } else { BoundValue::Log2(l) };
        t.push(n, name.clone(), value);
    }
    Ok(t)
}

/// Number of labeled hypergraphs: `2^(2^n)`, or `2^C(n,r)` for `r`-uniform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledCount {
    /// The exponent, which is also the `log2` of the count.
    pub log2: BigUint,
    /// The count itself when the exponent is at most one million.
    pub exact: Option<BigUint>,
}

pub fn labeled_count(n: usize, r: Option<usize>) -> LabeledCount {
    let log2 = match r {
        Some(r) => binomial(n as u64, r as u64),
        None => BigUint::one() << n,
    };
    let exact = u64::try_from(&log2).ok().filter(|&e| e <= LABELED_EXACT_MAX_EXPONENT).map(|e| BigUint::one() << e);
    LabeledCount { log2, exact }
}

/// `K_n`, `n / ln n`, their ratio, and the relative error of Stirling's
/// approximation of `n!`, for each `n` in range.
pub fn stirling_asymptotics_report(n_min: usize, n_max: usize) -> Result<BoundTable> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidArgument(format!("bad range {n_min}..={n_max}")));
    }
    if n_max > STIRLING_REPORT_MAX_N {
        return Err(Error::Feasibility {
            guard: "stirling_report_n",
            detail: format!("exact Stirling rows limited to n <= {STIRLING_REPORT_MAX_N}"),
        });
    }
    let mut t = BoundTable::default();
    for n in n_min..=n_max {
        let k = stirling_argmax(n)?;
        t.push(n, "K_n", BoundValue::Exact(BigUint::from(k)));
        if n >= 2 {
            let approx = n as f64 / (n as f64).ln();
            t.push(n, "n_over_ln_n", BoundValue::Float(approx));
            t.push(n, "K_n_over_n_over_ln_n", BoundValue::Float(k as f64 / approx));
        }
        t.push(n, "stirling_factorial_rel_error", BoundValue::Float(stirling_relative_error(n)));
    }
    Ok(t)
}

/// `(n! - sqrt(2 pi n) (n/e)^n) / n!`.
pub fn stirling_relative_error(n: usize) -> f64 {
    let nf = n as f64;
    let ln_fact = log2_big(&factorial(n as u64)) * LN_2;
    let ln_approx = 0.5 * (2.0 * PI * nf).ln() + nf * (nf.ln() - 1.0);
    -(ln_approx - ln_fact).exp_m1()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        assert_eq!(product_bound(PolyId::Chi, 4, None).unwrap(), BigUint::from(42u32));
        assert_eq!(product_bound(PolyId::Chi, 1, None).unwrap(), BigUint::one());
        assert_eq!(product_bound(PolyId::Ind, 3, None).unwrap(), BigUint::from(9u32));
        // floor(5/2) = 2: C(2,1) C(2,2).
        assert_eq!(product_bound(PolyId::Match, 5, None).unwrap(), BigUint::from(2u32));
        assert!(matches!(product_bound(PolyId::Chi, 501, None), Err(Error::Feasibility { .. })));
    }

    #[test]
    fn ratio_examples() {
        let v = RatioKind::ChiGeneral.value(10);
        let direct = (110.0 * 10f64.log2() + 100.0 * E.log2()) / 1024.0;
        assert!((v - direct).abs() / direct < 1e-12);
        assert!((v - 0.4977).abs() < 1e-4);
        assert!(RatioKind::ChiGeneral.value(60) < 1e-10);
        assert!(RatioKind::ChiUniform(3).value(10_000) < 0.01);
        let t = ratio_sequence(RatioKind::ChiGeneral, 6, 60).unwrap();
        assert_eq!(t.rows.len(), 55);
    }

    #[test]
    fn kinds_parse() {
        assert_eq!(RatioKind::parse("chi_uniform(3)", None).unwrap(), RatioKind::ChiUniform(3));
        assert_eq!(RatioKind::parse("ind_uniform", Some(4)).unwrap(), RatioKind::IndUniform(4));
        assert_eq!(RatioKind::parse("match_general", None).unwrap(), RatioKind::MatchGeneral(2));
        assert!(RatioKind::parse("chi_uniform", None).is_err());
        for k in ["chi_general", "chi_uniform(3)", "match_general", "match_uniform(3)"] {
            assert_eq!(RatioKind::parse(k, None).unwrap().to_string(), k);
        }
    }

    #[test]
    fn labeled() {
        assert_eq!(labeled_count(4, Some(3)).exact, Some(BigUint::from(16u32)));
        assert_eq!(labeled_count(3, None).exact, Some(BigUint::from(256u32)));
        let c = labeled_count(30, Some(3));
        assert_eq!(c.log2, BigUint::from(4060u32));
        assert!(labeled_count(30, None).exact.is_none());
    }

    #[test]
    fn stirling_report() {
        let t = stirling_asymptotics_report(1, 10).unwrap();
        assert_eq!(t.series("K_n").last().unwrap().1, 5.0);
        let e = stirling_relative_error(10);
        assert!((e - 0.0083).abs() < 1e-4, "{e}");
        let ratio = t.series("n_over_ln_n");
        assert!((ratio.last().unwrap().1 - 4.343).abs() < 1e-3);
    }
}
