//! Exact hypergraph polynomials.
//!
//! Coefficients are arbitrary-precision integers. The chromatic polynomial is
//! produced natively in the falling-factorial basis `X_(i) = X(X-1)...(X-i+1)`,
//! the independence and matching polynomials in the monomial basis. Equality
//! between polynomials is always decided in the monomial basis.

mod chromatic;
mod independence;
mod matching;
mod stirling;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;

pub use chromatic::{chromatic_partition_vector, chromatic_poly, count_proper_colorings, PartitionVector};
pub(crate) use chromatic::{dependent_table, partition_counts};
pub use independence::independence_poly;
pub use matching::matching_poly;
pub use stirling::{stirling_argmax, stirling_row, stirling_rows, StirlingRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Monomial,
    FallingFactorial,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Monomial => "monomial",
            Basis::FallingFactorial => "falling_factorial",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" => Ok(Basis::Monomial),
            "falling_factorial" | "falling" => Ok(Basis::FallingFactorial),
            _ => Err(Error::InvalidArgument(format!("unknown basis `{s}`"))),
        }
    }
}

/// Which of the three polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyId {
    Chi,
    Ind,
    Match,
}

impl PolyId {
    pub const ALL: [PolyId; 3] = [PolyId::Chi, PolyId::Ind, PolyId::Match];

    pub fn as_str(self) -> &'static str {
        match self {
            PolyId::Chi => "chi",
            PolyId::Ind => "ind",
            PolyId::Match => "match",
        }
    }
}

impl fmt::Display for PolyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PolyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi" | "chromatic" => Ok(PolyId::Chi),
            "ind" | "independence" => Ok(PolyId::Ind),
            "match" | "matching" => Ok(PolyId::Match),
            _ => Err(Error::InvalidArgument(format!("unknown polynomial `{s}`"))),
        }
    }
}

/// Native-basis coefficients of polynomial `id` as machine integers. All three
/// polynomials have nonnegative native coefficients, and at census sizes they
/// fit comfortably in `u64`.
pub(crate) fn native_counts(id: PolyId, h: &Hypergraph, limits: &Limits) -> Result<Vec<u64>> {
    let p = match id {
        PolyId::Chi => {
            let mut counts = partition_counts(h, limits)?;
            while counts.last() == Some(&0) {
                counts.pop();
            }
            return Ok(counts);
        }
        PolyId::Ind => independence_poly(h, limits)?,
        PolyId::Match => matching_poly(h, limits)?,
    };
    p.coeffs()
        .iter()
        .map(|c| u64::try_from(c).map_err(|_| Error::Invariant(format!("coefficient {c} outside u64"))))
        .collect()
}

/// Compute polynomial `id` of `h` in its native basis.
pub fn compute(id: PolyId, h: &Hypergraph, limits: &Limits) -> Result<GraphPolynomial> {
    match id {
        PolyId::Chi => chromatic_poly(h, limits),
        PolyId::Ind => independence_poly(h, limits),
        PolyId::Match => matching_poly(h, limits),
    }
}

/// Integer polynomial tagged with its basis. Trailing zeros are trimmed, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug)]
pub struct GraphPolynomial {
    basis: Basis,
    coeffs: Vec<BigInt>,
}

impl GraphPolynomial {
    pub fn new(basis: Basis, coeffs: Vec<BigInt>) -> Self {
        let mut p = GraphPolynomial { basis, coeffs };
        p.trim();
        p
    }

    pub fn monomial(coeffs: Vec<BigInt>) -> Self {
        Self::new(Basis::Monomial, coeffs)
    }

    pub fn falling_factorial(coeffs: Vec<BigInt>) -> Self {
        Self::new(Basis::FallingFactorial, coeffs)
    }

    /// Convenience for small literal coefficients.
    pub fn from_i64(basis: Basis, coeffs: &[i64]) -> Self {
        Self::new(basis, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(basis: Basis) -> Self {
        GraphPolynomial { basis, coeffs: Vec::new() }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn to_basis(&self, basis: Basis) -> GraphPolynomial {
        match basis {
            Basis::Monomial => self.to_monomial(),
            Basis::FallingFactorial => self.to_falling_factorial(),
        }
    }

    /// Expand falling factorials into powers of `X`; identity on monomial input.
    pub fn to_monomial(&self) -> GraphPolynomial {
        match self.basis {
            Basis::Monomial => self.clone(),
            Basis::FallingFactorial => {
                let mut out = vec![BigInt::zero(); self.coeffs.len()];
                let mut row = vec![BigInt::one()];
                for (i, c) in self.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        for (j, s) in row.iter().enumerate() {
                            out[j] += c * s;
                        }
                    }
                    row = times_x_minus(&row, i as i64);
                }
                GraphPolynomial::monomial(out)
            }
        }
    }

    /// Rewrite in the falling-factorial basis using `X^j = sum_i S(j,i) X_(i)`.
    pub fn to_falling_factorial(&self) -> GraphPolynomial {
        match self.basis {
            Basis::FallingFactorial => self.clone(),
            Basis::Monomial => {
                let mut out = vec![BigInt::zero(); self.coeffs.len()];
                for (j, c) in self.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (i, s) in stirling_row(j).values.iter().enumerate() {
                        out[i] += c * BigInt::from(s.clone());
                    }
                }
                GraphPolynomial::falling_factorial(out)
            }
        }
    }

    /// Value at an integer point, computed in the polynomial's own basis.
    pub fn evaluate(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        match self.basis {
            Basis::Monomial => self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c),
            Basis::FallingFactorial => {
                let mut total = BigInt::zero();
                let mut ff = BigInt::one();
                for (i, c) in self.coeffs.iter().enumerate() {
                    total += c * &ff;
                    ff *= &x - BigInt::from(i);
                }
                total
            }
        }
    }

    /// Monomial coefficients; the canonical comparison key.
    pub fn monomial_coeffs(&self) -> Vec<BigInt> {
        self.to_monomial().coeffs
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolynomialJson::from(self)).expect("plain struct serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: PolynomialJson =
            serde_json::from_str(s).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        GraphPolynomial::try_from(raw)
    }
}

fn times_x_minus(row: &[BigInt], a: i64) -> Vec<BigInt> {
    let mut next = vec![BigInt::zero(); row.len() + 1];
    for (j, c) in row.iter().enumerate() {
        next[j + 1] += c;
        next[j] -= c * a;
    }
    next
}

impl PartialEq for GraphPolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.coeffs == other.coeffs
        } else {
            self.monomial_coeffs() == other.monomial_coeffs()
        }
    }
}

impl Eq for GraphPolynomial {}

impl Hash for GraphPolynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.monomial_coeffs().hash(state);
    }
}

impl fmt::Display for GraphPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let term = match (self.basis, i) {
                (_, 0) => String::new(),
                (Basis::Monomial, 1) => "X".to_string(),
                (Basis::Monomial, _) => format!("X^{i}"),
                (Basis::FallingFactorial, _) => format!("X_({i})"),
            };
            if term.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&term)?;
            } else {
                write!(f, "{mag}*{term}")?;
            }
        }
        Ok(())
    }
}

/// Wire form: coefficients as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub basis: Basis,
    pub coeffs: Vec<String>,
}

impl From<&GraphPolynomial> for PolynomialJson {
    fn from(p: &GraphPolynomial) -> Self {
        PolynomialJson { basis: p.basis, coeffs: p.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

impl TryFrom<PolynomialJson> for GraphPolynomial {
    type Error = Error;
    fn try_from(raw: PolynomialJson) -> Result<Self> {
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|_| Error::Parse { line: 0, msg: format!("bad coefficient `{s}`") }))
            .collect::<Result<Vec<_>>>()?;
        Ok(GraphPolynomial::new(raw.basis, coeffs))
    }
}
