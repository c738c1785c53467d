//! Orbit counting with Burnside's lemma.
//!
//! A permutation of cycle type `λ` fixes exactly `2^c` edge families, where
//! `c` is the number of cycles it induces on the eligible edges. Summing over
//! cycle types weighted by class size and dividing by `n!` gives the number of
//! isomorphism classes.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{permute_mask, Mask};
use crate::util::factorial;

/// Which vertex subsets may appear as edges when counting general hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeUniverse {
    /// Subsets of size at least two (the library's hypergraph model).
    AtLeastTwo,
    /// Every nonempty subset.
    Nonempty,
    /// Every subset including the empty one; `2^(2^n)` labeled families.
    AllSubsets,
}

impl EdgeUniverse {
    fn min_size(self) -> u32 {
        match self {
            EdgeUniverse::AtLeastTwo => 2,
            EdgeUniverse::Nonempty => 1,
            EdgeUniverse::AllSubsets => 0,
        }
    }
}

impl std::str::FromStr for EdgeUniverse {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min2" | "at_least_two" => Ok(EdgeUniverse::AtLeastTwo),
            "nonempty" => Ok(EdgeUniverse::Nonempty),
            "all" | "all_subsets" => Ok(EdgeUniverse::AllSubsets),
            _ => Err(Error::InvalidArgument(format!("unknown edge universe `{s}`"))),
        }
    }
}

/// Integer partitions of `n` (cycle types of `S_n`), parts non-increasing.
pub fn cycle_types(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of permutations with the given cycle type: `n! / prod i^{m_i} m_i!`.
fn class_size(n: usize, parts: &[usize]) -> BigUint {
    let mut denom = BigUint::one();
    let mut mult = vec![0u64; n + 1];
    for &p in parts {
        mult[p] += 1;
    }
    for (i, &m) in mult.iter().enumerate().skip(1) {
        if m > 0 {
            denom *= BigUint::from(i).pow(m as u32) * factorial(m);
        }
    }
    factorial(n as u64) / denom
}

fn representative(n: usize, parts: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; n];
    let mut start = 0;
    for &len in parts {
        for i in 0..len {
            perm[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    perm
}

fn induced_cycles(n: usize, perm: &[usize], eligible: impl Fn(Mask) -> bool) -> u64 {
    let size = 1usize << n;
    let mut seen = vec![false; size];
    let mut cycles = 0;
    for s in 0..size {
        let m = s as Mask;
        if seen[s] || !eligible(m) {
            continue;
        }
        cycles += 1;
        let mut x = m;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = permute_mask(x, perm);
        }
    }
    cycles
}

fn burnside(n: usize, eligible: impl Fn(Mask) -> bool + Copy) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for parts in cycle_types(n) {
        let perm = representative(n, &parts);
        let c = induced_cycles(n, &perm, eligible);
        total += class_size(n, &parts) << c;
    }
    let (q, r) = total.div_rem(&factorial(n as u64));
    if !r.is_zero() {
        return Err(Error::Invariant("Burnside sum not divisible by n!".into()));
    }
    Ok(q)
}

/// Number of non-isomorphic `r`-uniform hypergraphs on `n` vertices.
pub fn count_nonisomorphic_runiform(n: usize, r: usize) -> Result<BigUint> {
    if n > 16 {
        return Err(Error::Feasibility {
            guard: "burnside_uniform_n",
            detail: format!("uniform orbit count limited to n <= 16, got {n}"),
        });
    }
    if n == 0 {
        return Err(Error::NoVertices);
    }
    burnside(n, |m| m.count_ones() as usize == r)
}

/// Number of non-isomorphic hypergraphs on `n` vertices whose edges come from
/// `universe`.
pub fn count_nonisomorphic_general(n: usize, universe: EdgeUniverse) -> Result<BigUint> {
    if n > 10 {
        return Err(Error::Feasibility {
            guard: "burnside_general_n",
            detail: format!("general orbit count limited to n <= 10, got {n}"),
        });
    }
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let min = universe.min_size();
    burnside(n, move |m| m.count_ones() >= min)
}
