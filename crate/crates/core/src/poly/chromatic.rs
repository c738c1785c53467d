use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Mask};
use crate::limits::{Limits, DP_HARD_MAX};

use super::GraphPolynomial;

/// `b[i]` = number of partitions of the vertex set into `i` nonempty
/// independent blocks. Index 0 is present and always zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionVector {
    pub b: Vec<BigUint>,
}

impl PartitionVector {
    pub fn get(&self, i: usize) -> BigUint {
        self.b.get(i).cloned().unwrap_or_default()
    }
}

/// `table[S]` is true iff the vertex set `S` contains an edge.
///
/// Marks every edge, then closes upward one vertex at a time.
pub(crate) fn dependent_table(h: &Hypergraph) -> Vec<bool> {
    let n = h.n();
    let size = 1usize << n;
    let mut dep = vec![false; size];
    for &e in h.edges() {
        dep[e as usize] = true;
    }
    for v in 0..n {
        let bit = 1usize << v;
        for s in 0..size {
            if s & bit != 0 && dep[s ^ bit] {
                dep[s] = true;
            }
        }
    }
    dep
}

/// Partition counts by number of blocks, in `u64`.
///
/// `f(S)` holds, for each `i`, the number of partitions of `S` into `i`
/// independent blocks. The block holding the lowest vertex of `S` is chosen
/// first, so each partition is built exactly once:
/// `f(S)[i] = sum over independent T ⊆ S with low(S) ∈ T of f(S \ T)[i-1]`.
pub(crate) fn partition_counts(h: &Hypergraph, limits: &Limits) -> Result<Vec<u64>> {
    let n = h.n();
    let cap = limits.dp_max_vertices.min(DP_HARD_MAX);
    if n > cap {
        return Err(Error::Feasibility {
            guard: "dp_max_vertices",
            detail: format!("chromatic dynamic program limited to {cap} vertices, got {n}"),
        });
    }
    let dep = dependent_table(h);
    let size = 1usize << n;
    // Row for S has popcount(S) + 1 slots.
    let mut offset = Vec::with_capacity(size + 1);
    let mut acc = 0usize;
    for s in 0..size {
        offset.push(acc);
        acc += (s as Mask).count_ones() as usize + 1;
    }
    offset.push(acc);
    let mut f = vec![0u64; acc];
    f[0] = 1;
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let base = offset[s];
        let width = offset[s + 1] - base;
        let mut sub = rest;
        loop {
            let t = sub | low;
            if !dep[t] {
                let r = s ^ t;
                let rb = offset[r];
                let rw = offset[r + 1] - rb;
                for i in 0..rw {
                    let v = f[rb + i];
                    if v != 0 {
                        debug_assert!(i + 1 < width);
                        f[base + i + 1] += v;
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(f[offset[size - 1]..offset[size]].to_vec())
}

pub fn chromatic_partition_vector(h: &Hypergraph, limits: &Limits) -> Result<PartitionVector> {
    let counts = partition_counts(h, limits)?;
    Ok(PartitionVector { b: counts.into_iter().map(BigUint::from).collect() })
}

/// Chromatic polynomial in the falling-factorial basis; coefficient `i` is
/// the partition count `b_i`.
pub fn chromatic_poly(h: &Hypergraph, limits: &Limits) -> Result<GraphPolynomial> {
    let counts = partition_counts(h, limits)?;
    Ok(GraphPolynomial::falling_factorial(counts.into_iter().map(BigInt::from).collect()))
}

/// Count maps `V -> [k]` leaving no edge monochromatic, by exhaustive
/// enumeration. Meant as an independent check of [`chromatic_poly`].
pub fn count_proper_colorings(h: &Hypergraph, k: u64, limits: &Limits) -> Result<BigUint> {
    let n = h.n();
    let total = k.checked_pow(n as u32);
    match total {
        Some(t) if t <= limits.coloring_budget => {}
        _ => {
            return Err(Error::BudgetExceeded {
                budget: "coloring_budget",
                detail: format!("{k}^{n} assignments exceed {}", limits.coloring_budget),
            })
        }
    }
    if k == 0 {
        return Ok(BigUint::default());
    }
    let edges: Vec<Vec<usize>> = h.edge_lists().into_iter().map(|e| e.into_iter().map(|v| v - 1).collect()).collect();
    let mut color = vec![0u64; n];
    let mut count: u64 = 0;
    loop {
        let proper = edges.iter().all(|e| e.iter().any(|&v| color[v] != color[e[0]]));
        if proper {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(BigUint::from(count));
            }
            color[i] += 1;
            if color[i] < k {
                break;
            }
            color[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, FamilySpec};
    use crate::poly::Basis;

    fn lim() -> Limits {
        Limits::default()
    }

    fn b(h: &Hypergraph) -> Vec<u64> {
        partition_counts(h, &lim()).unwrap()
    }

    #[test]
    fn partition_vectors() {
        assert_eq!(b(&Hypergraph::edgeless(3).unwrap()), vec![0, 1, 3, 1]);
        let tri = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        assert_eq!(b(&tri), vec![0, 0, 3, 1]);
        let k43 = generate_family(&FamilySpec::CompleteR { n: 4, r: 3 }).unwrap();
        let v = b(&k43);
        assert_eq!(v[1], 0);
        assert_eq!(v[2], 3);
    }

    #[test]
    fn chromatic_examples() {
        let e2 = Hypergraph::edgeless(2).unwrap();
        let p = chromatic_poly(&e2, &lim()).unwrap().to_monomial();
        assert_eq!(p, GraphPolynomial::from_i64(Basis::Monomial, &[0, 0, 1]));

        let tri = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        let p = chromatic_poly(&tri, &lim()).unwrap();
        assert_eq!(p.basis(), Basis::FallingFactorial);
        assert_eq!(p.to_monomial(), GraphPolynomial::from_i64(Basis::Monomial, &[0, -1, 0, 1]));

        let k2 = Hypergraph::new(2, [vec![1, 2]]).unwrap();
        let p = chromatic_poly(&k2, &lim()).unwrap().to_monomial();
        assert_eq!(p, GraphPolynomial::from_i64(Basis::Monomial, &[0, -1, 1]));
    }

    #[test]
    fn coloring_counts() {
        let lim = lim();
        let e3 = Hypergraph::edgeless(3).unwrap();
        assert_eq!(count_proper_colorings(&e3, 2, &lim).unwrap(), BigUint::from(8u32));
        let tri = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        assert_eq!(count_proper_colorings(&tri, 2, &lim).unwrap(), BigUint::from(6u32));
        assert_eq!(count_proper_colorings(&tri, 3, &lim).unwrap(), BigUint::from(24u32));
        assert_eq!(count_proper_colorings(&tri, 0, &lim).unwrap(), BigUint::default());
    }

    #[test]
    fn budgets_enforced() {
        let big = Hypergraph::edgeless(21).unwrap();
        assert!(matches!(partition_counts(&big, &lim()), Err(Error::Feasibility { .. })));
        let h = Hypergraph::edgeless(10).unwrap();
        assert!(matches!(count_proper_colorings(&h, 10, &lim()), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn superset_mate_shares_chromatic() {
        let h = Hypergraph::new(3, [vec![1, 2]]).unwrap();
        let x = h.superset_extension().unwrap();
        let lim = lim();
        for k in 1..=4 {
            let a = count_proper_colorings(&h, k, &lim).unwrap();
            let c = count_proper_colorings(&x, k, &lim).unwrap();
            assert_eq!(a, c);
            // k^3 - k^2
            assert_eq!(a, BigUint::from(k * k * k - k * k));
        }
        assert_eq!(chromatic_poly(&h, &lim).unwrap(), chromatic_poly(&x, &lim).unwrap());
    }
}
