use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Mask};
use crate::limits::Limits;

use super::GraphPolynomial;

/// `sum_{k>=1} mu_k X^k` where `mu_k` counts sets of `k` pairwise disjoint
/// edges. An edgeless hypergraph gives the zero polynomial.
///
/// Depth-first search over edges in canonical order; each matching is reached
/// once, along its increasing edge-index sequence.
pub fn matching_poly(h: &Hypergraph, limits: &Limits) -> Result<GraphPolynomial> {
    let edges = h.edges();
    let mut counts = vec![0u64; h.n() / h.min_edge_size().unwrap_or(1).max(1) + 1];
    let mut nodes: u64 = 0;
    let mut stack: Vec<(usize, Mask, usize)> = vec![(0, 0, 0)];
    while let Some((start, used, depth)) = stack.pop() {
        for (i, &e) in edges.iter().enumerate().skip(start) {
            if e & used != 0 {
                continue;
            }
            nodes += 1;
            if nodes > limits.matching_budget {
                return Err(Error::BudgetExceeded {
                    budget: "matching_budget",
                    detail: format!("more than {} matchings visited", limits.matching_budget),
                });
            }
            counts[depth + 1] += 1;
            stack.push((i + 1, used | e, depth + 1));
        }
    }
    if edges.is_empty() {
        return Ok(GraphPolynomial::zero(super::Basis::Monomial));
    }
    Ok(GraphPolynomial::monomial(counts.into_iter().map(BigInt::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, FamilySpec};
    use crate::poly::Basis;

    fn m(c: &[i64]) -> GraphPolynomial {
        GraphPolynomial::from_i64(Basis::Monomial, c)
    }

    fn mp(h: &Hypergraph) -> GraphPolynomial {
        matching_poly(h, &Limits::default()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(mp(&Hypergraph::new(3, [vec![1, 2, 3]]).unwrap()), m(&[0, 1]));
        let k4 = generate_family(&FamilySpec::CompleteR { n: 4, r: 2 }).unwrap();
        assert_eq!(mp(&k4), m(&[0, 6, 3]));
        let sh = generate_family(&FamilySpec::Sunflower { n: 7, p: 2, r: 3 }).unwrap();
        assert_eq!(mp(&sh), m(&[0, 3]));
        assert!(mp(&Hypergraph::edgeless(4).unwrap()).is_zero());
    }

    #[test]
    fn budget() {
        let k6 = generate_family(&FamilySpec::CompleteR { n: 6, r: 2 }).unwrap();
        let lim = Limits { matching_budget: 10, ..Limits::default() };
        assert!(matches!(matching_poly(&k6, &lim), Err(Error::BudgetExceeded { .. })));
    }
}
