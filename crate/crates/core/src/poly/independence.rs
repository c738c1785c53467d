use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Mask};
use crate::limits::Limits;

use super::{dependent_table, GraphPolynomial};

/// `sum_i ind_i X^i` where `ind_i` counts independent sets of size `i`; the
/// empty set contributes the constant term 1.
pub fn independence_poly(h: &Hypergraph, limits: &Limits) -> Result<GraphPolynomial> {
    let n = h.n();
    if n > limits.subset_max_vertices {
        return Err(Error::Feasibility {
            guard: "subset_max_vertices",
            detail: format!("independent-set enumeration limited to {} vertices, got {n}", limits.subset_max_vertices),
        });
    }
    let dep = dependent_table(h);
    let mut counts = vec![0u64; n + 1];
    for (s, &d) in dep.iter().enumerate() {
        if !d {
            counts[(s as Mask).count_ones() as usize] += 1;
        }
    }
    Ok(GraphPolynomial::monomial(counts.into_iter().map(BigInt::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, FamilySpec};
    use crate::poly::Basis;

    fn ind(h: &Hypergraph) -> GraphPolynomial {
        independence_poly(h, &Limits::default()).unwrap()
    }

    #[test]
    fn examples() {
        let m = |c: &[i64]| GraphPolynomial::from_i64(Basis::Monomial, c);
        assert_eq!(ind(&Hypergraph::edgeless(3).unwrap()), m(&[1, 3, 3, 1]));
        assert_eq!(ind(&Hypergraph::new(3, [vec![1, 2, 3]]).unwrap()), m(&[1, 3, 3]));
        let k43 = generate_family(&FamilySpec::CompleteR { n: 4, r: 3 }).unwrap();
        assert_eq!(ind(&k43), m(&[1, 4, 6]));
    }

    #[test]
    fn size_guard() {
        let lim = Limits { subset_max_vertices: 4, ..Limits::default() };
        let h = Hypergraph::edgeless(5).unwrap();
        assert!(matches!(independence_poly(&h, &lim), Err(Error::Feasibility { .. })));
    }
}
