//! Generators for the named hypergraph families.
//!
//! Labelling is deterministic: sunflowers list the kernel first and then the
//! petals in edge order; paths and cycles number vertices along the chain.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Mask, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `n` isolated vertices.
    Empty { n: usize },
    /// Every `r`-subset of `{1..n}`.
    CompleteR { n: usize, r: usize },
    /// Linear `r`-uniform path with `m` edges on `m(r-1)+1` vertices.
    Hyperpath { m: usize, r: usize },
    /// Linear `r`-uniform cycle with `m >= 3` edges on `m(r-1)` vertices.
    Hypercycle { m: usize, r: usize },
    /// `r`-uniform sunflower on `n = r + (k-1)p` vertices: `k` edges share a
    /// kernel of `r - p` vertices, each adding `p` private petal vertices.
    Sunflower { n: usize, p: usize, r: usize },
    /// Cycle `C_p^r` with a path of `p - 1` edges whose two extremities are
    /// glued to the two degree-2 vertices of cycle edge `edge` (1-based).
    BConstruction { p: usize, r: usize, edge: usize },
}

impl FamilySpec {
    /// Vertex count implied by the parameters (after validation).
    pub fn vertex_count(&self) -> Result<usize> {
        self.validate()?;
        Ok(match *self {
            FamilySpec::Empty { n } | FamilySpec::CompleteR { n, .. } => n,
            FamilySpec::Hyperpath { m, r } => m * (r - 1) + 1,
            FamilySpec::Hypercycle { m, r } => m * (r - 1),
            FamilySpec::Sunflower { n, .. } => n,
            FamilySpec::BConstruction { p, r, .. } => (2 * p - 1) * (r - 1) - 1,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        let n = match *self {
            FamilySpec::Empty { n } => {
                if n == 0 {
                    return bad("empty hypergraph needs n >= 1".into());
                }
                n
            }
            FamilySpec::CompleteR { n, r } => {
                if n == 0 || r < 2 || r > n {
                    return bad(format!("complete_r needs 2 <= r <= n, got n={n} r={r}"));
                }
                n
            }
            FamilySpec::Hyperpath { m, r } => {
                if m == 0 || r < 2 {
                    return bad(format!("hyperpath needs m >= 1, r >= 2, got m={m} r={r}"));
                }
                m.saturating_mul(r - 1).saturating_add(1)
            }
            FamilySpec::Hypercycle { m, r } => {
                if m < 3 || r < 2 {
                    return bad(format!("hypercycle needs m >= 3, r >= 2, got m={m} r={r}"));
                }
                m.saturating_mul(r - 1)
            }
            FamilySpec::Sunflower { n, p, r } => {
                if r < 3 || p == 0 || p > r - 1 {
                    return bad(format!("sunflower needs r >= 3 and 1 <= p <= r-1, got p={p} r={r}"));
                }
                if n < r || (n - r) % p != 0 {
                    return bad(format!("sunflower needs n = r + (k-1)p with k >= 1, got n={n} p={p} r={r}"));
                }
                n
            }
            FamilySpec::BConstruction { p, r, edge } => {
                if p < 3 || r < 3 {
                    return bad(format!("b_construction needs p, r >= 3, got p={p} r={r}"));
                }
                if edge == 0 || edge > p {
                    return bad(format!("b_construction edge index {edge} outside 1..={p}"));
                }
                (2 * p - 1).saturating_mul(r - 1) - 1
            }
        };
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(())
    }

    /// Number of sunflower edges `k = (n - r)/p + 1`.
    pub fn sunflower_edges(n: usize, p: usize, r: usize) -> usize {
        (n - r) / p + 1
    }

    pub fn name(&self) -> String {
        match *self {
            FamilySpec::Empty { n } => format!("E_{n}"),
            FamilySpec::CompleteR { n, r } => format!("K_{n}^{r}"),
            FamilySpec::Hyperpath { m, r } => format!("P_{m}^{r}"),
            FamilySpec::Hypercycle { m, r } => format!("C_{m}^{r}"),
            FamilySpec::Sunflower { n, p, r } => format!("SH({n},{p},{r})"),
            FamilySpec::BConstruction { p, r, edge } => format!("B(p={p},r={r},edge={edge})"),
        }
    }
}

/// Build the hypergraph described by `spec`.
pub fn generate_family(spec: &FamilySpec) -> Result<Hypergraph> {
    let n = spec.vertex_count()?;
    let masks: Vec<Mask> = match *spec {
        FamilySpec::Empty { .. } => Vec::new(),
        FamilySpec::CompleteR { n, r } => crate::util::k_subsets(n, r),
        FamilySpec::Hyperpath { m, r } => chain_edges(m, r, None),
        FamilySpec::Hypercycle { m, r } => chain_edges(m, r, Some(m * (r - 1))),
        FamilySpec::Sunflower { n, p, r } => {
            let kernel = r - p;
            let k = FamilySpec::sunflower_edges(n, p, r);
            let kernel_mask: Mask = (1 << kernel) - 1;
            (0..k).map(|i| kernel_mask | (((1 << p) - 1) << (kernel + i * p))).collect()
        }
        FamilySpec::BConstruction { p, r, edge } => {
            let cycle_n = p * (r - 1);
            let mut masks = chain_edges(p, r, Some(cycle_n));
            let j = edge - 1;
            let x = j * (r - 1);
            let y = (j * (r - 1) + r - 1) % cycle_n;
            let path_len = (p - 1) * (r - 1);
            // Path-local vertex 0 -> x, path_len -> y, interior -> fresh labels.
            let relabel = |local: usize| -> usize {
                if local == 0 {
                    x
                } else if local == path_len {
                    y
                } else {
                    cycle_n + local - 1
                }
            };
            for i in 0..p - 1 {
                let e = (i * (r - 1)..=i * (r - 1) + r - 1).fold(0, |acc, v| acc | (1 << relabel(v)));
                masks.push(e);
            }
            masks
        }
    };
    Hypergraph::from_masks(n, masks)
}

fn chain_edges(m: usize, r: usize, wrap: Option<usize>) -> Vec<Mask> {
    (0..m)
        .map(|i| {
            (i * (r - 1)..=i * (r - 1) + r - 1).fold(0, |acc, v| {
                let v = match wrap {
                    Some(len) => v % len,
                    None => v,
                };
                acc | (1 << v)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::size_of;

    #[test]
    fn sunflower_small() {
        let h = generate_family(&FamilySpec::Sunflower { n: 4, p: 1, r: 3 }).unwrap();
        assert_eq!(h.edge_lists(), vec![vec![1, 2, 3], vec![1, 2, 4]]);
        let h = generate_family(&FamilySpec::Sunflower { n: 7, p: 2, r: 3 }).unwrap();
        assert_eq!(h.edge_lists(), vec![vec![1, 2, 3], vec![1, 4, 5], vec![1, 6, 7]]);
    }

    #[test]
    fn sunflower_invariants() {
        for r in 3..=6 {
            for p in 1..r {
                for k in 1..=4 {
                    let n = r + (k - 1) * p;
                    let h = generate_family(&FamilySpec::Sunflower { n, p, r }).unwrap();
                    assert_eq!(h.n(), n);
                    assert_eq!(h.edge_count(), k);
                    assert!(h.is_r_uniform(r));
                    let e = h.edges();
                    for i in 0..e.len() {
                        for j in i + 1..e.len() {
                            assert_eq!(size_of(e[i] & e[j]), r - p);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sunflower_rejects_bad_n() {
        assert!(generate_family(&FamilySpec::Sunflower { n: 6, p: 2, r: 3 }).is_err());
        assert!(generate_family(&FamilySpec::Sunflower { n: 5, p: 3, r: 3 }).is_err());
        assert!(generate_family(&FamilySpec::Sunflower { n: 4, p: 1, r: 2 }).is_err());
    }

    #[test]
    fn hypercycle_small() {
        let h = generate_family(&FamilySpec::Hypercycle { m: 3, r: 3 }).unwrap();
        assert_eq!(h.n(), 6);
        let mut lists = h.edge_lists();
        lists.sort();
        assert_eq!(lists, vec![vec![1, 2, 3], vec![1, 5, 6], vec![3, 4, 5]]);
    }

    #[test]
    fn hypercycle_degrees() {
        for r in 2..=5 {
            for m in 3..=6 {
                let h = generate_family(&FamilySpec::Hypercycle { m, r }).unwrap();
                let deg = h.degrees();
                assert!(deg.iter().all(|&d| d == 1 || d == 2));
                assert_eq!(deg.iter().filter(|&&d| d == 2).count(), m);
                assert_eq!(h.edge_count(), m);
            }
        }
    }

    #[test]
    fn hyperpath_extremities() {
        let h = generate_family(&FamilySpec::Hyperpath { m: 3, r: 3 }).unwrap();
        assert_eq!(h.n(), 7);
        let deg = h.degrees();
        assert_eq!(deg[0], 1);
        assert_eq!(deg[6], 1);
        assert_eq!(deg.iter().filter(|&&d| d == 2).count(), 2);
    }

    #[test]
    fn b_construction_shape() {
        let spec = FamilySpec::BConstruction { p: 3, r: 3, edge: 1 };
        let h = generate_family(&spec).unwrap();
        assert_eq!(h.n(), 9);
        assert_eq!(h.edge_count(), 5);
        assert!(h.is_r_uniform(3));
        let deg = h.degrees();
        // Glued vertices 1 and 3 gain a path edge each.
        assert_eq!(deg[0], 3);
        assert_eq!(deg[2], 3);
        assert!(generate_family(&FamilySpec::BConstruction { p: 3, r: 3, edge: 4 }).is_err());
    }

    #[test]
    fn complete_r() {
        let h = generate_family(&FamilySpec::CompleteR { n: 4, r: 3 }).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert!(h.is_r_uniform(3));
    }
}
