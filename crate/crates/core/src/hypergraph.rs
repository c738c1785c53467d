//! The hypergraph data model.
//!
//! Vertices are numbered `1..=n` at the API boundary and stored as bit
//! positions `0..n` inside a `u64` mask. Each edge is one mask; the edge list
//! is kept sorted by `(size, mask)` so that equal hypergraphs compare equal
//! field by field.

use std::fmt;

use crate::error::{Error, Result};

/// Edge bit-mask over vertices; bit `i` stands for vertex `i + 1`.
pub type Mask = u64;

/// Largest vertex count representable by a [`Mask`] edge.
pub const MAX_VERTICES: usize = 63;

/// Minimum edge size used unless overridden. A singleton edge can never be
/// properly colored, so it collapses the chromatic polynomial to zero.
pub const DEFAULT_MIN_EDGE_SIZE: usize = 2;

#[inline]
pub fn size_of(mask: Mask) -> usize {
    mask.count_ones() as usize
}

#[inline]
pub(crate) fn edge_order(a: &Mask, b: &Mask) -> std::cmp::Ordering {
    (size_of(*a), *a).cmp(&(size_of(*b), *b))
}

/// Vertices of a mask as 1-based indices, ascending.
pub fn mask_vertices(mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(size_of(mask));
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

/// Build a mask from 1-based vertex indices on `n` vertices.
pub fn vertex_mask(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Mask> {
    let mut mask = 0;
    for v in vertices {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        mask |= 1 << (v - 1);
    }
    Ok(mask)
}

/// A finite hypergraph on the vertex set `{1, ..., n}`.
///
/// Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Mask>,
}

impl Hypergraph {
    /// Build a hypergraph from 1-based vertex lists, enforcing the default
    /// minimum edge size of two. Duplicate vertices inside an edge and
    /// duplicate edges are merged.
    pub fn new<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        Self::with_min_edge_size(n, edges, DEFAULT_MIN_EDGE_SIZE)
    }

    /// As [`Hypergraph::new`] but with an explicit minimum edge size
    /// (`1` permits singleton edges).
    pub fn with_min_edge_size<E, I>(n: usize, edges: E, min_edge_size: usize) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        check_order(n)?;
        let masks = edges.into_iter().map(|e| vertex_mask(n, e)).collect::<Result<Vec<_>>>()?;
        Self::from_masks_with_min(n, masks, min_edge_size)
    }

    /// Build from raw masks with the default minimum edge size.
    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = Mask>) -> Result<Self> {
        Self::from_masks_with_min(n, masks, DEFAULT_MIN_EDGE_SIZE)
    }

    pub fn from_masks_with_min(n: usize, masks: impl IntoIterator<Item = Mask>, min_edge_size: usize) -> Result<Self> {
        check_order(n)?;
        let full = full_mask(n);
        let mut edges = Vec::new();
        for m in masks {
            if m & !full != 0 {
                let vertex = (63 - (m & !full).leading_zeros()) as usize + 1;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if m == 0 {
                return Err(Error::EmptyEdge);
            }
            if size_of(m) < min_edge_size {
                return Err(Error::EdgeTooSmall { size: size_of(m), min: min_edge_size });
            }
            edges.push(m);
        }
        edges.sort_by(edge_order);
        edges.dedup();
        Ok(Hypergraph { n, edges })
    }

    /// Build an `r`-uniform hypergraph, rejecting any edge of another size.
    pub fn uniform<E, I>(n: usize, r: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let h = Self::with_min_edge_size(n, edges, 1)?;
        if let Some(&e) = h.edges.iter().find(|&&e| size_of(e) != r) {
            return Err(Error::NotUniform { size: size_of(e), r });
        }
        Ok(h)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Hypergraph { n, edges: Vec::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge masks in canonical `(size, mask)` order.
    pub fn edges(&self) -> &[Mask] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as 1-based vertex lists.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| mask_vertices(e)).collect()
    }

    pub fn full_mask(&self) -> Mask {
        full_mask(self.n)
    }

    pub fn contains_edge(&self, mask: Mask) -> bool {
        self.edges.binary_search_by(|probe| edge_order(probe, &mask)).is_ok()
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.first().map(|&e| size_of(e))
    }

    pub fn max_edge_size(&self) -> Option<usize> {
        self.edges.last().map(|&e| size_of(e))
    }

    /// True iff every edge has exactly `r` vertices (vacuous when edgeless).
    pub fn is_r_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|&e| size_of(e) == r)
    }

    /// True iff no edge properly contains another.
    pub fn is_sperner(&self) -> bool {
        is_antichain(&self.edges)
    }

    /// True iff no edge is a subset of `set`.
    pub fn is_independent(&self, set: Mask) -> bool {
        self.edges.iter().all(|&e| e & !set != 0)
    }

    /// [`Hypergraph::is_independent`] on 1-based vertex indices.
    pub fn is_independent_set(&self, vertices: &[usize]) -> Result<bool> {
        Ok(self.is_independent(vertex_mask(self.n, vertices.iter().copied())?))
    }

    /// Degree of every vertex, indexed from 0.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &e in &self.edges {
            let mut m = e;
            while m != 0 {
                deg[m.trailing_zeros() as usize] += 1;
                m &= m - 1;
            }
        }
        deg
    }

    /// Relabel vertices: vertex `v` (0-based) becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let mut edges: Vec<Mask> = self.edges.iter().map(|&e| permute_mask(e, perm)).collect();
        edges.sort_by(edge_order);
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Same hypergraph with one more edge; errors if the edge is invalid.
    pub fn with_edge(&self, mask: Mask) -> Result<Self> {
        Self::from_masks_with_min(self.n, self.edges.iter().copied().chain([mask]), 1)
    }

    /// Add the smallest missing proper superset of some edge.
    ///
    /// For an edge `e` and any `f ⊋ e`, adding `f` changes neither the set of
    /// proper colorings nor the family of independent sets, so the result
    /// shares its chromatic and independence polynomials with `self` while
    /// having one more edge. Returns `None` when every edge either spans all
    /// vertices or already has all its supersets present.
    pub fn superset_extension(&self) -> Option<Self> {
        let full = self.full_mask();
        let mut best: Option<Mask> = None;
        for &e in &self.edges {
            if e == full {
                continue;
            }
            if let Some(f) = smallest_missing_superset(self, e, full) {
                if best.is_none_or(|b| edge_order(&f, &b).is_lt()) {
                    best = Some(f);
                }
            }
        }
        best.map(|f| {
            let mut edges = self.edges.clone();
            edges.push(f);
            edges.sort_by(edge_order);
            Hypergraph { n: self.n, edges }
        })
    }
}

fn smallest_missing_superset(h: &Hypergraph, e: Mask, full: Mask) -> Option<Mask> {
    let free = full & !e;
    let free_count = size_of(free);
    // Walk supersets by number of added vertices, then by mask value.
    for add in 1..=free_count {
        let mut candidates: Vec<Mask> = Vec::new();
        let mut sub = free;
        loop {
            if size_of(sub) == add {
                candidates.push(e | sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        candidates.sort_unstable();
        if let Some(&f) = candidates.iter().find(|&&f| !h.contains_edge(f)) {
            return Some(f);
        }
    }
    None
}

pub(crate) fn is_antichain(edges: &[Mask]) -> bool {
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if a & b == a || a & b == b {
                return false;
            }
        }
    }
    true
}

#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) fn permute_mask(mask: Mask, perm: &[usize]) -> Mask {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        out |= 1 << perm[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    out
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, ", self.n)?;
        f.debug_list().entries(self.edge_lists()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_dedup() {
        let h = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edge_lists(), vec![vec![1, 2, 3]]);

        let h = Hypergraph::new(4, [vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(h.edge_lists(), vec![vec![1, 2]]);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Hypergraph::new(2, [vec![1, 2, 3]]), Err(Error::VertexOutOfRange { vertex: 3, n: 2 }));
        assert_eq!(Hypergraph::new(3, [Vec::<usize>::new()]), Err(Error::EmptyEdge));
        assert_eq!(Hypergraph::new(3, [vec![2]]), Err(Error::EdgeTooSmall { size: 1, min: 2 }));
        assert!(Hypergraph::with_min_edge_size(3, [vec![2]], 1).is_ok());
        assert_eq!(Hypergraph::edgeless(0), Err(Error::NoVertices));
        assert!(matches!(Hypergraph::uniform(4, 3, [vec![1, 2]]), Err(Error::NotUniform { size: 2, r: 3 })));
    }

    #[test]
    fn uniformity() {
        let h = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        assert!(h.is_r_uniform(3));
        let h = Hypergraph::new(3, [vec![1, 2], vec![1, 2, 3]]).unwrap();
        assert!(!h.is_r_uniform(3));
        let h = Hypergraph::edgeless(4).unwrap();
        assert!(h.is_r_uniform(5));
    }

    #[test]
    fn independence() {
        let h = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        assert!(h.is_independent_set(&[1, 2]).unwrap());
        assert!(!h.is_independent_set(&[1, 2, 3]).unwrap());
        let e = Hypergraph::edgeless(3).unwrap();
        for s in 0..8 {
            assert!(e.is_independent(s));
        }
    }

    #[test]
    fn superset_extension_cases() {
        let h = Hypergraph::new(3, [vec![1, 2]]).unwrap();
        let x = h.superset_extension().unwrap();
        assert_eq!(x.edge_lists(), vec![vec![1, 2], vec![1, 2, 3]]);

        assert!(Hypergraph::edgeless(3).unwrap().superset_extension().is_none());
        let tri = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        assert!(tri.superset_extension().is_none());

        // {1,2} with {1,2,3} already present: next candidate is {1,2,4}.
        let h = Hypergraph::new(4, [vec![1, 2], vec![1, 2, 3]]).unwrap();
        let x = h.superset_extension().unwrap();
        assert!(x.contains_edge(vertex_mask(4, [1, 2, 4]).unwrap()));
        assert_eq!(x.edge_count(), 3);
    }

    #[test]
    fn sperner() {
        assert!(Hypergraph::new(4, [vec![1, 2], vec![2, 3, 4]]).unwrap().is_sperner());
        assert!(!Hypergraph::new(4, [vec![1, 2], vec![1, 2, 4]]).unwrap().is_sperner());
    }

    #[test]
    fn permute_relabels() {
        let h = Hypergraph::new(4, [vec![1, 2], vec![2, 3]]).unwrap();
        let p = h.permute(&[3, 2, 1, 0]).unwrap();
        assert_eq!(p.edge_lists(), vec![vec![2, 3], vec![3, 4]]);
        assert!(h.permute(&[0, 0, 1, 2]).is_err());
    }
}
