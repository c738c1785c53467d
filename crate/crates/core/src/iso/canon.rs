//! Exact canonical labelling by pruned permutation search.
//!
//! A labelling assigns labels `0..n` to the vertices. Labels are handed out in
//! increasing order and the image of the hypergraph is read as its edge masks
//! sorted ascending; the canonical form is the lexicographically smallest such
//! list. Because every mask whose highest bit is `j` sorts after every mask
//! below `2^j`, the part of the list fixed after labels `0..=j` are placed is a
//! prefix of the final list, which is what makes prefix pruning sound.
//!
//! Three prunings, none of which changes the result:
//! * labels are handed out cell by cell, cells being classes of an
//!   isomorphism-invariant vertex key (degree and incident edge sizes), in
//!   increasing key order;
//! * among the vertices eligible for the next label only those producing the
//!   smallest batch of newly completed edges are expanded;
//! * two eligible vertices whose transposition is an automorphism lead to
//!   identical subtrees, so only the first is expanded.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Mask};
use crate::limits::Limits;
use crate::util::digest64;

/// Isomorphism-invariant fingerprint: equal iff the hypergraphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<Mask>,
}

impl CanonicalForm {
    /// Wrap masks already known to be canonical.
    pub(crate) fn from_canonical(n: usize, edges: Vec<Mask>) -> Self {
        CanonicalForm { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical edge masks in ascending numeric order.
    pub fn edges(&self) -> &[Mask] {
        &self.edges
    }

    /// Fixed little-endian byte encoding: `n`, edge count, then each mask.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + 8 * self.edges.len());
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        out.extend_from_slice(&(self.edges.len() as u64).to_le_bytes());
        for m in &self.edges {
            out.extend_from_slice(&m.to_le_bytes());
        }
        out
    }

    /// First 64 bits of SHA-256 over [`CanonicalForm::to_bytes`].
    pub fn digest(&self) -> u64 {
        digest64(&self.to_bytes())
    }

    /// The canonical representative itself.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_masks_with_min(self.n, self.edges.iter().copied(), 1)
            .expect("canonical masks come from a valid hypergraph")
    }
}

pub fn canonical_form(h: &Hypergraph, limits: &Limits) -> Result<CanonicalForm> {
    check_size(h.n(), limits)?;
    let mut search = CanonSearch::new(h.n(), h.edges());
    search.run_full();
    Ok(CanonicalForm { n: h.n(), edges: search.best.expect("search always reaches a leaf") })
}

/// A labelling (`perm[v]` = label of 0-based vertex `v`) that realises the
/// canonical form.
pub fn canonical_labeling(h: &Hypergraph, limits: &Limits) -> Result<Vec<usize>> {
    check_size(h.n(), limits)?;
    let mut search = CanonSearch::new(h.n(), h.edges());
    search.run_full();
    Ok(search.best_labels)
}

fn check_size(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.canon_max_vertices {
        return Err(Error::Feasibility {
            guard: "canon_max_vertices",
            detail: format!("exact canonical search limited to {} vertices, got {n}", limits.canon_max_vertices),
        });
    }
    Ok(())
}

/// True iff the labelled hypergraph with ascending masks `sorted` is its own
/// canonical form.
pub(crate) fn is_canonical_masks(n: usize, sorted: &[Mask]) -> bool {
    debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
    let mut search = CanonSearch::new(n, sorted);
    // The identity labelling must hand out labels in cell order.
    if !search.identity_respects_cells() {
        return false;
    }
    search.best = Some(sorted.to_vec());
    search.stop_on_improvement = true;
    search.run();
    !search.improved
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Better,
    Equal,
}

pub(crate) struct CanonSearch {
    n: usize,
    edges: Vec<Mask>,
    incident: Vec<Vec<Mask>>,
    keys: Vec<u64>,
    /// Cell index of each label position.
    cell_of_label: Vec<usize>,
    /// Vertices of each cell.
    cells: Vec<Vec<usize>>,
    twin_cache: Vec<Option<bool>>,
    label_of: Vec<usize>,
    cur: Vec<Mask>,
    cur_labels: Vec<usize>,
    best: Option<Vec<Mask>>,
    best_labels: Vec<usize>,
    generation: u64,
    stop_on_improvement: bool,
    improved: bool,
}

const UNASSIGNED: usize = usize::MAX;

impl CanonSearch {
    pub(crate) fn new(n: usize, edges: &[Mask]) -> Self {
        let mut incident = vec![Vec::new(); n];
        for &e in edges {
            let mut m = e;
            while m != 0 {
                incident[m.trailing_zeros() as usize].push(e);
                m &= m - 1;
            }
        }
        let keys: Vec<u64> = incident
            .iter()
            .map(|inc| {
                let deg = inc.len() as u64;
                let s1: u64 = inc.iter().map(|e| e.count_ones() as u64).sum();
                let s2: u64 = inc.iter().map(|e| (e.count_ones() as u64).pow(2)).sum();
                (deg << 48) | ((s1 & 0xff_ffff) << 24) | (s2 & 0xff_ffff)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (keys[v], v));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut cell_of_label = Vec::with_capacity(n);
        let mut last_key = None;
        for &v in &order {
            if last_key != Some(keys[v]) {
                cells.push(Vec::new());
                last_key = Some(keys[v]);
            }
            cells.last_mut().expect("just pushed").push(v);
            cell_of_label.push(cells.len() - 1);
        }
        CanonSearch {
            n,
            edges: edges.to_vec(),
            incident,
            keys,
            cell_of_label,
            cells,
            twin_cache: vec![None; n * n],
            label_of: vec![UNASSIGNED; n],
            cur: Vec::with_capacity(edges.len()),
            cur_labels: vec![0; n],
            best: None,
            best_labels: Vec::new(),
            generation: 0,
            stop_on_improvement: false,
            improved: false,
        }
    }

    fn identity_respects_cells(&self) -> bool {
        self.keys.windows(2).all(|w| w[0] <= w[1])
    }

    fn run_full(&mut self) {
        self.run();
    }

    fn run(&mut self) {
        let rel = if self.best.is_some() { Rel::Equal } else { Rel::Better };
        self.descend(0, 0, rel);
    }

    fn is_twin(&mut self, u: usize, v: usize) -> bool {
        let idx = u * self.n + v;
        if let Some(t) = self.twin_cache[idx] {
            return t;
        }
        let (bu, bv) = (1u64 << u, 1u64 << v);
        let mut a: Vec<Mask> = self.edges.iter().filter(|&&e| e & bu != 0 && e & bv == 0).map(|&e| e ^ bu).collect();
        let mut b: Vec<Mask> = self.edges.iter().filter(|&&e| e & bv != 0 && e & bu == 0).map(|&e| e ^ bv).collect();
        a.sort_unstable();
        b.sort_unstable();
        let t = a == b;
        self.twin_cache[idx] = Some(t);
        self.twin_cache[v * self.n + u] = Some(t);
        t
    }

    /// Image masks of the edges completed when vertex `v` receives label `j`.
    fn batch(&self, v: usize, assigned: Mask, j: usize) -> Vec<Mask> {
        let with_v = assigned | (1 << v);
        let mut out: Vec<Mask> = self.incident[v]
            .iter()
            .filter(|&&e| e & !with_v == 0)
            .map(|&e| {
                let mut img: Mask = 1 << j;
                let mut m = e & !(1u64 << v);
                while m != 0 {
                    img |= 1 << self.label_of[m.trailing_zeros() as usize];
                    m &= m - 1;
                }
                img
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Slice of the best list whose highest bit is `j`.
    fn best_segment(&self, j: usize) -> &[Mask] {
        let best = self.best.as_deref().unwrap_or(&[]);
        let lo = best.partition_point(|&m| m < (1u64 << j));
        let hi = best.partition_point(|&m| m < (1u64 << j) << 1);
        &best[lo..hi]
    }

    fn descend(&mut self, j: usize, assigned: Mask, entry_rel: Rel) {
        if self.improved && self.stop_on_improvement {
            return;
        }
        if j == self.n {
            if entry_rel == Rel::Better || self.best.is_none() {
                if self.stop_on_improvement {
                    self.improved = true;
                    return;
                }
                self.best = Some(self.cur.clone());
                self.best_labels = self.cur_labels.clone();
                self.generation += 1;
            }
            return;
        }
        let cell = self.cell_of_label[j];
        let candidates: Vec<usize> =
            self.cells[cell].iter().copied().filter(|&v| self.label_of[v] == UNASSIGNED).collect();

        // Smallest batch among candidates.
        let mut best_batch: Option<Vec<Mask>> = None;
        let mut chosen: Vec<usize> = Vec::new();
        for &v in &candidates {
            let b = self.batch(v, assigned, j);
            match best_batch.as_ref().map(|bb| cmp_batch(&b, bb)) {
                None | Some(Ordering::Less) => {
                    best_batch = Some(b);
                    chosen.clear();
                    chosen.push(v);
                }
                Some(Ordering::Equal) => chosen.push(v),
                Some(Ordering::Greater) => {}
            }
        }
        let batch = best_batch.expect("every cell has an unassigned vertex for its labels");

        let gen_at_entry = self.generation;
        let mut expanded: Vec<usize> = Vec::new();
        for &v in &chosen {
            if expanded.iter().any(|&u| self.is_twin(u, v)) {
                continue;
            }
            let node_rel = if self.generation != gen_at_entry { Rel::Equal } else { entry_rel };
            let child_rel = match node_rel {
                Rel::Better => Rel::Better,
                Rel::Equal => match cmp_batch(&batch, self.best_segment(j)) {
                    Ordering::Less => Rel::Better,
                    Ordering::Equal => Rel::Equal,
                    Ordering::Greater => return,
                },
            };
            if child_rel == Rel::Better && self.stop_on_improvement {
                self.improved = true;
                return;
            }
            expanded.push(v);
            self.label_of[v] = j;
            self.cur_labels[v] = j;
            let len = self.cur.len();
            self.cur.extend_from_slice(&batch);
            self.descend(j + 1, assigned | (1 << v), child_rel);
            self.cur.truncate(len);
            self.label_of[v] = UNASSIGNED;
            if self.improved && self.stop_on_improvement {
                return;
            }
        }
    }
}

/// Compare two ascending batches: the first differing entry decides, smaller
/// wins; a proper prefix loses, since its next entry lies in a later segment.
fn cmp_batch(a: &[Mask], b: &[Mask]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    b.len().cmp(&a.len())
}
