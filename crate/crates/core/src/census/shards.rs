//! Partition of a labeled search space into deterministic shards.
//!
//! A labeled candidate is a set of indices into the eligible-edge list. Shard
//! `(m, lead)` holds the candidates with `m` edges whose smallest index is
//! `lead`; the empty candidate is the single shard `(0, None)`.

use crate::error::{Error, Result};
use crate::hypergraph::{edge_order, Mask};
use crate::util::{binomial_u64, k_subsets, next_same_popcount};

use super::Mode;

/// Eligible edges for `mode` on `n` vertices, in canonical `(size, mask)` order.
pub fn eligible_edges(n: usize, mode: Mode) -> Vec<Mask> {
    match mode {
        Mode::Uniform(r) => k_subsets(n, r),
        Mode::Sperner | Mode::All => {
            let mut v: Vec<Mask> = (1..(1u64 << n)).filter(|m| m.count_ones() >= 2).collect();
            v.sort_by(edge_order);
            v
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Shard {
    pub id: usize,
    pub edge_count: usize,
    pub lead: Option<usize>,
}

impl Shard {
    /// Labeled candidates in this shard.
    pub fn size(&self, eligible: usize) -> u64 {
        match self.lead {
            None => 1,
            Some(lead) => binomial_u64((eligible - lead - 1) as u64, (self.edge_count - 1) as u64).unwrap_or(u64::MAX),
        }
    }

    /// Visit every candidate of the shard as a list of eligible-edge indices.
    pub fn for_each(&self, eligible: usize, mut f: impl FnMut(&[usize])) {
        let Some(lead) = self.lead else {
            f(&[]);
            return;
        };
        let width = eligible - lead - 1;
        let k = self.edge_count - 1;
        let mut buf = Vec::with_capacity(self.edge_count);
        if k == 0 {
            buf.push(lead);
            f(&buf);
            return;
        }
        if k > width {
            return;
        }
        let limit: u64 = if width == 64 { u64::MAX } else { 1u64 << width };
        let mut x: u64 = (1u64 << k) - 1;
        while x < limit {
            buf.clear();
            buf.push(lead);
            let mut m = x;
            while m != 0 {
                buf.push(lead + 1 + m.trailing_zeros() as usize);
                m &= m - 1;
            }
            f(&buf);
            let next = next_same_popcount(x);
            if next <= x {
                break;
            }
            x = next;
        }
    }
}

/// Shards covering the candidates with `edge_count` edges, or all edge counts.
pub fn shards(eligible: usize, edge_count: Option<usize>) -> Vec<Shard> {
    let counts: Vec<usize> = match edge_count {
        Some(m) => vec![m],
        None => (0..=eligible).collect(),
    };
    let mut out = Vec::new();
    for m in counts {
        if m > eligible {
            continue;
        }
        if m == 0 {
            out.push(Shard { id: out.len(), edge_count: 0, lead: None });
            continue;
        }
        for lead in 0..=eligible - m {
            out.push(Shard { id: out.len(), edge_count: m, lead: Some(lead) });
        }
    }
    out
}

/// Number of labeled candidates, guarded against overflow.
pub fn labeled_total(eligible: usize, edge_count: Option<usize>) -> Result<u64> {
    let total = match edge_count {
        None => {
            if eligible >= 64 {
                None
            } else {
                Some(1u64 << eligible)
            }
        }
        Some(m) => binomial_u64(eligible as u64, m as u64),
    };
    total.ok_or_else(|| Error::Feasibility {
        guard: "labeled_count",
        detail: format!("labeled search space over {eligible} eligible edges overflows u64"),
    })
}
