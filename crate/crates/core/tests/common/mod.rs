//! Fixtures and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use hgpoly::hypergraph::Mask;
use hgpoly::{generate_family, FamilySpec, Hypergraph};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Named families plus seeded random hypergraphs, all with `n <= 6`.
pub fn fixtures() -> Vec<(String, Hypergraph)> {
    let mut out = Vec::new();
    let specs = [
        FamilySpec::Empty { n: 1 },
        FamilySpec::Empty { n: 3 },
        FamilySpec::Empty { n: 6 },
        FamilySpec::CompleteR { n: 4, r: 2 },
        FamilySpec::CompleteR { n: 4, r: 3 },
        FamilySpec::CompleteR { n: 5, r: 3 },
        FamilySpec::CompleteR { n: 6, r: 2 },
        FamilySpec::CompleteR { n: 6, r: 4 },
        FamilySpec::Hyperpath { m: 1, r: 3 },
        FamilySpec::Hyperpath { m: 2, r: 3 },
        FamilySpec::Hyperpath { m: 5, r: 2 },
        FamilySpec::Hypercycle { m: 3, r: 2 },
        FamilySpec::Hypercycle { m: 3, r: 3 },
        FamilySpec::Hypercycle { m: 6, r: 2 },
        FamilySpec::Sunflower { n: 4, p: 1, r: 3 },
        FamilySpec::Sunflower { n: 5, p: 2, r: 3 },
        FamilySpec::Sunflower { n: 6, p: 1, r: 4 },
        FamilySpec::Sunflower { n: 6, p: 1, r: 3 },
    ];
    for s in specs {
        out.push((s.name(), generate_family(&s).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6870_6f6c);
    while out.len() < 100 {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(0..=8);
        let uniform = rng.gen_bool(0.4).then(|| rng.gen_range(2..=n));
        let mut masks = Vec::new();
        for _ in 0..m {
            let size = uniform.unwrap_or_else(|| rng.gen_range(2..=n));
            let mut mask: Mask = 0;
            while mask.count_ones() < size as u32 {
                mask |= 1 << rng.gen_range(0..n);
            }
            masks.push(mask);
        }
        let h = Hypergraph::from_masks(n, masks).unwrap();
        out.push((format!("random#{} {:?}", out.len(), h), h));
    }
    out
}

/// Proper colorings with colors `0..k`, by trying every assignment.
pub fn brute_colorings(h: &Hypergraph, k: u64) -> u64 {
    let n = h.n();
    let edges = h.edge_lists();
    let mut colors = vec![0u64; n];
    let mut count = 0;
    if k == 0 {
        return 0;
    }
    loop {
        let proper = edges.iter().all(|e| e.iter().any(|&v| colors[v - 1] != colors[e[0] - 1]));
        if proper {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Count of independent sets by size, including the empty set.
pub fn brute_independent(h: &Hypergraph) -> Vec<BigInt> {
    let n = h.n();
    let edges = h.edge_lists();
    let mut counts = vec![0i64; n + 1];
    for s in 0u64..(1 << n) {
        let contains = |e: &Vec<usize>| e.iter().all(|&v| s >> (v - 1) & 1 == 1);
        if !edges.iter().any(contains) {
            counts[s.count_ones() as usize] += 1;
        }
    }
    trim(counts)
}

/// Count of `i`-matchings for `i >= 1` (index 0 is zero).
pub fn brute_matchings(h: &Hypergraph) -> Vec<BigInt> {
    let edges = h.edge_lists();
    let m = edges.len();
    let mut counts = vec![0i64; m + 1];
    for s in 1u64..(1 << m) {
        let mut used = vec![false; h.n() + 1];
        let mut ok = true;
        'outer: for (i, e) in edges.iter().enumerate() {
            if s >> i & 1 == 0 {
                continue;
            }
            for &v in e {
                if used[v] {
                    ok = false;
                    break 'outer;
                }
                used[v] = true;
            }
        }
        if ok {
            counts[s.count_ones() as usize] += 1;
        }
    }
    trim(counts)
}

fn trim(mut v: Vec<i64>) -> Vec<BigInt> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v.into_iter().map(BigInt::from).collect()
}
