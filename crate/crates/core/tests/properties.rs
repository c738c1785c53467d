use hgpoly::census::{census, enumerate_nonisomorphic, CensusConfig, Mode};
use hgpoly::format::{parse_json, parse_text, to_json, to_text};
use hgpoly::hypergraph::Mask;
use hgpoly::iso::{
    are_isomorphic, canonical_form, count_nonisomorphic_general, count_nonisomorphic_runiform, EdgeUniverse,
};
use hgpoly::poly::{compute, PolyId};
use hgpoly::{GraphPolynomial, Hypergraph, Limits};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(|n| {
        let full = (1u64 << n) - 1;
        prop::collection::vec(1..=full, 0..8).prop_map(move |raw| {
            let masks: Vec<Mask> = raw.into_iter().filter(|m| m.count_ones() >= 2).collect();
            Hypergraph::from_masks(n, masks).unwrap()
        })
    })
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (Hypergraph, Vec<usize>)> {
    hypergraph(max_n).prop_flat_map(|h| {
        let n = h.n();
        (Just(h), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn invariants_survive_relabeling((h, perm) in with_perm(7)) {
        let l = Limits::default();
        let g = h.permute(&perm).unwrap();
        for id in PolyId::ALL {
            prop_assert_eq!(compute(id, &h, &l).unwrap(), compute(id, &g, &l).unwrap());
        }
        prop_assert_eq!(canonical_form(&h, &l).unwrap(), canonical_form(&g, &l).unwrap());
        prop_assert!(are_isomorphic(&h, &g, &l).unwrap());
    }

    #[test]
    fn basis_changes_roundtrip(h in hypergraph(7)) {
        let l = Limits::default();
        let chi = compute(PolyId::Chi, &h, &l).unwrap();
        let back = chi.to_monomial().to_falling_factorial();
        prop_assert_eq!(back.coeffs(), chi.coeffs());
        let json = chi.to_json();
        let parsed = GraphPolynomial::from_json(&json).unwrap();
        prop_assert_eq!(parsed.coeffs(), chi.coeffs());
    }

    #[test]
    fn formats_roundtrip(h in hypergraph(7)) {
        prop_assert_eq!(parse_text(&to_text(&h)).unwrap(), h.clone());
        prop_assert_eq!(parse_json(&to_json(&h)).unwrap(), h);
    }

    #[test]
    fn superset_extension_is_a_mate(h in hypergraph(6)) {
        let l = Limits::default();
        if let Some(ext) = h.superset_extension() {
            prop_assert_eq!(compute(PolyId::Chi, &h, &l).unwrap(), compute(PolyId::Chi, &ext, &l).unwrap());
            prop_assert_eq!(compute(PolyId::Ind, &h, &l).unwrap(), compute(PolyId::Ind, &ext, &l).unwrap());
            prop_assert!(!are_isomorphic(&h, &ext, &l).unwrap());
        }
    }

    #[test]
    fn uniform_chi_determines_edge_count(n in 3usize..=7, r in 2usize..=3, raw in prop::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        let subsets = hgpoly::util::k_subsets(n, r);
        let masks: Vec<Mask> = raw.iter().map(|i| subsets[i.index(subsets.len())]).collect();
        let h = Hypergraph::from_masks(n, masks).unwrap();
        let mono = compute(PolyId::Chi, &h, &Limits::default()).unwrap().to_monomial();
        let c = mono.coeffs().get(n - r + 1).cloned().unwrap_or_default();
        prop_assert_eq!(c, -BigInt::from(h.edge_count()));
    }
}

#[test]
fn enumeration_agrees_with_burnside() {
    let l = Limits::default();
    for n in 1..=6 {
        let e = enumerate_nonisomorphic(n, Mode::Uniform(3), None, &l, 1).unwrap();
        assert_eq!(BigUint::from(e.len()), count_nonisomorphic_runiform(n, 3).unwrap(), "n={n}");
    }
    for n in 1..=6 {
        let e = enumerate_nonisomorphic(n, Mode::Uniform(2), None, &l, 1).unwrap();
        assert_eq!(BigUint::from(e.len()), count_nonisomorphic_runiform(n, 2).unwrap(), "graphs n={n}");
    }
    for n in 1..=4 {
        let e = enumerate_nonisomorphic(n, Mode::All, None, &l, 1).unwrap();
        let b = count_nonisomorphic_general(n, EdgeUniverse::AtLeastTwo).unwrap();
        assert_eq!(BigUint::from(e.len()), b, "all n={n}");
    }
}

#[test]
fn extendable_edges_are_never_unique_in_mode_all() {
    let l = Limits::default();
    for n in 1..=4 {
        let classes = enumerate_nonisomorphic(n, Mode::All, None, &l, 1).unwrap();
        for h in &classes {
            let Some(ext) = h.superset_extension() else { continue };
            for id in [PolyId::Chi, PolyId::Ind] {
                assert_eq!(compute(id, h, &l).unwrap(), compute(id, &ext, &l).unwrap(), "{h:?}");
            }
            assert!(!are_isomorphic(h, &ext, &l).unwrap());
        }
    }
}

#[test]
fn enumeration_is_ordered_and_canonical() {
    let l = Limits::default();
    let e = enumerate_nonisomorphic(5, Mode::Uniform(3), None, &l, 2).unwrap();
    for w in e.windows(2) {
        assert!(w[0].edge_count() <= w[1].edge_count());
    }
    for h in &e {
        assert_eq!(&canonical_form(h, &l).unwrap().to_hypergraph(), h);
    }
}

#[test]
fn worker_count_does_not_change_reports() {
    let l = Limits::default();
    for (n, mode) in [(5, Mode::Uniform(3)), (4, Mode::All), (4, Mode::Sperner), (5, Mode::Uniform(2))] {
        for poly in PolyId::ALL {
            let mut c = CensusConfig::new(n, mode, poly);
            let one = census(&c, &l).unwrap();
            c.jobs = 3;
            let three = census(&c, &l).unwrap();
            assert_eq!(one.to_json(), three.to_json());
            assert_eq!(one.to_csv(), three.to_csv());
        }
    }
}

#[test]
fn checkpoint_resume_reproduces_report() {
    let l = Limits::default();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.ckpt");
    let mut c = CensusConfig::new(6, Mode::Uniform(3), PolyId::Chi);
    let plain = census(&c, &l).unwrap();

    c.checkpoint = Some(path.clone());
    let first = census(&c, &l).unwrap();
    assert_eq!(first, plain);

    // Cut the file in the middle of a record, as an interrupted run would.
    let len = std::fs::metadata(&path).unwrap().len();
    let f = std::fs::OpenOptions::new().write(true).open(&path).unwrap();
    f.set_len(len / 2 + 5).unwrap();
    drop(f);
    let resumed = census(&c, &l).unwrap();
    assert_eq!(resumed.to_json(), plain.to_json());

    // A fully recorded checkpoint needs no work at all.
    let again = census(&c, &l).unwrap();
    assert_eq!(again.to_json(), plain.to_json());

    let other = CensusConfig { poly: PolyId::Ind, ..c.clone() };
    assert!(census(&other, &l).is_err());
}
