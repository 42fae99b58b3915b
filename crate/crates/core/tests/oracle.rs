use proptest::prelude::*;

use circulant_t2::iso::{classify, VerdictKind};
use circulant_t2::oracle::{
    exhaustive_type2_sweep, isomorphic_bruteforce, verify_bijection_is_isomorphism, SearchOutcome,
    VertexBijection,
};
use circulant_t2::{CirculantGraph, ThetaMap};

fn c(n: u64, jumps: &[u64]) -> CirculantGraph {
    CirculantGraph::from_jumps(n, jumps).unwrap()
}

#[test]
fn order_16_instances() {
    let s = c(16, &[2, 3, 5]);
    // all-odd jumps make C_16(1,3,7) bipartite, unlike C_16(2,3,5)
    assert_eq!(
        isomorphic_bruteforce(&c(16, &[1, 3, 7]), &s, 10_000_000),
        SearchOutcome::NotIsomorphic
    );
    assert!(matches!(
        isomorphic_bruteforce(&c(16, &[1, 2, 7]), &s, 10_000_000),
        SearchOutcome::Isomorphic(_)
    ));
}

#[test]
fn sweep_agrees_with_classify_on_order_27() {
    let g = c(27, &[1, 3, 8, 10]);
    for (t, jumps) in exhaustive_type2_sweep(&g, 3).unwrap().type2_rows() {
        let h = CirculantGraph::from_jumps(27, &jumps).unwrap();
        let verdict = classify(&g, &h, Some(3)).unwrap();
        assert!(matches!(verdict.kind, VerdictKind::Type2 { r: 3, t: t0 } if t0 <= t));
    }
}

fn small_pair() -> impl Strategy<Value = (CirculantGraph, CirculantGraph)> {
    (6u64..=20).prop_flat_map(|n| {
        let half = n / 2;
        (1usize..=3.min(half as usize)).prop_flat_map(move |k| {
            let set = prop::collection::btree_set(1..=half, k);
            (set.clone(), set).prop_map(move |(a, b)| {
                let a: Vec<u64> = a.into_iter().collect();
                let b: Vec<u64> = b.into_iter().collect();
                (c(n, &a), c(n, &b))
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Every related verdict is backed by an explicit isomorphism, and the
    /// backtracking search confirms it independently.
    #[test]
    fn related_verdicts_are_isomorphisms((g, h) in small_pair()) {
        let verdict = classify(&g, &h, None).unwrap();
        let f = match verdict.kind {
            VerdictKind::Identical => Some(VertexBijection::identity(g.n())),
            VerdictKind::Adams { a } => Some(VertexBijection::multiplier(g.n(), a).unwrap()),
            VerdictKind::Type2 { r, t } => {
                Some(VertexBijection::from_theta(&ThetaMap::new(g.n(), r, t).unwrap()).unwrap())
            }
            VerdictKind::NotRelated => None,
        };
        if let Some(f) = f {
            prop_assert!(verify_bijection_is_isomorphism(&f, &g, &h));
            let found = isomorphic_bruteforce(&g, &h, 5_000_000);
            prop_assert!(matches!(found, SearchOutcome::Isomorphic(_)), "{:?}", found);
        }
    }

    #[test]
    fn search_witnesses_check_out((g, h) in small_pair()) {
        if let SearchOutcome::Isomorphic(f) = isomorphic_bruteforce(&g, &h, 5_000_000) {
            prop_assert!(verify_bijection_is_isomorphism(&f, &g, &h));
        }
    }
}
