//! Invariants of the mate search, the closed-form catalog and the reports.

use dqspec_core::enumerate::{enumerate, EnumerationFilter};
use dqspec_core::{charpoly, is_isomorphic, parse_graph, Graph, Limits, MatrixKind};
use dqspec_verify::closed_forms::{remark_dr1_check, verify_closed_form};
use dqspec_verify::registry::{Suite, SuiteOptions};
use dqspec_verify::theorems::verify_join_theorem;
use dqspec_verify::{
    is_dls_desk, verify_lemma, ClosedFormId, LemmaCatalog, SearchSpace, VerifyError,
};
use proptest::prelude::*;

const Q: MatrixKind = MatrixKind::SignlessLaplacian;
const L: MatrixKind = MatrixKind::Laplacian;

fn g(s: &str) -> Graph {
    parse_graph(s, &Limits::default()).unwrap()
}

fn random_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 0..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mates_share_the_charpoly_and_are_pairwise_distinct(n in 2usize..=7, mask in any::<u64>(), adj in any::<bool>()) {
        let space = SearchSpace::new(Limits::default());
        let target = random_graph(n, mask);
        let kind = if adj { MatrixKind::Adjacency } else { Q };
        let found = space.mates(&target, kind).unwrap();
        let p = charpoly(&target, kind);
        prop_assert_eq!(&found.charpoly, &p);
        prop_assert!(found.exhaustive);
        for (i, h) in found.mate_graphs.iter().enumerate() {
            prop_assert_eq!(charpoly(h, kind), p.clone());
            prop_assert!(!is_isomorphic(h, &target));
            for other in &found.mate_graphs[i + 1..] {
                prop_assert!(!is_isomorphic(h, other));
            }
        }
    }
}

#[test]
fn dls_is_closed_under_complement_up_to_order_7() {
    let space = SearchSpace::new(Limits::default());
    for n in 1..=7 {
        for h in enumerate(&EnumerationFilter::new(n), space.limits()).unwrap() {
            let a = is_dls_desk(&space, &h).unwrap().passed();
            let b = is_dls_desk(&space, &h.complement()).unwrap().passed();
            assert_eq!(a, b, "order {n}: {}", dqspec_core::to_graph6(&h));
        }
    }
}

#[test]
fn padding_with_isolated_vertices_keeps_the_k3_mate() {
    let space = SearchSpace::new(Limits::default());
    // r = 0 has no mate: K_{1,3} + K2 needs one more vertex
    assert!(space.mates(&g("K3 + K2"), Q).unwrap().is_empty());
    for r in 1..=3 {
        let found = space.mates(&g(&format!("K3 + K2 + {r}*K1")), Q).unwrap();
        assert_eq!(found.mate_graphs.len(), 1, "r = {r}");
        let want = g(&format!("K{{1,3}} + K2 + {}*K1", r - 1).replace(" + 0*K1", ""));
        assert!(is_isomorphic(&found.mate_graphs[0], &want), "r = {r}");
        // the padded pair is again cospectral
        let a = g(&format!("K3 + K2 + {}*K1", r + 1));
        let b = found.mate_graphs[0].disjoint_union(&g("K1")).unwrap();
        assert_eq!(charpoly(&a, Q), charpoly(&b, Q));
    }
}

#[test]
fn spec_examples_for_determination() {
    let space = SearchSpace::new(Limits::default());
    assert!(space.determined_by(&g("K4 + K2 + K1"), Q).unwrap().passed());
    assert!(space
        .determined_by(&g("G(2,2,2) + S2 + K1"), L)
        .unwrap()
        .passed());
    let k3 = space.determined_by(&g("K3 + K2 + K1"), Q).unwrap();
    assert!(k3.failed());
    assert!(is_isomorphic(
        &g(&format!("g6:{}", k3.witnesses[0].graph6)),
        &g("K{1,3} + K2")
    ));
    let join = space.mates(&g("join(K4-e, 3*K1)"), Q).unwrap();
    assert_eq!(join.mate_graphs.len(), 1);
    assert!(is_isomorphic(
        &join.mate_graphs[0],
        &g("complement(K{1,3} + K2 + K1)")
    ));
}

#[test]
fn join_and_complement_closed_forms_coincide_but_graphs_differ() {
    let limits = Limits::default();
    for n in 7..=12 {
        let a = ClosedFormId::JoinCliqueMinusEdge { n, alpha: 3 };
        let b = ClosedFormId::ComplementStarK2 { n };
        assert_eq!(
            a.predict().unwrap().charpoly(),
            b.predict().unwrap().charpoly()
        );
        let (ga, gb) = (a.graph(&limits).unwrap(), b.graph(&limits).unwrap());
        assert_eq!(charpoly(&ga, Q), charpoly(&gb, Q));
        assert_ne!(ga.degree_sequence(), gb.degree_sequence());
        assert!(verify_closed_form(&a, &limits).unwrap().passed());
        assert!(verify_closed_form(&b, &limits).unwrap().passed());
    }
}

#[test]
fn double_star_root_intervals() {
    let limits = Limits::default();
    for (p, q) in [(2, 2), (3, 2), (5, 1), (4, 4), (5, 3)] {
        let r = remark_dr1_check(p, q, &limits).unwrap();
        assert!(r.passed(), "({p},{q}) {r:?}");
    }
    assert!(remark_dr1_check(1, 2, &limits).is_err());
}

#[test]
fn closed_form_parameters_are_validated() {
    let limits = Limits::default();
    for id in [
        ClosedFormId::DoubleStarQ { p: 0, q: 1 },
        ClosedFormId::JoinCliqueMinusEdge { n: 5, alpha: 3 },
        ClosedFormId::ComplementStarK2 { n: 5 },
        ClosedFormId::ComplementK24MinusE { n: 4 },
    ] {
        assert!(id.predict().is_err(), "{id}");
    }
    let big = ClosedFormId::JoinCliqueMinusEdge { n: 13, alpha: 1 };
    assert!(matches!(
        verify_closed_form(&big, &limits),
        Err(VerifyError::Core(dqspec_core::Error::CapExceeded { .. }))
    ));
    assert_eq!(
        "doublestarq(3,2)".parse::<ClosedFormId>().unwrap(),
        ClosedFormId::DoubleStarQ { p: 3, q: 2 }
    );
}

#[test]
fn lemma_sweeps_respect_caps_and_names() {
    let limits = Limits::default();
    let catalog = LemmaCatalog::standard();
    let siam = catalog.get("SIAM").unwrap();
    assert!(matches!(
        verify_lemma(siam, 10, &limits),
        Err(VerifyError::Core(dqspec_core::Error::CapExceeded { .. }))
    ));
    assert!(matches!(
        catalog.get("nope"),
        Err(VerifyError::UnknownClaim(_))
    ));
    for (id, order) in [("siam", 9), ("d4", 8), ("jlh", 6)] {
        let r = verify_lemma(catalog.get(id).unwrap(), order, &limits).unwrap();
        assert!(r.passed(), "{id}: {:?}", r.witnesses);
        assert!(r.checked > 0);
    }
}

#[test]
fn join_theorem_requires_order_within_spectral_cap() {
    let space = SearchSpace::new(Limits::default());
    assert!(verify_join_theorem(&space, 10).is_err());
}

#[test]
fn suite_output_is_reproducible_modulo_timing() {
    let opts = SuiteOptions { max_order: Some(6) };
    let run = || {
        let space = SearchSpace::new(Limits::default());
        Suite::standard()
            .run_all(&space, &opts)
            .unwrap()
            .iter()
            .map(|r| r.untimed_json())
            .collect::<Vec<_>>()
    };
    let (a, b) = (run(), run());
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r["verdict"] == "pass"));
}
