use girthgen_core::canon::{automorphisms, canonical_form, canonical_form_and_group};
use girthgen_core::CubicGraph;
use girthgen_oracle as oracle;
use proptest::prelude::*;
use std::sync::OnceLock;

fn graph(adj: &oracle::Adjacency) -> CubicGraph {
    CubicGraph::from_adjacency(adj).unwrap()
}

#[test]
fn oracle_class_counts() {
    let counts: Vec<usize> = [4, 6, 8, 10]
        .iter()
        .map(|&n| oracle::connected_cubic_graphs(n).len())
        .collect();
    assert_eq!(counts, [1, 2, 5, 19]);
}

#[test]
fn certificates_separate_classes() {
    for n in [4, 6, 8, 10] {
        let graphs = oracle::connected_cubic_graphs(n);
        let mut certs: Vec<Vec<u8>> = graphs
            .iter()
            .map(|a| canonical_form(&graph(a), None).certificate)
            .collect();
        certs.sort();
        certs.dedup();
        assert_eq!(certs.len(), graphs.len(), "n = {n}");
    }
}

#[test]
fn group_orders_match_brute_force() {
    for n in [4, 6, 8, 10] {
        for a in oracle::connected_cubic_graphs(n) {
            let g = graph(&a);
            let grp = automorphisms(&g);
            assert_eq!(grp.order, oracle::automorphism_count(&a), "{a:?}");
            for p in &grp.generators {
                assert!(p.is_automorphism_of(&g));
            }
        }
    }
}

fn ten() -> &'static [oracle::Adjacency] {
    static TEN: OnceLock<Vec<oracle::Adjacency>> = OnceLock::new();
    TEN.get_or_init(|| oracle::connected_cubic_graphs(10))
}

fn relabel_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn certificate_invariant_under_relabelling(idx in 0usize..19, perm in relabel_strategy(10)) {
        let g = graph(&ten()[idx]);
        let h = g.relabel(&perm);
        let (cg, gg) = canonical_form_and_group(&g, None);
        let (ch, gh) = canonical_form_and_group(&h, None);
        prop_assert_eq!(cg.certificate, ch.certificate);
        prop_assert_eq!(gg.order, gh.order);
    }
}
