//! The tripod and H pipelines against filtering the complete base levels.

use std::collections::BTreeSet;

use girthgen_core::base::GraphStore;
use girthgen_core::canon::certificate;
use girthgen_core::graph::CubicGraph;
use girthgen_core::metrics::girth;
use girthgen_core::pipeline::{collect, Algorithm, Class, Plan, Task};
use girthgen_oracle as oracle;
use proptest::prelude::*;

fn certs(graphs: &[CubicGraph]) -> BTreeSet<Vec<u8>> {
    graphs.iter().map(certificate).collect()
}

fn generated(store: &mut GraphStore, n: usize, k: usize, alg: Algorithm) -> Vec<Vec<u8>> {
    let plan = Plan::new(n, k, alg).unwrap();
    let base = store.generate(plan.base_order, plan.base_girth).unwrap();
    let task = Task::new(plan, Class::All).unwrap();
    let (out, _) = collect(&task, &base);
    let mut c: Vec<Vec<u8>> = out.iter().map(certificate).collect();
    c.sort();
    c
}

fn filtered(store: &mut GraphStore, n: usize, k: usize) -> Vec<Vec<u8>> {
    let all = store.full_level(n).unwrap();
    let keep: Vec<_> = all.into_iter().filter(|g| girth(g) >= k).collect();
    certs(&keep).into_iter().collect()
}

fn assert_no_duplicates(c: &[Vec<u8>]) {
    assert!(c.windows(2).all(|w| w[0] != w[1]), "isomorphic duplicates");
}

#[test]
fn girth_five_matches_filter() {
    let mut store = GraphStore::default();
    for n in (10..=18).step_by(2) {
        let got = generated(&mut store, n, 5, Algorithm::Auto);
        assert_no_duplicates(&got);
        assert_eq!(got, filtered(&mut store, n, 5), "n = {n}");
    }
}

#[test]
fn girth_six_matches_filter() {
    let mut store = GraphStore::default();
    for n in (14..=18).step_by(2) {
        let want = filtered(&mut store, n, 6);
        for alg in [Algorithm::Tripod, Algorithm::H] {
            let got = generated(&mut store, n, 6, alg);
            assert_no_duplicates(&got);
            assert_eq!(got, want, "n = {n}, {alg:?}");
        }
    }
}

#[test]
fn girth_seven_algorithms_agree() {
    let mut store = GraphStore::default();
    // the McGee graph is the only one on 24 vertices
    for n in [24, 26] {
        let h = generated(&mut store, n, 7, Algorithm::H);
        assert_no_duplicates(&h);
        let t = generated(&mut store, n, 7, Algorithm::Tripod);
        assert_eq!(h, t, "n = {n}");
        if n == 24 {
            assert_eq!(h.len(), 1);
        }
    }
}

#[test]
fn snark_mode_matches_filter() {
    let mut store = GraphStore::default();
    for n in (10..=18).step_by(2) {
        let plan = Plan::new(n, 5, Algorithm::Auto).unwrap();
        let base = store.generate(plan.base_order, plan.base_girth).unwrap();
        let (out, _) = collect(&Task::new(plan, Class::Snarks).unwrap(), &base);
        let got: Vec<Vec<u8>> = out.iter().map(certificate).collect();
        assert_no_duplicates(&{
            let mut c = got.clone();
            c.sort();
            c
        });
        let want: Vec<CubicGraph> = store
            .full_level(n)
            .unwrap()
            .into_iter()
            .filter(|g| {
                let a = g.adjacency();
                oracle::girth(&a) >= 5
                    && !oracle::edge_colourable(&a, 3)
                    && oracle::cyclic_edge_connectivity(&a).is_none_or(|c| c >= 4)
            })
            .collect();
        assert_eq!(
            got.into_iter().collect::<BTreeSet<_>>(),
            certs(&want),
            "n = {n}"
        );
    }
}

fn relabelled(g: &CubicGraph, seed: u64) -> CubicGraph {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        perm.swap(i, (s >> 33) as usize % (i + 1));
    }
    g.relabel(&perm)
}

fn children(parent: &CubicGraph, k: usize, alg: Algorithm, growth: usize) -> Vec<Vec<u8>> {
    let plan = Plan::new(parent.order() + growth, k, alg).unwrap();
    assert_eq!(plan.base_order, parent.order());
    let (out, _) = collect(
        &Task::new(plan, Class::All).unwrap(),
        std::slice::from_ref(parent),
    );
    let mut c: Vec<Vec<u8>> = out.iter().map(certificate).collect();
    c.sort();
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn children_do_not_depend_on_parent_labels(seed in any::<u64>(), pick in any::<usize>()) {
        let mut store = GraphStore::default();
        let parents = store.generate(14, 4).unwrap();
        let g = &parents[pick % parents.len()];
        let h = relabelled(g, seed);
        prop_assert_eq!(children(g, 5, Algorithm::Tripod, 4), children(&h, 5, Algorithm::Tripod, 4));
        prop_assert_eq!(children(g, 6, Algorithm::H, 6), children(&h, 6, Algorithm::H, 6));
    }
}
