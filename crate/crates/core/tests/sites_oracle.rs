//! Eligible sites against expanding every candidate and measuring the
//! girth, and soundness of the colouring look-ahead.

use std::collections::BTreeSet;

use girthgen_core::base::GraphStore;
use girthgen_core::colour::{distinct_colourings, is_colourable, ColourCycles};
use girthgen_core::graph::EdgeIndex;
use girthgen_core::hgen::h_expand;
use girthgen_core::pipeline::{collect, Algorithm, Class, Plan, Task};
use girthgen_core::sites::{eligible_quads, eligible_triples, SiteContext};
use girthgen_core::tripod::tripod_expand;
use girthgen_core::{CubicGraph, EdgeQuadruple, EdgeTriple};
use girthgen_oracle as oracle;

fn graphs(orders: &[usize], min_girth: usize) -> Vec<CubicGraph> {
    let mut store = GraphStore::default();
    let mut out = Vec::new();
    for &n in orders {
        if min_girth <= 4 {
            out.extend(store.generate(n, min_girth).unwrap());
            continue;
        }
        let Ok(plan) = Plan::new(n, min_girth, Algorithm::Auto) else {
            continue;
        };
        let base = store.generate(plan.base_order, plan.base_girth).unwrap();
        out.extend(collect(&Task::new(plan, Class::All).unwrap(), &base).0);
    }
    out
}

type Pair = (usize, usize);

fn oracle_triples(a: &oracle::Adjacency, k: usize) -> BTreeSet<[Pair; 3]> {
    let es = oracle::edges(a);
    let mut out = BTreeSet::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            for l in j + 1..es.len() {
                let t = [es[i], es[j], es[l]];
                let h = oracle::tripod_expand(a, t);
                if oracle::is_simple(&h) && oracle::girth(&h) >= k {
                    out.insert(t);
                }
            }
        }
    }
    out
}

fn norm_quad(p: [Pair; 2], q: [Pair; 2]) -> [[Pair; 2]; 2] {
    let s = |x: [Pair; 2]| if x[0] < x[1] { x } else { [x[1], x[0]] };
    let (p, q) = (s(p), s(q));
    if p < q {
        [p, q]
    } else {
        [q, p]
    }
}

fn oracle_quads(a: &oracle::Adjacency, k: usize) -> BTreeSet<[[Pair; 2]; 2]> {
    let es = oracle::edges(a);
    let m = es.len();
    let mut out = BTreeSet::new();
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                for r in l + 1..m {
                    let (w, x, y, z) = (es[i], es[j], es[l], es[r]);
                    for [p, q] in [[[w, x], [y, z]], [[w, y], [x, z]], [[w, z], [x, y]]] {
                        let h = oracle::h_expand(a, [p[0], p[1], q[0], q[1]]);
                        if oracle::is_simple(&h) && oracle::girth(&h) >= k {
                            out.insert(norm_quad(p, q));
                        }
                    }
                }
            }
        }
    }
    out
}

fn triple_set(ts: &[EdgeTriple]) -> BTreeSet<[Pair; 3]> {
    ts.iter().map(|t| t.edges().map(|e| e.ends())).collect()
}

fn quad_set(qs: &[EdgeQuadruple]) -> BTreeSet<[[Pair; 2]; 2]> {
    qs.iter()
        .map(|q| {
            let [p, r] = q.pairs();
            norm_quad(p.map(|e| e.ends()), r.map(|e| e.ends()))
        })
        .collect()
}

#[test]
fn eligible_triples_are_exactly_the_girth_raising_ones() {
    for (k, orders) in [
        (5, &[6, 8, 10, 12][..]),
        (6, &[10, 12, 14, 16][..]),
        (7, &[14, 16, 18, 20][..]),
    ] {
        let mut seen = 0;
        for g in graphs(orders, k - 1) {
            let got = triple_set(&eligible_triples(&g, k));
            assert_eq!(
                got,
                oracle_triples(&g.adjacency(), k),
                "k = {k}, {:?}",
                g.edges()
            );
            seen += got.len();
        }
        assert!(seen > 0, "k = {k}");
    }
}

#[test]
fn eligible_quadruples_are_exactly_the_girth_raising_ones() {
    for (k, min_girth, orders) in [(6, 4, &[6, 8, 10, 12][..]), (7, 6, &[14, 16, 18][..])] {
        let mut seen = 0;
        for g in graphs(orders, min_girth) {
            let got = quad_set(&eligible_quads(&g, k));
            assert_eq!(
                got,
                oracle_quads(&g.adjacency(), k),
                "k = {k}, {:?}",
                g.edges()
            );
            seen += got.len();
        }
        assert!(seen > 0, "k = {k}");
    }
}

#[test]
fn pruned_triples_expand_to_colourable_graphs() {
    let mut pruned = 0;
    for g in graphs(&[10, 12, 14], 4) {
        let idx = EdgeIndex::new(&g);
        let ctx = SiteContext::new(&g, 5);
        let cols = distinct_colourings(&g, &idx, 3, 5);
        let caches: Vec<ColourCycles> = cols
            .iter()
            .map(|c| ColourCycles::new(&g, &idx, c))
            .collect();
        for t in ctx.eligible_triples() {
            let t = t.map(|e| e as usize);
            if caches
                .iter()
                .any(|cc| cc.has_prune_path(t) || cc.has_prune_tree(&g, &idx, t))
            {
                pruned += 1;
                let h = tripod_expand(&g, &ctx.triple(t.map(|e| e as u8)));
                assert!(is_colourable(&h));
            }
        }
    }
    assert!(pruned > 1000);
}

#[test]
fn pruned_quadruples_expand_to_colourable_graphs() {
    let mut pruned = 0;
    for g in graphs(&[8, 10, 12, 14], 4) {
        let idx = EdgeIndex::new(&g);
        let ctx = SiteContext::new(&g, 6);
        let cols = distinct_colourings(&g, &idx, 6, 5);
        let caches: Vec<ColourCycles> = cols
            .iter()
            .map(|c| ColourCycles::new(&g, &idx, c))
            .collect();
        for q in ctx.eligible_quads() {
            if caches
                .iter()
                .any(|cc| cc.has_prune_pair(q.map(|e| e as usize)))
            {
                pruned += 1;
                assert!(is_colourable(&h_expand(&g, &ctx.quadruple(q))));
            }
        }
    }
    assert!(pruned > 100);
}
