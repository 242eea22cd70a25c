//! Snark properties against brute-force oracles on all small graphs.

use girthgen_core::analysis::{
    dot_product, flower_snark, has_dominating_cycle, has_petersen_colouring, is_hamiltonian,
    is_hypohamiltonian, is_strong_snark, oddness, total_chromatic_number, DotProductSite,
};
use girthgen_core::base::GraphStore;
use girthgen_core::canon::certificate;
use girthgen_core::colour::{chromatic_index, cyclic_edge_connectivity, is_snark};
use girthgen_core::named::petersen;
use girthgen_core::pipeline::{collect, Algorithm, Class, Plan, Task};
use girthgen_core::{CubicGraph, Edge};
use girthgen_oracle as oracle;
use proptest::prelude::*;

fn small_graphs(max: usize) -> Vec<CubicGraph> {
    let mut store = GraphStore::new(max);
    (4..=max)
        .step_by(2)
        .flat_map(|n| store.full_level(n).unwrap())
        .collect()
}

#[test]
fn hamiltonicity_and_chromatic_index() {
    for g in small_graphs(12) {
        let a = g.adjacency();
        assert_eq!(is_hamiltonian(&g), oracle::is_hamiltonian(&a));
        let colourable = oracle::edge_colourable(&a, 3);
        assert_eq!(chromatic_index(&g), if colourable { 3 } else { 4 });
    }
}

#[test]
fn oddness_matches_two_factor_enumeration() {
    for g in small_graphs(12) {
        let a = g.adjacency();
        let o = oddness(&g);
        assert_eq!(o, oracle::oddness(&a));
        if let Some(o) = o {
            assert_eq!(o % 2, 0);
            assert_eq!(o == 0, chromatic_index(&g) == 3);
        }
    }
}

#[test]
fn total_colouring_matches_brute_force() {
    for g in small_graphs(10) {
        let want = if oracle::total_colourable(&g.adjacency(), 4) {
            4
        } else {
            5
        };
        assert_eq!(total_chromatic_number(&g), want, "{:?}", g.edges());
    }
}

#[test]
fn cyclic_connectivity_matches_bipartitions() {
    for g in small_graphs(14) {
        let want = oracle::cyclic_edge_connectivity(&g.adjacency()).map_or(10, |c| c.min(10));
        assert_eq!(cyclic_edge_connectivity(&g, 10), want);
    }
}

#[test]
fn dominating_cycles_match_cycle_enumeration() {
    for g in small_graphs(12) {
        assert_eq!(
            has_dominating_cycle(&g),
            oracle::has_dominating_cycle(&g.adjacency())
        );
    }
}

#[test]
fn hypohamiltonian_by_definition() {
    for g in small_graphs(12) {
        let a = g.adjacency();
        let n = a.len();
        let want = !oracle::is_hamiltonian(&a)
            && (0..n).all(|v| {
                let mut alive = vec![true; n];
                alive[v] = false;
                oracle::hamiltonian_within(&a, &alive)
            });
        assert_eq!(is_hypohamiltonian(&g), want);
    }
}

#[test]
fn colourable_graphs_have_petersen_colourings() {
    for g in small_graphs(12) {
        if chromatic_index(&g) == 3 {
            assert!(has_petersen_colouring(&g));
        }
    }
    assert!(has_petersen_colouring(&petersen()));
}

#[test]
fn no_small_strong_snarks() {
    let mut graphs = Vec::new();
    for n in [10, 18, 20] {
        let plan = Plan::new(n, 5, Algorithm::Auto).unwrap();
        let base = GraphStore::new(n)
            .generate(plan.base_order, plan.base_girth)
            .unwrap();
        graphs.extend(collect(&Task::new(plan, Class::Snarks).unwrap(), &base).0);
    }
    assert!(!graphs.is_empty());
    for g in &graphs {
        assert!(is_snark(g));
        assert!(!is_strong_snark(g));
    }
}

#[test]
fn flower_snark_j5_is_among_the_order_20_snarks() {
    let plan = Plan::new(20, 5, Algorithm::Auto).unwrap();
    let base = GraphStore::new(20)
        .generate(plan.base_order, plan.base_girth)
        .unwrap();
    let snarks = collect(&Task::new(plan, Class::Snarks).unwrap(), &base).0;
    let certs: Vec<Vec<u8>> = snarks.iter().map(certificate).collect();
    assert!(certs.contains(&certificate(&flower_snark(5))));
}

#[test]
fn petersen_dot_petersen_gives_an_order_18_snark() {
    let p = petersen();
    let dots = girthgen_core::analysis::all_dot_products(&p, &p);
    assert!(!dots.is_empty());
    let plan = Plan::new(18, 5, Algorithm::Auto).unwrap();
    let base = GraphStore::new(18)
        .generate(plan.base_order, plan.base_girth)
        .unwrap();
    let snarks: Vec<Vec<u8>> = collect(&Task::new(plan, Class::Snarks).unwrap(), &base)
        .0
        .iter()
        .map(certificate)
        .collect();
    assert!(dots.iter().all(|c| snarks.contains(c)));
}

#[test]
fn dot_products_are_cubic_of_the_right_order() {
    let p = petersen();
    let j = flower_snark(5);
    let (pe, je) = (p.edges(), j.edges());
    for (i, &e) in pe.iter().enumerate() {
        for &f in &pe[i + 1..] {
            if e.shares_vertex(f) {
                continue;
            }
            for &d in je.iter().step_by(7) {
                let (u, v) = d.ends();
                let mut targets: Vec<usize> =
                    j.neighbours(u).into_iter().filter(|&w| w != v).collect();
                targets.extend(j.neighbours(v).into_iter().filter(|&w| w != u));
                let site = DotProductSite {
                    donor1: [e, f],
                    donor2: d,
                    targets: targets.try_into().unwrap(),
                };
                let h = dot_product(&p, &j, &site).unwrap();
                assert_eq!(h.order(), 28);
            }
        }
    }
    let bad = DotProductSite {
        donor1: [Edge::new(0, 1), Edge::new(2, 3)],
        donor2: Edge::new(0, 1),
        targets: [0, 1, 2, 3],
    };
    assert!(dot_product(&p, &p, &bad).is_err());
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn properties_invariant_under_relabelling(seed in any::<u64>(), which in 0usize..3) {
        let g = [petersen(), flower_snark(5), flower_snark(3)][which].clone();
        let h = relabelled(&g, seed);
        prop_assert_eq!(oddness(&g), oddness(&h));
        prop_assert_eq!(is_hypohamiltonian(&g), is_hypohamiltonian(&h));
        prop_assert_eq!(has_dominating_cycle(&g), has_dominating_cycle(&h));
        prop_assert_eq!(total_chromatic_number(&g), total_chromatic_number(&h));
        prop_assert_eq!(has_petersen_colouring(&g), has_petersen_colouring(&h));
        prop_assert_eq!(is_strong_snark(&g), is_strong_snark(&h));
        prop_assert_eq!(cyclic_edge_connectivity(&g, 7), cyclic_edge_connectivity(&h, 7));
    }
}
