//! Named verification suites. Each check compares a computed value with
//! a known count or with an independent brute-force enumeration.

use std::collections::BTreeSet;
use std::fmt;

use girthgen_core::analysis::{
    dot_products_with_girth, flower_snark, has_dominating_cycle, has_petersen_colouring,
    is_hypohamiltonian, oddness, total_chromatic_number,
};
use girthgen_core::base::GraphStore;
use girthgen_core::canon::{automorphisms, certificate};
use girthgen_core::colour::{
    chromatic_index, cyclic_edge_connectivity, cyclic_edge_connectivity_at_least, is_snark,
};
use girthgen_core::graph::named;
use girthgen_core::hgen::{h_reduce, is_reducible_h};
use girthgen_core::metrics::{deficit, girth, max_disjoint_cycles};
use girthgen_core::pipeline::{self, Algorithm, Class, Plan, Task};
use girthgen_core::tripod::{is_reducible_tripod, tripod_reduce};
use girthgen_core::CubicGraph;
use girthgen_oracle as oracle;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::generate::base_level;

/// One expected-versus-actual line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    /// A check that could not be carried out at this scale; it fails.
    pub fn not_run(name: impl Into<String>, expected: impl ToString, why: &str) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: format!("not run ({why})"),
            pass: false,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: expected {}, got {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.expected,
            self.actual
        )
    }
}

pub const SUITES: &[&str] = &[
    "base",
    "girth5",
    "girth6",
    "girth7",
    "snarks",
    "lookahead",
    "appendix",
    "canonicity",
    "reducibility",
    "tables-small",
];

/// Known numbers of connected cubic graphs with girth at least 5.
pub const GIRTH5_COUNTS: &[(usize, u64)] = &[(22, 90_938), (24, 1_620_479)];
/// Known numbers of connected cubic graphs with girth at least 6.
pub const GIRTH6_COUNTS: &[(usize, u64)] = &[(24, 7_574), (26, 181_227)];
/// Known numbers of connected cubic graphs with girth at least 7.
pub const GIRTH7_COUNTS: &[(usize, u64)] = &[(30, 546), (32, 30_368)];
/// Known numbers of snarks by order.
pub const SNARK_COUNTS: &[(usize, u64)] = &[
    (10, 1),
    (18, 2),
    (20, 6),
    (22, 20),
    (24, 38),
    (26, 280),
    (28, 2_900),
];
/// Snarks with girth at least 6.
pub const SNARK_GIRTH6_COUNTS: &[(usize, u64)] = &[(28, 1)];
/// Cyclically 5-edge-connected snarks.
pub const SNARK_CYC5_COUNTS: &[(usize, u64)] =
    &[(10, 1), (20, 1), (22, 2), (24, 2), (26, 10), (28, 75)];
/// Cyclically 6-edge-connected snarks.
pub const SNARK_CYC6_COUNTS: &[(usize, u64)] = &[(28, 1)];
/// Hypohamiltonian snarks among the 39 snarks with girth 6 on 38 vertices.
pub const APPENDIX_HYPOHAMILTONIAN: usize = 29;

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Also run the checks that take hours at desk scale.
    pub full: bool,
    /// Largest snark order attempted.
    pub max_snark_order: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            full: false,
            max_snark_order: 24,
        }
    }
}

pub fn run_suite(name: &str, opts: Options) -> Result<Vec<Check>> {
    match name {
        "base" => base_counts(&[4, 6, 8, 10, 12]),
        "girth5" => girth5(opts),
        "girth6" => girth6(&[24, 26]),
        "girth7" => girth7(&[30, 32]),
        "snarks" => snarks(opts.max_snark_order),
        "lookahead" => lookahead(
            &[10, 12, 14, 16, 18, 20, 22, 24],
            &[14, 16, 18, 20, 22, 24, 26],
        ),
        "appendix" => Ok(appendix(&fixtures::girth6_order38_snarks())),
        "canonicity" => Ok(canonicity(100)),
        "reducibility" => Ok(reducibility(20)),
        "tables-small" => tables_small(),
        _ => Err(Error::Usage(format!(
            "unknown suite {name:?}; known suites: {}",
            SUITES.join(", ")
        ))),
    }
}

/// Graphs of one plan, as canonical certificates in sorted order.
pub fn generate_certificates(
    n: usize,
    k: usize,
    alg: Algorithm,
    class: Class,
    lookahead: bool,
) -> Result<Vec<Vec<u8>>> {
    let plan = Plan::new(n, k, alg)?;
    let base = base_level(&plan)?;
    let mut task = Task::new(plan, class)?;
    if !lookahead {
        task.lookahead = None;
    }
    let mut out = Vec::new();
    pipeline::run(&task, &base, &mut |g| out.push(certificate(g)));
    out.sort();
    Ok(out)
}

/// Graphs of one plan.
pub fn generate_graphs(
    n: usize,
    k: usize,
    alg: Algorithm,
    class: Class,
) -> Result<Vec<CubicGraph>> {
    let plan = Plan::new(n, k, alg)?;
    let base = base_level(&plan)?;
    let task = Task::new(plan, class)?;
    Ok(pipeline::collect(&task, &base).0)
}

fn count(n: usize, k: usize, alg: Algorithm) -> Result<u64> {
    let plan = Plan::new(n, k, alg)?;
    let base = base_level(&plan)?;
    let task = Task::new(plan, Class::All)?;
    Ok(pipeline::run(&task, &base, &mut |_| {}).emitted)
}

fn distinct(certs: &[Vec<u8>]) -> bool {
    certs.windows(2).all(|w| w[0] != w[1])
}

/// Connected cubic graphs per order against the brute-force enumeration.
pub fn base_counts(orders: &[usize]) -> Result<Vec<Check>> {
    let mut store = GraphStore::new(orders.iter().copied().max().unwrap_or(4));
    let mut out = Vec::new();
    for &n in orders {
        let want = oracle::connected_cubic_graphs(n).len();
        let got = store.full_level(n)?.len();
        out.push(Check::new(
            format!("connected cubic graphs, n = {n}"),
            want,
            got,
        ));
    }
    Ok(out)
}

fn girth5(opts: Options) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &(n, want) in GIRTH5_COUNTS {
        if n > 22 && !opts.full {
            continue;
        }
        out.push(Check::new(
            format!("girth >= 5, n = {n}"),
            want,
            count(n, 5, Algorithm::Auto)?,
        ));
    }
    Ok(out)
}

/// Both pipelines at each order: known count, and identical certificate sets.
pub fn girth6(orders: &[usize]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &n in orders {
        let want = GIRTH6_COUNTS.iter().find(|c| c.0 == n).map(|c| c.1);
        let t = generate_certificates(n, 6, Algorithm::Tripod, Class::All, true)?;
        let h = generate_certificates(n, 6, Algorithm::H, Class::All, true)?;
        if let Some(want) = want {
            out.push(Check::new(
                format!("girth >= 6, n = {n}, tripod"),
                want,
                t.len(),
            ));
            out.push(Check::new(format!("girth >= 6, n = {n}, H"), want, h.len()));
        }
        out.push(Check::new(
            format!("girth >= 6, n = {n}, tripod and H certificate sets equal and duplicate-free"),
            true,
            t == h && distinct(&t),
        ));
    }
    Ok(out)
}

pub fn girth7(orders: &[usize]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &n in orders {
        let want = GIRTH7_COUNTS.iter().find(|c| c.0 == n).map_or(0, |c| c.1);
        out.push(Check::new(
            format!("girth >= 7, n = {n}, H"),
            want,
            count(n, 7, Algorithm::H)?,
        ));
    }
    Ok(out)
}

fn lookup(table: &[(usize, u64)], n: usize) -> Option<u64> {
    table.iter().find(|c| c.0 == n).map(|c| c.1)
}

/// Snark counts by order up to `max_order`, with the girth 6 and cyclic
/// connectivity columns. Larger orders are reported as not run.
pub fn snarks(max_order: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in (10..=28).step_by(2) {
        let by_order = lookup(SNARK_COUNTS, n);
        let columns = [
            ("snarks", by_order.or(Some(0))),
            ("snarks with girth >= 6", lookup(SNARK_GIRTH6_COUNTS, n)),
            (
                "cyclically 5-edge-connected snarks",
                lookup(SNARK_CYC5_COUNTS, n),
            ),
            (
                "cyclically 6-edge-connected snarks",
                lookup(SNARK_CYC6_COUNTS, n),
            ),
        ];
        if n > max_order {
            for (what, want) in columns {
                if let Some(want) = want.filter(|_| by_order.is_some()) {
                    out.push(Check::not_run(
                        format!("{what}, n = {n}"),
                        want,
                        "beyond the configured order",
                    ));
                }
            }
            continue;
        }
        let graphs = generate_graphs(n, 5, Algorithm::Auto, Class::Snarks)?;
        let conn: Vec<usize> = graphs
            .iter()
            .map(|g| cyclic_edge_connectivity(g, 6))
            .collect();
        let actual = [
            graphs.len(),
            graphs.iter().filter(|g| girth(g) >= 6).count(),
            conn.iter().filter(|&&c| c >= 5).count(),
            conn.iter().filter(|&&c| c >= 6).count(),
        ];
        for ((what, want), got) in columns.into_iter().zip(actual) {
            if let Some(want) = want {
                out.push(Check::new(format!("{what}, n = {n}"), want, got));
            }
        }
    }
    Ok(out)
}

/// Snark mode against generating everything and filtering with `is_snark`.
pub fn lookahead(girth5_orders: &[usize], girth6_orders: &[usize]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (k, orders) in [(5, girth5_orders), (6, girth6_orders)] {
        for &n in orders {
            let fast = generate_certificates(n, k, Algorithm::Auto, Class::Snarks, true)?;
            let plain = generate_certificates(n, k, Algorithm::Auto, Class::Snarks, false)?;
            let filtered = {
                let plan = Plan::new(n, k, Algorithm::Auto)?;
                let base = base_level(&plan)?;
                let task = Task::new(plan, Class::All)?;
                let mut c = Vec::new();
                pipeline::run(&task, &base, &mut |g| {
                    if is_snark(g) {
                        c.push(certificate(g));
                    }
                });
                c.sort();
                c
            };
            out.push(Check::new(
                format!(
                    "snark mode equals filtering, girth >= {k}, n = {n} ({} snarks)",
                    filtered.len()
                ),
                true,
                fast == filtered && plain == filtered,
            ));
        }
    }
    Ok(out)
}

type Property = Box<dyn Fn(&CubicGraph) -> bool>;

/// Properties of the 39 snarks with girth 6 on 38 vertices. Each line
/// lists the 1-based positions of the graphs that fail it.
pub fn appendix(graphs: &[CubicGraph]) -> Vec<Check> {
    let mut out = vec![Check::new("fixtures parsed", 39, graphs.len())];
    let failing = |pred: &dyn Fn(&CubicGraph) -> bool| -> String {
        let bad: Vec<String> = graphs
            .iter()
            .enumerate()
            .filter(|(_, g)| !pred(g))
            .map(|(i, _)| format!("#{}", i + 1))
            .collect();
        if bad.is_empty() {
            "none failing".into()
        } else {
            format!("failing {}", bad.join(" "))
        }
    };
    let props: Vec<(&str, Property)> = vec![
        ("order 38", Box::new(|g| g.order() == 38)),
        ("girth exactly 6", Box::new(|g| girth(g) == 6)),
        ("chromatic index 4", Box::new(|g| chromatic_index(g) == 4)),
        (
            "cyclically 4-edge-connected",
            Box::new(|g| cyclic_edge_connectivity_at_least(g, 4)),
        ),
        (
            "not cyclically 5-edge-connected",
            Box::new(|g| !cyclic_edge_connectivity_at_least(g, 5)),
        ),
        ("oddness 2", Box::new(|g| oddness(g) == Some(2))),
        (
            "total chromatic number 4",
            Box::new(|g| total_chromatic_number(g) == 4),
        ),
        ("dominating cycle", Box::new(has_dominating_cycle)),
        ("Petersen colouring", Box::new(has_petersen_colouring)),
    ];
    for (what, pred) in &props {
        out.push(Check::new(
            format!("appendix snarks: {what}"),
            "none failing",
            failing(pred.as_ref()),
        ));
    }
    let hypo = graphs.iter().filter(|g| is_hypohamiltonian(g)).count();
    out.push(Check::new(
        "appendix snarks: hypohamiltonian",
        APPENDIX_HYPOHAMILTONIAN,
        hypo,
    ));
    let certs: BTreeSet<Vec<u8>> = graphs.iter().map(certificate).collect();
    out.push(Check::new(
        "appendix snarks: pairwise non-isomorphic",
        graphs.len(),
        certs.len(),
    ));
    let j5 = flower_snark(5);
    let dots = dot_products_with_girth(&j5, &j5, 6);
    out.push(Check::new(
        "appendix snarks: equal to the girth >= 6 dot products of two flower snarks J5",
        true,
        dots == certs,
    ));
    out
}

/// Small graphs with known structure plus the fixtures.
pub fn canonicity_corpus() -> Vec<CubicGraph> {
    let mut corpus: Vec<CubicGraph> = [4, 6, 8, 10]
        .iter()
        .flat_map(|&n| oracle::connected_cubic_graphs(n))
        .map(|a| CubicGraph::from_adjacency(&a).expect("oracle graph"))
        .collect();
    corpus.extend([
        named::petersen(),
        named::heawood(),
        flower_snark(5),
        flower_snark(7),
    ]);
    corpus.extend(fixtures::girth6_order38_snarks());
    corpus
}

/// Certificate invariance under random relabellings, and automorphism
/// group orders against brute force.
pub fn canonicity(relabellings: usize) -> Vec<Check> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let corpus = canonicity_corpus();
    let mut bad = 0;
    for g in &corpus {
        let c = certificate(g);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for _ in 0..relabellings {
            perm.shuffle(&mut rng);
            if certificate(&g.relabel(&perm)) != c {
                bad += 1;
            }
        }
    }
    let mut out = vec![Check::new(
        format!(
            "certificates invariant under {relabellings} relabellings of {} graphs",
            corpus.len()
        ),
        0,
        bad,
    )];
    let mut mismatches = 0;
    let mut total = 0;
    for n in [4, 6, 8] {
        for a in oracle::connected_cubic_graphs(n) {
            let g = CubicGraph::from_adjacency(&a).expect("oracle graph");
            total += 1;
            if automorphisms(&g).order != oracle::automorphism_count(&a) {
                mismatches += 1;
            }
        }
    }
    out.push(Check::new(
        format!("automorphism group orders of the {total} graphs with n <= 8 match brute force"),
        0,
        mismatches,
    ));
    let p = named::petersen();
    let brute = oracle::automorphism_count(&p.adjacency());
    out.push(Check::new(
        "Petersen automorphism group order",
        brute,
        automorphisms(&p).order,
    ));
    out
}

/// Reducibility theorems on every connected cubic graph with girth at
/// least 5 and at most `max_order` vertices.
pub fn reducibility(max_order: usize) -> Vec<Check> {
    let mut graphs = Vec::new();
    let mut store = GraphStore::new(max_order);
    for n in (10..=max_order).step_by(2) {
        let level = store.generate(n, 4).expect("within cap");
        graphs.extend(level.into_iter().filter(|g| girth(g) >= 5));
    }
    let (mut no_tripod, mut no_h, mut bad_tripod, mut bad_h) = (0, 0, 0, 0);
    for g in &graphs {
        let k = girth(g);
        let tripods: Vec<usize> = (0..g.order())
            .filter(|&c| is_reducible_tripod(g, c))
            .collect();
        if tripods.is_empty() {
            no_tripod += 1;
        }
        for c in tripods {
            let r = tripod_reduce(g, c).expect("reducible");
            if girth(&r) < k - 1 || max_disjoint_cycles(&r, k - 1) > 3 {
                bad_tripod += 1;
            }
        }
        let hs: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|&e| is_reducible_h(g, e))
            .collect();
        if hs.is_empty() {
            no_h += 1;
        }
        for e in hs {
            let r = h_reduce(g, e).expect("reducible");
            if deficit(&r, k) > 4 {
                bad_h += 1;
            }
        }
    }
    let m = graphs.len();
    vec![
        Check::new(
            format!(
                "graphs with girth >= 5, n <= {max_order}, without a reducible tripod (of {m})"
            ),
            0,
            no_tripod,
        ),
        Check::new(
            format!("graphs with girth >= 5, n <= {max_order}, without a reducible H (of {m})"),
            0,
            no_h,
        ),
        Check::new(
            "tripod reductions with girth < k - 1 or more than 3 disjoint (k - 1)-cycles",
            0,
            bad_tripod,
        ),
        Check::new("H reductions with deficit above 4", 0, bad_h),
    ]
}

/// A quick subset: the smaller known counts.
pub fn tables_small() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    out.push(Check::new(
        "girth >= 5, n = 22",
        90_938,
        count(22, 5, Algorithm::Auto)?,
    ));
    out.extend(girth6(&[24])?);
    out.extend(girth7(&[30])?);
    out.extend(
        snarks(22)?
            .into_iter()
            .filter(|c| !c.actual.starts_with("not run")),
    );
    Ok(out)
}
