//! Structural properties of snarks: dot products, the flower snarks,
//! oddness, hamiltonicity, strong snarks, dominating cycles, total
//! colourings and Petersen colourings.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::base::edge_reduce;
use crate::canon::{automorphisms, canonical_form_and_group, certificate, AutGroup};
use crate::colour::{is_colourable, is_snark};
use crate::graph::{bit, members, named, CubicGraph, Edge, VertexSet};
use crate::metrics::has_girth_at_least;

/// Where a dot product is applied: two disjoint edges `{a, b}`, `{c, d}` of
/// the first graph, an edge `{u, v}` of the second, and the neighbours
/// of `u, v` that `a, b, c, d` get joined to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DotProductSite {
    pub donor1: [Edge; 2],
    pub donor2: Edge,
    /// `targets[i]` is the new neighbour of the `i`-th of `a, b, c, d`; a
    /// permutation of the four outer neighbours of `u` and `v`.
    pub targets: [usize; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiteError {
    SharedVertex,
    NotAnEdge,
    BadTargets,
}

impl fmt::Display for SiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SiteError::SharedVertex => "the two edges of the first graph share a vertex",
            SiteError::NotAnEdge => "a site edge is not an edge of its graph",
            SiteError::BadTargets => "targets are not the outer neighbours of the second edge",
        })
    }
}

impl core::error::Error for SiteError {}

fn outer_neighbours(g: &CubicGraph, e: Edge) -> [usize; 4] {
    let (u, v) = e.ends();
    let mut out = [0; 4];
    let ws = members(g.neighbour_mask(u) & !bit(v)).chain(members(g.neighbour_mask(v) & !bit(u)));
    for (slot, w) in out.iter_mut().zip(ws) {
        *slot = w;
    }
    out
}

/// The dot product of `g1` and `g2` at `site`. The vertices of `g1` keep
/// their labels and those of `g2` other than `u, v` follow in order.
pub fn dot_product(
    g1: &CubicGraph,
    g2: &CubicGraph,
    site: &DotProductSite,
) -> Result<CubicGraph, SiteError> {
    let [e, f] = site.donor1;
    if !g1.has_edge(e) || !g1.has_edge(f) || !g2.has_edge(site.donor2) {
        return Err(SiteError::NotAnEdge);
    }
    if e.shares_vertex(f) {
        return Err(SiteError::SharedVertex);
    }
    let mut want = outer_neighbours(g2, site.donor2);
    let mut got = site.targets;
    want.sort_unstable();
    got.sort_unstable();
    if want != got {
        return Err(SiteError::BadTargets);
    }
    let n1 = g1.order();
    let (u, v) = site.donor2.ends();
    let map = |w: usize| n1 + w - (w > u) as usize - (w > v) as usize;
    let mut edges: Vec<(usize, usize)> = g1
        .edges()
        .into_iter()
        .filter(|&x| x != e && x != f)
        .map(|x| x.ends())
        .collect();
    edges.extend(
        g2.edges()
            .into_iter()
            .filter(|x| !x.contains(u) && !x.contains(v))
            .map(|x| (map(x.u()), map(x.v()))),
    );
    let ends = [e.u(), e.v(), f.u(), f.v()];
    for (a, t) in ends.iter().zip(site.targets) {
        edges.push((*a, map(t)));
    }
    Ok(CubicGraph::from_edges(n1 + g2.order() - 2, &edges)
        .expect("dot product of cubic graphs is cubic"))
}

/// Pairs of disjoint edges of `g`, one per orbit of the group.
fn disjoint_edge_pair_reps(g: &CubicGraph, group: &AutGroup) -> Vec<[Edge; 2]> {
    let edges = g.edges();
    let mut seen: BTreeSet<(Edge, Edge)> = BTreeSet::new();
    let mut reps = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if e.shares_vertex(f) || seen.contains(&(e, f)) {
                continue;
            }
            reps.push([e, f]);
            // close the orbit under the generators
            let mut stack = alloc::vec![(e, f)];
            seen.insert((e, f));
            while let Some((x, y)) = stack.pop() {
                for p in &group.generators {
                    let (a, b) = (p.edge_image(x), p.edge_image(y));
                    let key = if a < b { (a, b) } else { (b, a) };
                    if seen.insert(key) {
                        stack.push(key);
                    }
                }
            }
        }
    }
    reps
}

const PERMUTATIONS_4: [[usize; 4]; 24] = {
    let mut out = [[0; 4]; 24];
    let mut i = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && a != c && b != c {
                    out[i] = [a, b, c, 6 - a - b - c];
                    i += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

/// Certificates of the snarks with girth at least `min_girth` among all dot
/// products of `g1` and `g2`, over every site up to the automorphisms of
/// the two graphs and every matching of the freed half-edges.
pub fn dot_products_with_girth(
    g1: &CubicGraph,
    g2: &CubicGraph,
    min_girth: usize,
) -> BTreeSet<Vec<u8>> {
    let pairs = disjoint_edge_pair_reps(g1, &automorphisms(g1));
    let (_, group2) = canonical_form_and_group(g2, None);
    let edge_reps: Vec<Edge> = {
        let mut seen: BTreeSet<Edge> = BTreeSet::new();
        let mut reps = Vec::new();
        for e in g2.edges() {
            if seen.insert(e) {
                reps.push(e);
                seen.extend(group2.edge_orbit(e));
            }
        }
        reps
    };
    let mut out = BTreeSet::new();
    let mut tried: BTreeSet<Vec<u8>> = BTreeSet::new();
    for donor1 in &pairs {
        for &donor2 in &edge_reps {
            let outer = outer_neighbours(g2, donor2);
            for p in PERMUTATIONS_4 {
                let site = DotProductSite {
                    donor1: *donor1,
                    donor2,
                    targets: p.map(|i| outer[i]),
                };
                let h = dot_product(g1, g2, &site).expect("valid site");
                if !has_girth_at_least(&h, min_girth.max(5)) {
                    continue;
                }
                let cert = certificate(&h);
                if out.contains(&cert) || !tried.insert(cert.clone()) {
                    continue;
                }
                if is_snark(&h) {
                    out.insert(cert);
                }
            }
        }
    }
    out
}

/// Certificates of all snarks among the dot products of `g1` and `g2`.
pub fn all_dot_products(g1: &CubicGraph, g2: &CubicGraph) -> BTreeSet<Vec<u8>> {
    dot_products_with_girth(g1, g2, 5)
}

/// The flower snark `J_k` for odd `k >= 3`: stars with centre `4i` and
/// leaves `4i + 1, 4i + 2, 4i + 3`, the first leaves on a `k`-cycle and the
/// other two on one `2k`-cycle.
pub fn flower_snark(k: usize) -> CubicGraph {
    assert!(k >= 3 && k % 2 == 1, "flower snarks need odd k >= 3");
    let (a, b, c, d) = (
        |i: usize| 4 * i,
        |i: usize| 4 * i + 1,
        |i: usize| 4 * i + 2,
        |i: usize| 4 * i + 3,
    );
    let mut edges = Vec::new();
    for i in 0..k {
        let j = (i + 1) % k;
        edges.extend([(a(i), b(i)), (a(i), c(i)), (a(i), d(i)), (b(i), b(j))]);
        if j == 0 {
            edges.extend([(c(i), d(j)), (d(i), c(j))]);
        } else {
            edges.extend([(c(i), c(j)), (d(i), d(j))]);
        }
    }
    CubicGraph::from_edges(4 * k, &edges).expect("flower snark")
}

/// Visits every spanning subgraph of `g[alive]` in which all vertices have
/// degree 2, given as the set of removed edges: a perfect matching of the
/// vertices with three alive neighbours. Vertices with fewer than two
/// alive neighbours admit none.
fn for_each_two_factor<B>(
    g: &CubicGraph,
    alive: VertexSet,
    f: &mut dyn FnMut(&[Edge]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut full: VertexSet = 0;
    for v in members(alive) {
        match (g.neighbour_mask(v) & alive).count_ones() {
            3 => full |= bit(v),
            2 => {}
            _ => return ControlFlow::Continue(()),
        }
    }
    let mut chosen = Vec::new();
    match_rest(g, full, &mut chosen, f)
}

fn match_rest<B>(
    g: &CubicGraph,
    open: VertexSet,
    chosen: &mut Vec<Edge>,
    f: &mut dyn FnMut(&[Edge]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if open == 0 {
        return f(chosen);
    }
    let v = open.trailing_zeros() as usize;
    for w in members(g.neighbour_mask(v) & open) {
        chosen.push(Edge::new(v, w));
        match_rest(g, open & !bit(v) & !bit(w), chosen, f)?;
        chosen.pop();
    }
    ControlFlow::Continue(())
}

/// Cycle lengths of the 2-regular graph `g[alive]` minus `removed`.
fn cycle_lengths(g: &CubicGraph, alive: VertexSet, removed: &[Edge]) -> Vec<usize> {
    let keeps = |a: usize, b: usize| !removed.contains(&Edge::new(a, b));
    let mut lens = Vec::new();
    let mut left = alive;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let (mut prev, mut cur, mut len) = (usize::MAX, start, 0);
        loop {
            left &= !bit(cur);
            len += 1;
            let next = members(g.neighbour_mask(cur) & alive)
                .find(|&w| w != prev && keeps(cur, w))
                .expect("2-regular");
            if next == start {
                break;
            }
            prev = cur;
            cur = next;
        }
        lens.push(len);
    }
    lens
}

/// Whether `g[alive]` has a Hamiltonian cycle.
fn hamiltonian_within(g: &CubicGraph, alive: VertexSet) -> bool {
    let n = alive.count_ones() as usize;
    for_each_two_factor(g, alive, &mut |m| {
        if cycle_lengths(g, alive, m) == [n] {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_break()
}

pub fn is_hamiltonian(g: &CubicGraph) -> bool {
    hamiltonian_within(g, g.all())
}

/// Not Hamiltonian, but every vertex-deleted subgraph is.
pub fn is_hypohamiltonian(g: &CubicGraph) -> bool {
    !is_hamiltonian(g) && (0..g.order()).all(|v| hamiltonian_within(g, g.all() & !bit(v)))
}

/// The least number of odd cycles over all 2-factors; 0 exactly for
/// colourable graphs. `None` if `g` has no perfect matching.
pub fn oddness(g: &CubicGraph) -> Option<usize> {
    if is_colourable(g) {
        return Some(0);
    }
    let mut best: Option<usize> = None;
    let _ = for_each_two_factor(g, g.all(), &mut |m| {
        let odd = cycle_lengths(g, g.all(), m)
            .iter()
            .filter(|&&l| l % 2 == 1)
            .count();
        best = Some(best.map_or(odd, |b| b.min(odd)));
        // an uncolourable graph has oddness at least 2
        if odd == 2 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    best
}

/// A snark in which every edge reduction gives an uncolourable graph.
/// Reductions creating a loop or multiple edge are skipped.
pub fn is_strong_snark(g: &CubicGraph) -> bool {
    is_snark(g)
        && g.edges().into_iter().all(|e| match edge_reduce(g, e) {
            Some(h) => !h.is_connected() || !is_colourable(&h),
            None => true,
        })
}

/// The search for a dominating cycle gave up after its node budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Undecided;

impl fmt::Display for Undecided {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("search budget exhausted")
    }
}

impl core::error::Error for Undecided {}

/// Whether `g` has a cycle meeting every edge. The vertices off such a cycle
/// form an independent set whose removal leaves a Hamiltonian graph; sets
/// are tried by increasing size, and at most `budget` of them.
pub fn has_dominating_cycle_within(g: &CubicGraph, budget: u64) -> Result<bool, Undecided> {
    let n = g.order();
    let mut spent = 0u64;
    let mut set = Vec::new();
    for size in 0..=n / 2 {
        match independent_sets(g, size, 0, 0, &mut set, &mut |off| {
            spent += 1;
            if spent > budget {
                return ControlFlow::Break(Err(Undecided));
            }
            if hamiltonian_within(g, g.all() & !off) {
                ControlFlow::Break(Ok(()))
            } else {
                ControlFlow::Continue(())
            }
        }) {
            ControlFlow::Break(Ok(())) => return Ok(true),
            ControlFlow::Break(Err(e)) => return Err(e),
            ControlFlow::Continue(()) => {}
        }
    }
    Ok(false)
}

pub fn has_dominating_cycle(g: &CubicGraph) -> bool {
    has_dominating_cycle_within(g, u64::MAX).expect("unlimited budget")
}

fn independent_sets<B>(
    g: &CubicGraph,
    size: usize,
    from: usize,
    set: VertexSet,
    stack: &mut Vec<usize>,
    f: &mut dyn FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if stack.len() == size {
        return f(set);
    }
    for v in from..g.order() {
        if g.neighbour_mask(v) & set != 0 {
            continue;
        }
        stack.push(v);
        independent_sets(g, size, v + 1, set | bit(v), stack, f)?;
        stack.pop();
    }
    ControlFlow::Continue(())
}

/// Minimum number of colours of a proper total colouring: 4 or 5.
pub fn total_chromatic_number(g: &CubicGraph) -> u8 {
    if has_total_4_colouring(g) {
        4
    } else {
        5
    }
}

/// In a total 4-colouring the three edges at a vertex take the three
/// colours other than the vertex colour. Vertices are coloured in BFS
/// order together with their remaining edges.
fn has_total_4_colouring(g: &CubicGraph) -> bool {
    let n = g.order();
    let mut order = alloc::vec![0usize];
    let mut seen = bit(0);
    let mut i = 0;
    while i < order.len() {
        for w in g.neighbours(order[i]) {
            if seen & bit(w) == 0 {
                seen |= bit(w);
                order.push(w);
            }
        }
        i += 1;
    }
    let mut vcol = alloc::vec![u8::MAX; n];
    // ecol[v][slot]
    let mut ecol = alloc::vec![[u8::MAX; 3]; n];
    total_step(g, &order, 0, &mut vcol, &mut ecol)
}

fn total_step(
    g: &CubicGraph,
    order: &[usize],
    i: usize,
    vcol: &mut [u8],
    ecol: &mut [[u8; 3]],
) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    let nb = g.neighbours(v);
    // the vertex colour 0 can be fixed at the start by symmetry
    let choices: &[u8] = if i == 0 { &[0] } else { &[0, 1, 2, 3] };
    for &c in choices {
        if nb.iter().any(|&w| vcol[w] == c) || ecol[v].contains(&c) {
            continue;
        }
        vcol[v] = c;
        let saved = ecol.to_vec();
        if assign_edges(g, v, 0, order, i, vcol, ecol) {
            return true;
        }
        ecol.copy_from_slice(&saved);
        vcol[v] = u8::MAX;
    }
    false
}

fn assign_edges(
    g: &CubicGraph,
    v: usize,
    slot: usize,
    order: &[usize],
    i: usize,
    vcol: &mut [u8],
    ecol: &mut [[u8; 3]],
) -> bool {
    if slot == 3 {
        return total_step(g, order, i + 1, vcol, ecol);
    }
    if ecol[v][slot] != u8::MAX {
        return assign_edges(g, v, slot + 1, order, i, vcol, ecol);
    }
    let w = g.neighbours(v)[slot];
    let back = g
        .neighbours(w)
        .iter()
        .position(|&x| x == v)
        .expect("adjacent");
    for c in 0..4u8 {
        if c == vcol[v] || c == vcol[w] || ecol[v].contains(&c) || ecol[w].contains(&c) {
            continue;
        }
        ecol[v][slot] = c;
        ecol[w][back] = c;
        if assign_edges(g, v, slot + 1, order, i, vcol, ecol) {
            return true;
        }
        ecol[v][slot] = u8::MAX;
        ecol[w][back] = u8::MAX;
    }
    false
}

/// Whether the edges of `g` map to edges of the Petersen graph such that
/// the three edges at every vertex go to three mutually adjacent edges.
pub fn has_petersen_colouring(g: &CubicGraph) -> bool {
    let p = named::petersen();
    let pedges = p.edges();
    let m = pedges.len();
    let mut adjacent = alloc::vec![0u32; m];
    for (i, e) in pedges.iter().enumerate() {
        for (j, f) in pedges.iter().enumerate() {
            if i != j && e.shares_vertex(*f) {
                adjacent[i] |= 1 << j;
            }
        }
    }
    // edges of g in BFS order of their first appearance
    let gedges = g.edges();
    let id = |e: Edge| gedges.binary_search(&e).expect("edge of g");
    let mut order: Vec<usize> = Vec::with_capacity(gedges.len());
    let mut placed = alloc::vec![false; gedges.len()];
    let mut queue = alloc::vec![0usize];
    let mut seen = bit(0);
    let mut qi = 0;
    while qi < queue.len() {
        let v = queue[qi];
        qi += 1;
        for w in g.neighbours(v) {
            let e = id(Edge::new(v, w));
            if !placed[e] {
                placed[e] = true;
                order.push(e);
            }
            if seen & bit(w) == 0 {
                seen |= bit(w);
                queue.push(w);
            }
        }
    }
    let mut image = alloc::vec![usize::MAX; gedges.len()];
    // by symmetry the edges at vertex 0 may go to the star of vertex 0 in
    // any fixed order
    let star: Vec<usize> = (0..m).filter(|&j| pedges[j].contains(0)).collect();
    for (k, w) in g.neighbours(0).iter().enumerate() {
        image[id(Edge::new(0, *w))] = star[k];
    }
    petersen_step(g, &gedges, &order, 0, &adjacent, &mut image)
}

fn petersen_step(
    g: &CubicGraph,
    gedges: &[Edge],
    order: &[usize],
    i: usize,
    adjacent: &[u32],
    image: &mut [usize],
) -> bool {
    let Some(&e) = order.get(i) else {
        return true;
    };
    if image[e] != usize::MAX {
        return petersen_step(g, gedges, order, i + 1, adjacent, image);
    }
    let mut allowed: u32 = (1 << adjacent.len()) - 1;
    let (u, v) = gedges[e].ends();
    for x in [u, v] {
        for y in g.neighbours(x) {
            let f = gedges.binary_search(&Edge::new(x, y)).expect("edge of g");
            if f != e && image[f] != usize::MAX {
                allowed &= adjacent[image[f]];
            }
        }
    }
    while allowed != 0 {
        let j = allowed.trailing_zeros() as usize;
        allowed &= allowed - 1;
        image[e] = j;
        if petersen_step(g, gedges, order, i + 1, adjacent, image) {
            return true;
        }
    }
    image[e] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::chromatic_index;
    use crate::graph::named::*;
    use crate::metrics::girth;

    #[test]
    fn flower_snarks() {
        let j3 = flower_snark(3);
        assert_eq!(j3.order(), 12);
        assert_eq!(chromatic_index(&j3), 4);
        let j5 = flower_snark(5);
        assert_eq!(j5.order(), 20);
        assert_eq!(girth(&j5), 5);
        assert!(is_snark(&j5));
    }

    #[test]
    fn petersen_properties() {
        let p = petersen();
        assert!(!is_hamiltonian(&p));
        assert!(is_hypohamiltonian(&p));
        assert_eq!(oddness(&p), Some(2));
        assert!(has_dominating_cycle(&p));
        assert_eq!(total_chromatic_number(&p), 4);
        assert!(has_petersen_colouring(&p));
        assert!(!is_strong_snark(&p));
    }

    #[test]
    fn small_graphs() {
        assert!(is_hamiltonian(&k4()));
        assert!(!is_hypohamiltonian(&k4()));
        assert_eq!(total_chromatic_number(&k4()), 5);
        assert_eq!(oddness(&cube()), Some(0));
        assert!(has_petersen_colouring(&cube()));
        assert!(!is_hamiltonian(&bridged()));
    }

    #[test]
    fn dot_product_orders() {
        let p = petersen();
        let site = DotProductSite {
            donor1: [Edge::new(0, 1), Edge::new(7, 9)],
            donor2: Edge::new(0, 5),
            targets: [1, 4, 7, 8],
        };
        assert_eq!(dot_product(&p, &p, &site).unwrap().order(), 18);
        let bad = DotProductSite {
            donor1: [Edge::new(0, 1), Edge::new(1, 2)],
            ..site
        };
        assert_eq!(dot_product(&p, &p, &bad), Err(SiteError::SharedVertex));
    }
}
