//! Base generation of all connected cubic graphs of small order.
//!
//! Every connected cubic graph arises from K4 by repeatedly applying three
//! expansions: hanging a K4 with a subdivided edge from a subdivided edge
//! (+6), inserting a diamond (K4 minus an edge) into an edge (+4), and
//! inserting an edge between two subdivided edges, which may share a vertex
//! (+2). Levels are built bottom-up; duplicates
//! are removed through a store of canonical certificates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, canonical_form_and_group, orbits, AutGroup};
use crate::graph::{named, CubicGraph, Edge, EdgeIndex};
use crate::metrics::{has_girth_at_least, short_cycles};

/// Largest order the base generator builds by default.
pub const DEFAULT_BASE_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseError {
    /// Odd or too small order.
    BadOrder(usize),
    /// Unsupported girth bound.
    BadGirth(usize),
    /// Order above the configured cap.
    Capacity { order: usize, cap: usize },
}

impl fmt::Display for BaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BaseError::BadOrder(n) => write!(f, "no cubic graphs of order {n}"),
            BaseError::BadGirth(k) => write!(f, "base generation supports girth 3 or 4, not {k}"),
            BaseError::Capacity { order, cap } => {
                write!(f, "order {order} exceeds the base generation cap {cap}")
            }
        }
    }
}

impl core::error::Error for BaseError {}

/// Operation (a): subdivide edge `xy` by a new vertex `s` and hang a K4
/// with one subdivided edge from `s`: `s - p`, `p` adjacent to `q, r`, and
/// `q, r, t, u` spanning K4 minus the edge `qr`. Adds 6 vertices.
pub fn devries_expand_a(g: &CubicGraph, e: Edge) -> CubicGraph {
    let n = g.order();
    let (x, y) = e.ends();
    let [s, p, q, r, t, u] = [n, n + 1, n + 2, n + 3, n + 4, n + 5].map(|v| v as u8);
    let mut adj = g.raw_adjacency().to_vec();
    replace(&mut adj[x], y, n);
    replace(&mut adj[y], x, n);
    adj.push([x as u8, y as u8, p]);
    adj.push([s, q, r]);
    adj.push([p, t, u]);
    adj.push([p, t, u]);
    adj.push([q, r, u]);
    adj.push([q, r, t]);
    CubicGraph::from_raw(adj)
}

/// Operation (b): replace edge `xy` by the path `x - a`, diamond
/// `a, b, c, d` (K4 minus the edge `ad`), `d - y`. Adds 4 vertices.
pub fn devries_expand_b(g: &CubicGraph, e: Edge) -> CubicGraph {
    let n = g.order();
    let (x, y) = e.ends();
    let (a, b, c, d) = (n, n + 1, n + 2, n + 3);
    let mut adj = g.raw_adjacency().to_vec();
    replace(&mut adj[x], y, a);
    replace(&mut adj[y], x, d);
    adj.push([x as u8, b as u8, c as u8]);
    adj.push([a as u8, c as u8, d as u8]);
    adj.push([a as u8, b as u8, d as u8]);
    adj.push([b as u8, c as u8, y as u8]);
    CubicGraph::from_raw(adj)
}

/// Operation (c), the edge insertion: subdivide `e` and `f` by new
/// vertices and join them. Adds 2 vertices. `None` if `e == f`.
pub fn devries_expand_c(g: &CubicGraph, e: Edge, f: Edge) -> Option<CubicGraph> {
    if e == f {
        return None;
    }
    let n = g.order();
    let (s, t) = (n, n + 1);
    let mut adj = g.raw_adjacency().to_vec();
    let (a, b) = e.ends();
    let (c, d) = f.ends();
    replace(&mut adj[a], b, s);
    replace(&mut adj[b], a, s);
    replace(&mut adj[c], d, t);
    replace(&mut adj[d], c, t);
    adj.push([a as u8, b as u8, t as u8]);
    adj.push([c as u8, d as u8, s as u8]);
    Some(CubicGraph::from_raw(adj))
}

/// Inverse of the edge insertion at edge `{x, y}`: delete `x` and `y` and
/// join the two other neighbours of `x`, and those of `y`. `None` if that
/// creates a loop or a multiple edge. The result may be disconnected.
pub fn edge_reduce(g: &CubicGraph, e: Edge) -> Option<CubicGraph> {
    let (x, y) = e.ends();
    let others = |v: usize, w: usize| {
        let nb = g.neighbours(v);
        let o: Vec<usize> = nb.iter().copied().filter(|&z| z != w).collect();
        (o[0], o[1])
    };
    let (a, b) = others(x, y);
    let (c, d) = others(y, x);
    if a == b || c == d || g.adjacent(a, b) || g.adjacent(c, d) {
        return None;
    }
    if (a == c && b == d) || (a == d && b == c) {
        return None;
    }
    let n = g.order();
    // relabel: drop x and y, shift the rest down
    let map = |v: usize| v - (v > x) as usize - (v > y) as usize;
    let mut adj: Vec<[usize; 3]> = Vec::with_capacity(n - 2);
    for v in 0..n {
        if v == x || v == y {
            continue;
        }
        let mut nb = g.neighbours(v);
        for w in nb.iter_mut() {
            if *w == x {
                *w = if v == a { b } else { a };
            } else if *w == y {
                *w = if v == c { d } else { c };
            }
        }
        adj.push([map(nb[0]), map(nb[1]), map(nb[2])]);
    }
    CubicGraph::from_adjacency_unchecked_connectivity(&adj).ok()
}

pub(crate) fn replace(slot: &mut [u8; 3], old: usize, new: usize) {
    let i = slot
        .iter()
        .position(|&w| w as usize == old)
        .expect("missing neighbour");
    slot[i] = new as u8;
}

/// One representative per orbit of unordered pairs of distinct edges.
fn edge_pair_orbit_reps(g: &CubicGraph, group: &AutGroup) -> Vec<(Edge, Edge)> {
    let edges = g.edges();
    let mut pairs = Vec::with_capacity(edges.len() * edges.len() / 2);
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            pairs.push((edges[i], edges[j]));
        }
    }
    if group.is_trivial() {
        return pairs;
    }
    let orb = orbits(&pairs, group, |p, &(e, f)| {
        let (x, y) = (p.edge_image(e), p.edge_image(f));
        if x < y {
            (x, y)
        } else {
            (y, x)
        }
    });
    pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| orb[i] == i)
        .map(|(_, &p)| p)
        .collect()
}

fn edge_orbit_reps(g: &CubicGraph, group: &AutGroup) -> Vec<Edge> {
    let edges = g.edges();
    if group.is_trivial() {
        return edges;
    }
    let orb = orbits(&edges, group, |p, &e| p.edge_image(e));
    edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| orb[i] == i)
        .map(|(_, &e)| e)
        .collect()
}

/// Rebuilds the graph encoded by a certificate without colours.
pub fn graph_from_certificate(cert: &[u8]) -> CubicGraph {
    let n = cert[0] as usize;
    let adj: Vec<[u8; 3]> = (0..n)
        .map(|v| [cert[1 + 3 * v], cert[2 + 3 * v], cert[3 + 3 * v]])
        .collect();
    CubicGraph::from_raw(adj)
}

/// Levels of connected cubic graphs (all girths), stored as certificates.
#[derive(Clone, Debug)]
pub struct GraphStore {
    levels: BTreeMap<usize, Vec<Vec<u8>>>,
    cap: usize,
}

impl Default for GraphStore {
    fn default() -> Self {
        Self::new(DEFAULT_BASE_CAP)
    }
}

impl GraphStore {
    pub fn new(cap: usize) -> Self {
        let mut levels = BTreeMap::new();
        levels.insert(
            4,
            alloc::vec![canonical_form(&named::k4(), None).certificate],
        );
        GraphStore { levels, cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Installs a complete level (for instance read back from a cache).
    /// The graphs must be one per class; they are recanonicalised.
    pub fn insert_level(&mut self, n: usize, graphs: &[CubicGraph]) {
        let mut certs: Vec<Vec<u8>> = graphs
            .iter()
            .map(|g| canonical_form(g, None).certificate)
            .collect();
        certs.sort();
        certs.dedup();
        self.levels.insert(n, certs);
    }

    pub fn has_level(&self, n: usize) -> bool {
        self.levels.contains_key(&n)
    }

    /// All connected cubic graphs of order `n`, canonically labelled and
    /// sorted by certificate.
    pub fn full_level(&mut self, n: usize) -> Result<Vec<CubicGraph>, BaseError> {
        self.ensure(n)?;
        Ok(self.levels[&n]
            .iter()
            .map(|c| graph_from_certificate(c))
            .collect())
    }

    /// Number of graphs in a computed level.
    pub fn level_len(&self, n: usize) -> Option<usize> {
        self.levels.get(&n).map(|l| l.len())
    }

    fn ensure(&mut self, n: usize) -> Result<(), BaseError> {
        check_order(n, self.cap)?;
        if self.levels.contains_key(&n) {
            return Ok(());
        }
        if n >= 6 {
            self.ensure(n - 2)?;
        }
        if n >= 8 {
            self.ensure(n - 4)?;
        }
        if n >= 10 {
            self.ensure(n - 6)?;
        }
        let level = self.expand_into(n, 3);
        self.levels.insert(n, level);
        Ok(())
    }

    /// Certificates of order-`n` graphs with girth at least `min_girth`
    /// obtained from the stored lower levels.
    fn expand_into(&self, n: usize, min_girth: usize) -> Vec<Vec<u8>> {
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut consider = |h: CubicGraph| {
            if min_girth <= 3 || has_girth_at_least(&h, min_girth) {
                seen.insert(canonical_form(&h, None).certificate);
            }
        };
        if let Some(prev) = self.levels.get(&(n - 2)) {
            for cert in prev {
                let g = graph_from_certificate(cert);
                let (_, group) = canonical_form_and_group(&g, None);
                let pairs = if min_girth >= 4 {
                    triangle_free_insertion_sites(&g, &group)
                } else {
                    edge_pair_orbit_reps(&g, &group)
                };
                for (e, f) in pairs {
                    consider(devries_expand_c(&g, e, f).expect("distinct edges"));
                }
            }
        }
        // (a) and (b) always create triangles
        if min_girth <= 3 {
            for (back, op) in [
                (
                    4usize,
                    devries_expand_b as fn(&CubicGraph, Edge) -> CubicGraph,
                ),
                (6, devries_expand_a),
            ] {
                if n < 4 + back {
                    continue;
                }
                if let Some(prev) = self.levels.get(&(n - back)) {
                    for cert in prev {
                        let g = graph_from_certificate(cert);
                        let (_, group) = canonical_form_and_group(&g, None);
                        for e in edge_orbit_reps(&g, &group) {
                            consider(op(&g, e));
                        }
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Graphs of order `n` and girth at least `min_girth` (3 or 4). For
    /// `min_girth = 4` only the levels below `n` are completed.
    pub fn generate(&mut self, n: usize, min_girth: usize) -> Result<Vec<CubicGraph>, BaseError> {
        if !(3..=4).contains(&min_girth) {
            return Err(BaseError::BadGirth(min_girth));
        }
        check_order(n, self.cap)?;
        let certs = if min_girth == 3 || self.levels.contains_key(&n) || n < 6 {
            self.ensure(n)?;
            self.levels[&n].clone()
        } else {
            self.ensure(n - 2)?;
            self.expand_into(n, min_girth)
        };
        Ok(certs
            .iter()
            .map(|c| graph_from_certificate(c))
            .filter(|g| has_girth_at_least(g, min_girth))
            .collect())
    }
}

fn check_order(n: usize, cap: usize) -> Result<(), BaseError> {
    if n < 4 || n % 2 == 1 {
        return Err(BaseError::BadOrder(n));
    }
    if n > cap {
        return Err(BaseError::Capacity { order: n, cap });
    }
    Ok(())
}

/// Edge-pair orbit representatives whose insertion yields a triangle-free
/// graph: the edges are disjoint and together meet every triangle.
fn triangle_free_insertion_sites(g: &CubicGraph, group: &AutGroup) -> Vec<(Edge, Edge)> {
    let idx = EdgeIndex::new(g);
    let triangles: Vec<u128> = short_cycles(g, 4)
        .iter()
        .map(|c| idx.cycle_mask(g, c))
        .collect();
    if triangles.len() > 6 {
        // two edges lie on at most six triangles in a cubic graph
        return Vec::new();
    }
    edge_pair_orbit_reps(g, group)
        .into_iter()
        .filter(|&(e, f)| {
            let m = (1u128 << idx.id_of(g, e)) | (1u128 << idx.id_of(g, f));
            !e.shares_vertex(f) && triangles.iter().all(|&t| t & m != 0)
        })
        .collect()
}

/// Graphs of order `n` with girth at least `min_girth` using a fresh store.
pub fn generate_base(n: usize, min_girth: usize) -> Result<Vec<CubicGraph>, BaseError> {
    GraphStore::default().generate(n, min_girth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::certificate;
    use crate::graph::named::*;
    use crate::metrics::girth;

    #[test]
    fn operation_orders() {
        let g = k4();
        assert_eq!(devries_expand_a(&g, Edge::new(0, 1)).order(), 10);
        assert_eq!(devries_expand_b(&g, Edge::new(0, 1)).order(), 8);
        assert_eq!(
            devries_expand_c(&g, Edge::new(0, 1), Edge::new(2, 3))
                .unwrap()
                .order(),
            6
        );
        assert!(devries_expand_c(&g, Edge::new(0, 1), Edge::new(0, 1)).is_none());
    }

    #[test]
    fn k4_expansions() {
        let g = k4();
        let mut certs = BTreeSet::new();
        let edges = g.edges();
        for &e in &edges {
            for &f in &edges {
                if let Some(h) = devries_expand_c(&g, e, f) {
                    certs.insert(certificate(&h));
                }
            }
        }
        assert_eq!(certs.len(), 2);
        assert!(certs.contains(&certificate(&k33())));
        assert!(certs.contains(&certificate(&prism())));
    }

    #[test]
    fn insertion_then_reduction() {
        let g = petersen();
        let h = devries_expand_c(&g, Edge::new(0, 1), Edge::new(7, 9)).unwrap();
        let back = edge_reduce(&h, Edge::new(10, 11)).unwrap();
        assert_eq!(certificate(&back), certificate(&g));
        assert!(edge_reduce(&k4(), Edge::new(0, 1)).is_none());
    }

    #[test]
    fn small_levels() {
        let mut store = GraphStore::new(14);
        let counts: Vec<usize> = (4..=12)
            .step_by(2)
            .map(|n| store.full_level(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 5, 19, 85]);
        let g4 = store.generate(14, 4).unwrap();
        let heawood = certificate(&heawood());
        assert_eq!(g4.iter().filter(|g| certificate(g) == heawood).count(), 1);
        assert!(g4.iter().all(|g| girth(g) >= 4));
        assert_eq!(
            store.generate(16, 3),
            Err(BaseError::Capacity { order: 16, cap: 14 })
        );
    }
}
