//! Canonical labelling and automorphism groups.
//!
//! Individualisation-refinement search: the root partition is seeded by
//! optional vertex colours and by the number of short cycles through each
//! vertex, refined to an equitable partition, and then the first smallest
//! non-singleton cell is individualised vertex by vertex. Every node carries
//! a hash of its refinement trace; the canonical leaf is the one with the
//! smallest (trace sequence, certificate) pair. Leaves with equal
//! certificates give automorphisms, which prune equivalent subtrees.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{bit, members, CubicGraph, Edge, VertexSet};

/// A bijection on vertex indices: `v` is mapped to `self.image(v)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    /// Panics unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: &[usize]) -> Self {
        let mut seen: u64 = 0;
        for &v in images {
            assert!(v < images.len() && seen & bit(v) == 0, "not a permutation");
            seen |= bit(v);
        }
        Permutation(images.iter().map(|&v| v as u8).collect())
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&v| v as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0u8; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w as usize] = v as u8;
        }
        Permutation(inv)
    }

    /// `self` after `other`: `v -> self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&w| self.0[w as usize]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w as usize)
    }

    pub fn edge_image(&self, e: Edge) -> Edge {
        Edge::new(self.image(e.u()), self.image(e.v()))
    }

    pub fn is_automorphism_of(&self, g: &CubicGraph) -> bool {
        self.0.len() == g.order()
            && (0..g.order()).all(|v| {
                g.neighbours(v)
                    .iter()
                    .all(|&w| g.adjacent(self.image(v), self.image(w)))
            })
    }
}

/// Canonical labelling of a graph: `labelling.image(v)` is the canonical
/// label of `v`, and `certificate` encodes the relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub labelling: Permutation,
    pub certificate: Vec<u8>,
}

impl CanonicalForm {
    /// The graph relabelled canonically.
    pub fn canonical_graph(&self, g: &CubicGraph) -> CubicGraph {
        let perm: Vec<usize> = self.labelling.images().collect();
        g.relabel(&perm)
    }
}

/// Automorphism group given by generators, with its exact order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    pub generators: Vec<Permutation>,
    pub order: u128,
}

impl AutGroup {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// For every vertex, the smallest vertex of its orbit.
    pub fn vertex_orbits(&self, n: usize) -> Vec<usize> {
        vertex_orbits(n, self.generators.iter())
    }

    /// The orbit of an edge, sorted.
    pub fn edge_orbit(&self, e: Edge) -> Vec<Edge> {
        let mut orbit = alloc::vec![e];
        let mut i = 0;
        while i < orbit.len() {
            let f = orbit[i];
            for p in &self.generators {
                let h = p.edge_image(f);
                if !orbit.contains(&h) {
                    orbit.push(h);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }
}

/// Orbit representatives (smallest member) of the group generated by `gens`.
pub fn vertex_orbits<'a>(n: usize, gens: impl Iterator<Item = &'a Permutation>) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for p in gens {
        for v in 0..n {
            uf.union(v, p.image(v));
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

/// Partition `objects` into orbits under the group generated by
/// `group.generators`, where `apply(p, x)` is the image of `x` under `p`.
/// Returns, for each object, the index of the first object of its orbit.
///
/// Panics if an image is not in `objects`.
pub fn orbits<T: Ord + Clone>(
    objects: &[T],
    group: &AutGroup,
    apply: impl Fn(&Permutation, &T) -> T,
) -> Vec<usize> {
    let mut sorted: Vec<(T, usize)> = objects.iter().cloned().zip(0..).collect();
    sorted.sort();
    let mut uf = UnionFind::new(objects.len());
    for p in &group.generators {
        for (i, x) in objects.iter().enumerate() {
            let y = apply(p, x);
            let j = sorted
                .binary_search_by(|probe| probe.0.cmp(&y))
                .map(|k| sorted[k].1)
                .expect("object set not closed under the group");
            uf.union(i, j);
        }
    }
    (0..objects.len()).map(|i| uf.find(i)).collect()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the two classes; the smaller root survives.
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// Canonical form only.
pub fn canonical_form(g: &CubicGraph, colours: Option<&[u8]>) -> CanonicalForm {
    canonical_form_and_group(g, colours).0
}

/// Automorphism group (colour-preserving if `colours` is given).
pub fn automorphisms(g: &CubicGraph) -> AutGroup {
    canonical_form_and_group(g, None).1
}

/// Canonical form and automorphism group from one search.
pub fn canonical_form_and_group(
    g: &CubicGraph,
    colours: Option<&[u8]>,
) -> (CanonicalForm, AutGroup) {
    let n = g.order();
    if let Some(c) = colours {
        assert_eq!(c.len(), n, "colour vector length mismatch");
    }
    let mut search = Search::new(g, colours);
    let root = search.root_partition();
    search.traces.push(root.1);
    search.run(root.0, 0, true, Ordering::Equal);
    search.finish()
}

/// Certificate only; convenient for deduplication.
pub fn certificate(g: &CubicGraph) -> Vec<u8> {
    canonical_form(g, None).certificate
}

/// Smallest canonical label over the orbit of `v`.
pub fn vertex_orbit_rank(cf: &CanonicalForm, group: &AutGroup, v: usize) -> usize {
    let orb = group.vertex_orbits(cf.labelling.len());
    let r = orb[v];
    (0..orb.len())
        .filter(|&u| orb[u] == r)
        .map(|u| cf.labelling.image(u))
        .min()
        .unwrap()
}

/// Lexicographically smallest canonical label pair `(x, y)`, `x < y`, over
/// the orbit of `e`.
pub fn edge_orbit_rank(cf: &CanonicalForm, group: &AutGroup, e: Edge) -> (usize, usize) {
    group
        .edge_orbit(e)
        .into_iter()
        .map(|f| {
            let (a, b) = (cf.labelling.image(f.u()), cf.labelling.image(f.v()));
            (a.min(b), a.max(b))
        })
        .min()
        .unwrap()
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    let mut z = (h ^ x).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Ordered partition. Cells are identified by their start position in
/// `lab`; `end[s]` is the exclusive end of the cell starting at `s`.
#[derive(Clone)]
struct Partition {
    lab: [u8; 64],
    end: [u8; 64],
    cell_of: [u8; 64],
    mask: [VertexSet; 64],
    cells: usize,
}

impl Partition {
    fn set_cell(&mut self, start: usize, verts: VertexSet) -> usize {
        let mut p = start;
        for v in members(verts) {
            self.lab[p] = v as u8;
            self.cell_of[v] = start as u8;
            p += 1;
        }
        self.end[start] = p as u8;
        self.mask[start] = verts;
        p
    }
}

struct Leaf {
    lab: Vec<u8>,
    cert: Vec<u8>,
    traces: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a CubicGraph,
    n: usize,
    colours: Option<&'a [u8]>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    best_version: usize,
    gens: Vec<Permutation>,
    path: Vec<usize>,
    traces: Vec<u64>,
    queue: Vec<usize>,
    in_queue: u64,
    cert_buf: Vec<u8>,
}

impl<'a> Search<'a> {
    fn new(g: &'a CubicGraph, colours: Option<&'a [u8]>) -> Self {
        Search {
            g,
            n: g.order(),
            colours,
            first: None,
            best: None,
            best_version: 0,
            gens: Vec::new(),
            path: Vec::new(),
            traces: Vec::new(),
            queue: Vec::with_capacity(64),
            in_queue: 0,
            cert_buf: Vec::with_capacity(3 * 64 + 64),
        }
    }

    fn root_partition(&mut self) -> (Partition, u64) {
        let n = self.n;
        let inv = cycle_invariant(self.g);
        let mut classes: BTreeMap<(u8, u64), VertexSet> = BTreeMap::new();
        for v in 0..n {
            let c = self.colours.map_or(0, |c| c[v]);
            *classes.entry((c, inv[v])).or_insert(0) |= bit(v);
        }
        let mut p = Partition {
            lab: [0; 64],
            end: [0; 64],
            cell_of: [0; 64],
            mask: [0; 64],
            cells: 0,
        };
        let mut trace = 0u64;
        let mut start = 0;
        self.queue.clear();
        self.in_queue = 0;
        for (&(c, i), &verts) in &classes {
            trace = mix(trace, ((c as u64) << 56) ^ i);
            trace = mix(trace, verts.count_ones() as u64);
            self.queue.push(start);
            self.in_queue |= bit(start);
            start = p.set_cell(start, verts);
            p.cells += 1;
        }
        let t = self.refine(&mut p, trace);
        (p, t)
    }

    /// Refines `p` to an equitable partition using the queued splitters.
    /// Returns the trace hash.
    fn refine(&mut self, p: &mut Partition, mut trace: u64) -> u64 {
        let g = self.g;
        let mut head = 0;
        let mut frags: [VertexSet; 4];
        while head < self.queue.len() {
            let ws = self.queue[head];
            head += 1;
            self.in_queue &= !bit(ws);
            if p.cells == self.n {
                break;
            }
            let w = p.mask[ws];
            let touched = g.neighbourhood(w);
            // starts of non-singleton cells meeting the neighbourhood, in order
            let mut starts: u64 = 0;
            for v in members(touched) {
                let s = p.cell_of[v] as usize;
                if p.end[s] as usize - s > 1 {
                    starts |= bit(s);
                }
            }
            for s in members(starts) {
                let x = p.mask[s];
                frags = [0; 4];
                for v in members(x) {
                    frags[(g.neighbour_mask(v) & w).count_ones() as usize] |= bit(v);
                }
                let nonempty = frags.iter().filter(|&&f| f != 0).count();
                if nonempty == 1 {
                    continue;
                }
                trace = mix(trace, ((ws as u64) << 8) | s as u64);
                let was_queued = self.in_queue & bit(s) != 0;
                let mut largest = 0;
                let mut largest_size = 0;
                for (c, &f) in frags.iter().enumerate() {
                    let sz = f.count_ones();
                    if sz > largest_size {
                        largest_size = sz;
                        largest = c;
                    }
                }
                let mut start = s;
                for (c, &f) in frags.iter().enumerate() {
                    if f == 0 {
                        continue;
                    }
                    trace = mix(trace, ((c as u64) << 8) | f.count_ones() as u64);
                    let next = p.set_cell(start, f);
                    if start != s {
                        p.cells += 1;
                    }
                    let enqueue = if was_queued { start != s } else { c != largest };
                    if enqueue && self.in_queue & bit(start) == 0 {
                        self.queue.push(start);
                        self.in_queue |= bit(start);
                    }
                    start = next;
                }
            }
        }
        self.queue.clear();
        self.in_queue = 0;
        mix(trace, p.cells as u64)
    }

    fn target_cell(&self, p: &Partition) -> usize {
        let mut best = usize::MAX;
        let mut best_size = usize::MAX;
        let mut s = 0;
        while s < self.n {
            let e = p.end[s] as usize;
            let sz = e - s;
            if sz > 1 && sz < best_size {
                best = s;
                best_size = sz;
            }
            s = e;
        }
        best
    }

    fn individualise(&mut self, p: &Partition, s: usize, v: usize) -> (Partition, u64) {
        let mut c = p.clone();
        let rest = c.mask[s] & !bit(v);
        c.set_cell(s, bit(v));
        c.set_cell(s + 1, rest);
        c.cells += 1;
        self.queue.clear();
        self.queue.push(s);
        self.in_queue = bit(s);
        let t = self.refine(&mut c, mix(s as u64, 0x51));
        (c, t)
    }

    fn certificate_of(&mut self, lab: &[u8]) {
        let n = self.n;
        let mut inv = [0u8; 64];
        for (i, &v) in lab.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        self.cert_buf.clear();
        self.cert_buf.push(n as u8);
        if let Some(c) = self.colours {
            for &v in lab {
                self.cert_buf.push(c[v as usize]);
            }
        }
        for &v in lab {
            let nb = self.g.raw_neighbours(v as usize);
            let mut l = [
                inv[nb[0] as usize],
                inv[nb[1] as usize],
                inv[nb[2] as usize],
            ];
            l.sort_unstable();
            self.cert_buf.extend_from_slice(&l);
        }
    }

    /// Explores the subtree at `p` (depth `level`). Returns `Some(d)` to
    /// abandon everything below depth `d` and resume the loop there.
    fn run(
        &mut self,
        p: Partition,
        level: usize,
        eq_first: bool,
        mut cmp: Ordering,
    ) -> Option<usize> {
        if p.cells == self.n {
            return self.leaf(&p, eq_first, cmp);
        }
        let s = self.target_cell(&p);
        let cell = p.mask[s];
        let mut explored: VertexSet = 0;
        let mut orbit_cache: Option<(usize, Vec<usize>)> = None;
        for v in members(cell) {
            if explored != 0 {
                // skip v if an automorphism fixing the path maps it to an explored child
                let fresh = match &orbit_cache {
                    Some((k, _)) => *k != self.gens.len(),
                    None => true,
                };
                if fresh {
                    let fixing: Vec<&Permutation> = self
                        .gens
                        .iter()
                        .filter(|q| self.path.iter().all(|&u| q.image(u) == u))
                        .collect();
                    orbit_cache =
                        Some((self.gens.len(), vertex_orbits(self.n, fixing.into_iter())));
                }
                let orb = &orbit_cache.as_ref().unwrap().1;
                if members(explored).any(|u| orb[u] == orb[v]) {
                    continue;
                }
            }
            let (child, t) = self.individualise(&p, s, v);
            let child_eq_first = match &self.first {
                None => true,
                Some(f) => eq_first && f.traces.get(level + 1) == Some(&t),
            };
            let child_cmp = match (&self.best, cmp) {
                (None, _) => Ordering::Equal,
                (Some(b), Ordering::Equal) => match b.traces.get(level + 1) {
                    Some(bt) => t.cmp(bt),
                    None => Ordering::Greater,
                },
                (_, c) => c,
            };
            if !child_eq_first && child_cmp == Ordering::Greater {
                explored |= bit(v);
                continue;
            }
            let version = self.best_version;
            self.path.push(v);
            self.traces.push(t);
            let r = self.run(child, level + 1, child_eq_first, child_cmp);
            self.path.pop();
            self.traces.pop();
            explored |= bit(v);
            if self.best_version != version {
                cmp = Ordering::Equal;
            }
            if let Some(d) = r {
                if d < level {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, p: &Partition, eq_first: bool, cmp: Ordering) -> Option<usize> {
        let lab: Vec<u8> = p.lab[..self.n].to_vec();
        self.certificate_of(&lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab,
                cert: self.cert_buf.clone(),
                traces: self.traces.clone(),
                path: self.path.clone(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
                traces: leaf.traces.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            self.best_version += 1;
            return None;
        };
        if eq_first && self.cert_buf == first.cert {
            let gen = automorphism_between(&lab, &first.lab);
            let d = divergence(&self.path, &first.path);
            self.gens.push(gen);
            return Some(d);
        }
        let best = self.best.as_ref().unwrap();
        let ord = match cmp {
            Ordering::Equal => self.cert_buf.as_slice().cmp(best.cert.as_slice()),
            c => c,
        };
        match ord {
            Ordering::Less => {
                self.best = Some(Leaf {
                    lab,
                    cert: self.cert_buf.clone(),
                    traces: self.traces.clone(),
                    path: self.path.clone(),
                });
                self.best_version += 1;
                None
            }
            Ordering::Equal => {
                let gen = automorphism_between(&lab, &best.lab);
                let d = divergence(&self.path, &best.path);
                self.gens.push(gen);
                Some(d)
            }
            Ordering::Greater => None,
        }
    }

    fn finish(self) -> (CanonicalForm, AutGroup) {
        let n = self.n;
        let first = self.first.expect("search visits at least one leaf");
        let best = self.best.expect("search visits at least one leaf");
        let mut labelling = alloc::vec![0u8; n];
        for (i, &v) in best.lab.iter().enumerate() {
            labelling[v as usize] = i as u8;
        }
        // |Aut| is the product over the first path of the orbit length of
        // the individualised vertex under the pointwise stabiliser of the
        // earlier ones.
        let mut order: u128 = 1;
        for (l, &v) in first.path.iter().enumerate() {
            let prefix = &first.path[..l];
            let fixing = self
                .gens
                .iter()
                .filter(|q| prefix.iter().all(|&u| q.image(u) == u));
            let orb = vertex_orbits(n, fixing);
            order *= orb.iter().filter(|&&r| r == orb[v]).count() as u128;
        }
        (
            CanonicalForm {
                labelling: Permutation(labelling),
                certificate: best.cert,
            },
            AutGroup {
                generators: self.gens,
                order,
            },
        )
    }
}

/// The automorphism sending `from[i]` to `to[i]`.
fn automorphism_between(from: &[u8], to: &[u8]) -> Permutation {
    let mut images = alloc::vec![0u8; from.len()];
    for (i, &v) in from.iter().enumerate() {
        images[v as usize] = to[i];
    }
    Permutation(images)
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Per-vertex invariant packing the numbers of cycles of length 3 to 7
/// through the vertex.
fn cycle_invariant(g: &CubicGraph) -> Vec<u64> {
    const MAX_LEN: usize = 7;
    // the two shortest cycle lengths only, which keeps dense graphs cheap
    let limit = MAX_LEN.min(crate::metrics::girth(g) + 1);
    // balls[r] = vertices within distance r of the start vertex
    #[allow(clippy::too_many_arguments)]
    fn walk(
        g: &CubicGraph,
        s: usize,
        v: usize,
        len: usize,
        limit: usize,
        used: VertexSet,
        balls: &[VertexSet; MAX_LEN],
        counts: &mut [u64; MAX_LEN + 1],
    ) {
        for w in members(g.neighbour_mask(v)) {
            if w == s {
                if len >= 3 {
                    counts[len] += 1;
                }
            } else if used & bit(w) == 0 && len < limit && balls[limit - len] & bit(w) != 0 {
                walk(g, s, w, len + 1, limit, used | bit(w), balls, counts);
            }
        }
    }
    (0..g.order())
        .map(|v| {
            let mut balls = [bit(v); MAX_LEN];
            for r in 1..MAX_LEN {
                balls[r] = balls[r - 1] | g.neighbourhood(balls[r - 1]);
            }
            let mut counts = [0u64; MAX_LEN + 1];
            walk(g, v, v, 1, limit, bit(v), &balls, &mut counts);
            // each cycle is traversed in both directions
            (3..=MAX_LEN).fold(0u64, |acc, l| (acc << 12) | ((counts[l] / 2) & 0xfff))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn shuffled(g: &CubicGraph, seed: u64) -> CubicGraph {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = mix(s, i as u64);
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        g.relabel(&perm)
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&k4()).order, 24);
        assert_eq!(automorphisms(&k33()).order, 72);
        assert_eq!(automorphisms(&prism()).order, 12);
        assert_eq!(automorphisms(&cube()).order, 48);
        assert_eq!(automorphisms(&petersen()).order, 120);
        assert_eq!(automorphisms(&heawood()).order, 336);
        assert_eq!(automorphisms(&bridged()).order, 32);
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [k4(), k33(), petersen(), heawood(), cube()] {
            for p in automorphisms(&g).generators {
                assert!(p.is_automorphism_of(&g));
            }
        }
    }

    #[test]
    fn certificates_are_invariant() {
        for g in [
            k4(),
            k33(),
            prism(),
            cube(),
            petersen(),
            heawood(),
            bridged(),
        ] {
            let c = certificate(&g);
            for seed in 0..30 {
                let h = shuffled(&g, seed);
                let cf = canonical_form(&h, None);
                assert_eq!(cf.certificate, c);
                assert_eq!(
                    cf.canonical_graph(&h).edges(),
                    canonical_form(&g, None).canonical_graph(&g).edges()
                );
            }
        }
        assert_ne!(certificate(&k33()), certificate(&prism()));
    }

    #[test]
    fn colours_are_respected() {
        let g = petersen();
        let mut col = alloc::vec![0u8; 10];
        col[0] = 1;
        let (_, grp) = canonical_form_and_group(&g, Some(&col));
        assert_eq!(grp.order, 12);
        let mut col2 = alloc::vec![0u8; 10];
        col2[7] = 1;
        assert_eq!(
            canonical_form(&g, Some(&col)).certificate,
            canonical_form(&g, Some(&col2)).certificate
        );
        let mut col3 = col.clone();
        col3[1] = 1;
        let mut col4 = col.clone();
        col4[6] = 1;
        // adjacent pair vs non-adjacent pair
        assert_ne!(
            canonical_form(&g, Some(&col3)).certificate,
            canonical_form(&g, Some(&col4)).certificate
        );
    }

    #[test]
    fn orbit_queries() {
        let g = k33();
        let grp = automorphisms(&g);
        let mut pairs = Vec::new();
        for a in 0..6usize {
            for b in a + 1..6 {
                pairs.push((a, b));
            }
        }
        let orb = orbits(&pairs, &grp, |p, &(a, b)| {
            let (x, y) = (p.image(a), p.image(b));
            (x.min(y), x.max(y))
        });
        let mut reps = orb.clone();
        reps.sort();
        reps.dedup();
        assert_eq!(reps.len(), 2);
        let p = petersen();
        let cf = canonical_form(&p, None);
        let grp = automorphisms(&p);
        for v in 0..10 {
            assert_eq!(vertex_orbit_rank(&cf, &grp, v), 0);
        }
        assert_eq!(grp.edge_orbit(Edge::new(0, 1)).len(), 15);
        let h = heawood();
        let (cf, grp) = canonical_form_and_group(&h, None);
        let r = edge_orbit_rank(&cf, &grp, Edge::new(0, 1));
        for e in h.edges() {
            assert_eq!(edge_orbit_rank(&cf, &grp, e), r);
        }
    }
}
