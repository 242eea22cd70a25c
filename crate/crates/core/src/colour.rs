//! 3-edge-colourings, colour cycles, the prune look-ahead predicates and the
//! snark predicate.

use alloc::vec::Vec;

use crate::graph::{bit, members, CubicGraph, Edge, EdgeIndex, EdgeQuadruple, EdgeSet, VertexSet};
use crate::metrics::has_girth_at_least;

/// A proper 3-edge-colouring with colours 1, 2, 3, indexed by the edge ids
/// of an [`EdgeIndex`] of the same graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    colours: Vec<u8>,
    /// `via[v][c - 1]` is the neighbour of `v` across its edge of colour `c`.
    via: Vec<[u8; 3]>,
}

impl EdgeColouring {
    /// Colour of the edge with id `id`.
    #[inline]
    pub fn colour(&self, id: usize) -> u8 {
        self.colours[id]
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    /// Neighbour of `v` across its edge of colour `c`.
    #[inline]
    pub fn via(&self, v: usize, c: u8) -> usize {
        self.via[v][c as usize - 1] as usize
    }

    /// Builds a colouring from per-edge colours, checking properness.
    pub fn from_colours(g: &CubicGraph, idx: &EdgeIndex, colours: Vec<u8>) -> Option<Self> {
        if colours.len() != idx.len() || colours.iter().any(|&c| !(1..=3).contains(&c)) {
            return None;
        }
        let mut via = alloc::vec![[u8::MAX; 3]; g.order()];
        for v in 0..g.order() {
            for (slot, &w) in g.neighbours(v).iter().enumerate() {
                let c = colours[idx.slot_id(v, slot)] as usize - 1;
                if via[v][c] != u8::MAX {
                    return None;
                }
                via[v][c] = w as u8;
            }
        }
        Some(EdgeColouring { colours, via })
    }

    /// Whether the colouring is proper on `g`.
    pub fn is_proper(&self, g: &CubicGraph, idx: &EdgeIndex) -> bool {
        Self::from_colours(g, idx, self.colours.clone()).is_some()
    }

    /// The three colour classes as edge masks, ordered by their smallest
    /// edge id. Two colourings induce the same partition iff these agree.
    pub fn partition(&self) -> [EdgeSet; 3] {
        let mut classes = [0u128; 3];
        for (id, &c) in self.colours.iter().enumerate() {
            classes[c as usize - 1] |= 1u128 << id;
        }
        classes.sort_by_key(|m| m.trailing_zeros());
        classes
    }
}

/// Finds a 3-edge-colouring, or `None` if the chromatic index is 4.
/// Different `variant` values change the branching order so that they tend
/// to return different colourings.
pub fn find_colouring(g: &CubicGraph, idx: &EdgeIndex, variant: u32) -> Option<EdgeColouring> {
    let mut s = ColourSearch::new(g, idx, variant);
    if s.solve() {
        EdgeColouring::from_colours(g, idx, s.col)
    } else {
        None
    }
}

/// 3 or 4.
pub fn chromatic_index(g: &CubicGraph) -> u8 {
    let idx = EdgeIndex::new(g);
    if find_colouring(g, &idx, 0).is_some() {
        3
    } else {
        4
    }
}

pub fn is_colourable(g: &CubicGraph) -> bool {
    chromatic_index(g) == 3
}

/// Up to `max` colourings that are pairwise distinct as partitions. Each
/// duplicate costs one of `retries` extra attempts.
pub fn distinct_colourings(
    g: &CubicGraph,
    idx: &EdgeIndex,
    max: usize,
    retries: usize,
) -> Vec<EdgeColouring> {
    let mut out: Vec<EdgeColouring> = Vec::new();
    let mut parts: Vec<[EdgeSet; 3]> = Vec::new();
    let mut misses = 0;
    let mut variant = 0;
    while out.len() < max && misses <= retries {
        let Some(c) = find_colouring(g, idx, variant) else {
            break;
        };
        variant += 1;
        let p = c.partition();
        if parts.contains(&p) {
            misses += 1;
        } else {
            parts.push(p);
            out.push(c);
        }
    }
    out
}

struct ColourSearch<'a> {
    start: usize,
    idx: &'a EdgeIndex,
    col: Vec<u8>,
    used: Vec<u8>,
    order: Vec<usize>,
    colour_order: [u8; 3],
    trail: Vec<usize>,
    stack: Vec<usize>,
}

impl<'a> ColourSearch<'a> {
    fn new(g: &'a CubicGraph, idx: &'a EdgeIndex, variant: u32) -> Self {
        let n = g.order();
        // breadth-first edge order from a variant-dependent start vertex
        let start = if variant == 0 {
            0
        } else {
            (variant as usize * 7 + 3) % n
        };
        let mut order = Vec::with_capacity(idx.len());
        let mut seen_e: EdgeSet = 0;
        let mut seen_v: VertexSet = bit(start);
        let mut queue = alloc::vec![start];
        let mut head = 0;
        let rot = (variant / 3) as usize;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for k in 0..3 {
                let slot = (k + rot + v) % 3;
                let id = idx.slot_id(v, slot);
                if seen_e & (1u128 << id) == 0 {
                    seen_e |= 1u128 << id;
                    order.push(id);
                }
                let w = g.neighbours(v)[slot];
                if seen_v & bit(w) == 0 {
                    seen_v |= bit(w);
                    queue.push(w);
                }
            }
        }
        let colour_order = match variant % 3 {
            0 => [1, 2, 3],
            1 => [2, 3, 1],
            _ => [3, 1, 2],
        };
        ColourSearch {
            start,
            idx,
            col: alloc::vec![0; idx.len()],
            used: alloc::vec![0; n],
            order,
            colour_order,
            trail: Vec::with_capacity(idx.len()),
            stack: Vec::with_capacity(n),
        }
    }

    fn assign(&mut self, id: usize, c: u8) -> bool {
        let (u, v) = self.idx.edge(id).ends();
        let b = 1u8 << c;
        if (self.used[u] | self.used[v]) & b != 0 {
            return false;
        }
        self.col[id] = c;
        self.used[u] |= b;
        self.used[v] |= b;
        self.trail.push(id);
        self.stack.push(u);
        self.stack.push(v);
        true
    }

    /// A vertex with two coloured edges forces the colour of the third.
    fn propagate(&mut self) -> bool {
        while let Some(v) = self.stack.pop() {
            if self.used[v].count_ones() != 2 {
                continue;
            }
            let missing = (0b1110 & !self.used[v]).trailing_zeros() as u8;
            let ids = self.idx.incident(v);
            let Some(&id) = ids.iter().find(|&&id| self.col[id] == 0) else {
                continue;
            };
            if !self.assign(id, missing) {
                self.stack.clear();
                return false;
            }
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let id = self.trail.pop().unwrap();
            let (u, v) = self.idx.edge(id).ends();
            let b = !(1u8 << self.col[id]);
            self.used[u] &= b;
            self.used[v] &= b;
            self.col[id] = 0;
        }
    }

    fn solve(&mut self) -> bool {
        // the three edges at the start vertex can be fixed
        let ids = self.idx.incident(self.start);
        for (k, &id) in ids.iter().enumerate() {
            if self.col[id] == 0 && !self.assign(id, k as u8 + 1) {
                return false;
            }
        }
        if !self.propagate() {
            return false;
        }
        self.branch(0)
    }

    fn branch(&mut self, mut pos: usize) -> bool {
        while pos < self.order.len() && self.col[self.order[pos]] != 0 {
            pos += 1;
        }
        if pos == self.order.len() {
            return true;
        }
        let id = self.order[pos];
        let (u, v) = self.idx.edge(id).ends();
        let blocked = self.used[u] | self.used[v];
        for k in 0..3 {
            let c = self.colour_order[k];
            if blocked & (1 << c) != 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(id, c) && self.propagate() && self.branch(pos + 1) {
                return true;
            }
            self.stack.clear();
            self.undo(mark);
        }
        false
    }
}

/// One two-coloured cycle, as a closed vertex walk `v_0 .. v_{L-1}` whose
/// edges are `f_i = v_i v_{i+1}` (indices mod `L`), with prefix masks.
#[derive(Clone, Debug)]
struct ColourCycle {
    verts: Vec<u8>,
    vprefix: Vec<VertexSet>,
    eprefix: Vec<EdgeSet>,
}

impl ColourCycle {
    fn len(&self) -> usize {
        self.verts.len()
    }

    /// Vertices `v_i ..= v_j` walking forward (cyclically).
    fn vrange(&self, i: usize, j: usize) -> VertexSet {
        let l = self.len();
        let (i, j) = (i % l, j % l);
        let upto = |k: usize| self.vprefix[k];
        if i <= j {
            upto(j) & !if i == 0 { 0 } else { upto(i - 1) }
        } else {
            upto(l - 1) & !(upto(i - 1) & !upto(j))
        }
    }

    /// Edges `f_i ..= f_j` walking forward (cyclically).
    fn erange(&self, i: usize, j: usize) -> EdgeSet {
        let l = self.len();
        let (i, j) = (i % l, j % l);
        let upto = |k: usize| self.eprefix[k];
        if i <= j {
            upto(j) & !if i == 0 { 0 } else { upto(i - 1) }
        } else {
            upto(l - 1) & !(upto(i - 1) & !upto(j))
        }
    }
}

/// Colour pair index: 0 = {1,2}, 1 = {1,3}, 2 = {2,3}.
#[inline]
fn pair_index(a: u8, b: u8) -> usize {
    (a + b - 3) as usize
}

/// Position data of a colouring's two-coloured cycles, supporting
/// constant-time path queries for the prune predicates.
#[derive(Clone, Debug)]
pub struct ColourCycles {
    colours: Vec<u8>,
    cycles: [Vec<ColourCycle>; 3],
    /// `place[pair][edge id] = (cycle, position)`, `u16::MAX` if the edge's
    /// colour is not in the pair.
    place: [Vec<(u16, u16)>; 3],
    ends: Vec<(u8, u8)>,
}

impl ColourCycles {
    pub fn new(g: &CubicGraph, idx: &EdgeIndex, col: &EdgeColouring) -> Self {
        let m = idx.len();
        let mut cycles: [Vec<ColourCycle>; 3] = Default::default();
        let mut place: [Vec<(u16, u16)>; 3] =
            core::array::from_fn(|_| alloc::vec![(u16::MAX, 0); m]);
        for (a, b) in [(1u8, 2u8), (1, 3), (2, 3)] {
            let p = pair_index(a, b);
            let mut seen: VertexSet = 0;
            for s in 0..g.order() {
                if seen & bit(s) != 0 {
                    continue;
                }
                let mut verts = Vec::new();
                let mut vprefix = Vec::new();
                let mut eprefix = Vec::new();
                let (mut v, mut c) = (s, a);
                let (mut vm, mut em): (VertexSet, EdgeSet) = (0, 0);
                loop {
                    seen |= bit(v);
                    let w = col.via(v, c);
                    let id = idx.id(g, v, w);
                    place[p][id] = (cycles[p].len() as u16, verts.len() as u16);
                    verts.push(v as u8);
                    vm |= bit(v);
                    em |= 1u128 << id;
                    vprefix.push(vm);
                    eprefix.push(em);
                    v = w;
                    c = if c == a { b } else { a };
                    if v == s {
                        break;
                    }
                }
                cycles[p].push(ColourCycle {
                    verts,
                    vprefix,
                    eprefix,
                });
            }
        }
        let ends = idx
            .edges()
            .iter()
            .map(|e| (e.u() as u8, e.v() as u8))
            .collect();
        ColourCycles {
            colours: col.colours.clone(),
            cycles,
            place,
            ends,
        }
    }

    #[inline]
    fn colour(&self, id: usize) -> u8 {
        self.colours[id]
    }

    /// Whether edges `e` and `f` lie on a common two-coloured cycle.
    pub fn same_cycle(&self, e: usize, f: usize) -> bool {
        if e == f {
            return true;
        }
        (0..3).any(|p| {
            let (ce, _) = self.place[p][e];
            ce != u16::MAX && ce == self.place[p][f].0
        })
    }

    /// The path that starts with edge `from`, leaves it through vertex
    /// `via`, follows the cycle of colour pair `pair` and ends with edge
    /// `to`. Returns its vertex and edge sets, or `None` if `to` is not on
    /// that cycle.
    fn walk(
        &self,
        pair: usize,
        from: usize,
        via: usize,
        to: usize,
    ) -> Option<(VertexSet, EdgeSet)> {
        let (cf, pf) = self.place[pair][from];
        let (ct, pt) = self.place[pair][to];
        if cf == u16::MAX || cf != ct || from == to {
            return None;
        }
        let cyc = &self.cycles[pair][cf as usize];
        let l = cyc.len();
        let (pf, pt) = (pf as usize, pt as usize);
        // a walk that returns to its first vertex is not a path
        if cyc.verts[(pf + 1) % l] as usize == via {
            ((pt + 1) % l != pf).then(|| (cyc.vrange(pf, pt + 1), cyc.erange(pf, pt)))
        } else {
            ((pf + 1) % l != pt).then(|| (cyc.vrange(pt, pf + 1), cyc.erange(pt, pf)))
        }
    }

    /// The path that starts at vertex `v` with its edge `first` and follows
    /// the cycle of colour pair `pair` until it ends with edge `to`.
    fn walk_from_vertex(
        &self,
        pair: usize,
        v: usize,
        first: usize,
        to: usize,
    ) -> Option<(VertexSet, EdgeSet)> {
        let (cf, pf) = self.place[pair][first];
        let (ct, pt) = self.place[pair][to];
        if cf == u16::MAX || cf != ct {
            return None;
        }
        let cyc = &self.cycles[pair][cf as usize];
        let l = cyc.len();
        let (pf, pt) = (pf as usize, pt as usize);
        if cyc.verts[pf] as usize == v {
            ((pt + 1) % l != pf).then(|| (cyc.vrange(pf, pt + 1), cyc.erange(pf, pt)))
        } else {
            debug_assert_eq!(cyc.verts[(pf + 1) % l] as usize, v);
            ((pf + 1) % l != pt).then(|| (cyc.vrange(pt, pf + 1), cyc.erange(pt, pf)))
        }
    }

    #[inline]
    fn edge_mask(&self, id: usize) -> VertexSet {
        let (a, b) = self.ends[id];
        bit(a as usize) | bit(b as usize)
    }

    /// Prune-path with roles fixed: `e2` in the middle, the part towards
    /// `e1` uses colours `col(e2), c1`, the part towards `e3` uses
    /// `col(e2), c3`.
    fn prune_path_roles(&self, e1: usize, e2: usize, e3: usize) -> bool {
        let c2 = self.colour(e2);
        let (x, y) = self.ends[e2];
        for c1 in 1..=3u8 {
            if c1 == c2 {
                continue;
            }
            let c3 = 6 - c1 - c2;
            let (p1, p3) = (
                pair_index(c1.min(c2), c1.max(c2)),
                pair_index(c3.min(c2), c3.max(c2)),
            );
            for (a, b) in [(x, y), (y, x)] {
                let Some((m1, _)) = self.walk(p1, e2, a as usize, e1) else {
                    continue;
                };
                let Some((m3, _)) = self.walk(p3, e2, b as usize, e3) else {
                    continue;
                };
                if m1 & m3 == self.edge_mask(e2) {
                    return true;
                }
            }
        }
        false
    }

    /// Prune-tree with roles fixed: the branch vertex lies on `e1`.
    fn prune_tree_roles(
        &self,
        e1: usize,
        e2: usize,
        e3: usize,
        g: &CubicGraph,
        idx: &EdgeIndex,
    ) -> bool {
        let c1 = self.colour(e1);
        let (a, b) = self.ends[e1];
        for (v, w) in [(a as usize, b as usize), (b as usize, a as usize)] {
            for c2 in 1..=3u8 {
                if c2 == c1 {
                    continue;
                }
                let c3 = 6 - c1 - c2;
                let f2 = idx.id(g, v, self.via_colour(g, idx, v, c2));
                let f3 = idx.id(g, v, self.via_colour(g, idx, v, c3));
                let p12 = pair_index(c1.min(c2), c1.max(c2));
                let p23 = pair_index(c2.min(c3), c2.max(c3));
                let Some((m2, _)) = self.walk_from_vertex(p12, v, f2, e2) else {
                    continue;
                };
                let Some((m3, _)) = self.walk_from_vertex(p23, v, f3, e3) else {
                    continue;
                };
                if m2 & m3 == bit(v) && (m2 | m3) & bit(w) == 0 {
                    return true;
                }
            }
        }
        false
    }

    fn via_colour(&self, g: &CubicGraph, idx: &EdgeIndex, v: usize, c: u8) -> usize {
        let ids = idx.incident(v);
        let slot = (0..3)
            .find(|&s| self.colours[ids[s]] == c)
            .expect("proper colouring");
        g.neighbours(v)[slot]
    }

    /// Whether some role assignment gives a prune-path for the triple.
    pub fn has_prune_path(&self, t: [usize; 3]) -> bool {
        let [a, b, c] = t;
        self.prune_path_roles(a, b, c)
            || self.prune_path_roles(b, a, c)
            || self.prune_path_roles(a, c, b)
    }

    /// Whether some role assignment gives a prune-tree for the triple.
    pub fn has_prune_tree(&self, g: &CubicGraph, idx: &EdgeIndex, t: [usize; 3]) -> bool {
        let [a, b, c] = t;
        [
            (a, b, c),
            (a, c, b),
            (b, a, c),
            (b, c, a),
            (c, a, b),
            (c, b, a),
        ]
        .iter()
        .any(|&(x, y, z)| self.prune_tree_roles(x, y, z, g, idx))
    }

    /// Whether some role assignment gives a prune-pair for the quadruple
    /// `{{q[0], q[1]}, {q[2], q[3]}}`.
    pub fn has_prune_pair(&self, q: [usize; 4]) -> bool {
        let [a, b, c, d] = q;
        for (s1, s2, t1, t2) in [(a, b, c, d), (a, b, d, c), (c, d, a, b), (c, d, b, a)] {
            let c1 = self.colour(s1);
            if self.colour(s2) != c1 {
                continue;
            }
            for c2 in 1..=3u8 {
                if c2 == c1 {
                    continue;
                }
                let c3 = 6 - c1 - c2;
                if self.prune_pair_roles(s1, t1, c1, c2, s2, t2, c3) {
                    return true;
                }
            }
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn prune_pair_roles(
        &self,
        s1: usize,
        t1: usize,
        c1: u8,
        c2: u8,
        s2: usize,
        t2: usize,
        c3: u8,
    ) -> bool {
        let p12 = pair_index(c1.min(c2), c1.max(c2));
        let p13 = pair_index(c1.min(c3), c1.max(c3));
        let (a1, b1) = self.ends[s1];
        let (a2, b2) = self.ends[s2];
        for via1 in [a1, b1] {
            let Some((_, e1)) = self.walk(p12, s1, via1 as usize, t1) else {
                continue;
            };
            for via2 in [a2, b2] {
                let Some((_, e2)) = self.walk(p13, s2, via2 as usize, t2) else {
                    continue;
                };
                if e1 & e2 == 0 {
                    return true;
                }
            }
        }
        false
    }
}

/// Whether two edges lie on a common two-coloured cycle of `col`.
pub fn same_colour_cycle(
    g: &CubicGraph,
    idx: &EdgeIndex,
    col: &EdgeColouring,
    e: Edge,
    f: Edge,
) -> bool {
    ColourCycles::new(g, idx, col).same_cycle(idx.id_of(g, e), idx.id_of(g, f))
}

/// Prune-path test for an edge triple under one colouring, all roles.
pub fn has_prune_path(g: &CubicGraph, idx: &EdgeIndex, col: &EdgeColouring, t: [Edge; 3]) -> bool {
    ColourCycles::new(g, idx, col).has_prune_path(t.map(|e| idx.id_of(g, e)))
}

/// Prune-tree test for an edge triple under one colouring, all roles.
pub fn has_prune_tree(g: &CubicGraph, idx: &EdgeIndex, col: &EdgeColouring, t: [Edge; 3]) -> bool {
    ColourCycles::new(g, idx, col).has_prune_tree(g, idx, t.map(|e| idx.id_of(g, e)))
}

/// Prune-pair test for an edge quadruple under one colouring, all roles.
pub fn has_prune_pair(
    g: &CubicGraph,
    idx: &EdgeIndex,
    col: &EdgeColouring,
    q: &EdgeQuadruple,
) -> bool {
    ColourCycles::new(g, idx, col).has_prune_pair(q.edges().map(|e| idx.id_of(g, e)))
}

/// Whether no set of fewer than `r` edges separates two components that
/// both contain a cycle.
pub fn cyclic_edge_connectivity_at_least(g: &CubicGraph, r: usize) -> bool {
    let idx = EdgeIndex::new(g);
    let m = idx.len();
    let mut chosen = Vec::with_capacity(r);
    for size in 1..r {
        if !no_cyclic_cut(g, &idx, m, size, 0, 0, &mut chosen) {
            return false;
        }
    }
    true
}

/// Largest `r <= cap` with `cyclic_edge_connectivity_at_least(g, r)`.
pub fn cyclic_edge_connectivity(g: &CubicGraph, cap: usize) -> usize {
    let idx = EdgeIndex::new(g);
    let m = idx.len();
    let mut chosen = Vec::with_capacity(cap);
    for size in 1..cap {
        if !no_cyclic_cut(g, &idx, m, size, 0, 0, &mut chosen) {
            return size;
        }
    }
    cap
}

fn no_cyclic_cut(
    g: &CubicGraph,
    idx: &EdgeIndex,
    m: usize,
    size: usize,
    from: usize,
    removed: EdgeSet,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == size {
        return !is_cyclic_cut(g, idx, removed);
    }
    for id in from..m {
        chosen.push(id);
        let ok = no_cyclic_cut(g, idx, m, size, id + 1, removed | (1u128 << id), chosen);
        chosen.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Whether deleting the edges in `removed` leaves two or more components
/// that contain a cycle.
fn is_cyclic_cut(g: &CubicGraph, idx: &EdgeIndex, removed: EdgeSet) -> bool {
    let n = g.order();
    let mut seen: VertexSet = 0;
    let mut cyclic = 0;
    for s in 0..n {
        if seen & bit(s) != 0 {
            continue;
        }
        let mut comp = bit(s);
        let mut frontier = bit(s);
        let mut degree_sum = 0;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                for (slot, &w) in g.neighbours(v).iter().enumerate() {
                    if removed & (1u128 << idx.slot_id(v, slot)) == 0 {
                        degree_sum += 1;
                        if comp & bit(w) == 0 {
                            next |= bit(w);
                        }
                    }
                }
            }
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        if degree_sum / 2 >= comp.count_ones() as usize {
            cyclic += 1;
            if cyclic >= 2 {
                return true;
            }
        }
    }
    false
}

/// Uncolourable, girth at least 5 and cyclically 4-edge-connected.
pub fn is_snark(g: &CubicGraph) -> bool {
    has_girth_at_least(g, 5) && !is_colourable(g) && cyclic_edge_connectivity_at_least(g, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn chromatic_indices() {
        assert_eq!(chromatic_index(&k4()), 3);
        assert_eq!(chromatic_index(&k33()), 3);
        assert_eq!(chromatic_index(&heawood()), 3);
        assert_eq!(chromatic_index(&petersen()), 4);
    }

    #[test]
    fn colourings_are_proper_and_distinct() {
        let g = heawood();
        let idx = EdgeIndex::new(&g);
        let cols = distinct_colourings(&g, &idx, 3, 5);
        assert!(!cols.is_empty());
        for c in &cols {
            assert!(c.is_proper(&g, &idx));
        }
        for i in 0..cols.len() {
            for j in i + 1..cols.len() {
                assert_ne!(cols[i].partition(), cols[j].partition());
            }
        }
    }

    #[test]
    fn cyclic_connectivity() {
        let p = petersen();
        assert!(cyclic_edge_connectivity_at_least(&p, 5));
        assert!(!cyclic_edge_connectivity_at_least(&p, 6));
        assert_eq!(cyclic_edge_connectivity(&k33(), 10), 10);
        assert!(!cyclic_edge_connectivity_at_least(&bridged(), 2));
        assert!(is_snark(&p));
        assert!(!is_snark(&heawood()));
    }

    #[test]
    fn colour_cycles() {
        let g = cube();
        let idx = EdgeIndex::new(&g);
        let col = find_colouring(&g, &idx, 0).unwrap();
        let cc = ColourCycles::new(&g, &idx, &col);
        for p in 0..3 {
            let total: usize = cc.cycles[p].iter().map(|c| c.len()).sum();
            assert_eq!(total, 8);
            assert!(cc.cycles[p].iter().all(|c| c.len() % 2 == 0));
        }
        for e in 0..idx.len() {
            assert!(cc.same_cycle(e, e));
        }
    }
}
