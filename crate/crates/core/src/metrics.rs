//! Metric, cycle and connectivity queries on cubic graphs.

use alloc::vec::Vec;

use crate::graph::{bit, members, CubicGraph, Cycle, Edge, EdgeQuadruple, EdgeTriple, VertexSet};

/// Length of a shortest cycle.
pub fn girth(g: &CubicGraph) -> usize {
    girth_below(g, usize::MAX).unwrap_or(usize::MAX)
}

/// Shortest cycle length if it is smaller than `bound`, else `None`.
pub fn girth_below(g: &CubicGraph, bound: usize) -> Option<usize> {
    let n = g.order();
    let mut best = bound;
    let mut depth = alloc::vec![u8::MAX; n];
    let mut parent = alloc::vec![0u8; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        // A cycle through s of length L is found at BFS depth about L/2.
        depth.iter_mut().for_each(|d| *d = u8::MAX);
        queue.clear();
        depth[s] = 0;
        parent[s] = s as u8;
        queue.push(s);
        let mut head = 0;
        'bfs: while head < queue.len() {
            let v = queue[head];
            head += 1;
            let dv = depth[v] as usize;
            if 2 * dv + 1 >= best {
                break;
            }
            for w in g.neighbours(v) {
                if w == parent[v] as usize {
                    continue;
                }
                if depth[w] == u8::MAX {
                    depth[w] = (dv + 1) as u8;
                    parent[w] = v as u8;
                    queue.push(w);
                } else {
                    let len = dv + depth[w] as usize + 1;
                    if len < best {
                        best = len;
                    }
                    if 2 * dv + 1 >= best {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best < bound {
        Some(best)
    } else {
        None
    }
}

/// Whether the girth is at least `k`.
pub fn has_girth_at_least(g: &CubicGraph, k: usize) -> bool {
    girth_below(g, k).is_none()
}

/// All-pairs vertex distances, row-major. Unreachable pairs hold `u8::MAX`.
#[derive(Clone, Debug)]
pub struct Distances {
    n: usize,
    d: Vec<u8>,
}

impl Distances {
    pub fn new(g: &CubicGraph) -> Self {
        let n = g.order();
        let mut d = alloc::vec![u8::MAX; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = bit(s);
            let mut frontier = seen;
            let mut level = 0u8;
            while frontier != 0 {
                for v in members(frontier) {
                    row[v] = level;
                }
                let next = g.neighbourhood(frontier) & !seen;
                seen |= next;
                frontier = next;
                level += 1;
            }
        }
        Distances { n, d }
    }

    #[inline]
    pub fn vertex(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    /// Number of edges of a shortest path containing both edges.
    #[inline]
    pub fn edge(&self, e1: Edge, e2: Edge) -> usize {
        let (a, b) = e1.ends();
        let (c, d) = e2.ends();
        let m = self
            .vertex(a, c)
            .min(self.vertex(a, d))
            .min(self.vertex(b, c))
            .min(self.vertex(b, d));
        m + 2
    }
}

/// Number of edges of a shortest path containing both `e1` and `e2`
/// (2 when they share a vertex). Panics if the edges are equal.
pub fn edge_distance(g: &CubicGraph, e1: Edge, e2: Edge) -> usize {
    assert!(e1 != e2, "edge_distance needs distinct edges");
    let src = e1.mask();
    let dst = e2.mask();
    let mut seen = src;
    let mut frontier = src;
    let mut level = 0;
    while frontier & dst == 0 {
        let next = g.neighbourhood(frontier) & !seen;
        assert!(next != 0, "edges lie in different components");
        seen |= next;
        frontier = next;
        level += 1;
    }
    level + 2
}

pub fn triple_distance(g: &CubicGraph, t: &EdgeTriple) -> usize {
    let [a, b, c] = t.edges();
    edge_distance(g, a, b)
        .min(edge_distance(g, a, c))
        .min(edge_distance(g, b, c))
}

pub fn quad_distance(g: &CubicGraph, q: &EdgeQuadruple) -> usize {
    let [e1, e2, e3, e4] = q.edges();
    let d = |x, y| edge_distance(g, x, y);
    d(e1, e2)
        .min(d(e3, e4))
        .min(d(e1, e3) + 1)
        .min(d(e1, e4) + 1)
        .min(d(e2, e3) + 1)
        .min(d(e2, e4) + 1)
}

/// Set of cut vertices (Tarjan's low-point method).
pub fn articulation_points(g: &CubicGraph) -> VertexSet {
    let n = g.order();
    let mut disc = alloc::vec![0u8; n];
    let mut low = alloc::vec![0u8; n];
    let mut cut: VertexSet = 0;
    // iterative DFS: (vertex, parent, next neighbour slot)
    let mut stack: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
    let mut time = 1u8;
    disc[0] = time;
    low[0] = time;
    stack.push((0, usize::MAX, 0));
    let mut root_children = 0;
    while let Some(top) = stack.last_mut() {
        let (v, p, slot) = *top;
        if slot < 3 {
            top.2 += 1;
            let w = g.neighbours(v)[slot];
            if w == p {
                continue;
            }
            if disc[w] == 0 {
                time += 1;
                disc[w] = time;
                low[w] = time;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if disc[w] < low[v] {
                low[v] = disc[w];
            }
        } else {
            stack.pop();
            if p != usize::MAX {
                if low[v] < low[p] {
                    low[p] = low[v];
                }
                if p != 0 && low[v] >= disc[p] {
                    cut |= bit(p);
                }
            }
        }
    }
    if root_children > 1 {
        cut |= 1;
    }
    cut
}

pub fn is_cut_vertex(g: &CubicGraph, v: usize) -> bool {
    !g.is_connected_within(g.all() & !bit(v))
}

/// An edge is good if deleting both its endpoints leaves a connected graph.
pub fn is_good_edge(g: &CubicGraph, e: Edge) -> bool {
    g.is_connected_within(g.all() & !e.mask())
}

/// All cycles of length below `bound`, each once.
pub fn short_cycles(g: &CubicGraph, bound: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(bound);
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        extend_cycles(g, s, bit(s), bound, &mut path, &mut out);
    }
    out
}

fn extend_cycles(
    g: &CubicGraph,
    s: usize,
    used: VertexSet,
    bound: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Cycle>,
) {
    let v = *path.last().unwrap();
    for w in g.neighbours(v) {
        if w == s && path.len() >= 3 && path[1] < v {
            out.push(Cycle::new(path));
        } else if w > s && used & bit(w) == 0 && path.len() + 1 < bound {
            path.push(w);
            extend_cycles(g, s, used | bit(w), bound, path, out);
            path.pop();
        }
    }
}

/// Number of simple paths with exactly `len` edges from `from` to `to` whose
/// interior avoids `blocked`. `from` and `to` must not be in `blocked`.
fn count_paths(g: &CubicGraph, from: usize, to: usize, len: usize, blocked: VertexSet) -> usize {
    fn go(g: &CubicGraph, v: usize, to: usize, left: usize, used: VertexSet) -> usize {
        if left == 1 {
            return g.adjacent(v, to) as usize;
        }
        let mut total = 0;
        for w in members(g.neighbour_mask(v) & !used) {
            if w != to {
                total += go(g, w, to, left - 1, used | bit(w));
            }
        }
        total
    }
    go(g, from, to, len, blocked | bit(from) | bit(to))
}

/// Whether some cycle of exactly `len` vertices passes through `v` inside
/// the subgraph induced on the complement of `blocked`.
fn on_cycle_avoiding(g: &CubicGraph, v: usize, len: usize, blocked: VertexSet) -> bool {
    let nb: Vec<usize> = members(g.neighbour_mask(v) & !blocked).collect();
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            if count_paths(g, nb[i], nb[j], len - 2, blocked | bit(v)) > 0 {
                return true;
            }
        }
    }
    false
}

/// Number of cycles of exactly `len` vertices through `v`.
pub fn cycles_through_vertex(g: &CubicGraph, v: usize, len: usize) -> usize {
    let nb = g.neighbours(v);
    let mut total = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            total += count_paths(g, nb[i], nb[j], len - 2, bit(v));
        }
    }
    total
}

/// Number of cycles of exactly `len` vertices containing edge `e`.
pub fn cycles_through_edge(g: &CubicGraph, e: Edge, len: usize) -> usize {
    let (u, v) = e.ends();
    // paths u -> v of length len-1 avoiding the edge itself
    let mut total = 0;
    for w in g.neighbours(u) {
        if w != v {
            total += count_paths(g, w, v, len - 2, bit(u));
        }
    }
    total
}

/// Number of neighbours of `c` lying on a cycle of exactly `len` vertices
/// that avoids `c`.
pub fn neighbours_on_cycle_avoiding_vertex(g: &CubicGraph, c: usize, len: usize) -> usize {
    g.neighbours(c)
        .iter()
        .filter(|&&w| on_cycle_avoiding(g, w, len, bit(c)))
        .count()
}

/// Number of the (up to four) vertices adjacent to an endpoint of `e` but
/// not on `e` that lie on a cycle of exactly `len` vertices not containing
/// the edge `e`.
pub fn neighbours_on_cycle_avoiding_edge(g: &CubicGraph, e: Edge, len: usize) -> usize {
    let (a, b) = e.ends();
    let outer = g.neighbourhood(e.mask()) & !e.mask();
    members(outer)
        .filter(|&w| {
            // cycles through w that do not use edge ab: either avoid both a
            // and b, or pass through exactly one of them.
            let nb = g.neighbours(w);
            for i in 0..3 {
                for j in i + 1..3 {
                    let (x, y) = (nb[i], nb[j]);
                    if paths_avoiding_edge(g, x, y, len - 2, bit(w), a, b) {
                        return true;
                    }
                }
            }
            false
        })
        .count()
}

/// Whether a simple path with `len` edges joins `x` and `y`, avoiding
/// `blocked`, and not traversing edge `{a, b}`.
fn paths_avoiding_edge(
    g: &CubicGraph,
    x: usize,
    y: usize,
    len: usize,
    blocked: VertexSet,
    a: usize,
    b: usize,
) -> bool {
    fn go(
        g: &CubicGraph,
        v: usize,
        to: usize,
        left: usize,
        used: VertexSet,
        a: usize,
        b: usize,
    ) -> bool {
        let forbidden = |p: usize, q: usize| (p == a && q == b) || (p == b && q == a);
        if left == 1 {
            return g.adjacent(v, to) && !forbidden(v, to);
        }
        for w in members(g.neighbour_mask(v) & !used) {
            if w != to && !forbidden(v, w) && go(g, w, to, left - 1, used | bit(w), a, b) {
                return true;
            }
        }
        false
    }
    if x == y {
        return false;
    }
    go(g, x, y, len, blocked | bit(x) | bit(y), a, b)
}

/// Number of vertices within distance `radius` of some source.
pub fn ball_size(g: &CubicGraph, sources: VertexSet, radius: usize) -> usize {
    let mut seen = sources;
    let mut frontier = sources;
    for _ in 0..radius {
        let next = g.neighbourhood(frontier) & !seen;
        if next == 0 {
            break;
        }
        seen |= next;
        frontier = next;
    }
    seen.count_ones() as usize
}

/// Maximum over sets of pairwise vertex-disjoint cycles of the total
/// shortfall `max(k - |C|, 0)`.
pub fn deficit(g: &CubicGraph, k: usize) -> usize {
    let cycles: Vec<(VertexSet, usize)> = short_cycles(g, k)
        .iter()
        .map(|c| (c.vertex_mask(), k - c.len()))
        .collect();
    deficit_of_cycles(&cycles)
}

/// Maximum total weight of a set of pairwise disjoint masks.
pub fn deficit_of_cycles(cycles: &[(VertexSet, usize)]) -> usize {
    fn go(cycles: &[(VertexSet, usize)], i: usize, used: VertexSet, acc: usize, best: &mut usize) {
        if acc > *best {
            *best = acc;
        }
        if i == cycles.len() {
            return;
        }
        let rest: usize = cycles[i..]
            .iter()
            .filter(|c| c.0 & used == 0)
            .map(|c| c.1)
            .sum();
        if acc + rest <= *best {
            return;
        }
        let (m, w) = cycles[i];
        if m & used == 0 {
            go(cycles, i + 1, used | m, acc + w, best);
        }
        go(cycles, i + 1, used, acc, best);
    }
    let mut best = 0;
    go(cycles, 0, 0, 0, &mut best);
    best
}

/// Maximum number of pairwise vertex-disjoint cycles of length exactly `len`.
pub fn max_disjoint_cycles(g: &CubicGraph, len: usize) -> usize {
    let cycles: Vec<(VertexSet, usize)> = short_cycles(g, len + 1)
        .iter()
        .filter(|c| c.len() == len)
        .map(|c| (c.vertex_mask(), 1))
        .collect();
    deficit_of_cycles(&cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn girths() {
        assert_eq!(girth(&k4()), 3);
        assert_eq!(girth(&k33()), 4);
        assert_eq!(girth(&cube()), 4);
        assert_eq!(girth(&petersen()), 5);
        assert_eq!(girth(&heawood()), 6);
        assert!(has_girth_at_least(&heawood(), 6));
        assert!(!has_girth_at_least(&heawood(), 7));
    }

    #[test]
    fn distances() {
        let c6 = lcf(6, &[3]); // K3,3 drawn as a hexagon
        let e = Edge::new(0, 1);
        let f = Edge::new(3, 4);
        // opposite edges of the hexagon are joined by the chords, so the
        // distance is shorter than along the hexagon
        assert_eq!(edge_distance(&c6, e, f), 3);
        let p = petersen();
        let dm = Distances::new(&p);
        for &a in &p.edges() {
            for &b in &p.edges() {
                if a != b {
                    assert_eq!(dm.edge(a, b), edge_distance(&p, a, b));
                    assert_eq!(edge_distance(&p, a, b) == 2, a.shares_vertex(b));
                }
            }
        }
        // opposite edges of the outer pentagon
        assert_eq!(edge_distance(&p, Edge::new(0, 1), Edge::new(2, 3)), 3);
        assert_eq!(edge_distance(&p, Edge::new(0, 1), Edge::new(7, 9)), 4);
    }

    #[test]
    fn cut_vertices() {
        assert_eq!(articulation_points(&k4()), 0);
        assert_eq!(articulation_points(&petersen()), 0);
        let b = bridged();
        assert_eq!(articulation_points(&b), bit(4) | bit(9));
        for v in 0..10 {
            assert_eq!(is_cut_vertex(&b, v), v == 4 || v == 9);
        }
        assert!(!is_good_edge(&b, Edge::new(4, 9)));
        assert!(is_good_edge(&petersen(), Edge::new(0, 1)));
    }

    #[test]
    fn cycle_counts() {
        let p = petersen();
        assert!(short_cycles(&p, 5).is_empty());
        assert_eq!(short_cycles(&p, 6).len(), 12);
        assert_eq!(short_cycles(&k4(), 4).len(), 4);
        assert_eq!(short_cycles(&k4(), 5).len(), 7);
        for v in 0..10 {
            assert_eq!(cycles_through_vertex(&p, v, 5), 6);
            assert_eq!(neighbours_on_cycle_avoiding_vertex(&p, v, 5), 3);
        }
        let h = heawood();
        assert_eq!(cycles_through_vertex(&h, 0, 5), 0);
        for e in h.edges() {
            assert_eq!(cycles_through_edge(&h, e, 6), 8);
        }
    }

    #[test]
    fn balls() {
        assert_eq!(ball_size(&petersen(), bit(0), 2), 10);
        assert_eq!(ball_size(&heawood(), Edge::new(0, 1).mask(), 1), 6);
    }

    #[test]
    fn deficits() {
        assert_eq!(deficit(&k33(), 5), 1);
        assert_eq!(deficit(&petersen(), 5), 0);
        assert_eq!(deficit(&petersen(), 6), 2);
        assert_eq!(deficit(&heawood(), 6), 0);
        assert_eq!(max_disjoint_cycles(&petersen(), 5), 2);
    }
}
