//! The tripod operation: subdivide three edges and join the three new
//! vertices to a new central vertex (+4 vertices), its inverse, and the
//! canonicity test that accepts each graph from exactly one parent.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::base::replace;
use crate::canon::{canonical_form_and_group, vertex_orbit_rank};
use crate::graph::{bit, members, CubicGraph, Edge, EdgeTriple, VertexSet};
use crate::metrics::{
    articulation_points, ball_size, neighbours_on_cycle_avoiding_vertex, short_cycles,
};

/// Applies the tripod operation to `t`. The subdivision vertices are
/// `n, n + 1, n + 2` in the order of the triple's edges and the central
/// vertex is `n + 3`.
pub fn tripod_expand(g: &CubicGraph, t: &EdgeTriple) -> CubicGraph {
    expand_edges(g, t.edges())
}

pub(crate) fn expand_edges(g: &CubicGraph, edges: [Edge; 3]) -> CubicGraph {
    let n = g.order();
    let c = n + 3;
    let mut adj = g.raw_adjacency().to_vec();
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = e.ends();
        let s = n + i;
        replace(&mut adj[a], b, s);
        replace(&mut adj[b], a, s);
        adj.push([a as u8, b as u8, c as u8]);
    }
    adj.push([n as u8, (n + 1) as u8, (n + 2) as u8]);
    CubicGraph::from_raw(adj)
}

/// Removes the tripod with central vertex `c` and joins the two outer
/// neighbours of each removed neighbour. `None` if the result has a loop,
/// a multiple edge, or is disconnected.
pub fn tripod_reduce(g: &CubicGraph, c: usize) -> Option<CubicGraph> {
    let leaves = g.neighbours(c);
    let removed = bit(c) | g.neighbour_mask(c);
    let mut joins: Vec<(usize, usize)> = Vec::with_capacity(3);
    for &s in &leaves {
        let outer: Vec<usize> = members(g.neighbour_mask(s) & !bit(c)).collect();
        if removed & (bit(outer[0]) | bit(outer[1])) != 0 {
            return None;
        }
        joins.push((outer[0], outer[1]));
    }
    reduce_with_joins(g, removed, &joins)
}

/// Deletes `removed` and adds the edges `joins`, then compacts the labels
/// keeping their order. `None` on loops, multiple edges or disconnection.
pub(crate) fn reduce_with_joins(
    g: &CubicGraph,
    removed: VertexSet,
    joins: &[(usize, usize)],
) -> Option<CubicGraph> {
    let n = g.order();
    let mut adj: Vec<Vec<usize>> = (0..n)
        .map(|v| members(g.neighbour_mask(v) & !removed).collect())
        .collect();
    for &(x, y) in joins {
        if x == y || adj[x].contains(&y) {
            return None;
        }
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut map = alloc::vec![usize::MAX; n];
    let mut next = 0;
    for (v, m) in map.iter_mut().enumerate() {
        if removed & bit(v) == 0 {
            *m = next;
            next += 1;
        }
    }
    let mut out = Vec::with_capacity(next);
    for v in 0..n {
        if removed & bit(v) != 0 {
            continue;
        }
        if adj[v].len() != 3 {
            return None;
        }
        out.push([map[adj[v][0]], map[adj[v][1]], map[adj[v][2]]]);
    }
    CubicGraph::from_adjacency(&out).ok()
}

/// The edge-triple whose expansion undoes [`tripod_reduce`] at `c`, as
/// edges of the reduced graph.
pub fn reduction_site(g: &CubicGraph, c: usize) -> Option<(CubicGraph, EdgeTriple)> {
    let h = tripod_reduce(g, c)?;
    let removed = bit(c) | g.neighbour_mask(c);
    let map = |v: usize| v - (removed & (bit(v) - 1)).count_ones() as usize;
    let mut es = [Edge::new(0, 1); 3];
    for (i, &s) in g.neighbours(c).iter().enumerate() {
        let outer: Vec<usize> = members(g.neighbour_mask(s) & !bit(c)).collect();
        es[i] = Edge::new(map(outer[0]), map(outer[1]));
    }
    Some((h, EdgeTriple::new(es[0], es[1], es[2])?))
}

/// A tripod is reducible if its centre is not a cut vertex and every cycle
/// avoiding the centre through `i` of its leaves has length at least
/// `3 + i`. The reduction must also give a simple graph.
pub fn is_reducible_tripod(g: &CubicGraph, c: usize) -> bool {
    if articulation_points(g) & bit(c) != 0 || tripod_reduce(g, c).is_none() {
        return false;
    }
    let leaves = g.neighbour_mask(c);
    short_cycles(g, 6)
        .iter()
        .filter(|cy| cy.vertex_mask() & bit(c) == 0)
        .all(|cy| cy.len() >= 3 + (cy.vertex_mask() & leaves).count_ones() as usize)
}

/// First tuple entry that is not constant for girth `k`: `x0` counts
/// pentagons, which are absent from girth 6 on, and `x0, x1, x2` are
/// constant from girth 7 on.
fn first_entry(k: usize) -> usize {
    match k {
        0..=5 => 0,
        6 => 1,
        _ => 3,
    }
}

/// Tuple entry `i < 4` for the tripod with central vertex `c`.
fn entry(g: &CubicGraph, c: usize, i: usize) -> usize {
    match i {
        0 => neighbours_on_cycle_avoiding_vertex(g, c, 5),
        1 => neighbours_on_cycle_avoiding_vertex(g, c, 6),
        2 => ball_size(g, bit(c), 3),
        3 => ball_size(g, bit(c), 4),
        _ => unreachable!(),
    }
}

/// The invariant part `(x0, .., x3)` of the tuple of the tripod at `c`;
/// entries that are constant for girth `k` are reported as 0.
pub fn tripod_tuple(g: &CubicGraph, c: usize, k: usize) -> [usize; 4] {
    let mut t = [0; 4];
    for (i, x) in t.iter_mut().enumerate().skip(first_entry(k)) {
        *x = entry(g, c, i);
    }
    t
}

/// Whether the tripod at `centre` has the smallest tuple among all
/// reducible tripods of `g`, a graph of girth at least `k >= 5`. In such a
/// graph every tripod whose centre is not a cut vertex is reducible.
pub fn is_canonical_tripod(g: &CubicGraph, centre: usize, k: usize) -> bool {
    let cut = articulation_points(g);
    debug_assert!(cut & bit(centre) == 0);
    let mut rivals: VertexSet = g.all() & !cut & !bit(centre);
    for i in first_entry(k)..4 {
        if rivals == 0 {
            return true;
        }
        let mine = entry(g, centre, i);
        let mut tied = 0;
        for v in members(rivals) {
            match entry(g, v, i).cmp(&mine) {
                Ordering::Less => return false,
                Ordering::Equal => tied |= bit(v),
                Ordering::Greater => {}
            }
        }
        rivals = tied;
    }
    if rivals == 0 {
        return true;
    }
    let (cf, group) = canonical_form_and_group(g, None);
    let mine = vertex_orbit_rank(&cf, &group, centre);
    members(rivals).all(|v| vertex_orbit_rank(&cf, &group, v) >= mine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::certificate;
    use crate::graph::named::*;
    use crate::metrics::{girth, triple_distance};
    use crate::sites::eligible_triples;

    #[test]
    fn expand_and_reduce() {
        let g = petersen();
        for t in eligible_triples(&g, 6) {
            let h = tripod_expand(&g, &t);
            assert_eq!(h.order(), 14);
            assert_eq!(girth(&h), 6);
            let back = tripod_reduce(&h, 13).unwrap();
            assert_eq!(certificate(&back), certificate(&g));
            let (r, site) = reduction_site(&h, 13).unwrap();
            assert_eq!(r.edges(), back.edges());
            assert_eq!(certificate(&tripod_expand(&r, &site)), certificate(&h));
            assert_eq!(certificate(&h), certificate(&heawood()));
        }
    }

    #[test]
    fn centre_cycle_length() {
        let g = cube();
        for t in eligible_triples(&g, 5) {
            let h = tripod_expand(&g, &t);
            let d = triple_distance(&g, &t);
            let shortest = short_cycles(&h, 20)
                .iter()
                .filter(|c| c.vertex_mask() & bit(h.order() - 1) != 0)
                .map(|c| c.len())
                .min()
                .unwrap();
            assert_eq!(shortest, d + 2);
        }
    }

    #[test]
    fn heawood_tripods() {
        let h = heawood();
        for v in 0..14 {
            assert!(is_reducible_tripod(&h, v));
            // vertex-transitive: every centre ties and shares the orbit
            assert!(is_canonical_tripod(&h, v, 6));
        }
        assert!(!is_reducible_tripod(&k4(), 0));
        assert_eq!(tripod_tuple(&h, 0, 7)[..3], [0, 0, 0]);
    }
}
