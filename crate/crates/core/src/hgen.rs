//! The H operation: subdivide four edges `{{e1, e2}, {e3, e4}}`, join the
//! subdivision vertices of `e1, e2` to a new vertex `u`, those of `e3, e4`
//! to a new vertex `w`, and join `u` and `w` by the central edge (+6
//! vertices). Also the inverse and the canonicity test.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::base::replace;
use crate::canon::{canonical_form_and_group, edge_orbit_rank};
use crate::graph::{bit, members, CubicGraph, Edge, EdgeQuadruple, VertexSet};
use crate::metrics::{
    ball_size, cycles_through_edge, is_good_edge, neighbours_on_cycle_avoiding_edge, short_cycles,
};
use crate::tripod::reduce_with_joins;

/// Applies the H operation. The subdivision vertices are `n .. n + 3` in
/// the order `e1, e2, e3, e4` and the central edge is `{n + 4, n + 5}`.
pub fn h_expand(g: &CubicGraph, q: &EdgeQuadruple) -> CubicGraph {
    expand_edges(g, q.edges())
}

pub(crate) fn expand_edges(g: &CubicGraph, edges: [Edge; 4]) -> CubicGraph {
    let n = g.order();
    let (u, w) = (n + 4, n + 5);
    let mut adj = g.raw_adjacency().to_vec();
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = e.ends();
        let s = n + i;
        replace(&mut adj[a], b, s);
        replace(&mut adj[b], a, s);
        adj.push([a as u8, b as u8, if i < 2 { u } else { w } as u8]);
    }
    adj.push([n as u8, (n + 1) as u8, w as u8]);
    adj.push([(n + 2) as u8, (n + 3) as u8, u as u8]);
    CubicGraph::from_raw(adj)
}

/// The four subdivision vertices of the H with central edge `e`: the two
/// other neighbours of `e.u()` followed by those of `e.v()`.
fn h_leaves(g: &CubicGraph, e: Edge) -> [usize; 4] {
    let (u, w) = e.ends();
    let a: Vec<usize> = members(g.neighbour_mask(u) & !bit(w)).collect();
    let b: Vec<usize> = members(g.neighbour_mask(w) & !bit(u)).collect();
    [a[0], a[1], b[0], b[1]]
}

/// Removes the H with central edge `e` and joins the two outer neighbours
/// of each of its four leaves. `None` if that is not a simple connected
/// cubic graph.
pub fn h_reduce(g: &CubicGraph, e: Edge) -> Option<CubicGraph> {
    let (_, joins, removed) = h_parts(g, e)?;
    reduce_with_joins(g, removed, &joins)
}

#[allow(clippy::type_complexity)]
fn h_parts(g: &CubicGraph, e: Edge) -> Option<([usize; 4], Vec<(usize, usize)>, VertexSet)> {
    let leaves = h_leaves(g, e);
    let removed = leaves.iter().fold(e.mask(), |m, &s| m | bit(s));
    if removed.count_ones() != 6 {
        return None;
    }
    let mut joins = Vec::with_capacity(4);
    for &s in &leaves {
        let outer: Vec<usize> = members(g.neighbour_mask(s) & !e.mask()).collect();
        if outer.len() != 2 || removed & (bit(outer[0]) | bit(outer[1])) != 0 {
            return None;
        }
        joins.push((outer[0], outer[1]));
    }
    Some((leaves, joins, removed))
}

/// The quadruple whose expansion undoes [`h_reduce`] at `e`, as edges of
/// the reduced graph.
pub fn reduction_site(g: &CubicGraph, e: Edge) -> Option<(CubicGraph, EdgeQuadruple)> {
    let (_, joins, removed) = h_parts(g, e)?;
    let h = reduce_with_joins(g, removed, &joins)?;
    let map = |v: usize| v - (removed & (bit(v) - 1)).count_ones() as usize;
    let es: Vec<Edge> = joins
        .iter()
        .map(|&(a, b)| Edge::new(map(a), map(b)))
        .collect();
    Some((h, EdgeQuadruple::new(es[0], es[1], es[2], es[3])?))
}

/// An H is reducible if its central edge is good, the reduction is simple,
/// and every cycle avoiding the central edge's endpoints that passes
/// through `i` of the H's leaves has length at least `3 + i`.
pub fn is_reducible_h(g: &CubicGraph, e: Edge) -> bool {
    if !is_good_edge(g, e) {
        return false;
    }
    let Some((leaves, _, _)) = h_parts(g, e) else {
        return false;
    };
    if h_reduce(g, e).is_none() {
        return false;
    }
    let lmask = leaves.iter().fold(0, |m, &s| m | bit(s));
    short_cycles(g, 7)
        .iter()
        .filter(|cy| cy.vertex_mask() & e.mask() == 0)
        .all(|cy| cy.len() >= 3 + (cy.vertex_mask() & lmask).count_ones() as usize)
}

/// First tuple entry that is not constant for girth `k`: hexagon counts
/// `x0, x1` vanish from girth 7 on.
fn first_entry(k: usize) -> usize {
    if k >= 7 {
        2
    } else {
        0
    }
}

/// Tuple entry `i < 5` for the H with central edge `e`.
fn entry(g: &CubicGraph, e: Edge, i: usize) -> usize {
    match i {
        0 => cycles_through_edge(g, e, 6),
        1 => neighbours_on_cycle_avoiding_edge(g, e, 6),
        2 => cycles_through_edge(g, e, 7),
        3 => ball_size(g, e.mask(), 3),
        4 => ball_size(g, e.mask(), 4),
        _ => unreachable!(),
    }
}

/// The invariant part `(x0, .., x4)` of the tuple of the H with central
/// edge `e`; entries that are constant for girth `k` are reported as 0.
pub fn h_tuple(g: &CubicGraph, e: Edge, k: usize) -> [usize; 5] {
    let mut t = [0; 5];
    for (i, x) in t.iter_mut().enumerate().skip(first_entry(k)) {
        *x = entry(g, e, i);
    }
    t
}

/// Whether the H with central edge `central` has the smallest tuple among
/// all reducible H's of `g`, a graph of girth at least `k >= 5`. In such a
/// graph the H of every good edge is reducible.
pub fn is_canonical_h(g: &CubicGraph, central: Edge, k: usize) -> bool {
    let mut rivals: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&f| f != central && is_good_edge(g, f))
        .collect();
    for i in first_entry(k)..5 {
        if rivals.is_empty() {
            return true;
        }
        let mine = entry(g, central, i);
        let mut tied = Vec::new();
        for &f in &rivals {
            match entry(g, f, i).cmp(&mine) {
                Ordering::Less => return false,
                Ordering::Equal => tied.push(f),
                Ordering::Greater => {}
            }
        }
        rivals = tied;
    }
    if rivals.is_empty() {
        return true;
    }
    let (cf, group) = canonical_form_and_group(g, None);
    let mine = edge_orbit_rank(&cf, &group, central);
    rivals
        .iter()
        .all(|&f| edge_orbit_rank(&cf, &group, f) >= mine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::certificate;
    use crate::graph::named::*;
    use crate::metrics::{girth, quad_distance};
    use crate::sites::eligible_quads;

    #[test]
    fn expand_and_reduce() {
        let g = heawood();
        let qs = eligible_quads(&g, 7);
        for q in qs.iter().take(50) {
            let h = h_expand(&g, q);
            assert_eq!(h.order(), 20);
            assert!(girth(&h) >= 7);
            let central = Edge::new(18, 19);
            let back = h_reduce(&h, central).unwrap();
            assert_eq!(certificate(&back), certificate(&g));
            let (r, site) = reduction_site(&h, central).unwrap();
            assert_eq!(certificate(&h_expand(&r, &site)), certificate(&h));
        }
    }

    #[test]
    fn central_cycle_length() {
        let g = petersen();
        for q in eligible_quads(&g, 6) {
            let h = h_expand(&g, &q);
            let hmask = (0..6).fold(0u64, |m, i| m | bit(10 + i));
            let shortest = short_cycles(&h, 20)
                .iter()
                .filter(|c| c.vertex_mask() & hmask != 0)
                .map(|c| c.len())
                .min()
                .unwrap();
            assert_eq!(shortest, quad_distance(&g, &q) + 2);
        }
    }

    #[test]
    fn heawood_h() {
        let g = heawood();
        for e in g.edges() {
            assert!(is_reducible_h(&g, e));
            assert!(is_canonical_h(&g, e, 6));
            assert_eq!(h_tuple(&g, e, 6)[0], 8);
        }
        // the bridge of the bridged graph is not good
        let b = bridged();
        assert!(!is_reducible_h(&b, Edge::new(4, 9)));
    }
}
