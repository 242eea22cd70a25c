//! Cubic graph representation.
//!
//! Vertices are `usize` indices in `0..order`. Every vertex stores its three
//! neighbours in an ordered triple and, in parallel, a 64-bit adjacency mask,
//! which caps the order at [`MAX_ORDER`].

use alloc::vec::Vec;
use core::fmt;

/// Largest supported order (adjacency rows are `u64` masks).
pub const MAX_ORDER: usize = 64;

/// Bit set of vertices.
pub type VertexSet = u64;

/// Bit set of edge indices (see [`EdgeIndex`]); a cubic graph on at most 64
/// vertices has at most 96 edges.
pub type EdgeSet = u128;

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Iterate the members of a vertex set in increasing order.
#[inline]
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Iterate the members of an edge set in increasing order.
#[inline]
pub fn edge_members(mut set: EdgeSet) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let e = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(e)
        }
    })
}

/// An undirected edge, smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge(u8, u8);

impl Edge {
    /// Panics if `u == v` or either endpoint exceeds [`MAX_ORDER`].
    pub fn new(u: usize, v: usize) -> Self {
        assert!(u != v, "edge endpoints must differ");
        assert!(u < MAX_ORDER && v < MAX_ORDER, "vertex out of range");
        if u < v {
            Edge(u as u8, v as u8)
        } else {
            Edge(v as u8, u as u8)
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn v(self) -> usize {
        self.1 as usize
    }

    #[inline]
    pub fn ends(self) -> (usize, usize) {
        (self.0 as usize, self.1 as usize)
    }

    #[inline]
    pub fn mask(self) -> VertexSet {
        bit(self.u()) | bit(self.v())
    }

    #[inline]
    pub fn contains(self, w: usize) -> bool {
        self.u() == w || self.v() == w
    }

    #[inline]
    pub fn shares_vertex(self, other: Edge) -> bool {
        self.mask() & other.mask() != 0
    }

    /// The endpoint that is not `w`.
    #[inline]
    pub fn other(self, w: usize) -> usize {
        if self.u() == w {
            self.v()
        } else {
            debug_assert_eq!(self.v(), w);
            self.u()
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Three pairwise distinct edges; endpoints may be shared.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeTriple([Edge; 3]);

impl EdgeTriple {
    /// Returns `None` unless the three edges are pairwise distinct.
    pub fn new(a: Edge, b: Edge, c: Edge) -> Option<Self> {
        let mut es = [a, b, c];
        es.sort_unstable();
        if es[0] == es[1] || es[1] == es[2] {
            None
        } else {
            Some(EdgeTriple(es))
        }
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> [Edge; 3] {
        self.0
    }
}

/// An unordered pair of unordered edge pairs `{{e1,e2},{e3,e4}}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeQuadruple([[Edge; 2]; 2]);

impl EdgeQuadruple {
    /// Returns `None` unless all four edges are pairwise distinct.
    pub fn new(e1: Edge, e2: Edge, e3: Edge, e4: Edge) -> Option<Self> {
        let mut all = [e1, e2, e3, e4];
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let p = if e1 < e2 { [e1, e2] } else { [e2, e1] };
        let q = if e3 < e4 { [e3, e4] } else { [e4, e3] };
        Some(if p < q {
            EdgeQuadruple([p, q])
        } else {
            EdgeQuadruple([q, p])
        })
    }

    /// The two partner pairs, each sorted, the pairs sorted.
    pub fn pairs(&self) -> [[Edge; 2]; 2] {
        self.0
    }

    /// Edges in the order `e1, e2, e3, e4` with `{e1,e2}` and `{e3,e4}` partners.
    pub fn edges(&self) -> [Edge; 4] {
        [self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1]]
    }
}

/// A cycle given as a vertex sequence, rotated so the smallest vertex is
/// first and oriented towards its smaller cycle neighbour.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cycle {
    vertices: Vec<u8>,
}

impl Cycle {
    /// Normalises `vertices` (which must be a cycle of length >= 3 without
    /// repeated vertices; adjacency is not checked here).
    pub fn new(vertices: &[usize]) -> Self {
        let len = vertices.len();
        assert!(len >= 3, "cycle needs at least 3 vertices");
        let (start, _) = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .expect("nonempty");
        let next = vertices[(start + 1) % len];
        let prev = vertices[(start + len - 1) % len];
        let out: Vec<u8> = if next < prev {
            (0..len)
                .map(|i| vertices[(start + i) % len] as u8)
                .collect()
        } else {
            (0..len)
                .map(|i| vertices[(start + len - i) % len] as u8)
                .collect()
        };
        Cycle { vertices: out }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().map(|&v| v as usize)
    }

    pub fn vertex_mask(&self) -> VertexSet {
        self.vertices.iter().fold(0, |m, &v| m | bit(v as usize))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| {
            Edge::new(
                self.vertices[i] as usize,
                self.vertices[(i + 1) % len] as usize,
            )
        })
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges().any(|f| f == e)
    }
}

/// Reasons an adjacency structure is not a connected simple cubic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Order is zero, odd, or above [`MAX_ORDER`].
    BadOrder(usize),
    /// A neighbour index is not a vertex.
    NeighbourOutOfRange { vertex: usize, neighbour: usize },
    /// A vertex lists itself.
    Loop { vertex: usize },
    /// A vertex lists the same neighbour twice.
    RepeatedNeighbour { vertex: usize, neighbour: usize },
    /// `vertex` lists `neighbour` but not vice versa.
    Asymmetric { vertex: usize, neighbour: usize },
    /// A vertex does not have exactly three neighbours.
    Degree { vertex: usize, degree: usize },
    /// The graph is not connected.
    Disconnected,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::BadOrder(n) => write!(f, "unsupported order {n}"),
            GraphError::NeighbourOutOfRange { vertex, neighbour } => {
                write!(f, "vertex {vertex} lists nonexistent neighbour {neighbour}")
            }
            GraphError::Loop { vertex } => write!(f, "vertex {vertex} lists itself"),
            GraphError::RepeatedNeighbour { vertex, neighbour } => {
                write!(f, "vertex {vertex} lists neighbour {neighbour} twice")
            }
            GraphError::Asymmetric { vertex, neighbour } => write!(
                f,
                "vertex {vertex} lists {neighbour} but {neighbour} does not list {vertex}"
            ),
            GraphError::Degree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, expected 3")
            }
            GraphError::Disconnected => write!(f, "graph is not connected"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A connected simple cubic graph on at most [`MAX_ORDER`] vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CubicGraph {
    adj: Vec<[u8; 3]>,
    bits: Vec<VertexSet>,
}

impl CubicGraph {
    /// Builds a graph from per-vertex neighbour triples, validating every
    /// invariant including connectivity.
    pub fn from_adjacency(adjacency: &[[usize; 3]]) -> Result<Self, GraphError> {
        let g = Self::from_adjacency_unchecked_connectivity(adjacency)?;
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Like [`from_adjacency`](Self::from_adjacency) but accepts disconnected
    /// graphs. Used for intermediate results such as edge reductions.
    pub fn from_adjacency_unchecked_connectivity(
        adjacency: &[[usize; 3]],
    ) -> Result<Self, GraphError> {
        let n = adjacency.len();
        if n == 0 || n % 2 == 1 || n > MAX_ORDER {
            return Err(GraphError::BadOrder(n));
        }
        let mut bits = alloc::vec![0u64; n];
        for (v, nb) in adjacency.iter().enumerate() {
            for &w in nb {
                if w >= n {
                    return Err(GraphError::NeighbourOutOfRange {
                        vertex: v,
                        neighbour: w,
                    });
                }
                if w == v {
                    return Err(GraphError::Loop { vertex: v });
                }
                if bits[v] & bit(w) != 0 {
                    return Err(GraphError::RepeatedNeighbour {
                        vertex: v,
                        neighbour: w,
                    });
                }
                bits[v] |= bit(w);
            }
        }
        for v in 0..n {
            for w in members(bits[v]) {
                if bits[w] & bit(v) == 0 {
                    return Err(GraphError::Asymmetric {
                        vertex: v,
                        neighbour: w,
                    });
                }
            }
        }
        let adj = adjacency
            .iter()
            .map(|nb| [nb[0] as u8, nb[1] as u8, nb[2] as u8])
            .collect();
        Ok(CubicGraph { adj, bits })
    }

    /// Builds a graph from an edge list.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if order == 0 || order % 2 == 1 || order > MAX_ORDER {
            return Err(GraphError::BadOrder(order));
        }
        let mut lists: Vec<Vec<usize>> = alloc::vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::NeighbourOutOfRange {
                    vertex: u.min(v),
                    neighbour: u.max(v),
                });
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        let mut adjacency = Vec::with_capacity(order);
        for (v, l) in lists.iter().enumerate() {
            if l.len() != 3 {
                return Err(GraphError::Degree {
                    vertex: v,
                    degree: l.len(),
                });
            }
            adjacency.push([l[0], l[1], l[2]]);
        }
        Self::from_adjacency(&adjacency)
    }

    /// Trusted constructor for results of expansion/reduction operations.
    pub(crate) fn from_raw(adj: Vec<[u8; 3]>) -> Self {
        let bits = adj
            .iter()
            .map(|nb| bit(nb[0] as usize) | bit(nb[1] as usize) | bit(nb[2] as usize))
            .collect();
        let g = CubicGraph { adj, bits };
        debug_assert!(g.check_simple(), "from_raw produced a non-simple graph");
        g
    }

    fn check_simple(&self) -> bool {
        self.adj.iter().enumerate().all(|(v, nb)| {
            self.bits[v].count_ones() == 3
                && nb
                    .iter()
                    .all(|&w| (w as usize) != v && self.bits[w as usize] & bit(v) != 0)
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.adj.len() * 3 / 2
    }

    /// Mask containing every vertex.
    #[inline]
    pub fn all(&self) -> VertexSet {
        if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        }
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> [usize; 3] {
        let nb = self.adj[v];
        [nb[0] as usize, nb[1] as usize, nb[2] as usize]
    }

    #[inline]
    pub(crate) fn raw_neighbours(&self, v: usize) -> [u8; 3] {
        self.adj[v]
    }

    pub(crate) fn raw_adjacency(&self) -> &[[u8; 3]] {
        &self.adj
    }

    #[inline]
    pub fn neighbour_mask(&self, v: usize) -> VertexSet {
        self.bits[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u] & bit(v) != 0
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.v() < self.order() && self.adjacent(e.u(), e.v())
    }

    /// All vertices adjacent to some member of `set`.
    #[inline]
    pub fn neighbourhood(&self, set: VertexSet) -> VertexSet {
        members(set).fold(0, |acc, v| acc | self.bits[v])
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.order() {
            for w in members(self.bits[v] & !((bit(v) << 1) - 1)) {
                out.push(Edge::new(v, w));
            }
        }
        out
    }

    /// The vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn component(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.neighbourhood(frontier) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced on `set` is connected (true for the empty set).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        if set == 0 {
            return true;
        }
        let start = set.trailing_zeros() as usize;
        self.component(start, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.all())
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> CubicGraph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut adj = alloc::vec![[0u8; 3]; self.order()];
        for v in 0..self.order() {
            let nb = self.adj[v];
            adj[perm[v]] = [
                perm[nb[0] as usize] as u8,
                perm[nb[1] as usize] as u8,
                perm[nb[2] as usize] as u8,
            ];
        }
        CubicGraph::from_raw(adj)
    }

    /// Neighbour triples as plain indices.
    pub fn adjacency(&self) -> Vec<[usize; 3]> {
        (0..self.order()).map(|v| self.neighbours(v)).collect()
    }
}

/// Maps every edge of a graph to a dense index in `0..edge_count`, with
/// indices assigned in lexicographic edge order.
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    slots: Vec<[u8; 3]>,
    edges: Vec<Edge>,
}

impl EdgeIndex {
    pub fn new(g: &CubicGraph) -> Self {
        let edges = g.edges();
        let mut slots = alloc::vec![[0u8; 3]; g.order()];
        for (id, e) in edges.iter().enumerate() {
            let (u, v) = e.ends();
            let su = g
                .raw_neighbours(u)
                .iter()
                .position(|&w| w as usize == v)
                .unwrap();
            let sv = g
                .raw_neighbours(v)
                .iter()
                .position(|&w| w as usize == u)
                .unwrap();
            slots[u][su] = id as u8;
            slots[v][sv] = id as u8;
        }
        EdgeIndex { slots, edges }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Index of the edge in neighbour slot `slot` of `v`.
    #[inline]
    pub fn slot_id(&self, v: usize, slot: usize) -> usize {
        self.slots[v][slot] as usize
    }

    /// Indices of the three edges at `v`, in neighbour order.
    #[inline]
    pub fn incident(&self, v: usize) -> [usize; 3] {
        let s = self.slots[v];
        [s[0] as usize, s[1] as usize, s[2] as usize]
    }

    /// Index of the edge `{u, v}`; panics if absent.
    pub fn id(&self, g: &CubicGraph, u: usize, v: usize) -> usize {
        let slot = g
            .raw_neighbours(u)
            .iter()
            .position(|&w| w as usize == v)
            .expect("not an edge");
        self.slots[u][slot] as usize
    }

    pub fn id_of(&self, g: &CubicGraph, e: Edge) -> usize {
        self.id(g, e.u(), e.v())
    }

    /// Edge-index mask of the edges of a cycle.
    pub fn cycle_mask(&self, g: &CubicGraph, c: &Cycle) -> EdgeSet {
        c.edges().fold(0, |m, e| m | (1u128 << self.id_of(g, e)))
    }
}

/// Small named graphs used throughout tests, fixtures and analysis.
pub mod named {
    use super::CubicGraph;

    pub fn k4() -> CubicGraph {
        CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Complete bipartite graph K_{3,3}; sides are {0,1,2} and {3,4,5}.
    pub fn k33() -> CubicGraph {
        let mut e = alloc::vec::Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        CubicGraph::from_edges(6, &e).unwrap()
    }

    /// Triangular prism.
    pub fn prism() -> CubicGraph {
        CubicGraph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    /// The 3-cube Q3.
    pub fn cube() -> CubicGraph {
        let mut e = alloc::vec::Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                let w = v ^ (1 << b);
                if v < w {
                    e.push((v, w));
                }
            }
        }
        CubicGraph::from_edges(8, &e).unwrap()
    }

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    pub fn petersen() -> CubicGraph {
        CubicGraph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    /// The Heawood graph (incidence graph of the Fano plane), LCF [5,-5]^7.
    pub fn heawood() -> CubicGraph {
        lcf(14, &[5, -5])
    }

    /// Graph from LCF notation on a Hamiltonian cycle of length `n`.
    pub fn lcf(n: usize, jumps: &[isize]) -> CubicGraph {
        let mut e = alloc::vec::Vec::new();
        for i in 0..n {
            e.push((i, (i + 1) % n));
        }
        for i in 0..n {
            let j = jumps[i % jumps.len()];
            let w = ((i as isize + j).rem_euclid(n as isize)) as usize;
            if i < w {
                e.push((i, w));
            }
        }
        CubicGraph::from_edges(n, &e).unwrap()
    }

    /// Two copies of K4 with one edge subdivided, the subdivision vertices
    /// (4 and 9) joined by a bridge. The smallest cubic graph with a bridge.
    pub fn bridged() -> CubicGraph {
        let mut e = alloc::vec::Vec::new();
        for off in [0, 5] {
            for &(a, b) in &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)] {
                e.push((a + off, b + off));
            }
        }
        e.push((4, 9));
        CubicGraph::from_edges(10, &e).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn rejects_bad_adjacency() {
        assert_eq!(
            CubicGraph::from_adjacency(&[[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 1]]),
            Err(GraphError::RepeatedNeighbour {
                vertex: 3,
                neighbour: 1
            })
        );
        assert_eq!(
            CubicGraph::from_adjacency(&[[1, 2, 3], [0, 2, 3], [0, 1, 3]]),
            Err(GraphError::BadOrder(3))
        );
        assert!(matches!(
            CubicGraph::from_adjacency(&[[0, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]]),
            Err(GraphError::Loop { vertex: 0 })
        ));
        // two disjoint K4s
        let mut adj = alloc::vec::Vec::new();
        for off in [0, 4] {
            for v in 0..4 {
                let nb: alloc::vec::Vec<usize> =
                    (0..4).filter(|&w| w != v).map(|w| w + off).collect();
                adj.push([nb[0], nb[1], nb[2]]);
            }
        }
        assert_eq!(
            CubicGraph::from_adjacency(&adj),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn named_graphs_are_cubic() {
        for g in [k4(), k33(), prism(), cube(), petersen(), heawood()] {
            assert!(g.is_connected());
            assert_eq!(g.edges().len(), g.edge_count());
        }
    }

    #[test]
    fn edge_index_roundtrip() {
        let g = petersen();
        let idx = EdgeIndex::new(&g);
        for (i, &e) in idx.edges().iter().enumerate() {
            assert_eq!(idx.id_of(&g, e), i);
        }
        for v in 0..g.order() {
            for (s, &w) in g.neighbours(v).iter().enumerate() {
                assert_eq!(idx.edge(idx.slot_id(v, s)), Edge::new(v, w));
            }
        }
    }

    #[test]
    fn cycle_normalisation() {
        let a = Cycle::new(&[3, 1, 4, 2]);
        let b = Cycle::new(&[2, 4, 1, 3]);
        assert_eq!(a, b);
        assert_eq!(a.vertices().collect::<alloc::vec::Vec<_>>(), [1, 3, 2, 4]);
    }

    #[test]
    fn quadruple_identity_keeps_pairing() {
        let e = |a, b| Edge::new(a, b);
        let q1 = EdgeQuadruple::new(e(0, 1), e(2, 3), e(4, 5), e(6, 7)).unwrap();
        let q2 = EdgeQuadruple::new(e(6, 7), e(4, 5), e(3, 2), e(1, 0)).unwrap();
        let q3 = EdgeQuadruple::new(e(0, 1), e(4, 5), e(2, 3), e(6, 7)).unwrap();
        assert_eq!(q1, q2);
        assert_ne!(q1, q3);
        assert!(EdgeQuadruple::new(e(0, 1), e(0, 1), e(2, 3), e(4, 5)).is_none());
    }
}
