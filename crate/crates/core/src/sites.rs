//! Expansion sites for the tripod and H operations: eligible edge-triples
//! and edge-quadruples, and one representative per automorphism orbit.
//!
//! Sites are handled as edge ids of an [`EdgeIndex`]. A triple is sorted,
//! a quadruple `[a, b, c, d]` stands for `{{a, b}, {c, d}}` with `a < b`,
//! `c < d` and `a < c`.

use alloc::vec::Vec;

use crate::canon::{AutGroup, UnionFind};
use crate::graph::{edge_members, CubicGraph, EdgeIndex, EdgeQuadruple, EdgeSet, EdgeTriple};
use crate::metrics::{short_cycles, Distances};

/// Edge data of one parent graph shared by the site enumerations.
#[derive(Clone, Debug)]
pub struct SiteContext {
    pub idx: EdgeIndex,
    /// Row-major edge distances; 0 on the diagonal.
    dist: Vec<u8>,
    /// Edge masks of the cycles shorter than the target girth with the
    /// number of their edges a site has to subdivide.
    cycles: Vec<(EdgeSet, u32)>,
    k: usize,
}

impl SiteContext {
    /// Context for target girth `k`.
    pub fn new(g: &CubicGraph, k: usize) -> Self {
        let idx = EdgeIndex::new(g);
        let d = Distances::new(g);
        let m = idx.len();
        let mut dist = alloc::vec![0u8; m * m];
        for a in 0..m {
            for b in a + 1..m {
                let x = d.edge(idx.edge(a), idx.edge(b)).min(255) as u8;
                dist[a * m + b] = x;
                dist[b * m + a] = x;
            }
        }
        let cycles = short_cycles(g, k)
            .iter()
            .map(|c| (idx.cycle_mask(g, c), (k - c.len()) as u32))
            .collect();
        SiteContext {
            idx,
            dist,
            cycles,
            k,
        }
    }

    #[inline]
    pub fn distance(&self, a: usize, b: usize) -> usize {
        self.dist[a * self.idx.len() + b] as usize
    }

    /// Edges at distance at least `t` from `a` (never `a` itself).
    fn far(&self, a: usize, t: usize) -> EdgeSet {
        let m = self.idx.len();
        let row = &self.dist[a * m..(a + 1) * m];
        let mut mask = 0;
        for (b, &x) in row.iter().enumerate() {
            if b != a && x as usize >= t {
                mask |= 1u128 << b;
            }
        }
        mask
    }

    /// Edges the next pick must come from, given the already chosen edges
    /// and the number of picks left; `None` if some short cycle can no
    /// longer be destroyed.
    fn forced(&self, chosen: EdgeSet, left: u32) -> Option<EdgeSet> {
        let mut mask = EdgeSet::MAX;
        for &(c, need) in &self.cycles {
            let have = (c & chosen).count_ones();
            if need > have {
                let missing = need - have;
                if missing > left {
                    return None;
                }
                if missing == left {
                    mask &= c;
                }
            }
        }
        Some(mask)
    }

    fn all_destroyed(&self, chosen: EdgeSet) -> bool {
        self.cycles
            .iter()
            .all(|&(c, need)| (c & chosen).count_ones() >= need)
    }

    /// Eligible triples for the tripod operation: minimum pairwise edge
    /// distance at least `k - 2`, and every cycle of length `l < k` meets at
    /// least `k - l` of the three edges.
    pub fn eligible_triples(&self) -> Vec<[u8; 3]> {
        let m = self.idx.len();
        let t = self.k - 2;
        let far: Vec<EdgeSet> = (0..m).map(|a| self.far(a, t)).collect();
        let mut out = Vec::new();
        let Some(first) = self.forced(0, 3) else {
            return out;
        };
        for a in edge_members(first & mask_below(m)) {
            let ca = 1u128 << a;
            let Some(fa) = self.forced(ca, 2) else {
                continue;
            };
            for b in edge_members(far[a] & above(a) & fa) {
                let cb = ca | (1u128 << b);
                let Some(fb) = self.forced(cb, 1) else {
                    continue;
                };
                for c in edge_members(far[a] & far[b] & above(b) & fb) {
                    out.push([a as u8, b as u8, c as u8]);
                }
            }
        }
        out
    }

    /// Eligible quadruples for the H operation: the paired distance bound
    /// `d_q >= k - 2`, and every cycle of length `l < k` meets at least
    /// `k - l` of the four edges.
    pub fn eligible_quads(&self) -> Vec<[u8; 4]> {
        let m = self.idx.len();
        let t = self.k - 2;
        let far2: Vec<EdgeSet> = (0..m).map(|a| self.far(a, t)).collect();
        let far3: Vec<EdgeSet> = (0..m).map(|a| self.far(a, t - 1)).collect();
        let mut out = Vec::new();
        for a in 0..m {
            let ca = 1u128 << a;
            for b in edge_members(far2[a] & above(a)) {
                let cb = ca | (1u128 << b);
                let Some(fb) = self.forced(cb, 2) else {
                    continue;
                };
                let cross = far3[a] & far3[b];
                for c in edge_members(cross & above(a) & fb) {
                    let cc = cb | (1u128 << c);
                    let Some(fc) = self.forced(cc, 1) else {
                        continue;
                    };
                    for d in edge_members(cross & far2[c] & above(c) & fc) {
                        debug_assert!(self.all_destroyed(cc | (1u128 << d)));
                        out.push([a as u8, b as u8, c as u8, d as u8]);
                    }
                }
            }
        }
        out
    }

    pub fn triple(&self, t: [u8; 3]) -> EdgeTriple {
        let e = |i: u8| self.idx.edge(i as usize);
        EdgeTriple::new(e(t[0]), e(t[1]), e(t[2])).expect("distinct edges")
    }

    pub fn quadruple(&self, q: [u8; 4]) -> EdgeQuadruple {
        let e = |i: u8| self.idx.edge(i as usize);
        EdgeQuadruple::new(e(q[0]), e(q[1]), e(q[2]), e(q[3])).expect("distinct edges")
    }
}

#[inline]
fn above(a: usize) -> EdgeSet {
    if a >= 127 {
        0
    } else {
        EdgeSet::MAX << (a + 1)
    }
}

#[inline]
fn mask_below(m: usize) -> EdgeSet {
    if m >= 128 {
        EdgeSet::MAX
    } else {
        (1u128 << m) - 1
    }
}

/// The permutation of edge ids induced by each generator.
fn edge_permutations(g: &CubicGraph, idx: &EdgeIndex, group: &AutGroup) -> Vec<Vec<u8>> {
    group
        .generators
        .iter()
        .map(|p| {
            idx.edges()
                .iter()
                .map(|&e| idx.id_of(g, p.edge_image(e)) as u8)
                .collect()
        })
        .collect()
}

fn orbit_reps<T: Ord + Copy>(
    sites: Vec<T>,
    perms: &[Vec<u8>],
    image: impl Fn(&[u8], &T) -> T,
) -> Vec<T> {
    if perms.is_empty() || sites.len() < 2 {
        return sites;
    }
    debug_assert!(sites.windows(2).all(|w| w[0] < w[1]));
    let mut uf = UnionFind::new(sites.len());
    for p in perms {
        for (i, s) in sites.iter().enumerate() {
            let j = sites
                .binary_search(&image(p, s))
                .expect("site set not closed under the automorphism group");
            uf.union(i, j);
        }
    }
    (0..sites.len())
        .filter(|&i| uf.find(i) == i)
        .map(|i| sites[i])
        .collect()
}

/// The lexicographically smallest triple of each orbit of `triples`, which
/// must be sorted and closed under the group.
pub fn triple_orbit_reps(
    g: &CubicGraph,
    idx: &EdgeIndex,
    group: &AutGroup,
    triples: Vec<[u8; 3]>,
) -> Vec<[u8; 3]> {
    let perms = edge_permutations(g, idx, group);
    orbit_reps(triples, &perms, |p, t| {
        let mut x = t.map(|e| p[e as usize]);
        x.sort_unstable();
        x
    })
}

/// The lexicographically smallest quadruple of each orbit of `quads`.
pub fn quad_orbit_reps(
    g: &CubicGraph,
    idx: &EdgeIndex,
    group: &AutGroup,
    quads: Vec<[u8; 4]>,
) -> Vec<[u8; 4]> {
    let perms = edge_permutations(g, idx, group);
    orbit_reps(quads, &perms, |p, q| {
        normalise_quad(q.map(|e| p[e as usize]))
    })
}

/// Normal form of `{{q0, q1}, {q2, q3}}`.
pub fn normalise_quad(q: [u8; 4]) -> [u8; 4] {
    let (a, b) = (q[0].min(q[1]), q[0].max(q[1]));
    let (c, d) = (q[2].min(q[3]), q[2].max(q[3]));
    if a < c {
        [a, b, c, d]
    } else {
        [c, d, a, b]
    }
}

/// Eligible edge-triples of `g` for target girth `k`.
pub fn eligible_triples(g: &CubicGraph, k: usize) -> Vec<EdgeTriple> {
    let ctx = SiteContext::new(g, k);
    ctx.eligible_triples()
        .into_iter()
        .map(|t| ctx.triple(t))
        .collect()
}

/// Eligible edge-quadruples of `g` for target girth `k`.
pub fn eligible_quads(g: &CubicGraph, k: usize) -> Vec<EdgeQuadruple> {
    let ctx = SiteContext::new(g, k);
    ctx.eligible_quads()
        .into_iter()
        .map(|q| ctx.quadruple(q))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::automorphisms;
    use crate::graph::named::*;

    #[test]
    fn petersen_sites() {
        let g = petersen();
        // girth 5 means nothing to destroy for k = 5
        let ctx = SiteContext::new(&g, 5);
        let all = ctx.eligible_triples();
        assert!(!all.is_empty());
        for t in &all {
            for i in 0..3 {
                for j in i + 1..3 {
                    assert!(ctx.distance(t[i] as usize, t[j] as usize) >= 3);
                }
            }
        }
        let reps = triple_orbit_reps(&g, &ctx.idx, &automorphisms(&g), all.clone());
        assert!(reps.len() < all.len());
        // the Heawood graph reduces to the Petersen graph
        assert!(!SiteContext::new(&g, 6).eligible_triples().is_empty());
    }

    #[test]
    fn quads_are_normalised() {
        let g = heawood();
        let ctx = SiteContext::new(&g, 7);
        let qs = ctx.eligible_quads();
        for q in &qs {
            assert_eq!(normalise_quad(*q), *q);
        }
    }
}
