//! Generation plans and the depth-first construction loop.
//!
//! A plan starts from a base level of graphs with girth at least 3 or 4 and
//! applies a chain of tripod or H steps, each raising the order and
//! possibly the girth bound. Every step follows the canonical construction
//! path: one expansion per orbit of eligible sites, and a child is kept
//! only if the inserted structure is its canonical one.

use alloc::vec::Vec;
use core::fmt;

use crate::canon::canonical_form_and_group;
use crate::colour::{distinct_colourings, is_colourable, is_snark, ColourCycles};
use crate::graph::{CubicGraph, Edge};
use crate::hgen::{self, is_canonical_h};
use crate::sites::{quad_orbit_reps, triple_orbit_reps, SiteContext};
use crate::tripod::{self, is_canonical_tripod};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Auto,
    Tripod,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    All,
    Snarks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    Tripod,
    H,
}

impl Operation {
    pub fn growth(self) -> usize {
        match self {
            Operation::Tripod => 4,
            Operation::H => 6,
        }
    }
}

/// One expansion step producing graphs of girth at least `girth` on
/// `order` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub op: Operation,
    pub girth: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plan {
    pub base_order: usize,
    pub base_girth: usize,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanError {
    BadOrder(usize),
    BadGirth(usize),
    /// The H operation is only implemented for girth 6 and 7.
    HNeedsGirth6(usize),
    /// Snarks have girth at least 5.
    SnarksNeedGirth5(usize),
}

impl fmt::Display for PlanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PlanError::BadOrder(n) => write!(f, "order {n} is not an even number of at least 4"),
            PlanError::BadGirth(k) => write!(f, "girth bound {k} is outside 3..=7"),
            PlanError::HNeedsGirth6(k) => {
                write!(f, "the H operation needs girth bound 6 or 7, not {k}")
            }
            PlanError::SnarksNeedGirth5(k) => {
                write!(f, "snark generation needs girth bound at least 5, not {k}")
            }
        }
    }
}

impl core::error::Error for PlanError {}

impl Plan {
    /// Plan for connected cubic graphs of order `n` and girth at least `k`.
    /// Girth 5 always comes from the tripod. `Auto` uses the H only for the
    /// girth 7 step, on top of tripod-generated girth 6 graphs: their
    /// girth 5 parents are far cheaper than the girth 4 parents of the H.
    pub fn new(n: usize, k: usize, algorithm: Algorithm) -> Result<Plan, PlanError> {
        if n < 4 || n % 2 == 1 {
            return Err(PlanError::BadOrder(n));
        }
        if !(3..=7).contains(&k) {
            return Err(PlanError::BadGirth(k));
        }
        if algorithm == Algorithm::H && k < 6 {
            return Err(PlanError::HNeedsGirth6(k));
        }
        let mut steps = Vec::new();
        let (mut order, mut girth) = (n, k);
        while girth >= 5 {
            let op = match (algorithm, girth) {
                (Algorithm::H, 6..) | (Algorithm::Auto, 7) => Operation::H,
                _ => Operation::Tripod,
            };
            steps.push(Step { op, girth, order });
            order = order.saturating_sub(op.growth());
            girth = match op {
                Operation::Tripod => girth - 1,
                // parents of the H step for girth 6 only need girth 4
                Operation::H if girth == 6 => 4,
                Operation::H => girth - 1,
            };
        }
        steps.reverse();
        Ok(Plan {
            base_order: order,
            base_girth: girth,
            steps,
        })
    }

    pub fn target_order(&self) -> usize {
        self.steps.last().map_or(self.base_order, |s| s.order)
    }

    pub fn target_girth(&self) -> usize {
        self.steps.last().map_or(self.base_girth, |s| s.girth)
    }

    /// Whether the base level is empty, so the plan yields nothing.
    pub fn is_empty(&self) -> bool {
        self.base_order < 4
    }
}

/// Settings of the colouring look-ahead on the last step in snark mode.
#[derive(Clone, Copy, Debug)]
pub struct Lookahead {
    /// Colourings tried for tripod parents.
    pub tripod_colourings: usize,
    /// Colourings tried for H parents.
    pub h_colourings: usize,
    /// No further colouring is computed once fewer sites than this remain.
    pub threshold: usize,
    /// Duplicate colourings tolerated before giving up on more.
    pub retries: usize,
}

impl Default for Lookahead {
    fn default() -> Self {
        Lookahead {
            tripod_colourings: 3,
            h_colourings: 6,
            threshold: 8,
            retries: 5,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Task {
    pub plan: Plan,
    pub class: Class,
    /// Only base graphs whose index is `res` modulo `modulus` are expanded.
    pub res: usize,
    pub modulus: usize,
    /// `None` disables the look-ahead in snark mode.
    pub lookahead: Option<Lookahead>,
}

impl Task {
    pub fn new(plan: Plan, class: Class) -> Result<Task, PlanError> {
        if class == Class::Snarks && plan.target_girth() < 5 {
            return Err(PlanError::SnarksNeedGirth5(plan.target_girth()));
        }
        Ok(Task {
            plan,
            class,
            res: 0,
            modulus: 1,
            lookahead: Some(Lookahead::default()),
        })
    }
}

/// Counters collected during a run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Graphs accepted at each step (index 0 is the base level share).
    pub accepted: Vec<u64>,
    /// Expansions performed at each step.
    pub expansions: Vec<u64>,
    /// Sites removed by the look-ahead.
    pub pruned: u64,
    /// Graphs handed to the sink.
    pub emitted: u64,
}

/// Runs `task` over the base graphs, which must be exactly one
/// representative per isomorphism class of the plan's base level, in a
/// fixed order. `sink` receives every graph of the target class once.
pub fn run(task: &Task, base: &[CubicGraph], sink: &mut dyn FnMut(&CubicGraph)) -> Stats {
    let steps = task.plan.steps.len();
    let mut stats = Stats {
        accepted: alloc::vec![0; steps + 1],
        expansions: alloc::vec![0; steps + 1],
        ..Stats::default()
    };
    for (i, g) in base.iter().enumerate() {
        if i % task.modulus != task.res {
            continue;
        }
        stats.accepted[0] += 1;
        construct(task, g, 0, &mut stats, sink);
    }
    stats
}

fn construct(
    task: &Task,
    g: &CubicGraph,
    depth: usize,
    stats: &mut Stats,
    sink: &mut dyn FnMut(&CubicGraph),
) {
    let steps = &task.plan.steps;
    if depth == steps.len() {
        if task.class == Class::All || is_snark(g) {
            stats.emitted += 1;
            sink(g);
        }
        return;
    }
    let step = steps[depth];
    let last = depth + 1 == steps.len();
    let snarks = last && task.class == Class::Snarks;
    let lookahead = if snarks { task.lookahead } else { None };
    let mut children = Vec::new();
    match step.op {
        Operation::Tripod => {
            tripod_children(g, step.girth, lookahead, snarks, stats, &mut children)
        }
        Operation::H => h_children(g, step.girth, lookahead, snarks, stats, &mut children),
    }
    stats.expansions[depth + 1] += children.len() as u64;
    for (child, canonical) in children {
        if canonical {
            stats.accepted[depth + 1] += 1;
            construct(task, &child, depth + 1, stats, sink);
        }
    }
}

/// Tripod children of `g` for target girth `k`, each with its canonicity
/// verdict. With `uncolourable_only`, colourable children are dropped
/// before the canonicity test.
fn tripod_children(
    g: &CubicGraph,
    k: usize,
    lookahead: Option<Lookahead>,
    uncolourable_only: bool,
    stats: &mut Stats,
    out: &mut Vec<(CubicGraph, bool)>,
) {
    let ctx = SiteContext::new(g, k);
    let sites = ctx.eligible_triples();
    if sites.is_empty() {
        return;
    }
    let (_, group) = canonical_form_and_group(g, None);
    let mut reps = triple_orbit_reps(g, &ctx.idx, &group, sites);
    if let Some(la) = lookahead {
        let before = reps.len();
        prune(g, &ctx, &mut reps, la.tripod_colourings, la, |cc, t| {
            let t = t.map(|e| e as usize);
            cc.has_prune_path(t) || cc.has_prune_tree(g, &ctx.idx, t)
        });
        stats.pruned += (before - reps.len()) as u64;
    }
    let centre = g.order() + 3;
    for t in reps {
        let edges = t.map(|e| ctx.idx.edge(e as usize));
        let h = tripod::expand_edges(g, edges);
        if uncolourable_only && is_colourable(&h) {
            continue;
        }
        let ok = is_canonical_tripod(&h, centre, k);
        out.push((h, ok));
    }
}

fn h_children(
    g: &CubicGraph,
    k: usize,
    lookahead: Option<Lookahead>,
    uncolourable_only: bool,
    stats: &mut Stats,
    out: &mut Vec<(CubicGraph, bool)>,
) {
    let ctx = SiteContext::new(g, k);
    let sites = ctx.eligible_quads();
    if sites.is_empty() {
        return;
    }
    let (_, group) = canonical_form_and_group(g, None);
    let mut reps = quad_orbit_reps(g, &ctx.idx, &group, sites);
    if let Some(la) = lookahead {
        let before = reps.len();
        prune(g, &ctx, &mut reps, la.h_colourings, la, |cc, q| {
            cc.has_prune_pair(q.map(|e| e as usize))
        });
        stats.pruned += (before - reps.len()) as u64;
    }
    let n = g.order();
    let central = Edge::new(n + 4, n + 5);
    for q in reps {
        let edges = q.map(|e| ctx.idx.edge(e as usize));
        let h = hgen::expand_edges(g, edges);
        if uncolourable_only && is_colourable(&h) {
            continue;
        }
        let ok = is_canonical_h(&h, central, k);
        out.push((h, ok));
    }
}

/// Removes the sites for which one of up to `max` colourings of `g` has a
/// prune structure. A further colouring is only computed while at least
/// `la.threshold` sites remain.
fn prune<T>(
    g: &CubicGraph,
    ctx: &SiteContext,
    sites: &mut Vec<T>,
    max: usize,
    la: Lookahead,
    prunable: impl Fn(&ColourCycles, &T) -> bool,
) {
    let mut used = 0;
    let mut seen: Vec<[u128; 3]> = Vec::new();
    let mut variant = 0u32;
    let mut misses = 0;
    while used < max && !sites.is_empty() && (used == 0 || sites.len() >= la.threshold) {
        let Some(col) = crate::colour::find_colouring(g, &ctx.idx, variant) else {
            // uncolourable parents admit no look-ahead
            return;
        };
        variant += 1;
        let p = col.partition();
        if seen.contains(&p) {
            misses += 1;
            if misses > la.retries {
                return;
            }
            continue;
        }
        seen.push(p);
        used += 1;
        let cc = ColourCycles::new(g, &ctx.idx, &col);
        sites.retain(|s| !prunable(&cc, s));
    }
}

/// Convenience wrapper: all graphs of `task` as a vector.
pub fn collect(task: &Task, base: &[CubicGraph]) -> (Vec<CubicGraph>, Stats) {
    let mut out = Vec::new();
    let stats = run(task, base, &mut |g| out.push(g.clone()));
    (out, stats)
}

/// Colourings handed to the look-ahead for a parent, exposed for tests.
pub fn lookahead_colourings(g: &CubicGraph, max: usize) -> usize {
    let idx = crate::graph::EdgeIndex::new(g);
    distinct_colourings(g, &idx, max, Lookahead::default().retries).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plans() {
        let p = Plan::new(22, 5, Algorithm::Auto).unwrap();
        assert_eq!((p.base_order, p.base_girth), (18, 4));
        assert_eq!(p.steps.len(), 1);
        let p = Plan::new(26, 6, Algorithm::H).unwrap();
        assert_eq!((p.base_order, p.base_girth), (20, 4));
        assert_eq!(
            Plan::new(26, 6, Algorithm::Auto).unwrap().steps[1].op,
            Operation::Tripod
        );
        let p = Plan::new(26, 6, Algorithm::Tripod).unwrap();
        assert_eq!((p.base_order, p.base_girth), (18, 4));
        assert_eq!(p.steps.len(), 2);
        let p = Plan::new(32, 7, Algorithm::H).unwrap();
        assert_eq!((p.base_order, p.base_girth), (20, 4));
        assert_eq!(
            p.steps.iter().map(|s| s.op).collect::<Vec<_>>(),
            [Operation::H, Operation::H]
        );
        let p = Plan::new(32, 7, Algorithm::Auto).unwrap();
        assert_eq!((p.base_order, p.base_girth), (18, 4));
        let ops: Vec<_> = p.steps.iter().map(|s| s.op).collect();
        assert_eq!(ops, [Operation::Tripod, Operation::Tripod, Operation::H]);
        let p = Plan::new(32, 7, Algorithm::Tripod).unwrap();
        assert_eq!(p.steps[2].op, Operation::Tripod);
        assert_eq!(p.base_order, 20);
        assert!(Plan::new(20, 5, Algorithm::H).is_err());
        assert!(Plan::new(8, 6, Algorithm::H).unwrap().is_empty());
    }
}
