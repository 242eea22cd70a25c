//! Embedded graph lists.

use girthgen_core::CubicGraph;

use crate::appendix;

/// The 39 snarks with girth 6 on 38 vertices, one adjacency list per line.
pub const GIRTH6_ORDER38_SNARKS: &str = include_str!("../fixtures/snarks_girth6_order38.txt");

pub fn girth6_order38_snarks() -> Vec<CubicGraph> {
    GIRTH6_ORDER38_SNARKS
        .lines()
        .map(|l| appendix::parse(l).expect("embedded fixture parses"))
        .collect()
}
