//! Exhaustive isomorph-free generation of connected cubic graphs with a
//! girth lower bound, and of snarks, together with the canonical labelling,
//! edge-colouring and structural analysis routines the generators need.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod base;
pub mod canon;
pub mod colour;
pub mod graph;
pub mod hgen;
pub mod metrics;
pub mod pipeline;
pub mod sites;
pub mod tripod;

pub use graph::{named, CubicGraph, Cycle, Edge, EdgeIndex, EdgeQuadruple, EdgeTriple, GraphError};
