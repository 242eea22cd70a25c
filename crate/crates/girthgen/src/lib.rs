//! File formats, embedded fixtures, generation tasks, property reports and
//! verification suites on top of `girthgen-core`.

pub mod appendix;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph6;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
