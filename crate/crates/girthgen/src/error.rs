use std::io;

use girthgen_core::base::BaseError;
use girthgen_core::pipeline::PlanError;
use girthgen_core::GraphError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("adjacency list parse error at vertex {vertex}: {message}")]
    Appendix { vertex: usize, message: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Plan(#[from] PlanError),
    #[error(transparent)]
    Base(#[from] BaseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
