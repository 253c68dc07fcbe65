//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("conflicting edge between {u} and {v}: pair already connected")]
    ConflictingEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("consecutive walk vertices {u} and {v} are not adjacent")]
    NotAWalk { u: usize, v: usize },
    #[error("no edge between {u} and {v}")]
    NotAnEdge { u: usize, v: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown graph family: {0}")]
    UnknownFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchingError {
    #[error("switched matrix has a -1 entry between {u} and {v}; not representable as a mixed graph")]
    NotMixedRepresentable { u: usize, v: usize },
    #[error("move {mv} pattern does not match at vertex {center}")]
    PatternMismatch { mv: u8, center: usize },
    #[error("underlying graph is not a cycle")]
    NotACycle,
    #[error("underlying graph is not a forest")]
    NotAForest,
    #[error("graph is not connected unicyclic")]
    NotUnicyclic,
    #[error("graphs have different underlying graphs")]
    UnderlyingMismatch,
    #[error("graph is not in canonical two-arc form")]
    NotTypeTwo,
    #[error("switching function must assign a nonzero unit to every vertex")]
    IncompleteSwitching,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharPolyError {
    #[error("size guard exceeded: order {order} > {max_order}")]
    OrderGuard { order: usize, max_order: usize },
    #[error("size guard exceeded: corank {corank} > {max_corank}")]
    CorankGuard { corank: usize, max_corank: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("eigensolver failed to converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search space guard exceeded: {0}")]
    Guard(String),
    #[error("registry has no graph named {0:?}; run the reconstruction first")]
    MissingRegistryEntry(String),
    #[error("no graph matches the requested fingerprint for {0:?}")]
    NothingFound(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    CharPoly(#[from] CharPolyError),
}
