use thiserror::Error;

use crate::function::Property;
use crate::graph::{RoadKey, VertexId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("unknown road key {0}")]
    UnknownRoad(RoadKey),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("non-finite weight {0}")]
    NonFiniteWeight(f64),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("missing header")]
    MissingHeader,
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("road endpoint out of range")]
    EndpointOutOfRange,
    #[error("self-loop road")]
    SelfLoop,
    #[error("non-finite weight")]
    NonFiniteWeight,
    #[error("expected {expected} vertex lines, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error("header declares {declared} roads, found {found}")]
    RoadCount { declared: usize, found: usize },
}

/// A graph-file error. `line` is 1-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{kind}, line {line}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PathError {
    #[error("unknown road key {0}")]
    UnknownRoad(RoadKey),
    #[error("road {key} starts at {start}, but the path ends at {end}")]
    BrokenChain {
        key: RoadKey,
        start: VertexId,
        end: VertexId,
    },
    #[error("source {0} is not a vertex of the graph")]
    BadSource(VertexId),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("source {0} is not a vertex of the graph")]
    BadSource(VertexId),
    #[error("vertex {0} unreachable from source")]
    Unreachable(VertexId),
    #[error("path function `{function}` does not declare {missing:?}, required by {algorithm}")]
    MissingProperty {
        algorithm: &'static str,
        function: String,
        missing: Vec<Property>,
    },
    #[error("negative circle detected: {0}")]
    NegativeCircle(String),
    #[error("negative weight on road {0}")]
    NegativeWeight(RoadKey),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FunctionError {
    #[error("probability {0} outside (0, 1)")]
    Probability(f64),
    #[error("negative weight on road {0}; detour-based functions need nonnegative weights")]
    NegativeWeight(RoadKey),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("tree rooted at {tree} compared against oracle rooted at {oracle}")]
    SourceMismatch { tree: VertexId, oracle: VertexId },
    #[error(transparent)]
    Path(#[from] PathError),
}
