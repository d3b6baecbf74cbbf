use thiserror::Error;

use crate::graph::{EdgeId, Vertex};
use crate::separation::LinearViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("weight vector has {got} entries, graph has {expected} edges")]
    WeightLength { expected: usize, got: usize },
    #[error("negative weight {0}")]
    NegativeWeight(String),
    #[error("invalid weight literal {0:?}")]
    InvalidWeight(String),
    #[error("source and sink coincide (vertex {0})")]
    SameSourceSink(Vertex),
    #[error("terminal set is empty")]
    EmptyTerminalSet,
    #[error("terminal set has odd cardinality {0}")]
    OddTerminalSet(usize),
    #[error("{0} ~ {1} is not an edge of the cut-tree")]
    NotTreeEdge(Vertex, Vertex),
    #[error("edge {0} has both c and c' infinite")]
    BothInfinite(EdgeId),
    #[error("edge {0} is not in the cut of the given vertex set")]
    EdgeNotInCut(EdgeId),
    #[error("parity condition violated: b(W) + u(F) is even")]
    EvenBlossom,
    #[error("point violates degree or bound constraints ({} violations)", .0.len())]
    InfeasiblePoint(Vec<LinearViolation>),
    #[error("operation requires {expected} mode, instance is {found}")]
    ModeMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("instance too large for enumeration: {0}")]
    TooLarge(String),
}
