use crate::graph::VertexId;

/// Errors raised by graph construction, enumeration and input parsing.
///
/// Verification failures are not errors; they are reported as values.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("clique enumeration exceeded the limit of {limit} cliques")]
    CliqueLimit { limit: u64 },
    #[error("chordless cycle enumeration exceeded the limit of {limit} cycles")]
    CycleLimit { limit: usize },
    #[error("function value at vertex {vertex} equals the level {level}")]
    DegenerateLevel { vertex: VertexId, level: String },
    #[error("function is not injective: vertices {0} and {1} share a value")]
    NotInjective(VertexId, VertexId),
    #[error("function has {got} values, graph has {expected} vertices")]
    FunctionLength { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} has degree {degree}, above the exact-enumeration bound {bound}; use Monte-Carlo")]
    DegreeTooLarge {
        vertex: VertexId,
        degree: usize,
        bound: usize,
    },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
