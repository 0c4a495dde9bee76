use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    /// The graph has a cycle with an exit; `exit_vertex` is a cycle vertex
    /// emitting more than one edge.
    #[error("graph is not no-exit: cycle vertex `{exit_vertex}` emits {out_degree} edges")]
    NotNoExit {
        exit_vertex: String,
        out_degree: usize,
    },
    #[error("vertex `{0}` does not lie on a cycle")]
    NotOnCycle(String),
    #[error("vertex `{0}` is not a sink")]
    NotASink(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("expected a {expected} block")]
    WrongKind { expected: &'static str },
    #[error("invalid block: {0}")]
    InvalidBlock(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("component of degree {degree} has {support} support positions (cap {cap})")]
    ComponentTooLarge {
        degree: i64,
        support: usize,
        cap: usize,
    },
    #[error("unsupported field order {0}: expected a prime at most 7")]
    UnsupportedField(u8),
    #[error(transparent)]
    Shift(#[from] ShiftError),
}
