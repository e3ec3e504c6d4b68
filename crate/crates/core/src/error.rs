use thiserror::Error;

use crate::graph::MAX_ORDER;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("edge {{{0}, {1}}} is already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),

    #[error("malformed graph6 header: {0}")]
    Graph6Header(String),
    #[error("graph6 bit stream truncated: expected {expected} data bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6 string has {0} trailing byte(s) after the bit stream")]
    Graph6Trailing(usize),
    #[error("invalid graph6 data byte {byte:#04x} at offset {offset}")]
    Graph6Byte { byte: u8, offset: usize },
    #[error("graph6 padding bits are not zero")]
    Graph6Padding,

    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("walk enumeration limited to n <= {max_order} and k <= {max_depth}; got n = {order}, k = {depth}")]
    EnumerationCap {
        order: usize,
        depth: usize,
        max_order: usize,
        max_depth: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is disconnected")]
    Disconnected,
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
