use thiserror::Error;

/// Every fallible operation in this crate reports one of these.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex count {n} outside supported range 1..={cap}")]
    BadVertexCount { n: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph6 at byte {offset}: {reason}")]
    Malformed { offset: usize, reason: String },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("need two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown fixture id: {0}")]
    UnknownId(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("bad range: {0}")]
    BadRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
