use thiserror::Error;

/// Errors raised by graph construction, parsing and the graph-level checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("order {requested} exceeds capacity {capacity}")]
    Capacity { requested: usize, capacity: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
