use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation would produce a graph (or search) larger than the active cap.
    #[error("{what} needs order {order}, above the cap of {cap} (raise it with {hint})")]
    CapExceeded {
        what: String,
        order: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph6/sparse6 parse error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    #[error("family expression error at byte {offset}: {message}")]
    Expression { offset: usize, message: String },

    #[error("root rank {rank} out of range: polynomial has {available} real roots")]
    RankOutOfRange { rank: usize, available: usize },

    #[error("spectral predicate error: {0}")]
    Predicate(String),
}

impl Error {
    pub(crate) fn format(offset: usize, message: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn expression(offset: usize, message: impl Into<String>) -> Self {
        Error::Expression {
            offset,
            message: message.into(),
        }
    }
}
