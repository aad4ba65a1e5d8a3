use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("polynomial is not homogeneous (found degrees {found:?})")]
    Inhomogeneous { found: Vec<u32> },

    #[error("potential has degree {actual}, expected {expected}")]
    DegreeMismatch { expected: u32, actual: u32 },

    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("the zero polynomial is not a potential")]
    ZeroPolynomial,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arity mismatch: tree has {leaves} leaves, got {inputs} inputs")]
    ArityMismatch { leaves: usize, inputs: usize },

    #[error("table does not contain arity {0}")]
    MissingArity(usize),

    #[error("malformed table: {0}")]
    MalformedTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
