use thiserror::Error;

/// Errors produced by the combinatorial, symbolic and sampling layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("element {element} lies outside a ground set of size {size}")]
    OutOfRange { element: usize, size: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Domain(String),
    #[error("no value bound for symbol b{0}")]
    UnboundSymbol(u32),
    #[error("unsupported: {0}")]
    Capability(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
