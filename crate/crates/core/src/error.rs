use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("Coxeter matrix defines an infinite group")]
    InfiniteGroup,
    #[error("size cap exceeded: {what} has more than {cap} elements")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("not a Coxeter word: {0}")]
    NotCoxeterWord(String),
    #[error("element is not a noncrossing partition for this Coxeter element")]
    NotNoncrossing,
    #[error("reflections are not simultaneously conjugate to simple reflections")]
    NotParabolic,
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("cannot rotate at {0}: {1}")]
    InvalidRotation(String, &'static str),
    #[error("invalid multichain: {0}")]
    InvalidMultichain(String),
    #[error("subword complex: {0}")]
    Subword(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
