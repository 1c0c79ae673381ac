use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be positive, got {0}")]
    NonPositiveOrder(i64),
    #[error("non-faithful presentation: weights share a factor with r, effective order {effective}")]
    NotFaithful { effective: i64 },
    #[error("point {0} is not in the lattice")]
    NotInLattice(String),
    #[error("point {0} does not generate the lattice modulo Z^3")]
    NotGenerating(String),
    #[error("invalid subdivision center: {0}")]
    InvalidCenter(String),
    #[error("round-down self-check failed: {0}")]
    CharacterMismatch(String),
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone is not full-dimensional")]
    NotFullDimensional,
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
    #[error("invalid brick: {0}")]
    InvalidBrick(String),
    #[error("invalid theta: {0}")]
    InvalidTheta(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
