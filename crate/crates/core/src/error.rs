use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cone is not pointed: {0}")]
    NonPointed(String),
    #[error("polyhedron is infeasible")]
    Infeasible,
    #[error("objective is unbounded below")]
    Unbounded,
    #[error("zero vector has no primitive part")]
    ZeroVector,
    #[error("cone is not simplicial")]
    NonSimplicial,
    #[error("fans have different base cones")]
    BaseMismatch,
    #[error("vector {0:?} lies outside the support of the fan")]
    OutsideSupport(Vec<i64>),
    #[error("divisor is not Q-Cartier")]
    NotQCartier,
    #[error("variety is not log terminal")]
    NotLogTerminal,
    #[error("invalid boundary: {0}")]
    BadBoundary(String),
    #[error("linear system is empty")]
    EmptyLinearSystem,
    #[error("divisor is not Cartier")]
    NotCartier,
    #[error("divisor shares a component with the support of Z")]
    SharedComponent,
    #[error("pair is not strictly log canonical")]
    NotStrictlyLc,
    #[error("expected lattice rank {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("pair term {0} is not a Q-Cartier divisor")]
    NotQCartierBody(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("divisor is not integral")]
    NotIntegral,
    #[error("computation cancelled")]
    Cancelled,
    #[error("invalid input: {0}")]
    Invalid(String),
}
