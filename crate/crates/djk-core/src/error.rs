use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation needs a two-operation (double) table, got a single-operation one")]
    KindMismatch,

    #[error("subspace is not a two-sided ideal: basis vector {member} times e_{generator} leaves the subspace")]
    NotAnIdeal { member: usize, generator: usize },

    #[error("identity polynomial is not multilinear in variable x{var}")]
    NotMultilinear { var: usize },

    #[error("identity polynomial is not homogeneous in variable x{var}")]
    NotHomogeneous { var: usize },

    #[error("truncation overflow: T-degree {degree} exceeds bound {bound}")]
    TruncationOverflow { degree: usize, bound: usize },

    #[error("conformal endomorphism violates semilinearity at component {component}")]
    NotSemilinear { component: usize },

    #[error("input fails the {suite} identity suite")]
    SuiteFailed { suite: &'static str },

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("left multiplication by the idempotent violates l(2l-1)(l-1) = 0")]
    MinimalPolynomialViolation,

    #[error("element does not reduce to an idempotent modulo the bar ideal")]
    NotIdempotentModuloBar,

    #[error("structure algebra is not closed under the bracket (basis pair {i}, {j})")]
    ClosureViolation { i: usize, j: usize },

    #[error("map on the structure algebra is not well-defined: a relation among generators is not preserved")]
    IllDefinedMap,

    #[error("bimodule condition failed")]
    BimoduleConditionFailed,

    #[error("bimodule map condition failed")]
    BimoduleMapConditionFailed,

    #[error("ad-nilpotency failed: [x,[x,[x,a]]] != 0 for basis element {index}")]
    AdNilpotencyFailed { index: usize },

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
