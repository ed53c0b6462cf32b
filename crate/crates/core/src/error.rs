use thiserror::Error;

use crate::scalar::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("scalar kind mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot reduce {value} modulo {p}: denominator is divisible by p")]
    BadReduction { value: String, p: u64 },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("subspace basis is rank deficient (rank {rank} < {expected})")]
    RankDeficient { rank: usize, expected: usize },

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("malformed algebra: {0}")]
    Malformed(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("degree {degree} multiplication is not available on this algebra (top degree {top})")]
    Unavailable { degree: usize, top: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("Pfaffian requires an even dimension, got {0}")]
    OddDimension(usize),

    #[error("zero vector not allowed here")]
    ZeroVector,

    #[error("enumeration of {points} projective points exceeds the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u64 },

    #[error("bivector is not in the kernel of psi_2")]
    NotInKernel,

    #[error("failed to sample a full-rank subspace after {0} attempts")]
    RetryLimit(usize),

    #[error("internal error: {0}")]
    Internal(String),
}
