use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("parts must be weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },

    #[error("sequence {0:?} violates n_i - n_(i+1) >= -1")]
    AscentViolation(Vec<i64>),

    #[error("closure of {0:?} has a negative entry")]
    NegativeClosure(Vec<i64>),

    #[error("degree bound {bound} is below the top degree {needed} of the right operand")]
    DegreeBound { bound: usize, needed: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("beta series did not stabilize at cutoff {0}")]
    NotStabilized(usize),

    #[error("inexact division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
