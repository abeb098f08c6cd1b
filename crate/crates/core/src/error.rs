//! Library-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field context: {0}")]
    InvalidContext(String),
    #[error("point is not in the Weyl chamber of type {chamber}: {reason}")]
    NotInChamber { chamber: &'static str, reason: String },
    #[error("point must lie in the interior of the Weyl chamber: {0}")]
    InteriorViolation(String),
    #[error("minor order {k} out of range 1..={n}")]
    MinorOutOfRange { k: usize, n: usize },
    #[error("eigensolver did not converge (residual {residual:.3e})")]
    EigenFailure { residual: f64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("polytope has empty interior (degenerate top row)")]
    DegeneratePolytope,
    #[error("unsupported parameter shape: {0}")]
    UnsupportedCase(String),
    #[error("denominator vanishes at this point; use the limit evaluation")]
    SingularPoint,
    #[error("basis is ill-conditioned (condition estimate {cond:.3e})")]
    IllConditionedBasis { cond: f64 },
    #[error("biorthogonality check failed: |<chi_{i}, psi_{j}> - delta| = {defect:.3e}")]
    NotBiorthogonal { i: usize, j: usize, defect: f64 },
    #[error("instance too large: {size} exceeds the enumeration budget {budget}")]
    InstanceTooLarge { size: u64, budget: u64 },
    #[error("input vector has ties; strict ordering required")]
    AmbiguousTies,
    #[error("non-integral or non-dominant weight: {0}")]
    BadWeight(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
