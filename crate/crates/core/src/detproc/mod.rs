//! Determinantal kernels (stub).
pub struct CorrelationKernel;
pub struct PolynomialBasis;
