//! Invariant ensembles of Hermitian matrices over R, C and H.
//!
//! The library covers, for the three flat symmetric spaces P_n(F):
//!
//! - Gaussian and Haar sampling, radial decomposition, the minor process
//!   ([`ensembles`]);
//! - Gelfand-Tsetlin polytopes: membership, volume, exact and MCMC uniform
//!   samplers, projection densities ([`gtpolytope`]);
//! - rank-one perturbation laws, the Laguerre-type chain, eigenvalue and
//!   matrix densities ([`perturbation`]);
//! - correlation kernels of the triangular and rectangular interlaced point
//!   processes ([`detproc`]);
//! - root-system data, exact Weyl dimensions, characters and orbital
//!   integrals ([`weyl`]);
//! - exact lattice counts, rank-one tensor rules, branching rules and the
//!   semiclassical convergence harness ([`combinat`]).
//!
//! Every sampler is cross-checked against a closed-form density and every
//! continuous formula against a discrete oracle; the [`verify`] module
//! packages these checks into runnable suites.

pub mod combinat;
pub mod detproc;
pub mod ensembles;
pub mod error;
pub mod field;
pub mod gtpolytope;
pub mod linalg;
pub mod perturbation;
pub mod poly;
pub mod quad;
pub mod quaternion;
pub mod rng;
pub mod stats;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use field::{ChamberType, Field, FieldContext};

pub use ensembles::{MatrixKind, RadialPoint, StructuredMatrix};
pub use gtpolytope::{GTPattern, GTSpec};
pub use weyl::{RootSystem, WeightVector};
pub use detproc::{CorrelationKernel, PolynomialBasis};
pub use combinat::{DecompositionTable, SemiclassicalSchedule};

