//! Signature-generic real and complexified Clifford algebras.
//!
//! Blades are bitmasks over generator indices in canonical increasing order;
//! the product of two blades is resolved by counting transpositions and
//! contracting repeated generators with the metric.

pub mod dirac_embedding;
mod idempotent;
mod multivector;
mod scalar;
mod signature;
mod volume;

use thiserror::Error;

pub use idempotent::{
    idempotent_from_factors, one_sided_ideal_basis, primitive_idempotent, IdealBasis, IdempotentCertificate, Side,
    Span, RANK_TOL,
};
pub use multivector::{Multivector, MultivectorJson};
pub use scalar::{ExactComplex, Scalar};
pub use signature::{grade, idempotent_factor_count, radon_hurwitz, Blade, Signature, MAX_GENERATORS};
pub use volume::{complexify, expand_complex, volume_element, VolumeElement};

/// Absolute tolerance for algebraic identities in floating point.
pub const ALGEBRA_TOL: f64 = 1e-12;

/// Exact multivector over complex rationals.
pub type ExactMultivector = Multivector<ExactComplex>;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum CliffordError {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("Cl({p},{q}) exceeds the {max}-generator limit")]
    DimensionTooLarge { p: u8, q: u8, max: usize },
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("bad blade label {0:?}")]
    BadBladeLabel(String),
    #[error("primitive idempotent needs {expected} factors, got {got}")]
    WrongFactorCount { expected: i64, got: usize },
    #[error("factor {0} is not a multiple of a single basis blade")]
    FactorNotBlade(usize),
    #[error("factor {0} does not square to +1")]
    FactorSquare(usize),
    #[error("factors {0} and {1} do not commute")]
    FactorsAnticommute(usize, usize),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("volume element of {0} is not central")]
    VolumeNotCentral(Signature),
    #[error("volume element of {0} squares to +1")]
    VolumePositive(Signature),
    #[error("multivector has non-real coefficients")]
    NotReal,
    #[error("blade {0} is not in the complexified half-basis")]
    NotFolded(String),
}
