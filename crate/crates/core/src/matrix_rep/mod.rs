//! Concrete matrix representations: quaternion units, spacetime generators,
//! Dirac–Hestenes and Dirac spinors, and charge conjugation.

mod basis;
mod charge;
mod matrix;
mod spinor;

use thiserror::Error;

use crate::clifford::{CliffordError, Signature};

pub use basis::{gamma_basis, represent, sigma_basis, GammaBasis};
pub use charge::{charge_conjugation_matrix, conjugated_dirac, conjugated_row, tilde_star, ChargeConjugation};
pub use matrix::ComplexMatrix;
pub use spinor::{
    dh_matrix, dirac_from_dh, e41_matrix, ideal_matrix, DiracHestenesSpinor, DiracSpinor, EvenCoefficients,
};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum MatrixError {
    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("expected a Cl(1,3) element, got {0}")]
    WrongSignature(Signature),
    #[error("matrix square is not a nonzero multiple of the identity")]
    NotScalarSquare,
    #[error("matrix is not in the minimal left ideal shape")]
    NotIdealShape,
    #[error("multivector is not a real even element")]
    NotEvenReal,
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}
