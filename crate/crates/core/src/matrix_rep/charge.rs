use num_complex::Complex64;

use super::basis::GammaBasis;
use super::matrix::ComplexMatrix;
use super::spinor::{dh_matrix, e41_matrix, DiracHestenesSpinor};
use super::MatrixError;

/// The antiautomorphism `A -> ~(A*)` on 4x4 matrices,
/// `A -> (C E^T) A^T (C E^T)^-1` with `C = G13` and `E = G0123`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeConjugation {
    ce_t: ComplexMatrix,
    ce_t_inv: ComplexMatrix,
}

impl ChargeConjugation {
    pub fn new(basis: &GammaBasis) -> Result<Self, MatrixError> {
        let c = basis.blade(0b1010);
        let e = basis.blade(0b1111);
        let ce_t = c.mul(&e.transpose())?;
        let ce_t_inv = ce_t.involutive_inverse()?;
        Ok(Self { ce_t, ce_t_inv })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.ce_t
    }

    pub fn apply(&self, a: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
        self.ce_t.mul(&a.transpose())?.mul(&self.ce_t_inv)
    }
}

impl Default for ChargeConjugation {
    fn default() -> Self {
        Self::new(&GammaBasis::default()).expect("standard basis has an involutive C E^T")
    }
}

/// `C E^T` for the standard basis.
pub fn charge_conjugation_matrix() -> ComplexMatrix {
    ChargeConjugation::default().ce_t
}

pub fn tilde_star(a: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
    ChargeConjugation::default().apply(a)
}

/// Charge-conjugated Dirac spinor `~(e41*) ~(phi*)`, an element of the
/// minimal right ideal: only the last row is nonzero.
pub fn conjugated_dirac(s: &DiracHestenesSpinor) -> ComplexMatrix {
    let cc = ChargeConjugation::default();
    let e = cc.apply(&e41_matrix(&GammaBasis::default())).expect("4x4");
    let phi = cc.apply(&dh_matrix(s)).expect("4x4");
    e.mul(&phi).expect("4x4")
}

/// Last row of [`conjugated_dirac`]: `(-phi4, phi3, -phi2, phi1)`.
pub fn conjugated_row(s: &DiracHestenesSpinor) -> [Complex64; 4] {
    let m = conjugated_dirac(s);
    let r = m.row(3);
    [r[0], r[1], r[2], r[3]]
}
