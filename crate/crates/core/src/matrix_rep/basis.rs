use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::MatrixError;
use crate::clifford::{Blade, Multivector, Signature};

const O: Complex64 = Complex64::new(0.0, 0.0);
const P: Complex64 = Complex64::new(1.0, 0.0);
const M: Complex64 = Complex64::new(-1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);
const MI: Complex64 = Complex64::new(0.0, -1.0);

/// Quaternion units `s0..s3` as 2x2 complex matrices.
pub fn sigma_basis() -> [ComplexMatrix; 4] {
    let m = |rows: [[Complex64; 2]; 2]| ComplexMatrix::from_rows(&rows).expect("2x2");
    [
        m([[P, O], [O, P]]),
        m([[O, P], [M, O]]),
        m([[O, I], [I, O]]),
        m([[MI, O], [O, I]]),
    ]
}

/// Spacetime generators `G0..G3`, `G0^2 = 1`, `Gj^2 = -1`.
pub fn gamma_basis() -> [ComplexMatrix; 4] {
    let m = |rows: [[Complex64; 4]; 4]| ComplexMatrix::from_rows(&rows).expect("4x4");
    [
        m([[P, O, O, O], [O, P, O, O], [O, O, M, O], [O, O, O, M]]),
        m([[O, O, O, P], [O, O, P, O], [O, M, O, O], [M, O, O, O]]),
        m([[O, O, O, MI], [O, O, I, O], [O, I, O, O], [MI, O, O, O]]),
        m([[O, O, P, O], [O, O, O, M], [M, O, O, O], [O, P, O, O]]),
    ]
}

/// Matrix representation of the complexified spacetime algebra, built
/// multiplicatively from four generator matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaBasis {
    gammas: [ComplexMatrix; 4],
    blades: Vec<ComplexMatrix>,
}

impl Default for GammaBasis {
    fn default() -> Self {
        Self::new(gamma_basis()).expect("standard basis is 4x4")
    }
}

impl GammaBasis {
    pub fn new(gammas: [ComplexMatrix; 4]) -> Result<Self, MatrixError> {
        if let Some(g) = gammas.iter().find(|g| g.dim() != 4) {
            return Err(MatrixError::DimensionMismatch { left: 4, right: g.dim() });
        }
        let blades = (0..16u16)
            .map(|b| {
                let mut acc = ComplexMatrix::identity(4);
                for (j, g) in gammas.iter().enumerate() {
                    if b & (1 << j) != 0 {
                        acc = acc.mul(g).expect("4x4");
                    }
                }
                acc
            })
            .collect();
        Ok(Self { gammas, blades })
    }

    pub fn gammas(&self) -> &[ComplexMatrix; 4] {
        &self.gammas
    }

    pub fn gamma(&self, j: usize) -> &ComplexMatrix {
        &self.gammas[j]
    }

    /// Matrix of a canonical blade, product of generators in increasing order.
    pub fn blade(&self, blade: Blade) -> &ComplexMatrix {
        &self.blades[blade as usize]
    }

    /// Blade matrix by label, e.g. `"e13"`, sign of reordering included.
    pub fn blade_by_label(&self, label: &str) -> Result<ComplexMatrix, MatrixError> {
        let (sign, b) = Signature::spacetime().parse_blade(label)?;
        Ok(self.blade(b).scale(Complex64::new(sign as f64, 0.0)))
    }

    /// Algebra homomorphism from complexified Cl(1,3) into 4x4 matrices.
    pub fn represent(&self, a: &Multivector<Complex64>) -> Result<ComplexMatrix, MatrixError> {
        if a.signature() != Signature::spacetime() {
            return Err(MatrixError::WrongSignature(a.signature()));
        }
        let mut out = ComplexMatrix::zeros(4);
        for (b, c) in a.terms() {
            out = out.add(&self.blade(b).scale(*c))?;
        }
        Ok(out)
    }

    /// Inverse of [`represent`](Self::represent) for the standard basis, using
    /// `tr(B^-1 A) / 4` with `B^-1 = B^2 B`, `B^2 = +-1`.
    pub fn decompose(&self, m: &ComplexMatrix) -> Result<Multivector<Complex64>, MatrixError> {
        if m.dim() != 4 {
            return Err(MatrixError::DimensionMismatch { left: 4, right: m.dim() });
        }
        let sig = Signature::spacetime();
        let mut out = Multivector::zero(sig);
        for b in 0..16u16 {
            let bm = self.blade(b);
            let sq = bm.mul(bm)?[(0, 0)];
            let inv = bm.scale(sq);
            let coeff = inv.mul(m)?.trace() / 4.0;
            out.set_coeff(b, coeff);
        }
        Ok(out)
    }
}

/// `represent` with the standard basis.
pub fn represent(a: &Multivector<Complex64>) -> Result<ComplexMatrix, MatrixError> {
    GammaBasis::default().represent(a)
}
