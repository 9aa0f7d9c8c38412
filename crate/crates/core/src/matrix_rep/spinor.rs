use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::basis::GammaBasis;
use super::matrix::ComplexMatrix;
use super::MatrixError;
use crate::clifford::{Multivector, Signature};

/// Real coefficients of an even element of Cl(1,3):
/// `a0 + a01 G01 + a02 G02 + a03 G03 + a12 G12 + a31 G31 + a23 G23 + a0123 G0123`.
///
/// The second bivector is oriented as `G31`; with that orientation the
/// component map below agrees with the matrix representation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct EvenCoefficients {
    pub a0: f64,
    pub a01: f64,
    pub a02: f64,
    pub a03: f64,
    pub a12: f64,
    pub a31: f64,
    pub a23: f64,
    pub a0123: f64,
}

impl EvenCoefficients {
    pub fn to_multivector(&self) -> Multivector<Complex64> {
        let sig = Signature::spacetime();
        let terms = [
            ("1", self.a0),
            ("e01", self.a01),
            ("e02", self.a02),
            ("e03", self.a03),
            ("e12", self.a12),
            ("e31", self.a31),
            ("e23", self.a23),
            ("e0123", self.a0123),
        ];
        terms.iter().fold(Multivector::zero(sig), |acc, (label, a)| {
            let blade = Multivector::blade(sig, label).expect("valid spacetime label");
            &acc + &blade.scale(&Complex64::new(*a, 0.0))
        })
    }

    /// Reads the even part of a spacetime multivector; errors on odd or
    /// complex coefficients.
    pub fn from_multivector(a: &Multivector<Complex64>, tol: f64) -> Result<Self, MatrixError> {
        if a.signature() != Signature::spacetime() {
            return Err(MatrixError::WrongSignature(a.signature()));
        }
        if !a.is_real(tol) || !a.even_part().approx_eq(a, tol) {
            return Err(MatrixError::NotEvenReal);
        }
        let sig = Signature::spacetime();
        let get = |label: &str| {
            let (sign, b) = sig.parse_blade(label).expect("valid spacetime label");
            a.coeff(b).re * sign as f64
        };
        Ok(Self {
            a0: get("1"),
            a01: get("e01"),
            a02: get("e02"),
            a03: get("e03"),
            a12: get("e12"),
            a31: get("e31"),
            a23: get("e23"),
            a0123: get("e0123"),
        })
    }
}

/// Dirac–Hestenes spinor as four complex components.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DiracHestenesSpinor {
    pub phi: [Complex64; 4],
}

impl DiracHestenesSpinor {
    pub fn new(phi1: Complex64, phi2: Complex64, phi3: Complex64, phi4: Complex64) -> Self {
        Self { phi: [phi1, phi2, phi3, phi4] }
    }

    /// `phi1 = a0 - i a12`, `phi2 = a31 - i a23`, `phi3 = a03 - i a0123`, `phi4 = a01 + i a02`.
    pub fn from_even(a: &EvenCoefficients) -> Self {
        Self::new(
            Complex64::new(a.a0, -a.a12),
            Complex64::new(a.a31, -a.a23),
            Complex64::new(a.a03, -a.a0123),
            Complex64::new(a.a01, a.a02),
        )
    }

    pub fn to_even(&self) -> EvenCoefficients {
        let [p1, p2, p3, p4] = self.phi;
        EvenCoefficients {
            a0: p1.re,
            a12: -p1.im,
            a31: p2.re,
            a23: -p2.im,
            a03: p3.re,
            a0123: -p3.im,
            a01: p4.re,
            a02: p4.im,
        }
    }

    pub fn to_multivector(&self) -> Multivector<Complex64> {
        self.to_even().to_multivector()
    }
}

/// Dirac spinor: the first column of an element of the minimal left ideal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DiracSpinor {
    pub phi: [Complex64; 4],
}

impl DiracSpinor {
    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4);
        for (i, p) in self.phi.iter().enumerate() {
            m[(i, 0)] = *p;
        }
        m
    }

    /// Reads a left-ideal matrix; columns 2–4 must vanish exactly.
    pub fn from_matrix(m: &ComplexMatrix) -> Result<Self, MatrixError> {
        if m.dim() != 4 {
            return Err(MatrixError::DimensionMismatch { left: 4, right: m.dim() });
        }
        let zero = Complex64::new(0.0, 0.0);
        if (0..4).any(|i| (1..4).any(|j| m[(i, j)] != zero)) {
            return Err(MatrixError::NotIdealShape);
        }
        let c = m.column(0);
        Ok(Self { phi: [c[0], c[1], c[2], c[3]] })
    }
}

/// The 4x4 matrix of a Dirac–Hestenes spinor in the spacetime basis.
pub fn dh_matrix(s: &DiracHestenesSpinor) -> ComplexMatrix {
    let [p1, p2, p3, p4] = s.phi;
    let cj = |z: Complex64| z.conj();
    ComplexMatrix::from_rows(&[
        [p1, -cj(p2), p3, cj(p4)],
        [p2, cj(p1), p4, -cj(p3)],
        [p3, cj(p4), p1, -cj(p2)],
        [p4, -cj(p3), p2, cj(p1)],
    ])
    .expect("4x4")
}

/// `e41 = 1/2(1 + G0) 1/2(1 + i G12)` as a matrix, with `i` the scalar unit.
pub fn e41_matrix(basis: &GammaBasis) -> ComplexMatrix {
    let id = ComplexMatrix::identity(4);
    let half = Complex64::new(0.5, 0.0);
    let f0 = id.add(basis.gamma(0)).expect("4x4").scale(half);
    let i_g12 = basis.blade(0b0110).scale(Complex64::i());
    let f1 = id.add(&i_g12).expect("4x4").scale(half);
    f0.mul(&f1).expect("4x4")
}

/// `phi e41`: the left-ideal matrix of the Dirac spinor.
pub fn ideal_matrix(s: &DiracHestenesSpinor) -> ComplexMatrix {
    dh_matrix(s).mul(&e41_matrix(&GammaBasis::default())).expect("4x4")
}

/// Dirac spinor `Phi = phi e41`.
pub fn dirac_from_dh(s: &DiracHestenesSpinor) -> DiracSpinor {
    let c = ideal_matrix(s).column(0);
    DiracSpinor { phi: [c[0], c[1], c[2], c[3]] }
}
