use num_complex::Complex64;

use super::{c, integrate_coordinates, PathOrder, SignConvention, SurfaceCoords, WeierstrassData, WeierstrassError};
use crate::clifford::{Multivector, Signature};
use crate::grid::{Field, GridDomain};
use crate::matrix_rep::{dirac_from_dh, DiracHestenesSpinor};

/// Coordinates `[X0, X1, X2, X3]` to spinor components:
/// `phi1 = Re X0 - i Im X3`, `phi2 = Im X2 - i Im X1`,
/// `phi3 = Re X3 - i Im X0`, `phi4 = Re X1 + i Re X2`.
pub fn coords_to_dh(x: [Complex64; 4]) -> DiracHestenesSpinor {
    let [x0, x1, x2, x3] = x;
    DiracHestenesSpinor::new(c(x0.re, -x3.im), c(x2.im, -x1.im), c(x3.re, -x0.im), c(x1.re, x2.re))
}

/// Inverse of [`coords_to_dh`].
pub fn dh_to_coords(s: &DiracHestenesSpinor) -> [Complex64; 4] {
    let [p1, p2, p3, p4] = s.phi;
    [c(p1.re, -p3.im), c(p4.re, -p2.im), c(p4.im, p2.re), c(p3.re, -p1.im)]
}

/// `sum (Re X^i + w Im X^i) s_i` written out in Cl(3,0): real parts on
/// `1, e1, e2, e3`, imaginary parts of `X3, X2, X1, X0` on `e12, e31, e23, e123`.
pub fn biquaternion_form(x: [Complex64; 4]) -> Multivector<Complex64> {
    let sig = Signature::euclidean3();
    let [x0, x1, x2, x3] = x;
    let terms = [
        ("1", x0.re),
        ("e1", x1.re),
        ("e2", x2.re),
        ("e3", x3.re),
        ("e12", x3.im),
        ("e31", x2.im),
        ("e23", x1.im),
        ("e123", x0.im),
    ];
    terms.iter().fold(Multivector::zero(sig), |acc, (label, v)| {
        let b = Multivector::blade(sig, label).expect("valid Cl(3,0) label");
        &acc + &b.scale(&c(*v, 0.0))
    })
}

/// Four complex component fields of a spinor field.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorField {
    pub domain: GridDomain,
    pub phi: [Field; 4],
}

impl SpinorField {
    pub fn at(&self, i: usize, j: usize) -> [Complex64; 4] {
        [self.phi[0][[i, j]], self.phi[1][[i, j]], self.phi[2][[i, j]], self.phi[3][[i, j]]]
    }

    fn from_fn(domain: GridDomain, f: impl Fn(usize, usize) -> [Complex64; 4]) -> Self {
        let shape = domain.shape();
        let mut phi: [Field; 4] = std::array::from_fn(|_| Field::zeros(shape));
        for i in 0..shape.0 {
            for j in 0..shape.1 {
                let v = f(i, j);
                for k in 0..4 {
                    phi[k][[i, j]] = v[k];
                }
            }
        }
        Self { domain, phi }
    }
}

/// Pointwise Dirac–Hestenes spinor field of a surface.
pub fn surface_to_dh_field(s: &SurfaceCoords) -> SpinorField {
    SpinorField::from_fn(s.domain, |i, j| coords_to_dh(s.at(i, j)).phi)
}

/// The whole chain: data -> coordinates -> Dirac–Hestenes spinor -> Dirac
/// spinor `phi e41`. Returns the surface along with the Dirac field.
pub fn surface_to_dirac_field(
    d: &WeierstrassData,
    base: (usize, usize),
    conv: SignConvention,
) -> Result<(SurfaceCoords, SpinorField), WeierstrassError> {
    let surface = integrate_coordinates(d, base, conv, PathOrder::XThenY)?;
    let field = dirac_field_of(&surface);
    Ok((surface, field))
}

pub(crate) fn dirac_field_of(surface: &SurfaceCoords) -> SpinorField {
    SpinorField::from_fn(surface.domain, |i, j| dirac_from_dh(&coords_to_dh(surface.at(i, j))).phi)
}
