//! Surfaces in C^4 from Weierstrass data, their induced metric, and the map
//! from surface coordinates to Dirac–Hestenes and Dirac spinor fields.
//!
//! Coordinates are stored in the order `X0, X1, X2, X3`, where `X0` is the
//! coordinate also written `X4`.

mod data;
mod metric;
mod spinor_map;
mod surface;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{fd_wirtinger, Field, GridDomain, GridError};
use crate::matrix_rep::MatrixError;
use crate::spectral::Spectral;

pub use data::{DiracResidual, WeierstrassData};
pub use metric::{induced_metric, InducedMetric};
pub(crate) use spinor_map::dirac_field_of;
pub use spinor_map::{
    biquaternion_form, coords_to_dh, dh_to_coords, surface_to_dh_field, surface_to_dirac_field, SpinorField,
};
pub use surface::{closedness_residual, integrate_coordinates, one_forms, OneForm, PathOrder, SurfaceCoords};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignConvention {
    /// Signs of the coordinate integrals exactly as usually printed; the
    /// mixed metric component then vanishes identically.
    LiteralPaper,
    /// Relative sign flipped inside the `X3` and `X0` integrands so that
    /// `g_{z zbar} = psi1 psi2 phi1 phi2`.
    #[default]
    Conformal,
}

impl std::str::FromStr for SignConvention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "literal-paper" => Ok(Self::LiteralPaper),
            "conformal" => Ok(Self::Conformal),
            other => Err(format!("unknown convention {other:?} (expected literal-paper or conformal)")),
        }
    }
}

impl std::fmt::Display for SignConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::LiteralPaper => "literal-paper",
            Self::Conformal => "conformal",
        })
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum WeierstrassError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// `(d/dz, d/dzbar)`: spectral on periodic domains, fourth-order finite
/// differences otherwise.
pub fn wirtinger(domain: &GridDomain, f: &Field) -> Result<(Field, Field), GridError> {
    domain.check(f)?;
    if domain.periodic {
        let s = Spectral::new(domain)?;
        Ok((s.dz(f), s.dzbar(f)))
    } else {
        Ok(fd_wirtinger(domain, f))
    }
}

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
