use super::SurfaceCoords;
use crate::grid::{fd_wirtinger, Field};

/// Complex-bilinear metric components induced on the surface.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedMetric {
    /// `sum (X^i_z)^2`
    pub g_zz: Field,
    /// `sum (X^i_zbar)^2`
    pub g_zbar_zbar: Field,
    /// `sum X^i_z X^i_zbar`
    pub g_z_zbar: Field,
}

/// Metric from fourth-order finite-difference derivatives of the coordinates.
///
/// Finite differences are used on every domain: integrated coordinates are
/// generally not periodic even when the data are.
pub fn induced_metric(s: &SurfaceCoords) -> InducedMetric {
    let shape = s.domain.shape();
    let mut g_zz = Field::zeros(shape);
    let mut g_zbar_zbar = Field::zeros(shape);
    let mut g_z_zbar = Field::zeros(shape);
    for x in &s.x {
        let (xz, xzbar) = fd_wirtinger(&s.domain, x);
        g_zz += &(&xz * &xz);
        g_zbar_zbar += &(&xzbar * &xzbar);
        g_z_zbar += &(&xz * &xzbar);
    }
    InducedMetric { g_zz, g_zbar_zbar, g_z_zbar }
}
