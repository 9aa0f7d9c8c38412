use ndarray::Array2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{c, wirtinger, SignConvention, WeierstrassData, WeierstrassError};
use crate::grid::{Field, GridDomain};

/// One-form `A dz + B dzbar`.
#[derive(Clone, Debug, PartialEq)]
pub struct OneForm {
    pub dz: Field,
    pub dzbar: Field,
}

/// The four coordinate one-forms, ordered `X0, X1, X2, X3`:
///
/// ```text
/// X1 = i/2 int(psi1 psi2 dzbar - phi1 phi2 dz)
/// X2 = 1/2 int(psi1 psi2 dzbar + phi1 phi2 dz)
/// X3 = 1/2 int(psi1 phi2 dzbar -+ phi1 psi2 dz)
/// X0 = i/2 int(psi1 phi2 dzbar +- phi1 psi2 dz)
/// ```
///
/// with the upper signs for [`SignConvention::LiteralPaper`].
pub fn one_forms(d: &WeierstrassData, conv: SignConvention) -> [OneForm; 4] {
    let [psi1, psi2] = &d.psi;
    let [phi1, phi2] = &d.phi;
    let pp = psi1 * psi2;
    let ff = phi1 * phi2;
    let pf = psi1 * phi2;
    let fp = phi1 * psi2;
    let half = c(0.5, 0.0);
    let ihalf = c(0.0, 0.5);
    let flip = match conv {
        SignConvention::LiteralPaper => 1.0,
        SignConvention::Conformal => -1.0,
    };
    let scale = |f: &Field, k: Complex64| f.mapv(|v| v * k);
    [
        OneForm { dz: scale(&fp, ihalf * flip), dzbar: scale(&pf, ihalf) },
        OneForm { dz: scale(&ff, -ihalf), dzbar: scale(&pp, ihalf) },
        OneForm { dz: scale(&ff, half), dzbar: scale(&pp, half) },
        OneForm { dz: scale(&fp, -half * flip), dzbar: scale(&pf, half) },
    ]
}

/// `d_zbar A - d_z B` for each coordinate form; zero where the contour
/// integral is locally path-independent.
pub fn closedness_residual(d: &WeierstrassData, conv: SignConvention) -> Result<[Field; 4], WeierstrassError> {
    let forms = one_forms(d, conv);
    let mut out: [Field; 4] = Default::default();
    for (slot, form) in out.iter_mut().zip(&forms) {
        let (_, a_zbar) = wirtinger(&d.domain, &form.dz)?;
        let (b_z, _) = wirtinger(&d.domain, &form.dzbar)?;
        *slot = &a_zbar - &b_z;
    }
    Ok(out)
}

/// Order of the two legs of the staircase integration path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathOrder {
    /// Along `y = y_base` first, then vertically.
    #[default]
    XThenY,
    YThenX,
}

/// Surface coordinates `X0..X3` sampled on the grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceCoords {
    pub domain: GridDomain,
    pub x: [Field; 4],
    pub convention: SignConvention,
    pub base: (usize, usize),
}

impl SurfaceCoords {
    pub fn at(&self, i: usize, j: usize) -> [Complex64; 4] {
        [self.x[0][[i, j]], self.x[1][[i, j]], self.x[2][[i, j]], self.x[3][[i, j]]]
    }
}

/// Cumulative trapezoid along a lane starting from index `base` (value zero there).
fn cumulative(g: impl Fn(usize) -> Complex64, n: usize, base: usize, h: f64) -> Vec<Complex64> {
    let mut out = vec![c(0.0, 0.0); n];
    for k in base + 1..n {
        out[k] = out[k - 1] + (g(k - 1) + g(k)) * (h / 2.0);
    }
    for k in (0..base).rev() {
        out[k] = out[k + 1] - (g(k) + g(k + 1)) * (h / 2.0);
    }
    out
}

/// Integrates the form `A dz + B dzbar` from `base` along the staircase path.
/// On horizontal legs the integrand is `A + B`, on vertical legs `i (A - B)`.
fn integrate_form(domain: &GridDomain, form: &OneForm, base: (usize, usize), order: PathOrder) -> Field {
    let gx = &form.dz + &form.dzbar;
    let gy = (&form.dz - &form.dzbar).mapv(|v| v * Complex64::i());
    let (nx, ny) = domain.shape();
    let (bi, bj) = base;
    let (dx, dy) = (domain.dx(), domain.dy());
    let mut out = Array2::zeros((nx, ny));
    match order {
        PathOrder::XThenY => {
            let along_x = cumulative(|i| gx[[i, bj]], nx, bi, dx);
            for i in 0..nx {
                let along_y = cumulative(|j| gy[[i, j]], ny, bj, dy);
                for j in 0..ny {
                    out[[i, j]] = along_x[i] + along_y[j];
                }
            }
        }
        PathOrder::YThenX => {
            let along_y = cumulative(|j| gy[[bi, j]], ny, bj, dy);
            for j in 0..ny {
                let along_x = cumulative(|i| gx[[i, j]], nx, bi, dx);
                for i in 0..nx {
                    out[[i, j]] = along_y[j] + along_x[i];
                }
            }
        }
    }
    out
}

/// Surface coordinates by trapezoidal quadrature of the coordinate one-forms
/// from the grid point `base`, where all coordinates vanish.
pub fn integrate_coordinates(
    d: &WeierstrassData,
    base: (usize, usize),
    conv: SignConvention,
    order: PathOrder,
) -> Result<SurfaceCoords, WeierstrassError> {
    d.domain.check_point(base)?;
    let forms = one_forms(d, conv);
    let x = [
        integrate_form(&d.domain, &forms[0], base, order),
        integrate_form(&d.domain, &forms[1], base, order),
        integrate_form(&d.domain, &forms[2], base, order),
        integrate_form(&d.domain, &forms[3], base, order),
    ];
    Ok(SurfaceCoords { domain: d.domain, x, convention: conv, base })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::max_abs;

    fn unit_square(n: usize) -> GridDomain {
        GridDomain::new([0.0, 1.0], [0.0, 1.0], n, n, false).unwrap()
    }

    #[test]
    fn constant_data_literal() {
        let d = unit_square(16);
        let w = WeierstrassData::constant(d, c(1.0, 0.0)).unwrap();
        let s = integrate_coordinates(&w, (0, 0), SignConvention::LiteralPaper, PathOrder::XThenY).unwrap();
        // X0 = i x, X1 = y, X2 = x, X3 = -i y
        let expected = [
            d.sample(|z| c(0.0, z.re)),
            d.sample(|z| c(z.im, 0.0)),
            d.sample(|z| c(z.re, 0.0)),
            d.sample(|z| c(0.0, -z.im)),
        ];
        for k in 0..4 {
            assert!(max_abs(&(&s.x[k] - &expected[k])) < 1e-14, "X{k}");
        }
    }

    #[test]
    fn constant_data_conformal() {
        let d = unit_square(16);
        let w = WeierstrassData::constant(d, c(1.0, 0.0)).unwrap();
        let s = integrate_coordinates(&w, (0, 0), SignConvention::Conformal, PathOrder::XThenY).unwrap();
        // X0 = y, X3 = x; X1, X2 unchanged
        assert!(max_abs(&(&s.x[0] - &d.sample(|z| c(z.im, 0.0)))) < 1e-14);
        assert!(max_abs(&(&s.x[3] - &d.sample(|z| c(z.re, 0.0)))) < 1e-14);
        assert!(max_abs(&(&s.x[1] - &d.sample(|z| c(z.im, 0.0)))) < 1e-14);
    }

    #[test]
    fn zero_data_zero_surface() {
        let d = unit_square(8);
        let w = WeierstrassData::constant(d, c(0.0, 0.0)).unwrap();
        let s = integrate_coordinates(&w, (3, 4), SignConvention::Conformal, PathOrder::XThenY).unwrap();
        assert!(s.x.iter().all(|f| max_abs(f) == 0.0));
    }

    #[test]
    fn path_independent_for_closed_forms() {
        let d = unit_square(24);
        let w = WeierstrassData::constant(d, c(0.5, -1.5)).unwrap();
        for conv in [SignConvention::LiteralPaper, SignConvention::Conformal] {
            let a = integrate_coordinates(&w, (5, 7), conv, PathOrder::XThenY).unwrap();
            let b = integrate_coordinates(&w, (5, 7), conv, PathOrder::YThenX).unwrap();
            for k in 0..4 {
                assert!(max_abs(&(&a.x[k] - &b.x[k])) < 1e-13);
            }
        }
    }

    #[test]
    fn base_point_vanishes_and_shifts() {
        let d = unit_square(16);
        let anti = |z: Complex64| (z.conj() * 0.3).exp();
        let holo = |z: Complex64| z * z + 1.0;
        let one = |_z: Complex64| c(1.0, 0.0);
        let zero = |_z: Complex64| c(0.0, 0.0);
        let w = WeierstrassData::from_fns(d, zero, zero, [&anti, &one], [&holo, &one]).unwrap();
        let a = integrate_coordinates(&w, (0, 0), SignConvention::Conformal, PathOrder::XThenY).unwrap();
        let b = integrate_coordinates(&w, (4, 0), SignConvention::Conformal, PathOrder::XThenY).unwrap();
        for k in 0..4 {
            assert_eq!(b.x[k][[4, 0]], c(0.0, 0.0));
            let shift = a.x[k][[4, 0]];
            assert!(max_abs(&(&a.x[k] - &b.x[k].mapv(|v| v + shift))) < 1e-13);
        }
    }

    #[test]
    fn closedness_diagnostic() {
        let d = unit_square(48);
        let anti = |z: Complex64| (z.conj() * 0.5).exp();
        let anti2 = |z: Complex64| z.conj() * 2.0 + 1.0;
        let holo = |z: Complex64| (z * 0.7).cos();
        let holo2 = |z: Complex64| z * z;
        let zero = |_z: Complex64| c(0.0, 0.0);
        let w = WeierstrassData::from_fns(d, zero, zero, [&anti, &anti2], [&holo, &holo2]).unwrap();
        let r = closedness_residual(&w, SignConvention::LiteralPaper).unwrap();
        assert!(max_abs(&r[1]) < 1e-6);
        assert!(max_abs(&r[2]) < 1e-6);
        assert!(max_abs(&r[3]) > 0.1);
        assert!(max_abs(&r[0]) > 0.1);

        let cst = WeierstrassData::constant(d, c(1.0, 1.0)).unwrap();
        let r = closedness_residual(&cst, SignConvention::Conformal).unwrap();
        assert!(r.iter().all(|f| max_abs(f) == 0.0));
    }

    #[test]
    fn bad_base_rejected() {
        let d = unit_square(8);
        let w = WeierstrassData::constant(d, c(1.0, 0.0)).unwrap();
        assert!(integrate_coordinates(&w, (8, 0), SignConvention::Conformal, PathOrder::XThenY).is_err());
    }
}
