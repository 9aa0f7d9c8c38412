//! Fourier-multiplier calculus on periodic grids.
//!
//! With `k_x`, `k_y` the angular wavenumbers of a mode `exp(i(k_x x + k_y y))`,
//! the Wirtinger derivatives have symbols
//! `d/dz -> (i k_x + k_y) / 2` and `d/dzbar -> (i k_x - k_y) / 2`.
//! Their inverses act on nonzero modes only and send the mean to zero.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use ndarray::{Array2, Axis};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::grid::{Field, GridDomain, GridError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wirtinger {
    Z,
    Zbar,
}

/// Planned 2-D transforms and wavenumber tables for one periodic domain.
#[derive(Clone)]
pub struct Spectral {
    domain: GridDomain,
    fwd_x: Arc<dyn Fft<f64>>,
    inv_x: Arc<dyn Fft<f64>>,
    fwd_y: Arc<dyn Fft<f64>>,
    inv_y: Arc<dyn Fft<f64>>,
    kx: Vec<f64>,
    ky: Vec<f64>,
    keep_x: Vec<bool>,
    keep_y: Vec<bool>,
}

impl fmt::Debug for Spectral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Spectral").field("domain", &self.domain).finish()
    }
}

fn signed_index(m: usize, n: usize) -> i64 {
    if m < n.div_ceil(2) {
        m as i64
    } else {
        m as i64 - n as i64
    }
}

impl Spectral {
    pub fn new(domain: &GridDomain) -> Result<Self, GridError> {
        domain.validate()?;
        if !domain.periodic {
            return Err(GridError::NotPeriodic);
        }
        let mut planner = FftPlanner::new();
        let (nx, ny) = domain.shape();
        let kx = (0..nx).map(|m| 2.0 * PI * signed_index(m, nx) as f64 / domain.lx()).collect();
        let ky = (0..ny).map(|m| 2.0 * PI * signed_index(m, ny) as f64 / domain.ly()).collect();
        // two-thirds rule: keep |m| < n/3
        let keep_x = (0..nx).map(|m| 3 * signed_index(m, nx).unsigned_abs() < nx as u64).collect();
        let keep_y = (0..ny).map(|m| 3 * signed_index(m, ny).unsigned_abs() < ny as u64).collect();
        Ok(Self {
            domain: *domain,
            fwd_x: planner.plan_fft_forward(nx),
            inv_x: planner.plan_fft_inverse(nx),
            fwd_y: planner.plan_fft_forward(ny),
            inv_y: planner.plan_fft_inverse(ny),
            kx,
            ky,
            keep_x,
            keep_y,
        })
    }

    pub fn domain(&self) -> &GridDomain {
        &self.domain
    }

    fn transform(&self, f: &Field, fx: &Arc<dyn Fft<f64>>, fy: &Arc<dyn Fft<f64>>) -> Field {
        let mut out = f.to_owned();
        let mut buf = Vec::with_capacity(self.domain.nx.max(self.domain.ny));
        for axis in [1usize, 0] {
            let plan = if axis == 0 { fx } else { fy };
            for mut lane in out.lanes_mut(Axis(axis)) {
                buf.clear();
                buf.extend(lane.iter().copied());
                plan.process(&mut buf);
                for (dst, src) in lane.iter_mut().zip(&buf) {
                    *dst = *src;
                }
            }
        }
        out
    }

    /// Unnormalized forward DFT.
    pub fn forward(&self, f: &Field) -> Field {
        self.transform(f, &self.fwd_x, &self.fwd_y)
    }

    /// Inverse DFT including the `1/(nx ny)` normalization.
    pub fn inverse(&self, fhat: &Field) -> Field {
        let n = (self.domain.nx * self.domain.ny) as f64;
        let mut out = self.transform(fhat, &self.inv_x, &self.inv_y);
        out.mapv_inplace(|v| v / n);
        out
    }

    /// Symbol of `d/dz` or `d/dzbar` at mode `(i, j)`.
    pub fn symbol(&self, which: Wirtinger, i: usize, j: usize) -> Complex64 {
        let (kx, ky) = (self.kx[i], self.ky[j]);
        match which {
            Wirtinger::Z => Complex64::new(ky / 2.0, kx / 2.0),
            Wirtinger::Zbar => Complex64::new(-ky / 2.0, kx / 2.0),
        }
    }

    /// Applies `symbol^power` in spectral space (negative powers skip the mean mode).
    pub fn apply_hat(&self, fhat: &Field, which: Wirtinger, power: i32) -> Field {
        Array2::from_shape_fn(fhat.dim(), |(i, j)| {
            let s = self.symbol(which, i, j);
            if power < 0 && s.norm() == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                fhat[[i, j]] * s.powi(power)
            }
        })
    }

    /// `d^power` (or the inverse for negative `power`) applied in physical space.
    pub fn derivative(&self, f: &Field, which: Wirtinger, power: i32) -> Field {
        self.inverse(&self.apply_hat(&self.forward(f), which, power))
    }

    pub fn dz(&self, f: &Field) -> Field {
        self.derivative(f, Wirtinger::Z, 1)
    }

    pub fn dzbar(&self, f: &Field) -> Field {
        self.derivative(f, Wirtinger::Zbar, 1)
    }

    pub fn dz_inv(&self, f: &Field) -> Field {
        self.derivative(f, Wirtinger::Z, -1)
    }

    pub fn dzbar_inv(&self, f: &Field) -> Field {
        self.derivative(f, Wirtinger::Zbar, -1)
    }

    /// Composite multiplier `dz^a dzbar^b` in a single transform pair.
    pub fn mixed(&self, f: &Field, a: i32, b: i32) -> Field {
        let fhat = self.forward(f);
        let g = self.apply_hat(&self.apply_hat(&fhat, Wirtinger::Z, a), Wirtinger::Zbar, b);
        self.inverse(&g)
    }

    /// Zeroes modes outside the two-thirds band.
    pub fn dealias(&self, f: &Field) -> Field {
        let mut fhat = self.forward(f);
        for ((i, j), v) in fhat.indexed_iter_mut() {
            if !(self.keep_x[i] && self.keep_y[j]) {
                *v = Complex64::new(0.0, 0.0);
            }
        }
        self.inverse(&fhat)
    }

    /// Pointwise product, optionally two-thirds dealiased.
    pub fn product(&self, a: &Field, b: &Field, dealias: bool) -> Field {
        let p = a * b;
        if dealias {
            self.dealias(&p)
        } else {
            p
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{max_abs, mean};

    fn mode(d: &GridDomain, m: f64, n: f64) -> Field {
        d.sample(|z| Complex64::new(0.0, m * z.re + n * z.im).exp())
    }

    #[test]
    fn single_mode_symbols() {
        let d = GridDomain::periodic_square(16).unwrap();
        let s = Spectral::new(&d).unwrap();
        let (m, n) = (3.0, -2.0);
        let f = mode(&d, m, n);
        let dz = s.dz(&f);
        let expected = f.mapv(|v| v * Complex64::new(n, m) / 2.0);
        assert!(max_abs(&(&dz - &expected)) < 1e-12);
        let inv = s.dz_inv(&f);
        let expected = f.mapv(|v| v / (Complex64::new(n, m) / 2.0));
        assert!(max_abs(&(&inv - &expected)) < 1e-12);
    }

    #[test]
    fn constants() {
        let d = GridDomain::periodic_square(8).unwrap();
        let s = Spectral::new(&d).unwrap();
        let c = d.constant(Complex64::new(2.5, -1.0));
        assert!(max_abs(&s.dz(&c)) < 1e-14);
        assert!(max_abs(&s.dzbar_inv(&c)) < 1e-14);
    }

    #[test]
    fn x_mode_symbols() {
        // exp(2 i x): d/dz and d/dzbar both act as multiplication by i
        let d = GridDomain::periodic_square(16).unwrap();
        let s = Spectral::new(&d).unwrap();
        let g = mode(&d, 2.0, 0.0);
        let ig = g.mapv(|v| v * Complex64::i());
        assert!(max_abs(&(&s.dzbar(&g) - &ig)) < 1e-12);
        assert!(max_abs(&(&s.dz(&g) - &ig)) < 1e-12);
    }

    #[test]
    fn inverse_roundtrip_minus_mean() {
        let d = GridDomain::new([0.0, 3.0], [-1.0, 1.0], 24, 16, true).unwrap();
        let s = Spectral::new(&d).unwrap();
        let f = d.sample(|z| {
            let a = 2.0 * PI * z.re / 3.0;
            let b = PI * z.im;
            Complex64::new(1.0 + a.cos() * b.sin(), (2.0 * a).sin() + 0.3)
        });
        let back = s.dz(&s.dz_inv(&f));
        let m = mean(&f);
        assert!(max_abs(&(&back - &f.mapv(|v| v - m))) < 1e-12);
    }

    #[test]
    fn non_periodic_rejected() {
        let d = GridDomain::new([0.0, 1.0], [0.0, 1.0], 8, 8, false).unwrap();
        assert!(matches!(Spectral::new(&d), Err(GridError::NotPeriodic)));
    }
}
