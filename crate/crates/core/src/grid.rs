//! Rectangular sampling of the z-plane and grid-function calculus.

use ndarray::{Array2, Axis};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Complex grid function indexed `[i, j]` for the point `(x_i, y_j)`.
pub type Field = Array2<Complex64>;

pub const MIN_POINTS: usize = 8;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum GridError {
    #[error("grid needs at least {min} points per direction, got {nx}x{ny}")]
    TooSmall { nx: usize, ny: usize, min: usize },
    #[error("empty or inverted range [{0}, {1}]")]
    BadRange(f64, f64),
    #[error("field shape {got:?} does not match domain {expected:?}")]
    ShapeMismatch { expected: (usize, usize), got: (usize, usize) },
    #[error("operation requires a periodic domain")]
    NotPeriodic,
    #[error("grid point ({0}, {1}) is outside the domain")]
    OutOfRange(usize, usize),
}

/// Uniform grid over `[x0, x1] x [y0, y1]`, `z = x + i y`.
///
/// Periodic domains exclude the right endpoint (`x_i = x0 + i (x1 - x0) / nx`);
/// non-periodic ones include it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridDomain {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub nx: usize,
    pub ny: usize,
    pub periodic: bool,
}

impl GridDomain {
    pub fn new(x: [f64; 2], y: [f64; 2], nx: usize, ny: usize, periodic: bool) -> Result<Self, GridError> {
        let d = Self { x, y, nx, ny, periodic };
        d.validate()?;
        Ok(d)
    }

    /// `[0, 2 pi)^2` with `n x n` points.
    pub fn periodic_square(n: usize) -> Result<Self, GridError> {
        let l = 2.0 * std::f64::consts::PI;
        Self::new([0.0, l], [0.0, l], n, n, true)
    }

    pub fn validate(&self) -> Result<(), GridError> {
        if self.nx < MIN_POINTS || self.ny < MIN_POINTS {
            return Err(GridError::TooSmall { nx: self.nx, ny: self.ny, min: MIN_POINTS });
        }
        for r in [self.x, self.y] {
            if !(r[1] > r[0]) || !r[0].is_finite() || !r[1].is_finite() {
                return Err(GridError::BadRange(r[0], r[1]));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn lx(&self) -> f64 {
        self.x[1] - self.x[0]
    }

    pub fn ly(&self) -> f64 {
        self.y[1] - self.y[0]
    }

    pub fn dx(&self) -> f64 {
        self.lx() / if self.periodic { self.nx } else { self.nx - 1 } as f64
    }

    pub fn dy(&self) -> f64 {
        self.ly() / if self.periodic { self.ny } else { self.ny - 1 } as f64
    }

    pub fn xi(&self, i: usize) -> f64 {
        self.x[0] + i as f64 * self.dx()
    }

    pub fn yj(&self, j: usize) -> f64 {
        self.y[0] + j as f64 * self.dy()
    }

    pub fn z(&self, i: usize, j: usize) -> Complex64 {
        Complex64::new(self.xi(i), self.yj(j))
    }

    pub fn sample(&self, f: impl Fn(Complex64) -> Complex64) -> Field {
        Array2::from_shape_fn(self.shape(), |(i, j)| f(self.z(i, j)))
    }

    pub fn zeros(&self) -> Field {
        Array2::zeros(self.shape())
    }

    pub fn constant(&self, c: Complex64) -> Field {
        Array2::from_elem(self.shape(), c)
    }

    pub fn check(&self, f: &Field) -> Result<(), GridError> {
        let got = f.dim();
        if got != self.shape() {
            return Err(GridError::ShapeMismatch { expected: self.shape(), got });
        }
        Ok(())
    }

    pub fn check_point(&self, (i, j): (usize, usize)) -> Result<(), GridError> {
        if i >= self.nx || j >= self.ny {
            return Err(GridError::OutOfRange(i, j));
        }
        Ok(())
    }
}

pub fn max_abs(f: &Field) -> f64 {
    f.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Root-mean-square of `|f|` over the grid.
pub fn rms(f: &Field) -> f64 {
    (f.iter().map(|z| z.norm_sqr()).sum::<f64>() / f.len() as f64).sqrt()
}

pub fn mean(f: &Field) -> Complex64 {
    f.sum() / f.len() as f64
}

/// Fourth-order finite-difference derivative along `axis` with spacing `h`;
/// fourth-order one-sided stencils at the two points nearest each edge.
pub fn fd_derivative(f: &Field, axis: usize, h: f64) -> Field {
    let mut out = f.clone();
    for (src, mut dst) in f.lanes(Axis(axis)).into_iter().zip(out.lanes_mut(Axis(axis))) {
        let n = src.len();
        let v = |k: usize| src[k];
        for k in 0..n {
            let d = if k >= 2 && k + 2 < n {
                (v(k - 2) - v(k - 1) * 8.0 + v(k + 1) * 8.0 - v(k + 2)) / 12.0
            } else if k == 0 {
                (v(0) * -25.0 + v(1) * 48.0 - v(2) * 36.0 + v(3) * 16.0 - v(4) * 3.0) / 12.0
            } else if k == 1 {
                (v(0) * -3.0 - v(1) * 10.0 + v(2) * 18.0 - v(3) * 6.0 + v(4)) / 12.0
            } else if k == n - 2 {
                (v(n - 1) * 3.0 + v(n - 2) * 10.0 - v(n - 3) * 18.0 + v(n - 4) * 6.0 - v(n - 5)) / 12.0
            } else {
                (v(n - 1) * 25.0 - v(n - 2) * 48.0 + v(n - 3) * 36.0 - v(n - 4) * 16.0 + v(n - 5) * 3.0) / 12.0
            };
            dst[k] = d / h;
        }
    }
    out
}

/// `(d/dz, d/dzbar)` by fourth-order finite differences.
pub fn fd_wirtinger(domain: &GridDomain, f: &Field) -> (Field, Field) {
    let fx = fd_derivative(f, 0, domain.dx());
    let fy = fd_derivative(f, 1, domain.dy());
    let i = Complex64::i();
    let dz = (&fx - &fy.mapv(|v| v * i)) * 0.5;
    let dzbar = (&fx + &fy.mapv(|v| v * i)) * 0.5;
    (dz, dzbar)
}
