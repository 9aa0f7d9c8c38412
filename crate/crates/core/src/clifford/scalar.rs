//! Coefficient fields for multivectors.
//!
//! Two fields are provided: `Complex64` for numerical work and
//! `Complex<Rational64>` for exact identity checks.

use std::fmt::Debug;
use std::ops::Neg;

use num_complex::{Complex, Complex64};
use num_rational::Rational64;
use num_traits::{Num, Signed, ToPrimitive, Zero};

/// Exact complex-rational coefficient.
pub type ExactComplex = Complex<Rational64>;

/// A (complexified) coefficient field usable in the Clifford engine.
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> + Send + Sync + 'static {
    fn imag_unit() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_parts(re: f64, im: f64) -> Self;
    fn conj(&self) -> Self;
    /// True when the imaginary part is zero (within `tol` for floating fields).
    fn is_real(&self, tol: f64) -> bool;
    /// Modulus used for pivot selection.
    fn magnitude(&self) -> f64;
    /// Zero test: exact for rational fields, `|x| <= tol` for floating ones.
    fn negligible(&self, tol: f64) -> bool;
    fn to_complex64(&self) -> Complex64;

    fn half() -> Self {
        Self::one() / Self::from_i64(2)
    }
}

impl Scalar for Complex64 {
    fn imag_unit() -> Self {
        Complex64::i()
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_parts(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_real(&self, tol: f64) -> bool {
        self.im.abs() <= tol
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn negligible(&self, tol: f64) -> bool {
        self.norm() <= tol
    }
    fn to_complex64(&self) -> Complex64 {
        *self
    }
}

impl Scalar for ExactComplex {
    fn imag_unit() -> Self {
        Complex::new(Rational64::zero(), Rational64::from_integer(1))
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(Rational64::from_integer(v), Rational64::zero())
    }
    /// Panics if either part is not exactly representable as a ratio of `i64`.
    fn from_parts(re: f64, im: f64) -> Self {
        let conv = |x: f64| Rational64::approximate_float(x).expect("value not representable as Rational64");
        Complex::new(conv(re), conv(im))
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_real(&self, _tol: f64) -> bool {
        self.im.is_zero()
    }
    fn magnitude(&self) -> f64 {
        let re = self.re.abs().to_f64().unwrap_or(f64::INFINITY);
        let im = self.im.abs().to_f64().unwrap_or(f64::INFINITY);
        re.hypot(im)
    }
    fn negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}
