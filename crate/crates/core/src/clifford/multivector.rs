use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use super::signature::{grade, Blade, Signature};
use super::CliffordError;

/// Element of a (complexified) Clifford algebra, stored densely over all
/// `2^(p+q)` canonical blades.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<T: Scalar = Complex64> {
    sig: Signature,
    coeffs: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(sig: Signature) -> Self {
        Self { sig, coeffs: vec![T::zero(); sig.num_blades()] }
    }

    pub fn scalar(sig: Signature, value: T) -> Self {
        Self::term(sig, 0, value)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, T::one())
    }

    /// `value * e_blade`.
    pub fn term(sig: Signature, blade: Blade, value: T) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[blade as usize] = value;
        mv
    }

    pub fn basis(sig: Signature, blade: Blade) -> Self {
        Self::term(sig, blade, T::one())
    }

    /// Generator `e_i` with `i` counted from zero regardless of label base.
    pub fn generator(sig: Signature, i: usize) -> Self {
        assert!(i < sig.dim(), "generator index {i} out of range for {sig}");
        Self::basis(sig, 1 << i)
    }

    /// Blade given by label, e.g. `"e31"` (sign of reordering included).
    pub fn blade(sig: Signature, label: &str) -> Result<Self, CliffordError> {
        let (sign, b) = sig.parse_blade(label)?;
        Ok(Self::term(sig, b, T::from_i64(sign as i64)))
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<T>) -> Result<Self, CliffordError> {
        if coeffs.len() != sig.num_blades() {
            return Err(CliffordError::CoefficientCount { expected: sig.num_blades(), got: coeffs.len() });
        }
        Ok(Self { sig, coeffs })
    }

    /// Promote real coefficients into the coefficient field.
    pub fn from_real(sig: Signature, coeffs: &[f64]) -> Result<Self, CliffordError> {
        Self::from_coeffs(sig, coeffs.iter().map(|&c| T::from_parts(c, 0.0)).collect())
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> &T {
        &self.coeffs[blade as usize]
    }

    pub fn set_coeff(&mut self, blade: Blade, value: T) {
        self.coeffs[blade as usize] = value;
    }

    /// Nonzero terms in canonical blade order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &T)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (b as Blade, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_sig(&self, other: &Self) -> Result<(), CliffordError> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch { left: self.sig, right: other.sig });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_sig(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { sig: self.sig, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_sig(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Self { sig: self.sig, coeffs })
    }

    /// Geometric product.
    pub fn geometric_product(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_sig(other)?;
        let mut out = vec![T::zero(); self.coeffs.len()];
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let (sign, blade) = self.sig.blade_product(a, b);
                let prod = ca.clone() * cb.clone();
                let slot = &mut out[blade as usize];
                *slot = if sign > 0 { slot.clone() + prod } else { slot.clone() - prod };
            }
        }
        Ok(Self { sig: self.sig, coeffs: out })
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self { sig: self.sig, coeffs: self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect() }
    }

    fn map_by_grade(&self, sign_of_grade: impl Fn(usize) -> bool) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| if sign_of_grade(grade(b as Blade)) { -c.clone() } else { c.clone() })
            .collect();
        Self { sig: self.sig, coeffs }
    }

    /// `A -> A*`: grade-k part scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_by_grade(|k| k % 2 == 1)
    }

    /// `A -> ~A`: grade-k part scaled by `(-1)^{k(k-1)/2}`.
    pub fn reversion(&self) -> Self {
        self.map_by_grade(|k| (k * (k.saturating_sub(1)) / 2) % 2 == 1)
    }

    /// `A -> ~(A*)`: grade-k part scaled by `(-1)^{k(k+1)/2}`.
    pub fn clifford_conjugation(&self) -> Self {
        self.map_by_grade(|k| (k * (k + 1) / 2) % 2 == 1)
    }

    /// Complex conjugation of the coefficients (not an algebra operation on blades).
    pub fn conj_coeffs(&self) -> Self {
        Self { sig: self.sig, coeffs: self.coeffs.iter().map(Scalar::conj).collect() }
    }

    pub fn grade_part(&self, k: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| if grade(b as Blade) == k { c.clone() } else { T::zero() })
            .collect();
        Self { sig: self.sig, coeffs }
    }

    pub fn even_part(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| if grade(b as Blade) % 2 == 0 { c.clone() } else { T::zero() })
            .collect();
        Self { sig: self.sig, coeffs }
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64, CliffordError> {
        let d = self.try_sub(other)?;
        Ok(d.coeffs.iter().map(Scalar::magnitude).fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.sig == other.sig
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| (a.clone() - b.clone()).negligible(tol))
    }

    /// True when every coefficient is real.
    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_real(tol))
    }

    /// If `self` is a nonzero multiple of a single blade, return that blade.
    pub fn single_blade(&self) -> Option<(Blade, &T)> {
        let mut terms = self.terms();
        let first = terms.next()?;
        if terms.next().is_some() {
            None
        } else {
            Some(first)
        }
    }

    pub fn commutes_with(&self, other: &Self, tol: f64) -> Result<bool, CliffordError> {
        let ab = self.geometric_product(other)?;
        let ba = other.geometric_product(self)?;
        Ok(ab.approx_eq(&ba, tol))
    }
}

impl Multivector<Complex64> {
    /// Converts to the JSON layout `{signature, terms: [[label, re, im], ...]}`.
    pub fn to_json_repr(&self) -> MultivectorJson {
        MultivectorJson {
            signature: self.sig,
            terms: self.terms().map(|(b, c)| (self.sig.blade_label(b), c.re, c.im)).collect(),
        }
    }

    pub fn from_json_repr(repr: &MultivectorJson) -> Result<Self, CliffordError> {
        let mut mv = Self::zero(repr.signature);
        for (label, re, im) in &repr.terms {
            let (sign, blade) = repr.signature.parse_blade(label)?;
            let prev = mv.coeffs[blade as usize];
            mv.coeffs[blade as usize] = prev + Complex64::new(*re, *im) * sign as f64;
        }
        Ok(mv)
    }
}

/// Serialized form of a multivector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultivectorJson {
    pub signature: Signature,
    pub terms: Vec<(String, f64, f64)>,
}

impl Serialize for Multivector<Complex64> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multivector<Complex64> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MultivectorJson::deserialize(deserializer)?;
        Self::from_json_repr(&repr).map_err(serde::de::Error::custom)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}){}", if b == 0 { String::new() } else { self.sig.blade_label(b) })?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operator forms panic on signature mismatch; use the `try_*` methods to
// get an error instead.

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        self.try_add(rhs).expect("signature mismatch in multivector addition")
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        self.try_sub(rhs).expect("signature mismatch in multivector subtraction")
    }
}

impl<T: Scalar> Mul for &Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: Self) -> Multivector<T> {
        self.geometric_product(rhs).expect("signature mismatch in geometric product")
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        Multivector { sig: self.sig, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Scalar> Add for Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: Self) -> Multivector<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        -&self
    }
}
