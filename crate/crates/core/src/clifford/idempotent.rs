use serde::Serialize;

use super::multivector::Multivector;
use super::scalar::Scalar;
use super::signature::{idempotent_factor_count, Blade, Signature};
use super::volume::volume_element;
use super::{CliffordError, ALGEBRA_TOL};

/// Rank tolerance for spans of floating-point multivectors.
pub const RANK_TOL: f64 = 1e-10;

/// A verified idempotent `1/2(1 + e_a1) ... 1/2(1 + e_ak)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentCertificate<T: Scalar> {
    pub element: Multivector<T>,
    pub factors: Vec<Multivector<T>>,
    pub k: usize,
}

/// Builds `prod 1/2(1 + f_i)` after checking that each `f_i` is a multiple of
/// one basis blade, squares to one and commutes with the others. The factor
/// count is not checked here; see [`primitive_idempotent`].
pub fn idempotent_from_factors<T: Scalar>(
    sig: Signature,
    factors: &[Multivector<T>],
) -> Result<Multivector<T>, CliffordError> {
    let one = Multivector::one(sig);
    for (i, f) in factors.iter().enumerate() {
        if f.signature() != sig {
            return Err(CliffordError::SignatureMismatch { left: sig, right: f.signature() });
        }
        if f.single_blade().is_none() {
            return Err(CliffordError::FactorNotBlade(i));
        }
        if !f.geometric_product(f)?.approx_eq(&one, ALGEBRA_TOL) {
            return Err(CliffordError::FactorSquare(i));
        }
    }
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            if !factors[i].commutes_with(&factors[j], ALGEBRA_TOL)? {
                return Err(CliffordError::FactorsAnticommute(i, j));
            }
        }
    }
    let half = T::half();
    let mut e = one.clone();
    for f in factors {
        let proj = (&one + f).scale(&half);
        e = e.geometric_product(&proj)?;
    }
    if !e.geometric_product(&e)?.approx_eq(&e, ALGEBRA_TOL) {
        return Err(CliffordError::NotIdempotent);
    }
    Ok(e)
}

/// Primitive idempotent of Cl(p,q) from caller-supplied commuting blades;
/// the number of blades must equal `k = q - r_{q-p}`.
pub fn primitive_idempotent<T: Scalar>(
    sig: Signature,
    factors: &[Multivector<T>],
) -> Result<IdempotentCertificate<T>, CliffordError> {
    let expected = idempotent_factor_count(&sig);
    if expected < 0 || factors.len() as i64 != expected {
        return Err(CliffordError::WrongFactorCount { expected, got: factors.len() });
    }
    let element = idempotent_from_factors(sig, factors)?;
    Ok(IdempotentCertificate { element, factors: factors.to_vec(), k: factors.len() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Basis of a one-sided ideal `Cl e` or `e Cl`.
#[derive(Clone, Debug)]
pub struct IdealBasis<T: Scalar> {
    pub side: Side,
    pub elements: Vec<Multivector<T>>,
    /// Dimension over the coefficient field.
    pub dim: usize,
    /// Dimension over C after identifying a central volume element `w`
    /// (`w^2 = -1`) with `i`, when the idempotent has real coefficients.
    pub omega_complex_dim: Option<usize>,
}

/// Maximal linearly independent subset of `{b e}` (left) or `{e b}` (right)
/// over all basis blades `b`.
pub fn one_sided_ideal_basis<T: Scalar>(e: &Multivector<T>, side: Side) -> Result<IdealBasis<T>, CliffordError> {
    if !e.geometric_product(e)?.approx_eq(e, ALGEBRA_TOL) {
        return Err(CliffordError::NotIdempotent);
    }
    let sig = e.signature();
    let candidates = (0..sig.num_blades() as Blade).map(|b| {
        let blade = Multivector::basis(sig, b);
        match side {
            Side::Left => blade.geometric_product(e),
            Side::Right => e.geometric_product(&blade),
        }
    });
    let mut span = Span::new(sig.num_blades());
    let mut elements = Vec::new();
    for c in candidates {
        let c = c?;
        if span.insert(c.coeffs()) {
            elements.push(c);
        }
    }
    let dim = elements.len();
    let vol = volume_element::<T>(sig);
    let omega_complex_dim = (vol.central && vol.square == -1 && e.is_real(ALGEBRA_TOL)).then_some(dim / 2);
    Ok(IdealBasis { side, elements, dim, omega_complex_dim })
}

/// Incremental row-echelon basis used for rank and membership tests.
#[derive(Clone, Debug)]
pub struct Span<T: Scalar> {
    len: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> Span<T> {
    pub fn new(len: usize) -> Self {
        Self { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.len);
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let factor = v[*pivot].clone() / row[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                *x = x.clone() - factor.clone() * r.clone();
            }
        }
        v
    }

    fn tol(v: &[T]) -> f64 {
        let scale = v.iter().map(Scalar::magnitude).fold(1.0, f64::max);
        RANK_TOL * scale
    }

    /// Whether `v` lies in the span (within tolerance for floating fields).
    pub fn contains(&self, v: &[T]) -> bool {
        let tol = Self::tol(v);
        self.reduce(v).iter().all(|x| x.negligible(tol))
    }

    /// Adds `v`; returns true if it was independent of the current rows.
    pub fn insert(&mut self, v: &[T]) -> bool {
        let tol = Self::tol(v);
        let r = self.reduce(v);
        let pivot = r
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.negligible(tol))
            .max_by(|a, b| a.1.magnitude().total_cmp(&b.1.magnitude()))
            .map(|(i, _)| i);
        match pivot {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }
}
