use super::multivector::Multivector;
use super::scalar::Scalar;
use super::signature::{grade, Blade, Signature};
use super::{CliffordError, ALGEBRA_TOL};

/// The top blade of an algebra together with its square and centrality.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeElement<T: Scalar> {
    pub element: Multivector<T>,
    /// `+1` or `-1`.
    pub square: i32,
    pub central: bool,
}

pub fn volume_element<T: Scalar>(sig: Signature) -> VolumeElement<T> {
    let top = sig.pseudoscalar();
    let (square, _) = sig.blade_product(top, top);
    let central = (0..sig.dim()).all(|i| {
        let g: Blade = 1 << i;
        sig.blade_product(top, g).0 == sig.blade_product(g, top).0
    });
    VolumeElement { element: Multivector::basis(sig, top), square, central }
}

fn check_foldable(sig: Signature) -> Result<(), CliffordError> {
    let vol = volume_element::<num_complex::Complex64>(sig);
    if !vol.central {
        return Err(CliffordError::VolumeNotCentral(sig));
    }
    if vol.square != -1 {
        return Err(CliffordError::VolumePositive(sig));
    }
    Ok(())
}

/// Blades of grade below half the dimension. When the volume element `w` is
/// central these index the complex coordinates after identifying `w` with `i`.
fn is_low(blade: Blade, sig: Signature) -> bool {
    2 * grade(blade) < sig.dim()
}

/// Rewrites a real multivector of an algebra with central `w`, `w^2 = -1`, by
/// replacing `w` with the scalar imaginary unit. Each high-grade blade `B` is
/// written as `w * C` with `C = -w B` a low-grade blade, so its coefficient
/// moves to `C` multiplied by `i`. In Cl(3,0) this sends
/// `a^1 e1 + a^23 e23` to `(a^1 + i a^23) e1`.
pub fn complexify<T: Scalar>(a: &Multivector<T>) -> Result<Multivector<T>, CliffordError> {
    let sig = a.signature();
    check_foldable(sig)?;
    if !a.is_real(ALGEBRA_TOL) {
        return Err(CliffordError::NotReal);
    }
    let top = sig.pseudoscalar();
    let mut out = Multivector::<T>::zero(sig);
    for (b, c) in a.terms() {
        if is_low(b, sig) {
            let prev = out.coeff(b).clone();
            out.set_coeff(b, prev + c.clone());
        } else {
            // -w * B = sign * C
            let (s, low) = sig.blade_product(top, b);
            let sign = -s;
            let contrib = T::imag_unit() * c.clone() * T::from_i64(sign as i64);
            let prev = out.coeff(low).clone();
            out.set_coeff(low, prev + contrib);
        }
    }
    Ok(out)
}

/// Inverse of [`complexify`]: expands complex coefficients on low-grade
/// blades back into a real multivector, `(x + i y) C -> x C + y (w C)`.
pub fn expand_complex<T: Scalar>(a: &Multivector<T>) -> Result<Multivector<T>, CliffordError> {
    let sig = a.signature();
    check_foldable(sig)?;
    let top = sig.pseudoscalar();
    let mut out = Multivector::<T>::zero(sig);
    for (b, c) in a.terms() {
        if !is_low(b, sig) {
            return Err(CliffordError::NotFolded(sig.blade_label(b)));
        }
        let z = c.to_complex64();
        let prev = out.coeff(b).clone();
        out.set_coeff(b, prev + T::from_parts(z.re, 0.0));
        let (s, high) = sig.blade_product(top, b);
        let prev = out.coeff(high).clone();
        out.set_coeff(high, prev + T::from_parts(z.im * s as f64, 0.0));
    }
    Ok(out)
}
