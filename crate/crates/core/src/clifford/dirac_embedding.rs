//! The spacetime generators inside the Dirac algebra Cl(4,1).
//!
//! `C (x) Cl(1,3)` is realized as Cl(4,1) by sending `G0 -> e0`,
//! `Gj -> w ej` (`j = 1, 2, 3`) and `i -> w`, where `w = e01234` is central
//! with `w^2 = -1`.

use super::multivector::Multivector;
use super::scalar::Scalar;
use super::signature::Signature;
use super::volume::volume_element;

/// Central volume element of Cl(4,1), playing the role of `i`.
pub fn imaginary_unit<T: Scalar>() -> Multivector<T> {
    volume_element(Signature::dirac()).element
}

/// Image of the spacetime generator `G_j` in Cl(4,1).
pub fn gamma<T: Scalar>(j: usize) -> Multivector<T> {
    assert!(j < 4, "spacetime generator index {j} out of range");
    let sig = Signature::dirac();
    let e = Multivector::generator(sig, j);
    if j == 0 {
        e
    } else {
        &imaginary_unit::<T>() * &e
    }
}

/// Factors `[G0, i G12]` of the Dirac-algebra primitive idempotent.
pub fn e41_factors<T: Scalar>() -> Vec<Multivector<T>> {
    let i_g12 = &(&imaginary_unit::<T>() * &gamma::<T>(1)) * &gamma::<T>(2);
    vec![gamma(0), i_g12]
}

/// `e41 = 1/2(1 + G0) 1/2(1 + i G12)` in Cl(4,1).
pub fn e41<T: Scalar>() -> Multivector<T> {
    super::idempotent::idempotent_from_factors(Signature::dirac(), &e41_factors::<T>())
        .expect("e41 factors are valid by construction")
}
