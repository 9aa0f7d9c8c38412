use num_complex::Complex64;
use proptest::prelude::*;
use weierstrass_dirac::clifford::{complexify, one_sided_ideal_basis, Multivector, Side, Signature, Span};
use weierstrass_dirac::matrix_rep::{
    conjugated_dirac, dh_matrix, represent, tilde_star, ComplexMatrix, DiracHestenesSpinor, GammaBasis,
};
use weierstrass_dirac::run::Expr;

fn cplx() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn spacetime_mv() -> impl Strategy<Value = Multivector> {
    prop::collection::vec(cplx(), 16).prop_map(|c| Multivector::from_coeffs(Signature::spacetime(), c).unwrap())
}

fn spinor() -> impl Strategy<Value = DiracHestenesSpinor> {
    (cplx(), cplx(), cplx(), cplx()).prop_map(|(a, b, c, d)| DiracHestenesSpinor::new(a, b, c, d))
}

fn matrix() -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(cplx(), 16).prop_map(|v| ComplexMatrix::from_rows(&v.chunks(4).collect::<Vec<_>>()).unwrap())
}

proptest! {
    #[test]
    fn represent_is_multiplicative(a in spacetime_mv(), b in spacetime_mv()) {
        let lhs = represent(&(&a * &b)).unwrap();
        let rhs = represent(&a).unwrap().mul(&represent(&b).unwrap()).unwrap();
        prop_assert!(lhs.approx_eq(&rhs, 1e-11));
    }

    #[test]
    fn decompose_inverts_represent(a in spacetime_mv()) {
        let basis = GammaBasis::default();
        let back = basis.decompose(&basis.represent(&a).unwrap()).unwrap();
        prop_assert!(back.approx_eq(&a, 1e-12));
    }

    #[test]
    fn tilde_star_reverses_products(a in matrix(), b in matrix()) {
        let lhs = tilde_star(&a.mul(&b).unwrap()).unwrap();
        let rhs = tilde_star(&b).unwrap().mul(&tilde_star(&a).unwrap()).unwrap();
        prop_assert!(lhs.approx_eq(&rhs, 1e-11));
    }

    #[test]
    fn tilde_star_is_clifford_conjugation(a in spacetime_mv()) {
        let lhs = tilde_star(&represent(&a).unwrap()).unwrap();
        let rhs = represent(&a.clifford_conjugation()).unwrap();
        prop_assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn spinor_matrices_are_closed(s in spinor(), t in spinor()) {
        let prod = dh_matrix(&s).mul(&dh_matrix(&t)).unwrap();
        let c = prod.column(0);
        let again = dh_matrix(&DiracHestenesSpinor::new(c[0], c[1], c[2], c[3]));
        prop_assert!(prod.approx_eq(&again, 1e-11));
    }

    #[test]
    fn spinor_matrix_is_an_even_element(s in spinor()) {
        let m = GammaBasis::default().decompose(&dh_matrix(&s)).unwrap();
        prop_assert!(m.is_real(1e-12));
        prop_assert!(m.even_part().approx_eq(&m, 1e-12));
        prop_assert!(m.approx_eq(&s.to_multivector(), 1e-12));
    }

    #[test]
    fn expression_arithmetic(a in -5.0..5.0f64, b in -5.0..5.0f64, x in -1.0..1.0f64, y in -1.0..1.0f64) {
        let z = Complex64::new(x, y);
        let e = Expr::parse(&format!("({a}) * z + ({b}) * zbar^2")).unwrap();
        let want = z * a + z.conj() * z.conj() * b;
        prop_assert!((e.eval(z) - want).norm() < 1e-12);
    }
}

/// The charge-conjugated spinor lies in the right ideal `e Cl` of the
/// transformed idempotent, spanned in the complexified spacetime algebra.
#[test]
fn conjugated_spinor_is_in_the_right_ideal() {
    let basis = GammaBasis::default();
    let e_star = {
        let e = basis.decompose(&weierstrass_dirac::matrix_rep::e41_matrix(&basis)).unwrap();
        represent(&e.clifford_conjugation()).unwrap()
    };
    let e_mv = basis.decompose(&e_star).unwrap();
    let ideal = one_sided_ideal_basis(&e_mv, Side::Right).unwrap();
    assert_eq!(ideal.dim, 4);
    let mut span = Span::new(16);
    for el in &ideal.elements {
        span.insert(el.coeffs());
    }
    for k in 0..10 {
        let f = k as f64;
        let s = DiracHestenesSpinor::new(
            Complex64::new(1.0 + f, -0.5),
            Complex64::new(0.25 * f, 2.0),
            Complex64::new(-1.0, f),
            Complex64::new(0.5, -0.1 * f),
        );
        let m = basis.decompose(&conjugated_dirac(&s)).unwrap();
        assert!(span.contains(m.coeffs()));
    }
}

#[test]
fn biquaternion_folding_matches_spinor_components() {
    // (Re X + w Im X) folded onto the complex half-basis of Cl(3,0)
    let x = [Complex64::new(1.0, 2.0), Complex64::new(-3.0, 0.5), Complex64::new(0.25, -1.0), Complex64::new(4.0, 8.0)];
    let b = weierstrass_dirac::weierstrass::biquaternion_form(x);
    let folded = complexify(&b).unwrap();
    let sig = Signature::euclidean3();
    let coeff = |label: &str| *folded.coeff(sig.parse_blade(label).unwrap().1);
    assert_eq!(coeff("1"), x[0]);
    assert_eq!(coeff("e1"), x[1]);
    assert_eq!(coeff("e2"), x[2]);
    assert_eq!(coeff("e3"), x[3]);
}
