//! Dirac-Hestenes spinors as 4x4 matrices, the Dirac spinor in the minimal
//! left ideal, and its image under the charge-conjugation antiautomorphism.

use num_complex::Complex64;
use weierstrass_dirac::matrix_rep::{
    charge_conjugation_matrix, conjugated_dirac, conjugated_row, dh_matrix, dirac_from_dh, tilde_star,
    DiracHestenesSpinor, GammaBasis,
};

fn main() {
    let basis = GammaBasis::default();
    for j in 0..4 {
        println!("G{j} =\n{}", basis.gamma(j));
    }
    println!("C E^T =\n{}", charge_conjugation_matrix());

    let s = DiracHestenesSpinor::new(
        Complex64::new(1.0, 0.5),
        Complex64::new(-0.25, 2.0),
        Complex64::new(0.0, -1.0),
        Complex64::new(3.0, 0.0),
    );
    println!("spinor components {:?}", s.phi);
    println!("even element: {}", s.to_multivector());
    println!("matrix:\n{}", dh_matrix(&s));
    println!("Dirac spinor (first column of phi e41): {:?}", dirac_from_dh(&s).phi);
    println!("~(phi*):\n{}", tilde_star(&dh_matrix(&s)).unwrap());
    println!("charge conjugate, a right-ideal element:\n{}", conjugated_dirac(&s));
    println!("its last row {:?}", conjugated_row(&s));
}
