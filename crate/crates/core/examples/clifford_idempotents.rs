//! Primitive idempotents and minimal left ideals of the spacetime and Dirac
//! algebras, computed exactly over complex rationals.

use weierstrass_dirac::clifford::{
    dirac_embedding, idempotent_factor_count, one_sided_ideal_basis, primitive_idempotent, radon_hurwitz,
    volume_element, ExactComplex, Multivector, Side, Signature,
};

type Mv = Multivector<ExactComplex>;

fn main() {
    print!("Radon-Hurwitz r_0..r_9:");
    for i in 0..10 {
        print!(" {}", radon_hurwitz(i));
    }
    println!();

    for sig in [Signature::euclidean3(), Signature::spacetime(), Signature::dirac()] {
        let w = volume_element::<ExactComplex>(sig);
        println!(
            "{sig}: volume element {}, square {}, central {}, idempotent factors k = {}",
            sig.blade_label(sig.pseudoscalar()),
            w.square,
            w.central,
            idempotent_factor_count(&sig)
        );
    }

    let st = Signature::spacetime();
    let e13 = primitive_idempotent(st, &[Mv::generator(st, 0)]).expect("valid factors");
    println!("\ne13 = {}", e13.element);
    let left = one_sided_ideal_basis(&e13.element, Side::Left).expect("idempotent");
    println!("Cl(1,3) e13 has real dimension {}", left.dim);

    let e41 = primitive_idempotent(Signature::dirac(), &dirac_embedding::e41_factors::<ExactComplex>())
        .expect("valid factors");
    println!("\ne41 = {}", e41.element);
    println!("e41^2 == e41: {}", &e41.element * &e41.element == e41.element);
    let left = one_sided_ideal_basis(&e41.element, Side::Left).expect("idempotent");
    println!(
        "Cl(4,1) e41 has real dimension {} and complex dimension {:?}",
        left.dim, left.omega_complex_dim
    );

    let bad = primitive_idempotent(st, &[Mv::generator(st, 0), Mv::blade(st, "e12").unwrap()]);
    println!("\ntwo factors in Cl(1,3): {}", bad.unwrap_err());
}
