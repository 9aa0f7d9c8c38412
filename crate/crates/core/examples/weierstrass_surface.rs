//! A surface in C^4 from closed Weierstrass data with vanishing potentials,
//! its induced metric, and the Dirac spinor field it defines.

use num_complex::Complex64;
use weierstrass_dirac::grid::{max_abs, GridDomain};
use weierstrass_dirac::weierstrass::{
    closedness_residual, induced_metric, integrate_coordinates, surface_to_dirac_field, PathOrder, SignConvention,
    WeierstrassData,
};

fn main() {
    let d = GridDomain::new([0.0, 1.0], [0.0, 1.0], 64, 64, false).unwrap();
    let psi1 = |z: Complex64| (z.conj() / 2.0).exp();
    let phi1 = |z: Complex64| (z / 3.0).exp();
    let one = |_: Complex64| Complex64::new(1.0, 0.0);
    let zero = |_: Complex64| Complex64::new(0.0, 0.0);
    let data = WeierstrassData::from_fns(d, zero, zero, [&psi1, &one], [&phi1, &one]).unwrap();
    println!("linear problem residual {:.2e}", data.dirac_system_residual().unwrap().max_norm());

    for conv in [SignConvention::LiteralPaper, SignConvention::Conformal] {
        let closed = closedness_residual(&data, conv).unwrap();
        let s = integrate_coordinates(&data, (0, 0), conv, PathOrder::XThenY).unwrap();
        let g = induced_metric(&s);
        let cf = data.conformal_factor();
        println!(
            "{conv:>13}: closedness {:.1e}  |g_zz| {:.1e}  |g_zbar zbar| {:.1e}  |g_z zbar - psi1 psi2 phi1 phi2| {:.1e}",
            closed.iter().map(max_abs).fold(0.0, f64::max),
            max_abs(&g.g_zz),
            max_abs(&g.g_zbar_zbar),
            max_abs(&(&g.g_z_zbar - &cf)),
        );
    }

    let (surface, dirac) = surface_to_dirac_field(&data, (0, 0), SignConvention::Conformal).unwrap();
    let (i, j) = (63, 63);
    println!("\nX at z = {}: {:?}", d.z(i, j), surface.at(i, j));
    println!("Dirac spinor there: {:?}", dirac.at(i, j));
}
