//! Fourier-multiplier Wirtinger derivatives and their zero-mean inverses on
//! a periodic grid.

use num_complex::Complex64;
use weierstrass_dirac::grid::{max_abs, mean, GridDomain};
use weierstrass_dirac::spectral::Spectral;

fn main() {
    let d = GridDomain::periodic_square(32).unwrap();
    let sp = Spectral::new(&d).unwrap();
    let (m, n) = (3.0, -2.0);
    let f = d.sample(|z| Complex64::new(0.0, m * z.re + n * z.im).exp() + 0.5);

    // d/dz exp(i(mx + ny)) = (i m + n)/2 exp(i(mx + ny))
    let sym = Complex64::new(n, m) / 2.0;
    let exact = d.sample(|z| sym * Complex64::new(0.0, m * z.re + n * z.im).exp());
    println!("|dz f - exact|          = {:.2e}", max_abs(&(&sp.dz(&f) - &exact)));

    let mu = mean(&f);
    let centered = f.mapv(|v| v - mu);
    println!("mean of f               = {mu}");
    println!("|dz dz^-1 f - (f - mu)| = {:.2e}", max_abs(&(&sp.dz(&sp.dz_inv(&f)) - &centered)));
    println!("|dzbar dzbar^-1 f - (f - mu)| = {:.2e}", max_abs(&(&sp.dzbar(&sp.dzbar_inv(&f)) - &centered)));
    let laplace = sp.mixed(&f, 1, 1).mapv(|v| v * 4.0);
    println!("|4 dz dzbar f + (m^2 + n^2)(f - mu)| = {:.2e}", max_abs(&(&laplace + &centered.mapv(|v| v * (m * m + n * n)))));
}
