//! The third-order DSII flow against its modified Veselov-Novikov (p = q real)
//! and Veselov-Novikov (q = 1) reductions, plus a short nonlinear run.

use num_complex::Complex64;
use weierstrass_dirac::dsii::{dsii3_rhs, evolve_observed, mvn_rhs, vn_rhs, FlowConfig, FlowMonitor, PotentialField};
use weierstrass_dirac::grid::{max_abs, GridDomain};

fn main() {
    let d = GridDomain::periodic_square(64).unwrap();
    let p = PotentialField::from_fn(d, |z| {
        Complex64::new(0.3 * (z.re + 2.0 * z.im).cos() - 0.2 * (3.0 * z.re).sin() * z.im.cos(), 0.0)
    })
    .unwrap();
    let one = PotentialField::new(d, d.constant(Complex64::new(1.0, 0.0))).unwrap();

    let (pt, _) = dsii3_rhs(&p, &p).unwrap();
    let mvn = mvn_rhs(&p).unwrap();
    println!("p = q:  |p_t - mVN| / |p_t| = {:.2e}", max_abs(&(&pt - &mvn)) / max_abs(&pt));
    let (pt, qt) = dsii3_rhs(&p, &one).unwrap();
    let vn = vn_rhs(&p).unwrap();
    println!("q = 1:  |p_t - VN| / |p_t| = {:.2e},  |q_t| = {:.2e}", max_abs(&(&pt - &vn)) / max_abs(&pt), max_abs(&qt));

    let d = GridDomain::periodic_square(32).unwrap();
    let p = PotentialField::from_fn(d, |z| Complex64::new(0.5 * z.re.cos() + 0.3 * (2.0 * z.im - z.re).sin(), 0.0)).unwrap();
    let q = p.clone();
    let cfg = FlowConfig { dt: 5e-4, steps: 200, ..Default::default() };
    println!("\nmVN run, dt = {}, stability limit {:.2e}", cfg.dt, cfg.cfl_limit(&d));
    let p0 = p.values.clone();
    evolve_observed(&p, &q, &cfg, |step, t, p, q| {
        if step % 50 == 0 {
            let m = FlowMonitor::new(step, t, p, q);
            let moved = max_abs(&(p - &p0));
            println!("t = {:.3}  rms p = {:.6}  mean pq = {:.6}  max |p - p0| = {:.3e}", m.time, m.p_rms, m.pq_mean[0], moved);
        }
    })
    .unwrap();
}
