//! Seeded invariant suites behind `wdirac verify`.
//!
//! Hard checks decide the exit status; diagnostics (closedness of the
//! coordinate one-forms, preservation of the linear problem under the flow)
//! are reported with their measured value only.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::config::VerifyConfig;
use super::RunError;
use crate::clifford::{
    dirac_embedding, grade, idempotent_factor_count, one_sided_ideal_basis, primitive_idempotent, radon_hurwitz,
    volume_element, ExactComplex, Multivector, Scalar, Side, Signature,
};
use crate::dsii::{
    deform_surface, dsii3_rhs, evolve, mvn_rhs, vn_rhs, DeformConfig, FlowConfig, PotentialField,
};
use crate::grid::{max_abs, mean, Field, GridDomain};
use crate::matrix_rep::{dh_matrix, e41_matrix, ChargeConjugation, ComplexMatrix, DiracHestenesSpinor, GammaBasis};
use crate::spectral::Spectral;
use crate::weierstrass::{
    closedness_residual, coords_to_dh, dh_to_coords, induced_metric, integrate_coordinates, PathOrder,
    SignConvention, WeierstrassData,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub hard: bool,
    pub passed: bool,
    pub value: f64,
    /// `None` for diagnostics.
    pub tolerance: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Suite {
    pub name: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    /// `suite/check` names of failed hard checks.
    pub failures: Vec<String>,
    pub suites: Vec<Suite>,
}

struct SuiteBuilder {
    name: &'static str,
    checks: Vec<Check>,
}

impl SuiteBuilder {
    fn new(name: &'static str) -> Self {
        Self { name, checks: Vec::new() }
    }

    fn hard(&mut self, name: &str, value: f64, tolerance: f64) {
        let passed = value <= tolerance;
        self.checks.push(Check { name: name.into(), hard: true, passed, value, tolerance: Some(tolerance) });
    }

    fn exact(&mut self, name: &str, ok: bool) {
        self.hard(name, if ok { 0.0 } else { 1.0 }, 0.0);
    }

    fn diagnostic(&mut self, name: &str, value: f64) {
        self.checks.push(Check { name: name.into(), hard: false, passed: true, value, tolerance: None });
    }

    fn finish(self) -> Suite {
        Suite { name: self.name.into(), checks: self.checks }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rand_c(rng: &mut ChaCha8Rng) -> Complex64 {
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn rand_mv(rng: &mut ChaCha8Rng, sig: Signature) -> Multivector {
    let coeffs = (0..sig.num_blades()).map(|_| rand_c(rng)).collect();
    Multivector::from_coeffs(sig, coeffs).expect("sized to the signature")
}

fn rand_matrix(rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let rows: Vec<Vec<Complex64>> = (0..4).map(|_| (0..4).map(|_| rand_c(rng)).collect()).collect();
    ComplexMatrix::from_rows(&rows).expect("4x4")
}

fn rand_spinor(rng: &mut ChaCha8Rng) -> DiracHestenesSpinor {
    DiracHestenesSpinor::new(rand_c(rng), rand_c(rng), rand_c(rng), rand_c(rng))
}

/// Sum of Fourier modes with `|m|, |n| <= 8` and random amplitudes.
fn rand_band_limited(rng: &mut ChaCha8Rng, d: &GridDomain, real: bool) -> Field {
    let mut f = d.zeros();
    for _ in 0..6 {
        let (m, n) = (rng.gen_range(-8..=8) as f64, rng.gen_range(-8..=8) as f64);
        let amp = rand_c(rng) * 0.3;
        f += &d.sample(|z| amp * c(0.0, m * z.re + n * z.im).exp());
    }
    if real {
        f.mapv_inplace(|v| c(v.re, 0.0));
    }
    f
}

fn rel_diff(a: &Multivector, b: &Multivector) -> f64 {
    let scale = b.coeffs().iter().map(|v| v.norm()).fold(1.0, f64::max);
    a.max_abs_diff(b).unwrap_or(f64::INFINITY) / scale
}

fn mat_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.max_abs_diff(b).unwrap_or(f64::INFINITY)
}

fn algebra_suite(rng: &mut ChaCha8Rng, samples: usize) -> Suite {
    let mut s = SuiteBuilder::new("algebra");
    let sigs = [Signature::euclidean3(), Signature::spacetime(), Signature::dirac()];
    for sig in sigs {
        let (mut assoc, mut rev, mut conj, mut inv) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for _ in 0..samples {
            let (a, b, cc) = (rand_mv(rng, sig), rand_mv(rng, sig), rand_mv(rng, sig));
            let ab = &a * &b;
            let lhs = &ab * &cc;
            assoc = assoc.max(rel_diff(&lhs, &(&a * &(&b * &cc))));
            rev = rev.max(rel_diff(&ab.reversion(), &(&b.reversion() * &a.reversion())));
            conj = conj.max(rel_diff(&ab.clifford_conjugation(), &(&b.clifford_conjugation() * &a.clifford_conjugation())));
            let back = a.grade_involution().grade_involution().max_abs_diff(&a).unwrap_or(f64::INFINITY)
                + a.reversion().reversion().max_abs_diff(&a).unwrap_or(f64::INFINITY)
                + a.clifford_conjugation().clifford_conjugation().max_abs_diff(&a).unwrap_or(f64::INFINITY)
                + a.clifford_conjugation().max_abs_diff(&a.grade_involution().reversion()).unwrap_or(f64::INFINITY);
            inv = inv.max(back);
        }
        s.hard(&format!("associativity {sig}"), assoc, 1e-12);
        s.hard(&format!("reversion antiautomorphism {sig}"), rev, 1e-12);
        s.hard(&format!("conjugation antiautomorphism {sig}"), conj, 1e-12);
        s.hard(&format!("involutions {sig}"), inv, 0.0);
    }

    let mut anti = true;
    for n in 1..=5u8 {
        for p in 0..=n {
            let sig = Signature::new(p, n - p).expect("small signature");
            for i in 0..n as usize {
                for j in 0..n as usize {
                    let (ei, ej) = (Multivector::<ExactComplex>::generator(sig, i), Multivector::generator(sig, j));
                    let eta = if i == j { sig.metric(i) as i64 * 2 } else { 0 };
                    let expect = Multivector::scalar(sig, ExactComplex::from_i64(eta));
                    anti &= &(&ei * &ej) + &(&ej * &ei) == expect;
                }
            }
        }
    }
    s.exact("generator anticommutation, p+q <= 5", anti);

    let table_ok = (0..8).map(radon_hurwitz).eq([0, 1, 2, 2, 3, 3, 3, 3]);
    let period_ok = (-16..=16).all(|i| radon_hurwitz(i + 8) == radon_hurwitz(i) + 4);
    s.exact("radon-hurwitz table and period", table_ok && period_ok);
    s.exact(
        "factor counts k = q - r(q-p)",
        idempotent_factor_count(&Signature::spacetime()) == 1 && idempotent_factor_count(&Signature::dirac()) == 2,
    );

    let st = Signature::spacetime();
    let e13 = primitive_idempotent(st, &[Multivector::<ExactComplex>::generator(st, 0)]);
    s.exact("e13 idempotent", e13.as_ref().map(|e| &e.element * &e.element == e.element).unwrap_or(false));
    let e41 = primitive_idempotent(Signature::dirac(), &dirac_embedding::e41_factors::<ExactComplex>());
    s.exact("e41 idempotent", e41.as_ref().map(|e| &e.element * &e.element == e.element).unwrap_or(false));

    let e41f: Multivector = dirac_embedding::e41();
    let dim41 = one_sided_ideal_basis(&e41f, Side::Left).ok().and_then(|b| b.omega_complex_dim);
    s.exact("dim_C Cl(4,1) e41 = 4", dim41 == Some(4));
    let e13f: Multivector = (&Multivector::one(st) + &Multivector::generator(st, 0)).scale(&c(0.5, 0.0));
    let dim13 = one_sided_ideal_basis(&e13f, Side::Left).map(|b| b.dim).unwrap_or(0);
    s.exact("dim_R Cl(1,3) e13 = 8", dim13 == 8);

    let v3 = volume_element::<ExactComplex>(Signature::euclidean3());
    let v41 = volume_element::<ExactComplex>(Signature::dirac());
    let v13 = volume_element::<ExactComplex>(st);
    s.exact(
        "volume elements",
        v3.square == -1 && v3.central && v41.square == -1 && v41.central && v13.square == -1 && !v13.central,
    );
    s.finish()
}

fn representation_suite(rng: &mut ChaCha8Rng, samples: usize, basis: &GammaBasis) -> Result<Suite, RunError> {
    let mut s = SuiteBuilder::new("representation");
    let id = ComplexMatrix::identity(4);
    let mut anti = 0.0f64;
    for a in 0..4 {
        for b in 0..4 {
            let (ga, gb) = (basis.gamma(a), basis.gamma(b));
            let sum = ga.mul(gb)?.add(&gb.mul(ga)?)?;
            let eta = match (a, b) {
                (0, 0) => 2.0,
                _ if a == b => -2.0,
                _ => 0.0,
            };
            anti = anti.max(mat_diff(&sum, &id.scale(c(eta, 0.0))));
        }
    }
    s.hard("gamma anticommutation", anti, 1e-12);

    let st = Signature::spacetime();
    let mut hom = 0.0f64;
    for _ in 0..samples {
        let (a, b) = (rand_mv(rng, st), rand_mv(rng, st));
        let lhs = basis.represent(&(&a * &b))?;
        let rhs = basis.represent(&a)?.mul(&basis.represent(&b)?)?;
        hom = hom.max(mat_diff(&lhs, &rhs));
    }
    s.hard("represent is a homomorphism", hom, 1e-12);

    let cc = ChargeConjugation::new(basis)?;
    let (z, i, mi) = (c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0));
    let printed = ComplexMatrix::from_rows(&[[z, z, z, mi], [z, z, i, z], [z, mi, z, z], [i, z, z, z]])?;
    s.hard("C E^T matches the printed matrix", mat_diff(cc.matrix(), &printed), 0.0);

    let mut invol = 0.0f64;
    for _ in 0..samples {
        let m = rand_matrix(rng);
        invol = invol.max(mat_diff(&cc.apply(&cc.apply(&m)?)?, &m));
    }
    s.hard("tilde_star is an involution", invol, 1e-12);

    let mut grading = 0.0f64;
    for b in 0..16u16 {
        let k = grade(b) as i32;
        let sign = if (k * (k + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let m = basis.blade(b);
        grading = grading.max(mat_diff(&cc.apply(m)?, &m.scale(c(sign, 0.0))));
    }
    s.hard("tilde_star grades blades by (-1)^(k(k+1)/2)", grading, 0.0);

    let e41 = e41_matrix(basis);
    let e41_star = cc.apply(&e41)?;
    let (mut dh_rep, mut ts, mut row, mut shape) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..samples {
        let sp = rand_spinor(rng);
        let [p1, p2, p3, p4] = sp.phi;
        let m = dh_matrix(&sp);
        dh_rep = dh_rep.max(mat_diff(&basis.represent(&sp.to_multivector())?, &m));
        let expected = ComplexMatrix::from_rows(&[
            [p1.conj(), p2.conj(), -p3.conj(), -p4.conj()],
            [-p2, p1, -p4, p3],
            [-p3.conj(), -p4.conj(), p1.conj(), p2.conj()],
            [-p4, p3, -p2, p1],
        ])?;
        let star = cc.apply(&m)?;
        ts = ts.max(mat_diff(&star, &expected));
        let conj = e41_star.mul(&star)?;
        let want = ComplexMatrix::from_rows(&[[z; 4], [z; 4], [z; 4], [-p4, p3, -p2, p1]])?;
        row = row.max(mat_diff(&conj, &want));
        let ideal = m.mul(&e41)?;
        for col in 1..4 {
            shape = shape.max(ideal.column(col).iter().map(|v| v.norm()).fold(0.0, f64::max));
        }
    }
    s.hard("dh_matrix represents the even element", dh_rep, 1e-12);
    s.hard("tilde_star of a Dirac-Hestenes matrix", ts, 1e-12);
    s.hard("conjugated Dirac spinor is (-phi4, phi3, -phi2, phi1) in the last row", row, 1e-12);
    s.hard("phi e41 has zero columns 2-4", shape, 1e-12);

    let mut roundtrip = 0.0f64;
    for _ in 0..samples * 10 {
        let x = [rand_c(rng), rand_c(rng), rand_c(rng), rand_c(rng)];
        let back = dh_to_coords(&coords_to_dh(x));
        let err = x.iter().zip(back).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        roundtrip = roundtrip.max(err);
    }
    s.hard("coordinate <-> spinor roundtrip", roundtrip, 1e-14);
    Ok(s.finish())
}

fn weierstrass_suite() -> Result<Suite, RunError> {
    let mut s = SuiteBuilder::new("weierstrass");
    let d = GridDomain::new([0.0, 1.0], [0.0, 1.0], 64, 64, false)?;
    let data = WeierstrassData::constant(d, c(1.0, 0.0))?;
    for conv in [SignConvention::LiteralPaper, SignConvention::Conformal] {
        let surf = integrate_coordinates(&data, (0, 0), conv, PathOrder::XThenY)?;
        let g = induced_metric(&surf);
        s.hard(&format!("constant data g_zz ({conv})"), max_abs(&g.g_zz), 1e-8);
        s.hard(&format!("constant data g_zbar_zbar ({conv})"), max_abs(&g.g_zbar_zbar), 1e-8);
        if conv == SignConvention::Conformal {
            s.hard("conformal factor", max_abs(&(&g.g_z_zbar - &data.conformal_factor())), 1e-8);
        }
    }
    // closed data with p = q = 0: psi antiholomorphic, phi holomorphic
    let e = |z: Complex64| (z.conj() / 2.0).exp();
    let f = |z: Complex64| (z / 3.0).exp();
    let one = |_: Complex64| c(1.0, 0.0);
    let zero = |_: Complex64| c(0.0, 0.0);
    let closed = WeierstrassData::from_fns(d, zero, zero, [&e, &one], [&f, &one])?;
    for conv in [SignConvention::LiteralPaper, SignConvention::Conformal] {
        let r = closedness_residual(&closed, conv)?;
        let worst = r.iter().map(max_abs).fold(0.0, f64::max);
        s.diagnostic(&format!("closedness residual ({conv})"), worst);
        let a = integrate_coordinates(&closed, (0, 0), conv, PathOrder::XThenY)?;
        let b = integrate_coordinates(&closed, (0, 0), conv, PathOrder::YThenX)?;
        let gap = (0..4).map(|k| max_abs(&(&a.x[k] - &b.x[k]))).fold(0.0, f64::max);
        s.diagnostic(&format!("path dependence ({conv})"), gap);
    }
    s.diagnostic("linear problem residual, closed data", closed.dirac_system_residual()?.max_norm());
    Ok(s.finish())
}

fn dsii_suite(rng: &mut ChaCha8Rng, samples: usize) -> Result<Suite, RunError> {
    let mut s = SuiteBuilder::new("dsii");
    let d = GridDomain::periodic_square(32)?;
    let sp = Spectral::new(&d)?;
    let mut inv = 0.0f64;
    for _ in 0..samples.min(10) {
        let f = rand_band_limited(rng, &d, false);
        let centered = f.mapv(|v| v - mean(&f));
        inv = inv.max(max_abs(&(&sp.dz(&sp.dz_inv(&f)) - &centered)));
        inv = inv.max(max_abs(&(&sp.dzbar(&sp.dzbar_inv(&f)) - &centered)));
    }
    s.hard("d d^-1 = id - mean", inv, 1e-12);

    let (mut mvn, mut vn) = (0.0f64, 0.0f64);
    let one = PotentialField::new(d, d.constant(c(1.0, 0.0)))?;
    for _ in 0..samples.min(3) {
        let p = PotentialField::new(d, rand_band_limited(rng, &d, true))?;
        let (pt, _) = dsii3_rhs(&p, &p)?;
        mvn = mvn.max(max_abs(&(&pt - &mvn_rhs(&p)?)) / max_abs(&pt));
        let (pt, qt) = dsii3_rhs(&p, &one)?;
        let v = vn_rhs(&p)?;
        vn = vn.max((max_abs(&(&pt - &v)) + max_abs(&qt)) / max_abs(&v));
    }
    s.hard("p = q real reduces to mVN", mvn, 1e-10);
    s.hard("q = 1 reduces to VN", vn, 1e-10);

    let small = GridDomain::periodic_square(16)?;
    let (m, n) = (3.0, 1.0);
    let p0 = small.sample(|z| c(0.0, m * z.re + n * z.im).exp() * 1e-3);
    let lambda = c(0.0, (3.0 * m * n * n - m * m * m) / 4.0);
    let cfg = FlowConfig { dt: 0.002, steps: 50, ..Default::default() };
    let (pt, _) = evolve(&PotentialField::new(small, p0.clone())?, &PotentialField::zeros(small)?, &cfg)?;
    let t = cfg.dt * cfg.steps as f64;
    s.hard("single mode follows exp(t symbol)", max_abs(&(&pt.values - &p0.mapv(|v| v * (lambda * t).exp()))), 1e-8);

    let constant = WeierstrassData::constant(small, c(1.0, 0.0))?;
    let dc = DeformConfig {
        flow: FlowConfig { dt: 1e-3, steps: 20, ..Default::default() },
        snapshot_stride: 20,
        ..Default::default()
    };
    let snaps = deform_surface(&constant, &dc)?;
    let drift = (0..4)
        .map(|k| max_abs(&(&snaps.last().expect("snapshots").surface.x[k] - &snaps[0].surface.x[k])))
        .fold(0.0, f64::max);
    s.hard("constant data is a fixed point", drift, 1e-12);

    let wave = |z: Complex64| c(0.1 * z.re.cos() * z.im.sin(), 0.0);
    let lin = |z: Complex64| c(1.0, 0.0) + c(0.05, 0.0) * c(0.0, z.re).exp();
    let data = WeierstrassData::from_fns(small, wave, wave, [&lin, &lin], [&lin, &lin])?;
    let snaps = deform_surface(&data, &DeformConfig { snapshot_stride: 10, ..dc })?;
    let r0 = snaps[0].residual.max_norm();
    let r1 = snaps.last().expect("snapshots").residual.max_norm();
    s.diagnostic("linear problem residual drift under the flow", r1 - r0);
    Ok(s.finish())
}

/// Runs all suites with inputs drawn from a ChaCha stream seeded by `cfg.seed`.
pub fn verify(cfg: &VerifyConfig) -> Result<VerifyReport, RunError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut basis = GammaBasis::default();
    if let Some(o) = &cfg.gamma_override {
        if o.index >= 4 {
            return Err(RunError::Config(format!("gamma_override.index {} is not in 0..4", o.index)));
        }
        let mut gammas = basis.gammas().clone();
        gammas[o.index] = o.matrix()?;
        basis = GammaBasis::new(gammas)?;
    }
    let suites = vec![
        algebra_suite(&mut rng, cfg.samples),
        representation_suite(&mut rng, cfg.samples, &basis)?,
        weierstrass_suite()?,
        dsii_suite(&mut rng, cfg.samples)?,
    ];
    let failures: Vec<String> = suites
        .iter()
        .flat_map(|s| s.checks.iter().filter(|c| c.hard && !c.passed).map(move |c| format!("{}/{}", s.name, c.name)))
        .collect();
    Ok(VerifyReport { seed: cfg.seed, samples: cfg.samples, passed: failures.is_empty(), failures, suites })
}
