//! Driving a run from a TOML config, as the `wdirac` binary does, and
//! converting the artifacts between JSON and CSV.

use weierstrass_dirac::run::{build_surface, export, verify, Format, RunConfig};

fn main() {
    let dir = std::env::temp_dir().join("wdirac-example");
    let mut cfg = RunConfig::from_toml(
        r#"
        [domain]
        x = [0.0, 1.0]
        y = [0.0, 1.0]
        nx = 32
        ny = 32
        periodic = false

        [data]
        psi1 = "exp(zbar/2)"
        phi1 = "exp(z/3)"

        [surface]
        convention = "conformal"
        "#,
    )
    .unwrap();
    cfg.output.dir = dir.clone();

    let report = build_surface(&cfg).unwrap();
    println!("wrote {:?} to {}", report.files, dir.display());
    println!("max |g_zz| = {:.2e}, conformal factor error = {:.2e}", report.max_g_zz, report.conformal_factor_error);

    let exported = export(&dir, Format::Csv).unwrap();
    for f in &exported.files {
        println!("{} -> {} ({} columns)", f.from, f.to, f.columns.len());
    }

    let v = verify(&cfg.verify).unwrap();
    let checks: usize = v.suites.iter().map(|s| s.checks.len()).sum();
    println!("verify: {} checks, passed = {}", checks, v.passed);
}
