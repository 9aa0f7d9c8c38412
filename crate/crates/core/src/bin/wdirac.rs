use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weierstrass_dirac::run::{self, Format, RunConfig, RunError};
use weierstrass_dirac::weierstrass::SignConvention;

#[derive(Parser)]
#[command(name = "wdirac", version, about = "Clifford-algebra spinors, Weierstrass surfaces and DSII deformations")]
struct Cli {
    /// TOML run configuration
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for the randomized verification inputs
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Sign convention of the coordinate one-forms
    #[arg(long, global = true)]
    convention: Option<SignConvention>,
    /// Artifact format
    #[arg(long, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant suites and print a JSON report; exits 1 on failure
    Verify,
    /// Build surface coordinates and the Dirac spinor field from initial data
    BuildSurface,
    /// Deform the surface under the third-order DSII flow
    Evolve,
    /// Convert stored tables in the output directory to --format
    Export,
}

fn run(cli: Cli) -> Result<bool, RunError> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.verify.seed = seed;
    }
    if let Some(out) = &cli.out {
        cfg.output.dir = out.clone();
    }
    if let Some(conv) = cli.convention {
        cfg.surface.convention = conv;
    }
    if let Some(format) = cli.format {
        cfg.output.format = format;
    }
    match cli.command {
        Command::Verify => {
            let report = run::verify(&cfg.verify)?;
            let text = serde_json::to_string_pretty(&report)?;
            println!("{text}");
            if cli.out.is_some() || cli.config.is_some() {
                std::fs::create_dir_all(&cfg.output.dir).map_err(|e| RunError::Io(e.to_string()))?;
                std::fs::write(cfg.output.dir.join("verify.json"), text + "\n")
                    .map_err(|e| RunError::Io(e.to_string()))?;
            }
            for f in &report.failures {
                eprintln!("FAILED {f}");
            }
            Ok(report.passed)
        }
        Command::BuildSurface => {
            let report = run::build_surface(&cfg)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(true)
        }
        Command::Evolve => {
            let report = run::evolve(&cfg)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(true)
        }
        Command::Export => {
            let report = run::export(&cfg.output.dir, cfg.output.format)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
