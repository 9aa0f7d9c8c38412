use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::config::{RunConfig, DATA_FIELDS};
use super::table::Table;
use super::{write_json, Format, RunError};
use crate::dsii::{deform_surface, FlowMonitor};
use crate::grid::{max_abs, GridDomain};
use crate::weierstrass::{
    closedness_residual, induced_metric, surface_to_dirac_field, DiracResidual, SignConvention, SpinorField,
    SurfaceCoords, WeierstrassData,
};

const SURFACE_COLUMNS: [&str; 4] = ["X0", "X1", "X2", "X3"];
const SPINOR_COLUMNS: [&str; 4] = ["Phi1", "Phi2", "Phi3", "Phi4"];

fn ensure_dir(dir: &Path) -> Result<(), RunError> {
    fs::create_dir_all(dir).map_err(|e| RunError::Io(format!("{}: {e}", dir.display())))
}

fn surface_table(s: &SurfaceCoords) -> Table {
    Table::from_fields(&s.domain, &SURFACE_COLUMNS, &[&s.x[0], &s.x[1], &s.x[2], &s.x[3]])
}

fn spinor_table(s: &SpinorField) -> Table {
    Table::from_fields(&s.domain, &SPINOR_COLUMNS, &[&s.phi[0], &s.phi[1], &s.phi[2], &s.phi[3]])
}

fn data_table(d: &WeierstrassData) -> Table {
    Table::from_fields(&d.domain, &DATA_FIELDS, &[&d.p, &d.q, &d.psi[0], &d.psi[1], &d.phi[0], &d.phi[1]])
}

fn write_table(dir: &Path, stem: &str, table: &Table, format: Format) -> Result<String, RunError> {
    let name = format!("{stem}.{}", format.extension());
    table.write(&dir.join(&name), format)?;
    Ok(name)
}

/// Summary written to `build-surface.json`.
#[derive(Clone, Debug, Serialize)]
pub struct BuildReport {
    pub convention: SignConvention,
    pub domain: GridDomain,
    pub base: [usize; 2],
    /// Max of `d(X_i)` over the grid, one entry per coordinate (diagnostic).
    pub closedness: [f64; 4],
    pub max_g_zz: f64,
    pub max_g_zbar_zbar: f64,
    /// Max of `|g_zzbar - psi1 psi2 phi1 phi2|`.
    pub conformal_factor_error: f64,
    pub dirac_residual: DiracResidual,
    pub files: Vec<String>,
}

/// Builds the surface and its Dirac spinor field from the configured data and
/// writes `data`, `surface`, `spinor` tables plus `build-surface.json`.
pub fn build_surface(cfg: &RunConfig) -> Result<BuildReport, RunError> {
    let domain = cfg.domain.grid()?;
    let data = cfg.data.build(domain)?;
    let conv = cfg.surface.convention;
    let base = (cfg.surface.base[0], cfg.surface.base[1]);
    let (surface, spinor) = surface_to_dirac_field(&data, base, conv)?;
    let metric = induced_metric(&surface);
    let closed = closedness_residual(&data, conv)?;
    let dir = &cfg.output.dir;
    ensure_dir(dir)?;
    let fmt = cfg.output.format;
    let files = vec![
        write_table(dir, "data", &data_table(&data), fmt)?,
        write_table(dir, "surface", &surface_table(&surface), fmt)?,
        write_table(dir, "spinor", &spinor_table(&spinor), fmt)?,
    ];
    let report = BuildReport {
        convention: conv,
        domain,
        base: cfg.surface.base,
        closedness: [max_abs(&closed[0]), max_abs(&closed[1]), max_abs(&closed[2]), max_abs(&closed[3])],
        max_g_zz: max_abs(&metric.g_zz),
        max_g_zbar_zbar: max_abs(&metric.g_zbar_zbar),
        conformal_factor_error: max_abs(&(&metric.g_z_zbar - &data.conformal_factor())),
        dirac_residual: data.dirac_system_residual()?,
        files,
    };
    write_json(&dir.join("build-surface.json"), &report)?;
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct SnapshotSummary {
    pub monitor: FlowMonitor,
    pub dirac_residual: DiracResidual,
    pub files: Vec<String>,
}

/// Summary written to `evolve.json`.
#[derive(Clone, Debug, Serialize)]
pub struct EvolveReport {
    pub convention: SignConvention,
    pub domain: GridDomain,
    pub dt: f64,
    pub steps: usize,
    pub snapshots: Vec<SnapshotSummary>,
}

/// Deforms the configured data under the n = 3 flow, writing potentials,
/// surface and spinor tables for every snapshot plus `evolve.json`.
pub fn evolve(cfg: &RunConfig) -> Result<EvolveReport, RunError> {
    let domain = cfg.domain.grid()?;
    let data = cfg.data.build(domain)?;
    let dc = cfg.deform_config();
    let snaps = deform_surface(&data, &dc)?;
    let dir = &cfg.output.dir;
    ensure_dir(dir)?;
    let fmt = cfg.output.format;
    let mut snapshots = Vec::with_capacity(snaps.len());
    for s in snaps {
        let tag = format!("{:06}", s.step);
        let files = vec![
            write_table(dir, &format!("data_{tag}"), &data_table(&s.data), fmt)?,
            write_table(dir, &format!("surface_{tag}"), &surface_table(&s.surface), fmt)?,
            write_table(dir, &format!("spinor_{tag}"), &spinor_table(&s.dirac), fmt)?,
        ];
        snapshots.push(SnapshotSummary {
            monitor: FlowMonitor::new(s.step, s.time, &s.data.p, &s.data.q),
            dirac_residual: s.residual,
            files,
        });
    }
    let report =
        EvolveReport { convention: dc.convention, domain, dt: dc.flow.dt, steps: dc.flow.steps, snapshots };
    write_json(&dir.join("evolve.json"), &report)?;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportedFile {
    pub from: String,
    pub to: String,
    /// Column order of the written file.
    pub columns: Vec<String>,
}

/// Summary written to `export.json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportReport {
    pub format: Format,
    pub layout: String,
    pub files: Vec<ExportedFile>,
}

const LAYOUT: &str = "one row per grid point, x varying slowest; columns x, y, then Re/Im pairs per field";

/// Converts every table artifact in `dir` that is not already in `format`.
/// Reports are left alone. Writes `export.json`.
pub fn export(dir: &Path, format: Format) -> Result<ExportReport, RunError> {
    let source = format.other();
    let mut paths: Vec<PathBuf> = match fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| Format::from_path(p) == Some(source))
            .collect(),
        Err(_) => Vec::new(),
    };
    paths.sort();
    let mut files = Vec::new();
    for path in paths {
        let table = match Table::read(&path) {
            Ok(t) => t,
            Err(_) if source == Format::Json => continue, // a report, not a table
            Err(e) => return Err(e),
        };
        let target = path.with_extension(format.extension());
        table.write(&target, format)?;
        let name = |p: &Path| p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        files.push(ExportedFile { from: name(&path), to: name(&target), columns: table.columns });
    }
    if files.is_empty() {
        return Err(RunError::NoArtifacts(dir.display().to_string()));
    }
    let report = ExportReport { format, layout: LAYOUT.to_string(), files };
    write_json(&dir.join("export.json"), &report)?;
    Ok(report)
}
