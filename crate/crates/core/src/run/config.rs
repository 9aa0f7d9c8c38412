use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::expr::Expr;
use super::table::Table;
use super::{Format, RunError};
use crate::dsii::{DeformConfig, FlowConfig, DEFAULT_CFL_CONSTANT};
use crate::grid::GridDomain;
use crate::matrix_rep::ComplexMatrix;
use crate::weierstrass::{SignConvention, WeierstrassData};

/// Everything a run needs, read from a TOML file. Every section and key is
/// optional; see the field defaults.
///
/// ```toml
/// [domain]
/// x = [0.0, 6.283185307179586]
/// y = [0.0, 6.283185307179586]
/// nx = 32
/// ny = 32
/// periodic = true
///
/// [data]            # expressions in z, zbar, x, y; or file = "data.csv"
/// p = "0"
/// q = "0"
/// psi1 = "1"
/// psi2 = "1"
/// phi1 = "1"
/// phi2 = "1"
///
/// [surface]
/// convention = "conformal"   # or "literal-paper"
/// base = [0, 0]
///
/// [flow]
/// dt = 5e-4
/// steps = 100
/// snapshot_stride = 10
/// dealias = true
/// cfl_constant = 0.1
///
/// [verify]
/// seed = 0
/// samples = 100
///
/// [output]
/// dir = "out"
/// format = "json"
/// ```
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub domain: DomainConfig,
    pub data: DataConfig,
    pub surface: SurfaceConfig,
    pub flow: FlowSection,
    pub verify: VerifyConfig,
    pub output: OutputConfig,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, RunError> {
        toml::from_str(text).map_err(|e| RunError::Config(e.to_string()))
    }

    /// Reads a config file; a relative `data.file` is resolved against the
    /// directory of the config.
    pub fn load(path: &Path) -> Result<Self, RunError> {
        let text = std::fs::read_to_string(path).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
        let mut cfg = Self::from_toml(&text)?;
        if let (Some(file), Some(dir)) = (&cfg.data.file, path.parent()) {
            if file.is_relative() {
                cfg.data.file = Some(dir.join(file));
            }
        }
        Ok(cfg)
    }

    pub fn deform_config(&self) -> DeformConfig {
        DeformConfig {
            flow: self.flow.flow_config(),
            snapshot_stride: self.flow.snapshot_stride,
            convention: self.surface.convention,
            base: (self.surface.base[0], self.surface.base[1]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DomainConfig {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub nx: usize,
    pub ny: usize,
    pub periodic: bool,
}

impl Default for DomainConfig {
    fn default() -> Self {
        let tau = 2.0 * std::f64::consts::PI;
        Self { x: [0.0, tau], y: [0.0, tau], nx: 32, ny: 32, periodic: true }
    }
}

impl DomainConfig {
    pub fn grid(&self) -> Result<GridDomain, RunError> {
        Ok(GridDomain::new(self.x, self.y, self.nx, self.ny, self.periodic)?)
    }
}

/// Initial data: six expressions, or a table file with complex columns
/// `p, q, psi1, psi2, phi1, phi2` (as `Rep, Imp, ...`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DataConfig {
    pub p: String,
    pub q: String,
    pub psi1: String,
    pub psi2: String,
    pub phi1: String,
    pub phi2: String,
    pub file: Option<PathBuf>,
}

impl Default for DataConfig {
    fn default() -> Self {
        let s = |v: &str| v.to_string();
        Self { p: s("0"), q: s("0"), psi1: s("1"), psi2: s("1"), phi1: s("1"), phi2: s("1"), file: None }
    }
}

pub(crate) const DATA_FIELDS: [&str; 6] = ["p", "q", "psi1", "psi2", "phi1", "phi2"];

impl DataConfig {
    fn expressions(&self) -> [(&'static str, &str); 6] {
        [
            ("p", &self.p),
            ("q", &self.q),
            ("psi1", &self.psi1),
            ("psi2", &self.psi2),
            ("phi1", &self.phi1),
            ("phi2", &self.phi2),
        ]
    }

    pub fn build(&self, domain: GridDomain) -> Result<WeierstrassData, RunError> {
        let mut fields = Vec::with_capacity(6);
        if let Some(path) = &self.file {
            let table = Table::read(path)?;
            for name in DATA_FIELDS {
                fields.push(table.field(&domain, name)?);
            }
        } else {
            for (name, src) in self.expressions() {
                let e = Expr::parse(src).map_err(|source| RunError::Expr { field: name.to_string(), source })?;
                fields.push(domain.sample(|z| e.eval(z)));
            }
        }
        let mut it = fields.into_iter();
        let mut next = || it.next().expect("six fields");
        let (p, q) = (next(), next());
        let psi = [next(), next()];
        let phi = [next(), next()];
        Ok(WeierstrassData::new(domain, p, q, psi, phi)?)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SurfaceConfig {
    pub convention: SignConvention,
    pub base: [usize; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FlowSection {
    pub dt: f64,
    pub steps: usize,
    pub snapshot_stride: usize,
    pub dealias: bool,
    pub cfl_constant: f64,
}

impl Default for FlowSection {
    fn default() -> Self {
        Self { dt: 5e-4, steps: 100, snapshot_stride: 10, dealias: true, cfl_constant: DEFAULT_CFL_CONSTANT }
    }
}

impl FlowSection {
    pub fn flow_config(&self) -> FlowConfig {
        FlowConfig { dt: self.dt, steps: self.steps, dealias: self.dealias, cfl_constant: self.cfl_constant }
    }
}

/// Replacement for one generator matrix of the representation suite, given
/// as rows of `[re, im]` pairs. Used to check that a broken fixture is caught.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaOverride {
    pub index: usize,
    pub rows: Vec<Vec<[f64; 2]>>,
}

impl GammaOverride {
    pub fn matrix(&self) -> Result<ComplexMatrix, RunError> {
        let rows: Vec<Vec<num_complex::Complex64>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|[re, im]| num_complex::Complex64::new(*re, *im)).collect())
            .collect();
        Ok(ComplexMatrix::from_rows(&rows)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random instances per randomized identity.
    pub samples: usize,
    pub gamma_override: Option<GammaOverride>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: 0, samples: 100, gamma_override: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub dir: PathBuf,
    pub format: Format,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self { dir: PathBuf::from("out"), format: Format::Json }
    }
}
