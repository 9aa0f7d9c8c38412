//! Run configuration, artifact tables and the commands behind the `wdirac`
//! binary: `verify`, `build-surface`, `evolve` and `export`.

mod commands;
mod config;
mod expr;
mod table;
mod verify;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsii::FlowError;
use crate::grid::GridError;
use crate::matrix_rep::MatrixError;
use crate::weierstrass::WeierstrassError;

pub use commands::{
    build_surface, evolve, export, BuildReport, EvolveReport, ExportReport, ExportedFile, SnapshotSummary,
};
pub use config::{DataConfig, DomainConfig, FlowSection, GammaOverride, OutputConfig, RunConfig, SurfaceConfig, VerifyConfig};
pub use expr::{Expr, ExprError};
pub use table::Table;
pub use verify::{verify, Check, Suite, VerifyReport};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("config: {0}")]
    Config(String),
    #[error("expression for {field}: {source}")]
    Expr { field: String, source: ExprError },
    #[error("{0}")]
    Io(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(String),
    #[error("table has no column {0:?}")]
    MissingColumn(String),
    #[error("table has {got} rows, grid needs {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("row {row} has the wrong number of values")]
    RowWidth { row: usize },
    #[error("row {row}: cannot parse {text:?} as a number")]
    BadNumber { row: usize, text: String },
    #[error("cannot tell the format of {0} from its extension")]
    UnknownFormat(String),
    #[error("no artifacts in {0}")]
    NoArtifacts(String),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

impl From<csv::Error> for RunError {
    fn from(e: csv::Error) -> Self {
        RunError::Csv(e.to_string())
    }
}

/// Artifact file format.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }

    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            _ => None,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Format::Json => Format::Csv,
            Format::Csv => Format::Json,
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (expected json or csv)")),
        }
    }
}

pub(crate) fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), RunError> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").map_err(|e| RunError::Io(format!("{}: {e}", path.display())))
}
