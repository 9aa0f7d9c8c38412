//! Column tables of grid data, stored as JSON or CSV.
//!
//! JSON layout: `{"columns": [...], "rows": [[...], ...]}`. CSV layout: a
//! header line with the column names followed by one line per row. Both use
//! shortest round-trip float formatting.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Format, RunError};
use crate::grid::{Field, GridDomain};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    /// Rows `x, y, Re f0, Im f0, ...` over the grid, `x` varying slowest.
    pub fn from_fields(domain: &GridDomain, names: &[&str], fields: &[&Field]) -> Self {
        let mut columns = vec!["x".to_string(), "y".to_string()];
        for n in names {
            columns.push(format!("Re{n}"));
            columns.push(format!("Im{n}"));
        }
        let mut rows = Vec::with_capacity(domain.nx * domain.ny);
        for i in 0..domain.nx {
            for j in 0..domain.ny {
                let mut row = vec![domain.xi(i), domain.yj(j)];
                for f in fields {
                    let v = f[[i, j]];
                    row.push(v.re);
                    row.push(v.im);
                }
                rows.push(row);
            }
        }
        Self { columns, rows }
    }

    /// Reads the complex column pair `Re{name}, Im{name}` back into a field.
    pub fn field(&self, domain: &GridDomain, name: &str) -> Result<Field, RunError> {
        let col = |c: String| {
            self.columns.iter().position(|n| *n == c).ok_or(RunError::MissingColumn(c))
        };
        let (re, im) = (col(format!("Re{name}"))?, col(format!("Im{name}"))?);
        if self.rows.len() != domain.nx * domain.ny {
            return Err(RunError::TableShape { expected: domain.nx * domain.ny, got: self.rows.len() });
        }
        let mut f = domain.zeros();
        for (k, row) in self.rows.iter().enumerate() {
            if row.len() != self.columns.len() {
                return Err(RunError::RowWidth { row: k });
            }
            f[[k / domain.ny, k % domain.ny]] = Complex64::new(row[re], row[im]);
        }
        Ok(f)
    }

    pub fn to_csv(&self) -> Result<String, RunError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| RunError::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn from_csv(text: &str) -> Result<Self, RunError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let columns = r.headers()?.iter().map(str::to_string).collect::<Vec<_>>();
        let mut rows = Vec::new();
        for (k, rec) in r.records().enumerate() {
            let row = rec?
                .iter()
                .map(|s| s.trim().parse::<f64>().map_err(|_| RunError::BadNumber { row: k, text: s.to_string() }))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != columns.len() {
                return Err(RunError::RowWidth { row: k });
            }
            rows.push(row);
        }
        Ok(Self { columns, rows })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("finite table")
    }

    pub fn from_json(text: &str) -> Result<Self, RunError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write(&self, path: &Path, format: Format) -> Result<(), RunError> {
        let text = match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv()?,
        };
        fs::write(path, text).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))
    }

    /// Reads a table, choosing the format from the file extension.
    pub fn read(path: &Path) -> Result<Self, RunError> {
        let text = fs::read_to_string(path).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
        match Format::from_path(path) {
            Some(Format::Csv) => Self::from_csv(&text),
            Some(Format::Json) => Self::from_json(&text),
            None => Err(RunError::UnknownFormat(path.display().to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_roundtrip_is_exact() {
        let t = Table {
            columns: vec!["x".into(), "ReX0".into()],
            rows: vec![vec![0.1, 1.0 / 3.0], vec![-2.5e-300, std::f64::consts::PI], vec![1e21, -0.0]],
        };
        let back = Table::from_csv(&t.to_csv().unwrap()).unwrap();
        assert_eq!(back, t);
        let back = Table::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn fields_roundtrip() {
        let d = GridDomain::new([0.0, 1.0], [0.0, 2.0], 8, 9, false).unwrap();
        let f = d.sample(|z| z * z + Complex64::i());
        let t = Table::from_fields(&d, &["f"], &[&f]);
        assert_eq!(t.columns, ["x", "y", "Ref", "Imf"]);
        assert_eq!(t.field(&d, "f").unwrap(), f);
        assert!(matches!(t.field(&d, "g"), Err(RunError::MissingColumn(_))));
    }
}
