//! State files: `{"dim": 4, "matrix": [[[re, im], ...], ...]}`, row-major
//! with every entry written out. Hermiticity is checked on load, never
//! assumed.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use spa_singlet::states::{validate, DensityMatrix};
use spa_singlet::{CMatrix, C64};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dim: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl StateFile {
    pub fn from_matrix(m: &CMatrix) -> Self {
        Self {
            dim: m.dim(),
            matrix: m
                .rows()
                .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> CliResult<CMatrix> {
        if self.matrix.len() != self.dim {
            return Err(CliError::Shape(format!(
                "dim is {} but the matrix has {} rows",
                self.dim,
                self.matrix.len()
            )));
        }
        let mut data = Vec::with_capacity(self.dim * self.dim);
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != self.dim {
                return Err(CliError::Shape(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    self.dim
                )));
            }
            data.extend(row.iter().map(|[re, im]| C64::new(*re, *im)));
        }
        Ok(CMatrix::from_row_major(self.dim, data)?)
    }

    /// Stable layout: one matrix row per line, shortest round-trip floats,
    /// `-0` written as `0`.
    pub fn to_json(&self) -> String {
        let num = |x: f64| serde_json::to_string(&(x + 0.0)).expect("finite entry");
        let mut out = format!("{{\n  \"dim\": {},\n  \"matrix\": [\n", self.dim);
        for (i, row) in self.matrix.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|[re, im]| format!("[{}, {}]", num(*re), num(*im)))
                .collect();
            let sep = if i + 1 < self.matrix.len() { "," } else { "" };
            let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// SHA-256 of the raw file bytes, lowercase hex.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn parse_state_str(text: &str) -> CliResult<DensityMatrix> {
    let file: StateFile = serde_json::from_str(text)?;
    Ok(validate(file.to_matrix()?)?)
}

/// Loaded state together with the digest of the bytes it came from.
#[derive(Debug, Clone)]
pub struct LoadedState {
    pub state: DensityMatrix,
    pub sha256: String,
}

pub fn parse_state_file(path: &Path) -> CliResult<LoadedState> {
    let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
    let text =
        std::str::from_utf8(&bytes).map_err(|e| CliError::Shape(format!("not UTF-8: {e}")))?;
    Ok(LoadedState {
        state: parse_state_str(text)?,
        sha256: digest(&bytes),
    })
}

pub fn render_state(rho: &DensityMatrix) -> String {
    StateFile::from_matrix(rho.matrix()).to_json()
}
