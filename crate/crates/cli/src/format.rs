//! JSON interchange formats, all tagged `format_version: "1"`.
//!
//! Complex entries are `[re, im]` pairs and matrices are row-major arrays of
//! rows. Floats are written with the shortest representation that parses
//! back to the same `f64`.

use std::fs;
use std::io::Read;
use std::path::Path;

use gsm_core::{Complex64, ComplexMatrix, DensityMatrix, HermitianOperator};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: &str = "1";

pub type Entry = [f64; 2];
pub type Rows = Vec<Vec<Entry>>;

/// A measurement: `operators[α][k]` is the `d×d` matrix of `E_{α,k}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasurementFile {
    pub format_version: String,
    pub d: usize,
    pub block_sizes: Vec<usize>,
    pub operators: Vec<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub basis: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub t: Vec<f64>,
}

/// An ordered list of traceless orthonormal operators, partitioned in order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisFile {
    pub format_version: String,
    pub d: usize,
    pub operators: Vec<Rows>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    #[serde(default = "default_version")]
    pub format_version: String,
    pub d: usize,
    pub matrix: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

fn default_version() -> String {
    FORMAT_VERSION.to_string()
}

#[derive(Clone, Debug)]
pub struct StateRecord {
    pub label: Option<String>,
    pub rho: DensityMatrix,
}

pub fn encode_matrix(m: &ComplexMatrix) -> Rows {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

pub fn decode_matrix(rows: &Rows, d: usize, what: &str) -> Result<ComplexMatrix, CliError> {
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        return Err(CliError::Parse(format!(
            "{what}: expected a {d}x{d} matrix"
        )));
    }
    let data: Vec<Complex64> = rows
        .iter()
        .flatten()
        .map(|e| Complex64::new(e[0], e[1]))
        .collect();
    ComplexMatrix::new(d, d, data).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

fn check_version(v: &str) -> Result<(), CliError> {
    if v != FORMAT_VERSION {
        return Err(CliError::Parse(format!(
            "unsupported format_version {v:?} (expected {FORMAT_VERSION:?})"
        )));
    }
    Ok(())
}

impl MeasurementFile {
    pub fn from_blocks(
        d: usize,
        blocks: &[Vec<HermitianOperator>],
        provenance: Option<Provenance>,
    ) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            d,
            block_sizes: blocks.iter().map(Vec::len).collect(),
            operators: blocks
                .iter()
                .map(|b| b.iter().map(|e| encode_matrix(e.matrix())).collect())
                .collect(),
            provenance,
        }
    }

    /// Structural checks only; the symmetry conditions are left to `verify`.
    /// Non-Hermitian entries are reported as [`CliError::Invalid`].
    pub fn to_blocks(&self) -> Result<Vec<Vec<HermitianOperator>>, CliError> {
        check_version(&self.format_version)?;
        if self.operators.is_empty() {
            return Err(CliError::Parse("measurement has no POVMs".into()));
        }
        let sizes: Vec<usize> = self.operators.iter().map(Vec::len).collect();
        if sizes.contains(&0) {
            return Err(CliError::Parse("measurement contains an empty POVM".into()));
        }
        if sizes != self.block_sizes {
            return Err(CliError::Parse(format!(
                "block_sizes {:?} do not match the operators given {sizes:?}",
                self.block_sizes
            )));
        }
        self.operators
            .iter()
            .enumerate()
            .map(|(alpha, block)| {
                block
                    .iter()
                    .enumerate()
                    .map(|(k, rows)| {
                        let m = decode_matrix(rows, self.d, &format!("E[{alpha}][{k}]"))?;
                        HermitianOperator::new(m)
                            .map_err(|e| CliError::Invalid(format!("E[{alpha}][{k}]: {e}")))
                    })
                    .collect()
            })
            .collect()
    }
}

impl BasisFile {
    pub fn from_operators(d: usize, ops: &[HermitianOperator]) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            d,
            operators: ops.iter().map(|g| encode_matrix(g.matrix())).collect(),
        }
    }

    pub fn to_operators(&self) -> Result<Vec<HermitianOperator>, CliError> {
        check_version(&self.format_version)?;
        self.operators
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                let m = decode_matrix(rows, self.d, &format!("basis operator {i}"))?;
                HermitianOperator::new(m)
                    .map_err(|e| CliError::Parse(format!("basis operator {i}: {e}")))
            })
            .collect()
    }
}

impl StateFile {
    pub fn from_state(rho: &DensityMatrix, label: Option<String>) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            d: rho.dim(),
            matrix: encode_matrix(rho.matrix()),
            label,
        }
    }

    pub fn to_record(&self, index: usize) -> Result<StateRecord, CliError> {
        check_version(&self.format_version)?;
        let m = decode_matrix(&self.matrix, self.d, &format!("state {index}"))?;
        let rho = DensityMatrix::from_matrix(m)
            .map_err(|e| CliError::Parse(format!("state {index}: {e}")))?;
        Ok(StateRecord {
            label: self.label.clone(),
            rho,
        })
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

pub fn load_measurement(path: &Path) -> Result<MeasurementFile, CliError> {
    parse_json(&read_text(path)?, &path.display().to_string())
}

pub fn load_basis(path: &Path) -> Result<BasisFile, CliError> {
    parse_json(&read_text(path)?, &path.display().to_string())
}

/// Accepts a JSON array of states, a single state, or one state per line.
pub fn parse_states(text: &str) -> Result<Vec<StateRecord>, CliError> {
    let files: Vec<StateFile> = if text.trim_start().starts_with('[') {
        parse_json(text, "states")?
    } else {
        serde_json::Deserializer::from_str(text)
            .into_iter::<StateFile>()
            .enumerate()
            .map(|(i, r)| r.map_err(|e| CliError::Parse(format!("state {i}: {e}"))))
            .collect::<Result<_, _>>()?
    };
    if files.is_empty() {
        return Err(CliError::Parse("no states given".into()));
    }
    files
        .iter()
        .enumerate()
        .map(|(i, f)| f.to_record(i))
        .collect()
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
