//! Coefficient modules for `cohom --values FILE`.
//!
//! ```json
//! { "format": "entwine-module/1", "kind": "bimodule", "dim": 2,
//!   "left": [[row, col, "1"], ...], "right": [[row, col, "1"], ...] }
//! ```
//!
//! Entries are matrix entries of the action maps `A⊗M → M`, `M⊗A → M`
//! (or coactions `V → C⊗V`, `V → V⊗C`), tensor factors flattened with the
//! left one most significant.

use entwine::algcoalg::{default_labels, Bicomodule, Bimodule};
use entwine::entwine::EntwiningStructure;
use entwine::exactla::{Matrix, Scalar};
use entwine::Error;
use serde::Deserialize;

pub const MODULE_FORMAT: &str = "entwine-module/1";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    format: String,
    kind: String,
    dim: usize,
    labels: Option<Vec<String>>,
    left: Vec<(usize, usize, String)>,
    right: Vec<(usize, usize, String)>,
}

pub enum Coefficients {
    Bimodule(Bimodule),
    Bicomodule(Bicomodule),
}

fn matrix(e: &EntwiningStructure, what: &str, rows: usize, cols: usize, entries: &[(usize, usize, String)]) -> Result<Matrix, Error> {
    let mut trip = Vec::new();
    for (i, (r, c, v)) in entries.iter().enumerate() {
        if *r >= rows || *c >= cols {
            return Err(Error::Format(format!("{what}[{i}]: ({r},{c}) outside {rows}x{cols}")));
        }
        let x = Scalar::parse(e.field(), v).map_err(|err| Error::Format(format!("{what}[{i}]: {err}")))?;
        trip.push((*r, *c, x));
    }
    Ok(Matrix::from_triplets(e.field(), rows, cols, trip))
}

pub fn parse_module(e: &EntwiningStructure, text: &str) -> Result<Coefficients, Error> {
    let f: ModuleFile = serde_json::from_str(text).map_err(|err| Error::Format(format!("parse error: {err}")))?;
    if f.format != MODULE_FORMAT {
        return Err(Error::Format(format!("format: expected \"{MODULE_FORMAT}\", found \"{}\"", f.format)));
    }
    let labels = f.labels.unwrap_or_else(|| default_labels("m", f.dim));
    if labels.len() != f.dim {
        return Err(Error::Format(format!("labels: {} labels for dimension {}", labels.len(), f.dim)));
    }
    let n = f.dim;
    match f.kind.as_str() {
        "bimodule" => {
            let a = e.dim_a();
            let left = matrix(e, "left", n, a * n, &f.left)?;
            let right = matrix(e, "right", n, n * a, &f.right)?;
            Ok(Coefficients::Bimodule(Bimodule::new(labels, left, right)?))
        }
        "bicomodule" => {
            let c = e.dim_c();
            let left = matrix(e, "left", c * n, n, &f.left)?;
            let right = matrix(e, "right", n * c, n, &f.right)?;
            Ok(Coefficients::Bicomodule(Bicomodule::new(labels, left, right)?))
        }
        other => Err(Error::Format(format!("kind: expected \"bimodule\" or \"bicomodule\", found \"{other}\""))),
    }
}
