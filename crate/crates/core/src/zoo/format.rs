//! JSON structure files.
//!
//! ```json
//! {
//!   "format": "entwine-structure/1",
//!   "field": "Q",
//!   "algebra": { "dim": 2, "labels": ["1", "g"],
//!                "mult": [[1, 1, 0, "1"], ...], "unit": ["1", "0"] },
//!   "coalgebra": { "dim": 2, "labels": ["1", "g"],
//!                  "comult": [[1, 1, 1, "1"], ...], "counit": ["1", "1"] },
//!   "psi": [[row, col, "1"], ...],
//!   "antipode": [[row, col, "1"], ...]
//! }
//! ```
//!
//! `mult` triples `[i, j, k, c]` mean `e_i e_j ∋ c e_k`; `comult` triples
//! mean `Δ(e_i) ∋ c e_j ⊗ e_k`. `psi` rows index `A⊗C`, columns `C⊗A`, both
//! flattened with the left factor most significant. The optional `antipode`
//! marks a Hopf algebra entwined with itself canonically; its translation map
//! is attached on load.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::algcoalg::{FiniteAlgebra, FiniteCoalgebra, LinearMap, Triple};
use crate::entwine::{EntwiningStructure, GaloisData};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};

use super::{self_entwining_map, translation_map, validate_hopf, Bialgebra, HopfAlgebra};

pub const FORMAT_TAG: &str = "entwine-structure/1";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileAlgebra {
    dim: usize,
    labels: Option<Vec<String>>,
    mult: Vec<(usize, usize, usize, String)>,
    unit: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileCoalgebra {
    dim: usize,
    labels: Option<Vec<String>>,
    comult: Vec<(usize, usize, usize, String)>,
    counit: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct File {
    format: String,
    field: String,
    algebra: FileAlgebra,
    coalgebra: FileCoalgebra,
    psi: Vec<(usize, usize, String)>,
    antipode: Option<Vec<(usize, usize, String)>>,
}

fn format_err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Format(format!("{path}: {msg}"))
}

fn coeff(field: FieldSpec, path: &str, s: &str) -> Result<Scalar> {
    Scalar::parse(field, s).map_err(|e| format_err(path, format!("bad coefficient {s:?} ({e})")))
}

fn labels_or_default(labels: Option<Vec<String>>, dim: usize, prefix: &str, path: &str) -> Result<Vec<String>> {
    match labels {
        Some(l) if l.len() != dim => Err(format_err(path, format!("{} labels for dim {dim}", l.len()))),
        Some(l) => Ok(l),
        None => Ok(crate::algcoalg::default_labels(prefix, dim)),
    }
}

fn triples(field: FieldSpec, path: &str, dim: usize, raw: &[(usize, usize, usize, String)]) -> Result<Vec<Triple>> {
    raw.iter()
        .enumerate()
        .map(|(n, (i, j, k, c))| {
            let p = format!("{path}[{n}]");
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(format_err(&p, format!("index out of range for dim {dim}")));
            }
            Ok((*i, *j, *k, coeff(field, &p, c)?))
        })
        .collect()
}

fn vector(field: FieldSpec, path: &str, dim: usize, raw: &[String]) -> Result<Vec<Scalar>> {
    if raw.len() != dim {
        return Err(format_err(path, format!("expected {dim} entries, found {}", raw.len())));
    }
    raw.iter().enumerate().map(|(n, c)| coeff(field, &format!("{path}[{n}]"), c)).collect()
}

fn square(field: FieldSpec, path: &str, dim: usize, raw: &[(usize, usize, String)]) -> Result<Matrix> {
    let mut entries = Vec::with_capacity(raw.len());
    for (n, (r, c, v)) in raw.iter().enumerate() {
        let p = format!("{path}[{n}]");
        if *r >= dim || *c >= dim {
            return Err(format_err(&p, format!("entry outside a {dim}x{dim} matrix")));
        }
        entries.push((*r, *c, coeff(field, &p, v)?));
    }
    Ok(Matrix::from_triplets(field, dim, dim, entries))
}

/// Parses a structure document without checking any axioms.
pub fn from_json_unvalidated(text: &str) -> Result<EntwiningStructure> {
    let file: File = serde_json::from_str(text).map_err(|e| Error::Format(format!("parse error: {e}")))?;
    if file.format != FORMAT_TAG {
        return Err(format_err("format", format!("expected {FORMAT_TAG:?}, found {:?}", file.format)));
    }
    let field: FieldSpec = file.field.parse().map_err(|e| format_err("field", e))?;
    let (da, dc) = (file.algebra.dim, file.coalgebra.dim);
    if da == 0 || dc == 0 {
        return Err(format_err("dim", "dimensions must be positive"));
    }
    let la = labels_or_default(file.algebra.labels, da, "a", "algebra.labels")?;
    let lc = labels_or_default(file.coalgebra.labels, dc, "c", "coalgebra.labels")?;
    let mult = triples(field, "algebra.mult", da, &file.algebra.mult)?;
    let unit = vector(field, "algebra.unit", da, &file.algebra.unit)?;
    let comult = triples(field, "coalgebra.comult", dc, &file.coalgebra.comult)?;
    let counit = vector(field, "coalgebra.counit", dc, &file.coalgebra.counit)?;
    let algebra = FiniteAlgebra::from_structure_constants(field, la, &mult, unit)?;
    let coalgebra = FiniteCoalgebra::from_structure_constants(field, lc, &comult, counit)?;
    let psi = square(field, "psi", da * dc, &file.psi)?;
    let psi = LinearMap::new(vec![dc, da], vec![da, dc], psi)?;
    let mut e = EntwiningStructure::new_unchecked(algebra, coalgebra, psi);
    if let Some(raw) = file.antipode {
        if da != dc {
            return Err(format_err("antipode", "only allowed when algebra and coalgebra share a space"));
        }
        let s = LinearMap::new(vec![da], vec![da], square(field, "antipode", da, &raw)?)?;
        let h = HopfAlgebra {
            bialgebra: Bialgebra { algebra: e.algebra().clone(), coalgebra: e.coalgebra().clone() },
            antipode: s,
        };
        let report = validate_hopf(&h);
        if !report.passed() {
            return Err(Error::Validation { what: "Hopf algebra".into(), failed: report.failure_summary() });
        }
        if self_entwining_map(&h.bialgebra) != *e.psi() {
            return Err(format_err("antipode", "psi is not the canonical self-entwining of this Hopf algebra"));
        }
        let tau = translation_map(&h)?;
        e = e.with_galois(GaloisData {
            translation: tau,
            coaction: h.coalgebra().comult().clone(),
            antipode: Some(h.antipode.clone()),
        });
    }
    Ok(e)
}

/// Parses and fully validates (algebra, coalgebra, bow-tie).
pub fn from_json(text: &str) -> Result<EntwiningStructure> {
    let e = from_json_unvalidated(text)?;
    let galois = e.galois().cloned();
    let e = EntwiningStructure::new(e.algebra().clone(), e.coalgebra().clone(), e.psi().clone())?;
    Ok(match galois {
        Some(g) => e.with_galois(g),
        None => e,
    })
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn push_entries(out: &mut String, key: &str, rows: &[String], last: bool) {
    if rows.is_empty() {
        let _ = write!(out, "    \"{key}\": []");
    } else {
        let _ = writeln!(out, "    \"{key}\": [");
        for (n, r) in rows.iter().enumerate() {
            let sep = if n + 1 == rows.len() { "" } else { "," };
            let _ = writeln!(out, "      {r}{sep}");
        }
        let _ = write!(out, "    ]");
    }
    out.push_str(if last { "\n" } else { ",\n" });
}

fn scalar_list(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| quote(&s.to_string())).collect();
    format!("[{}]", parts.join(", "))
}

fn label_list(v: &[String]) -> String {
    let parts: Vec<String> = v.iter().map(|s| quote(s)).collect();
    format!("[{}]", parts.join(", "))
}

fn matrix_rows(m: &Matrix) -> Vec<String> {
    m.entries().map(|(r, c, v)| format!("[{r}, {c}, {}]", quote(&v.to_string()))).collect()
}

/// Canonical serialization: sorted entries, normalized coefficients.
pub fn to_json(e: &EntwiningStructure) -> String {
    let antipode = e.galois().and_then(|g| g.antipode.as_ref());
    let a = e.algebra();
    let c = e.coalgebra();
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"format\": {},", quote(FORMAT_TAG));
    let _ = writeln!(out, "  \"field\": {},", quote(&e.field().to_string()));
    out.push_str("  \"algebra\": {\n");
    let _ = writeln!(out, "    \"dim\": {},", a.dim());
    let _ = writeln!(out, "    \"labels\": {},", label_list(a.labels()));
    let mult: Vec<String> = a
        .triples()
        .iter()
        .map(|(i, j, k, v)| format!("[{i}, {j}, {k}, {}]", quote(&v.to_string())))
        .collect();
    push_entries(&mut out, "mult", &mult, false);
    let _ = writeln!(out, "    \"unit\": {}", scalar_list(&a.unit()));
    out.push_str("  },\n  \"coalgebra\": {\n");
    let _ = writeln!(out, "    \"dim\": {},", c.dim());
    let _ = writeln!(out, "    \"labels\": {},", label_list(c.labels()));
    let comult: Vec<String> = c
        .triples()
        .iter()
        .map(|(i, j, k, v)| format!("[{i}, {j}, {k}, {}]", quote(&v.to_string())))
        .collect();
    push_entries(&mut out, "comult", &comult, false);
    let _ = writeln!(out, "    \"counit\": {}", scalar_list(&c.counit()));
    out.push_str("  },\n");
    let psi = matrix_rows(e.psi().matrix());
    let body = psi.iter().map(|r| format!("    {r}")).collect::<Vec<_>>().join(",\n");
    let _ = write!(out, "  \"psi\": [\n{body}\n  ]");
    if let Some(s) = antipode {
        let rows = matrix_rows(s.matrix());
        let body = rows.iter().map(|r| format!("    {r}")).collect::<Vec<_>>().join(",\n");
        let _ = write!(out, ",\n  \"antipode\": [\n{body}\n  ]");
    }
    out.push_str("\n}\n");
    out
}

pub fn save(e: &EntwiningStructure, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_json(e)).map_err(|err| Error::Format(format!("{}: {err}", path.display())))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|err| Error::Format(format!("{}: {err}", path.display())))
}

pub fn load(path: impl AsRef<Path>) -> Result<EntwiningStructure> {
    let path = path.as_ref();
    from_json(&read(path)?).map_err(|err| match err {
        Error::Format(m) => Error::Format(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn load_unvalidated(path: impl AsRef<Path>) -> Result<EntwiningStructure> {
    let path = path.as_ref();
    from_json_unvalidated(&read(path)?).map_err(|err| match err {
        Error::Format(m) => Error::Format(format!("{}: {m}", path.display())),
        other => other,
    })
}
