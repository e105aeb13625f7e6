//! Browser bindings. Every entry point takes a structure as JSON text (the
//! same format the CLI reads) and returns a JSON string for the page to render.

use entwine::compalg::Side;
use entwine::complexes::{betti_numbers, build_apsi_cv, build_cpsi_am};
use entwine::deform::{build_ch, total_cohomology};
use entwine::entwine::{full_report, EntwiningStructure};
use entwine::exactla::FieldSpec;
use entwine::zoo::{example, from_json, from_json_unvalidated, to_json};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

pub const EXAMPLES: [&str; 7] = ["k", "z2", "z3", "sweedler", "graded-z2", "trivial-z2", "corrupted-z2"];

/// Largest cochain degree the page will compute; sweedler in degree 3 is
/// already a 4096-dimensional space.
pub const MAX_DEGREE: usize = 3;

fn parse(text: &str) -> Result<EntwiningStructure, String> {
    from_json(text).map_err(|e| e.to_string())
}

pub fn example_text(name: &str) -> Result<String, String> {
    example(name, FieldSpec::Rationals).map(|e| to_json(&e)).map_err(|e| e.to_string())
}

pub fn verify_value(text: &str) -> Result<Value, String> {
    let e = from_json_unvalidated(text).map_err(|e| e.to_string())?;
    let r = full_report(&e, 2);
    Ok(json!({ "passed": r.passed(), "checks": r.checks }))
}

pub fn cohomology_value(text: &str, side: &str, max_degree: usize) -> Result<Value, String> {
    if !(1..=MAX_DEGREE).contains(&max_degree) {
        return Err(format!("degree must be between 1 and {MAX_DEGREE}"));
    }
    let e = parse(text)?;
    let side: Side = side.parse().map_err(|e: entwine::Error| e.to_string())?;
    let cx = match side {
        Side::Algebra => build_cpsi_am(&e, &e.algebra().regular_bimodule(), max_degree + 1),
        Side::Coalgebra => build_apsi_cv(&e, &e.coalgebra().regular_bicomodule(), max_degree + 1),
    }
    .map_err(|e| e.to_string())?;
    let betti = betti_numbers(&cx).map_err(|e| e.to_string())?;
    let dims: Vec<usize> = (0..=max_degree).map(|n| cx.space_dim(n)).collect();
    Ok(json!({ "side": side.to_string(), "dims": dims, "betti": betti }))
}

pub fn deformation_value(text: &str) -> Result<Value, String> {
    let e = parse(text)?;
    let tc = build_ch(&e, MAX_DEGREE).map_err(|e| e.to_string())?;
    let betti = (0..MAX_DEGREE)
        .map(|n| total_cohomology(&tc, n).map(|h| h.betti))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let dims: Vec<usize> = (0..=MAX_DEGREE).map(|n| tc.space_dim(n)).collect();
    Ok(json!({ "dims": dims, "betti": betti, "infinitesimal_classes": betti[2] }))
}

fn out(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = exampleNames)]
pub fn example_names() -> String {
    json!(EXAMPLES).to_string()
}

#[wasm_bindgen(js_name = exampleJson)]
pub fn example_json(name: &str) -> Result<String, JsError> {
    example_text(name).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(text: &str) -> Result<String, JsError> {
    out(verify_value(text))
}

#[wasm_bindgen]
pub fn cohomology(text: &str, side: &str, max_degree: usize) -> Result<String, JsError> {
    out(cohomology_value(text, side, max_degree))
}

#[wasm_bindgen]
pub fn deformations(text: &str) -> Result<String, JsError> {
    out(deformation_value(text))
}
