//! WebAssembly bindings for the browser demo.
//!
//! Every exported function takes a graph in the text or JSON format and
//! returns a JSON report as a string; failures are reported as
//! `{"error": "..."}` so the page only ever has to parse JSON.

use coxeter_perp::finite_part::finite_part;
use coxeter_perp::presentation::centralizer_report;
use coxeter_perp::reflindep::check_group;
use coxeter_perp::{report, CoxeterGraph, Result, Vertex};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(result: Result<Value>) -> String {
    let value = result.unwrap_or_else(|e| json!({ "error": e.to_string() }));
    report::to_string(&value)
}

fn at_vertex(graph: &str, x: &str) -> Result<(CoxeterGraph, Vertex)> {
    let g = CoxeterGraph::parse(graph)?;
    let v = g.vertex(x.trim())?;
    Ok((g, v))
}

/// The Coxeter presentation of `W^⊥x`.
#[wasm_bindgen]
pub fn perp(graph: &str, x: &str) -> String {
    respond(at_vertex(graph, x).and_then(|(g, v)| Ok(report::perp_json(&g, &centralizer_report(&g, v)?))))
}

/// The finite part of `W^⊥x`, with the hypotheses that were checked.
#[wasm_bindgen]
pub fn finpart(graph: &str, x: &str) -> String {
    respond(at_vertex(graph, x).and_then(|(g, v)| Ok(report::finpart_json(&g, &finite_part(&g, v)?))))
}

/// Sufficient conditions for reflection independence.
#[wasm_bindgen]
pub fn reflindep(graph: &str) -> String {
    respond(CoxeterGraph::parse(graph).and_then(|g| Ok(report::reflindep_json(&g, &check_group(&g)?))))
}

/// Vertex names of a graph, as a JSON array (for the page's vertex picker).
#[wasm_bindgen]
pub fn vertices(graph: &str) -> String {
    respond(CoxeterGraph::parse(graph).map(|g| json!(g.names())))
}
