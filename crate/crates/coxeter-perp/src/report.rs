//! Deterministic JSON and text renderings of every analysis.
//!
//! JSON objects use sorted keys, `∞` is the string `"inf"`, and roots are
//! maps from vertex name to coordinate, rounded to 12 significant digits with
//! zero coordinates omitted.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::crosscheck::Crosscheck;
use crate::finite_part::{FinKind, FinitePartReport};
use crate::graph::{cycle_analysis, CoxeterGraph, CoxeterMatrix, Label, VertexSet};
use crate::oracle::{GroupWord, OraclePerp};
use crate::presentation::{CentralizerReport, EdgePair, PairClass, PerpResult};
use crate::reflindep::RIVerdict;
use crate::types::{component_types, finite_part_types, is_finite_group, set_component_types};

/// Round to 12 significant digits.
pub fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return 0.0;
    }
    let r: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// A root as a sorted map from vertex name to coordinate.
pub fn root_json(g: &CoxeterGraph, root: &[f64]) -> Value {
    let mut m = Map::new();
    for (i, &c) in root.iter().enumerate() {
        if c.abs() > 1e-12 {
            m.insert(g.name(i).to_string(), json!(round_sig(c)));
        }
    }
    Value::Object(m)
}

fn names(g: &CoxeterGraph, set: &VertexSet) -> Value {
    json!(g.set_names(set))
}

fn word_json(g: &CoxeterGraph, w: &GroupWord) -> Value {
    json!(w.iter().map(|&v| g.name(v)).collect::<Vec<_>>())
}

fn pair_json(g: &CoxeterGraph, p: EdgePair) -> Value {
    json!([g.name(p.y), g.name(p.s)])
}

fn matrix_json(m: &CoxeterMatrix) -> Value {
    json!(m.rows())
}

fn types_json<T: ToString>(types: &[T]) -> Value {
    json!(types.iter().map(ToString::to_string).collect::<Vec<_>>())
}

/// Serialize with a trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

// ----- analyze ---------------------------------------------------------------

pub fn analyze_json(g: &CoxeterGraph) -> Value {
    let all: VertexSet = g.vertices().collect();
    let components: Vec<Value> = set_component_types(g, &all)
        .into_iter()
        .map(|(set, ty)| json!({"vertices": names(g, &set), "type": ty.to_string()}))
        .collect();
    let odd: Vec<Value> = g
        .odd_components()
        .iter()
        .map(|c| {
            let info = cycle_analysis(g, c);
            json!({"vertices": names(g, c), "cycle_rank": info.cycle_rank})
        })
        .collect();
    json!({
        "graph": g.to_json_value(),
        "components": components,
        "odd_components": odd,
        "finite": is_finite_group(g),
        "two_spherical": g.is_two_spherical(),
        "odd_connected": g.is_odd_connected(&all),
    })
}

/// DOT rendering of Γ (labels ≥ 3, label 3 left implicit) or of Γ^odd.
pub fn dot(g: &CoxeterGraph, odd_only: bool) -> String {
    let mut out = format!("graph {} {{\n", if odd_only { "odd" } else { "coxeter" });
    for v in g.vertices() {
        let _ = writeln!(out, "  \"{}\";", g.name(v));
    }
    for (a, b, m) in g.edges() {
        if odd_only && !m.is_odd() {
            continue;
        }
        let attr = if m == Label::Finite(3) {
            String::new()
        } else {
            format!(" [label=\"{m}\"]")
        };
        let _ = writeln!(out, "  \"{}\" -- \"{}\"{attr};", g.name(a), g.name(b));
    }
    out.push_str("}\n");
    out
}

pub fn analyze_text(g: &CoxeterGraph) -> String {
    let all: VertexSet = g.vertices().collect();
    let mut out = String::new();
    let _ = writeln!(out, "vertices: {}", g.names().join(" "));
    for (set, ty) in set_component_types(g, &all) {
        let _ = writeln!(out, "component {{{}}}: {ty}", g.set_names(&set).join(", "));
    }
    for c in g.odd_components() {
        let rank = cycle_analysis(g, &c).cycle_rank;
        let _ = writeln!(out, "odd component {{{}}}: cycle rank {rank}", g.set_names(&c).join(", "));
    }
    let _ = writeln!(out, "finite: {}", is_finite_group(g));
    let _ = writeln!(out, "2-spherical: {}", g.is_two_spherical());
    let _ = writeln!(out, "odd-connected: {}", g.is_odd_connected(&all));
    out.push('\n');
    out.push_str(&dot(g, false));
    out.push('\n');
    out.push_str(&dot(g, true));
    out
}

// ----- perp ------------------------------------------------------------------

fn class_json(g: &CoxeterGraph, c: &PairClass) -> Value {
    json!({
        "representative": pair_json(g, c.representative),
        "members": c.members.iter().map(|&p| pair_json(g, p)).collect::<Vec<_>>(),
        "certificate": c.certificate,
    })
}

pub fn perp_json(g: &CoxeterGraph, r: &CentralizerReport) -> Value {
    let x = g.name(r.x);
    match &r.perp {
        PerpResult::Presentation(p) => {
            let classes: Vec<Value> = p
                .classes
                .iter()
                .zip(&p.roots)
                .map(|(c, root)| {
                    let mut v = class_json(g, c);
                    v["root"] = root_json(g, &root.root);
                    v["word"] = word_json(g, &root.word);
                    v
                })
                .collect();
            json!({
                "x": x,
                "status": "ok",
                "classes": classes,
                "matrix": matrix_json(&p.orders),
                "types": types_json(&component_types(&p.orders)),
                "finite_part_types": types_json(&finite_part_types(&p.orders)),
                "y_rank": r.y_rank,
            })
        }
        PerpResult::Unsupported { classes, uncertified } => json!({
            "x": x,
            "status": "unsupported",
            "classes": classes.iter().map(|c| class_json(g, c)).collect::<Vec<_>>(),
            "uncertified": uncertified,
            "y_rank": r.y_rank,
        }),
    }
}

/// Aligned table of a Coxeter matrix with row/column headers.
pub fn matrix_table(headers: &[String], m: &CoxeterMatrix) -> String {
    let cells: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(|l| l.to_string()).collect()).collect();
    let width = headers
        .iter()
        .map(|h| h.chars().count())
        .chain(cells.iter().flatten().map(|c| c.len()))
        .max()
        .unwrap_or(1);
    let mut out = format!("{:width$}", "");
    for h in headers {
        let _ = write!(out, " {h:>width$}");
    }
    out.push('\n');
    for (h, row) in headers.iter().zip(&cells) {
        let _ = write!(out, "{h:>width$}");
        for c in row {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn perp_text(g: &CoxeterGraph, r: &CentralizerReport) -> String {
    let mut out = format!("W^perp at {} (rank of Y: {})\n", g.name(r.x), r.y_rank);
    let classes = match &r.perp {
        PerpResult::Presentation(p) => &p.classes,
        PerpResult::Unsupported { classes, .. } => classes,
    };
    let headers: Vec<String> = (0..classes.len()).map(|i| format!("c{i}")).collect();
    for (h, c) in headers.iter().zip(classes) {
        let members: Vec<String> = c.members.iter().map(|p| p.display(g)).collect();
        let _ = writeln!(out, "{h} = [{}]: {}", members.join(" "), serde_json::to_value(c.certificate).unwrap().as_str().unwrap_or_default());
    }
    match &r.perp {
        PerpResult::Presentation(p) => {
            out.push_str(&matrix_table(&headers, &p.orders));
            let types: Vec<String> = component_types(&p.orders).iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "types: {}", types.join(" x "));
        }
        PerpResult::Unsupported { uncertified, .. } => {
            let _ = writeln!(out, "unsupported: uniform-root condition not certified for classes {uncertified:?}");
        }
    }
    out
}

// ----- finite part -----------------------------------------------------------

pub fn finpart_json(g: &CoxeterGraph, r: &FinitePartReport) -> Value {
    let components: Vec<Value> = r
        .components
        .iter()
        .map(|c| {
            let (kind, support) = match &c.kind {
                FinKind::SingleReflection { pair } => ("single-reflection", json!({"pair": pair_json(g, *pair)})),
                FinKind::IsoToStandard { set, base } => {
                    ("iso-to-standard", json!({"set": names(g, set), "base": g.name(*base)}))
                }
                FinKind::ExplicitPerp { set, base } => {
                    ("explicit-perp", json!({"set": names(g, set), "base": g.name(*base)}))
                }
            };
            let generators: Vec<Value> = c
                .generators
                .iter()
                .map(|gen| {
                    json!({
                        "pair": pair_json(g, gen.pair),
                        "word": word_json(g, &gen.word),
                        "root": root_json(g, &gen.root),
                    })
                })
                .collect();
            json!({
                "kind": kind,
                "support": support,
                "type": c.ty.to_string(),
                "generators": generators,
                "theorem": c.provenance,
            })
        })
        .collect();
    json!({
        "x": g.name(r.x),
        "stage": r.stage,
        "base": g.name(r.base),
        "components": components,
        "types": types_json(&r.types()),
        "efin": r.efin.iter().map(|&p| pair_json(g, p)).collect::<Vec<_>>(),
        "trace": r.case_trace,
    })
}

pub fn finpart_text(g: &CoxeterGraph, r: &FinitePartReport) -> String {
    let stage = serde_json::to_value(r.stage).unwrap();
    let mut out = format!(
        "finite part at {} (stage {}, base {})\n",
        g.name(r.x),
        stage.as_str().unwrap_or_default(),
        g.name(r.base)
    );
    if r.components.is_empty() {
        out.push_str("trivial\n");
    }
    for c in &r.components {
        let gens: Vec<String> = c.generators.iter().map(|gen| gen.pair.display(g)).collect();
        let _ = writeln!(out, "{} via {}: generators {}", c.ty, c.provenance, gens.join(" "));
    }
    out.push_str("trace:\n");
    for t in &r.case_trace {
        let mark = if t.holds { "x" } else { " " };
        if t.detail.is_empty() {
            let _ = writeln!(out, "  [{mark}] {}", t.hypothesis);
        } else {
            let _ = writeln!(out, "  [{mark}] {}: {}", t.hypothesis, t.detail);
        }
    }
    out
}

// ----- reflection independence ----------------------------------------------

pub fn reflindep_json(g: &CoxeterGraph, v: &RIVerdict) -> Value {
    let per_class: Map<String, Value> = v
        .per_class
        .iter()
        .map(|(&r, c)| (g.name(r).to_string(), json!(c)))
        .collect();
    json!({
        "overall": v.overall,
        "rule": v.rule_used,
        "per_class": per_class,
    })
}

pub fn reflindep_text(g: &CoxeterGraph, v: &RIVerdict) -> String {
    let j = reflindep_json(g, v);
    let mut out = format!(
        "{} (rule: {})\n",
        j["overall"].as_str().unwrap_or_default(),
        j["rule"].as_str().unwrap_or_default()
    );
    for (&r, c) in &v.per_class {
        let _ = writeln!(out, "  {}: {} ({})", g.name(r), if c.holds { "holds" } else { "fails" }, c.reason);
    }
    out
}

// ----- oracle and crosscheck -------------------------------------------------

/// Oracle findings at one generator.
#[derive(Clone, Debug)]
pub struct OracleSummary {
    pub perp: OraclePerp,
    pub group_order: usize,
    pub reflections: usize,
    pub centralizer_order: usize,
    pub perp_order: usize,
}

pub fn oracle_json(g: &CoxeterGraph, x: usize, o: &OracleSummary) -> Value {
    json!({
        "x": g.name(x),
        "simples": o.perp.simples.iter().map(|r| root_json(g, r)).collect::<Vec<_>>(),
        "matrix": matrix_json(&o.perp.matrix),
        "types": types_json(&component_types(&o.perp.matrix)),
        "group_order": o.group_order,
        "reflections": o.reflections,
        "centralizer_order": o.centralizer_order,
        "perp_order": o.perp_order,
    })
}

pub fn oracle_text(g: &CoxeterGraph, x: usize, o: &OracleSummary) -> String {
    let headers: Vec<String> = (0..o.perp.simples.len()).map(|i| format!("b{i}")).collect();
    let types: Vec<String> = component_types(&o.perp.matrix).iter().map(ToString::to_string).collect();
    format!(
        "oracle at {}: |W| = {}, reflections = {}, |Z(x)| = {}, |W^perp| = {}\n{}types: {}\n",
        g.name(x),
        o.group_order,
        o.reflections,
        o.centralizer_order,
        o.perp_order,
        matrix_table(&headers, &o.perp.matrix),
        types.join(" x ")
    )
}

pub fn crosscheck_json(g: &CoxeterGraph, x: usize, c: &Crosscheck) -> Value {
    let mut v = json!(c);
    v["x"] = json!(g.name(x));
    v
}

pub fn crosscheck_text(g: &CoxeterGraph, x: usize, c: &Crosscheck) -> String {
    let mut out = format!(
        "crosscheck at {}: {} (presentation rank {}, oracle rank {})\n",
        g.name(x),
        if c.agree { "agree" } else { "DISAGREE" },
        c.presentation_rank,
        c.oracle_rank
    );
    for m in &c.mismatches {
        let _ = writeln!(out, "  {m}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(1.0), 1.0);
        assert_eq!(round_sig(0.1 + 0.2), 0.3);
        assert_eq!(round_sig(-0.0), 0.0);
        assert_eq!(round_sig(2.0 / 3.0), 0.666666666667);
    }

    #[test]
    fn roots_and_keys_are_sorted() {
        let g = CoxeterGraph::parse_text("edge b a 4\nvertex c").unwrap();
        let v = root_json(&g, &[1.0, std::f64::consts::SQRT_2, 0.0]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"a":1.0,"b":1.41421356237}"#);
        let s = to_string(&analyze_json(&g));
        assert!(s.find("\"components\"").unwrap() < s.find("\"finite\"").unwrap());
        let g = CoxeterGraph::parse_text("edge a b inf").unwrap();
        assert_eq!(serde_json::to_string(&matrix_json(g.matrix())).unwrap(), r#"[[1,"inf"],["inf",1]]"#);
    }

    #[test]
    fn dot_blocks() {
        let g = CoxeterGraph::parse_text("edge a b 3\nedge b c inf").unwrap();
        let t = analyze_text(&g);
        assert!(t.contains("graph coxeter {") && t.contains("graph odd {"));
        assert!(t.contains("\"b\" -- \"c\" [label=\"inf\"];"));
        assert_eq!(dot(&g, true).matches("--").count(), 1);
    }
}
