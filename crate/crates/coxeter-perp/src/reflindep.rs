//! Sufficient conditions for reflection independence.
//!
//! A Coxeter group is reflection independent when every generator `x`
//! satisfies: the finite part of `W^{⊥x}` is trivial, or is generated by a
//! single reflection conjugate to `x`. Since conjugate generators give
//! conjugate perp subgroups, one check per odd component suffices. Two global
//! theorems settle infinite irreducible 2-spherical groups and infinite
//! odd-connected groups outright.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::finite_part::{finite_part, FinKind, FinitePartReport};
use crate::graph::{CoxeterGraph, Vertex};
use crate::presentation::EdgePair;
use crate::types::{is_finite_group, IrreducibleType};

/// Overall outcome. The checker applies sufficient conditions only, so it
/// never claims that a group is *not* reflection independent.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    ReflectionIndependent,
    Inconclusive,
}

/// Which rule decided the verdict.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    TwoSpherical,
    OddConnected,
    PerGenerator,
}

/// Outcome of the per-generator condition at one generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub holds: bool,
    pub reason: String,
}

/// Verdict for a whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RIVerdict {
    pub overall: Overall,
    /// Keyed by the least vertex of each odd component.
    pub per_class: BTreeMap<Vertex, ClassVerdict>,
    pub rule_used: Rule,
}

/// The lexicographically least vertex of each odd component, in order.
pub fn class_representatives(g: &CoxeterGraph) -> Vec<Vertex> {
    let mut reps: Vec<Vertex> = g
        .odd_components()
        .iter()
        .filter_map(|c| c.iter().next().copied())
        .collect();
    reps.sort_unstable();
    reps
}

/// The generator whose class contains the reflection `r_x(y,s)`.
///
/// Inside the dihedral group `W_{y,s}` with `m = m(y,s)` even, the root
/// orthogonal to `α_y` sits `m/2` steps from `α_y`, so it lies in the orbit
/// of `α_y` when `m ≡ 0 (mod 4)` and in the orbit of `α_s` otherwise.
pub fn conjugacy_vertex(g: &CoxeterGraph, pair: EdgePair) -> Vertex {
    match g.m(pair.y, pair.s).value() {
        Some(m) if m % 4 == 0 => pair.y,
        _ => pair.s,
    }
}

/// Evaluate the per-generator condition on an already computed finite part.
pub fn condition_from_report(g: &CoxeterGraph, report: &FinitePartReport) -> ClassVerdict {
    let x = report.x;
    match report.components.as_slice() {
        [] => ClassVerdict {
            holds: true,
            reason: "finite part is trivial".into(),
        },
        [c] if c.ty == IrreducibleType::A(1) && c.generators.len() == 1 => {
            let pair = c.generators[0].pair;
            let v = conjugacy_vertex(g, pair);
            let conjugate = g.odd_component(x).contains(&v);
            let kind = match c.kind {
                FinKind::SingleReflection { .. } => "single reflection",
                _ => "rank-one component",
            };
            ClassVerdict {
                holds: conjugate,
                reason: format!(
                    "{kind} r({}) conjugate to {}, which is {}conjugate to {}",
                    pair.display(g),
                    g.name(v),
                    if conjugate { "" } else { "not " },
                    g.name(x)
                ),
            }
        }
        cs => ClassVerdict {
            holds: false,
            reason: format!(
                "finite part has type {}",
                cs.iter().map(|c| c.ty.to_string()).collect::<Vec<_>>().join(" x ")
            ),
        },
    }
}

/// Whether the finite part of `W^{⊥x}` is trivial or generated by a single
/// reflection conjugate to `x`.
pub fn sufficient_condition(g: &CoxeterGraph, x: Vertex) -> Result<ClassVerdict> {
    Ok(condition_from_report(g, &finite_part(g, x)?))
}

/// Apply the global theorems, then the per-generator rule.
///
/// The per-class map is always filled in, so that callers can compare the
/// global rules with the per-generator one.
pub fn check_group(g: &CoxeterGraph) -> Result<RIVerdict> {
    let mut per_class = BTreeMap::new();
    for r in class_representatives(g) {
        per_class.insert(r, sufficient_condition(g, r)?);
    }
    let infinite = !g.is_empty() && !is_finite_group(g);
    let all = g.vertices().collect();
    let rule_used = if infinite && g.components().len() == 1 && g.is_two_spherical() {
        Rule::TwoSpherical
    } else if infinite && g.is_odd_connected(&all) {
        Rule::OddConnected
    } else {
        Rule::PerGenerator
    };
    let overall = if rule_used != Rule::PerGenerator || per_class.values().all(|v| v.holds) {
        Overall::ReflectionIndependent
    } else {
        Overall::Inconclusive
    };
    Ok(RIVerdict {
        overall,
        per_class,
        rule_used,
    })
}
