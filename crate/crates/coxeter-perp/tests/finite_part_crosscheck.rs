use coxeter_perp::corpus::{corpus_generate, default_pool};
use coxeter_perp::finite_part::{finite_part, finite_part_staged, stage_verdicts, two_spherical_shortcut_applies};
use coxeter_perp::presentation::{perp_coxeter_matrix, PerpResult};
use coxeter_perp::types::finite_part_types;

use coxeter_perp::graph::Label;

/// Label pools weighted towards sparse even labels, so that every case of the
/// finite-part analysis is reached by the corpus.
fn weighted_pools() -> Vec<Vec<Label>> {
    let f = Label::Finite;
    let inf = Label::Infinite;
    vec![
        vec![f(2), f(2), f(2), f(2), f(3), f(3), f(4), inf, inf],
        vec![f(2), f(2), f(2), f(3), f(3), f(3), f(4), inf],
        vec![f(2), f(2), f(3), f(4), f(5), inf, inf, inf],
        vec![f(2), f(2), f(2), f(3), f(4), f(6), inf, inf],
    ]
}

#[test]
fn finite_part_matches_certified_presentation_on_weighted_pools() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for pool in weighted_pools() {
        for g in corpus_generate(11, 600, 8, &pool) {
            for x in g.vertices() {
                let report = finite_part(&g, x).unwrap();
                if let PerpResult::Presentation(p) = perp_coxeter_matrix(&g, x).unwrap() {
                    checked += 1;
                    if finite_part_types(&p.orders) != report.types() {
                        failures.push(format!("x={}\n{}", g.name(x), g.to_text()));
                    }
                }
            }
        }
    }
    assert!(checked > 2000, "only {checked} certified cases");
    assert!(failures.is_empty(), "{} mismatches:\n{}", failures.len(), failures.iter().take(8).cloned().collect::<Vec<_>>().join("\n"));
}

#[test]
fn finite_part_matches_certified_presentation() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (i, g) in corpus_generate(7, 500, 7, &default_pool()).iter().enumerate() {
        for x in g.vertices() {
            let report = finite_part(g, x).unwrap();
            assert!(report.components.iter().all(|c| c.ty.is_finite()));
            let (a, b) = stage_verdicts(g, x).unwrap();
            assert!(a.is_none() || b.is_none(), "graph {i} x {x}: both stages fire");
            if two_spherical_shortcut_applies(g) {
                assert!(finite_part_staged(g, x).unwrap().is_trivial(), "graph {i}");
            }
            if let PerpResult::Presentation(p) = perp_coxeter_matrix(g, x).unwrap() {
                checked += 1;
                let expected = finite_part_types(&p.orders);
                if expected != report.types() {
                    failures.push(format!(
                        "graph {i} x={} expected {:?} got {:?} via {:?}\n{}",
                        g.name(x),
                        expected,
                        report.types(),
                        report.stage,
                        g.to_text()
                    ));
                }
            }
        }
    }
    assert!(checked > 500, "only {checked} certified cases");
    assert!(failures.is_empty(), "{} mismatches:\n{}", failures.len(), failures.iter().take(8).cloned().collect::<Vec<_>>().join("\n"));
}
