mod common;

use std::collections::BTreeSet;

use common::random_graph;
use coxeter_perp::finite_part::finite_part;
use coxeter_perp::graph::{CoxeterGraph, Label, Vertex, VertexSet};
use coxeter_perp::oracle::{approx_eq, geometric_form, is_positive, simple_root, FormMatrix};
use coxeter_perp::presentation::{cycle_words, edge_pairs, gamma_root, perp_coxeter_matrix, walk_word, PerpResult};
use coxeter_perp::types::{component_types, finite_part_types};
use proptest::prelude::*;

const TOL: f64 = 1e-8;

/// Words whose intermediate roots have large coordinates accumulate
/// proportionally large rounding errors, so comparisons are made relative to
/// the largest coordinate met while applying the word.
fn scaled_tol(form: &FormMatrix, n: usize, word: &[Vertex]) -> f64 {
    let scale = images(form, n, word).iter().flatten().fold(1.0f64, |m, c| m.max(c.abs()));
    TOL * scale
}

/// Tolerance for bilinear-form values of a root, which carry errors
/// proportional to the square of its largest coordinate.
fn form_tol(v: &[f64]) -> f64 {
    let m = v.iter().fold(1.0f64, |m, c| m.max(c.abs()));
    TOL * m * m
}

/// Images `w(α_t)` of all simple roots under the word `w`.
fn images(form: &FormMatrix, n: usize, word: &[Vertex]) -> Vec<Vec<f64>> {
    (0..n).map(|t| form.apply_word(word, &simple_root(n, t))).collect()
}

/// The support of the group element of `word`, found by peeling off right
/// descents (`ℓ(ws) < ℓ(w)` iff `w(α_s) < 0`) until the identity remains.
fn support(g: &CoxeterGraph, word: &[Vertex]) -> BTreeSet<Vertex> {
    let n = g.len();
    let form = geometric_form(g);
    let mut cols = images(&form, n, word);
    let tol = scaled_tol(&form, n, word);
    let mut supp = BTreeSet::new();
    for _ in 0..=word.len() {
        let Some(s) = (0..n).find(|&s| !is_positive(&cols[s], tol)) else {
            return supp;
        };
        supp.insert(s);
        // (ws)(α_t) = w(α_t) − 2⟨α_s,α_t⟩ w(α_s)
        let ws = cols[s].clone();
        for (t, col) in cols.iter_mut().enumerate() {
            let c = 2.0 * form.get(s, t);
            *col = col.iter().zip(&ws).map(|(a, b)| a - c * b).collect();
        }
    }
    panic!("descent peeling did not terminate");
}

/// A random non-backtracking walk of length ≥ 1 in Γ^odd from `start`.
fn random_walk(g: &CoxeterGraph, start: Vertex, choices: &[usize]) -> Option<Vec<Vertex>> {
    let mut walk = vec![start];
    for &c in choices {
        let here = *walk.last().unwrap();
        let prev = if walk.len() > 1 { Some(walk[walk.len() - 2]) } else { None };
        let next: Vec<Vertex> = g.odd_neighbors(here).into_iter().filter(|&v| Some(v) != prev).collect();
        if next.is_empty() {
            break;
        }
        walk.push(next[c % next.len()]);
    }
    (walk.len() > 1).then_some(walk)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn presentation_matrix_is_a_coxeter_matrix(seed in any::<u64>()) {
        let g = random_graph(seed, 6);
        for x in g.vertices() {
            if let PerpResult::Presentation(p) = perp_coxeter_matrix(&g, x).unwrap() {
                let m = &p.orders;
                for i in 0..m.rank() {
                    prop_assert_eq!(m.get(i, i), Label::Finite(1));
                    for j in 0..m.rank() {
                        prop_assert_eq!(m.get(i, j), m.get(j, i));
                        if i != j {
                            prop_assert!(m.get(i, j) == Label::Infinite || m.get(i, j).value().unwrap() >= 2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_roots_are_unit_and_orthogonal(seed in any::<u64>()) {
        let g = random_graph(seed, 6);
        let form = geometric_form(&g);
        let n = g.len();
        for x in g.vertices() {
            let all: VertexSet = g.vertices().collect();
            for pair in edge_pairs(&g, x, &all) {
                let r = gamma_root(&g, x, pair);
                let tol = form_tol(&r.root);
                prop_assert!(form.inner(&r.root, &simple_root(n, x)).abs() < tol);
                prop_assert!((form.inner(&r.root, &r.root) - 1.0).abs() < tol);
                prop_assert!(is_positive(&r.root, tol));
            }
        }
    }

    #[test]
    fn certified_classes_share_one_root(seed in any::<u64>()) {
        let g = random_graph(seed, 6);
        for x in g.vertices() {
            let res = perp_coxeter_matrix(&g, x).unwrap();
            let classes = match &res {
                PerpResult::Presentation(p) => &p.classes,
                PerpResult::Unsupported { classes, .. } => classes,
            };
            for c in classes.iter().filter(|c| c.uniform_root_certified) {
                let root = gamma_root(&g, x, c.representative).root;
                for &m in &c.members {
                    let tol = form_tol(&root);
                    prop_assert!(approx_eq(&gamma_root(&g, x, m).root, &root, tol), "class {:?}", c.members);
                }
            }
        }
    }

    #[test]
    fn non_backtracking_walks_have_full_support(seed in any::<u64>(), choices in prop::collection::vec(0usize..8, 1..7)) {
        let g = random_graph(seed, 7);
        let n = g.len();
        let form = geometric_form(&g);
        for start in g.vertices() {
            let Some(walk) = random_walk(&g, start, &choices) else { continue };
            let word = walk_word(&g, &walk);
            let expected: BTreeSet<Vertex> = walk.iter().copied().collect();
            prop_assert_eq!(support(&g, &word), expected, "walk {:?}", walk);
            let image = form.apply_word(&word, &simple_root(n, walk[0]));
            prop_assert!(approx_eq(&image, &simple_root(n, *walk.last().unwrap()), scaled_tol(&form, n, &word)));
        }
    }

    #[test]
    fn cycle_words_fix_the_finite_part(seed in any::<u64>()) {
        let g = random_graph(seed, 7);
        let form = geometric_form(&g);
        for x in g.vertices() {
            let report = finite_part(&g, x).unwrap();
            let words = cycle_words(&g, x);
            for c in &report.components {
                for gen in &c.generators {
                    for w in &words {
                        let tol = scaled_tol(&form, g.len(), w) * form_tol(&gen.root) / TOL;
                        prop_assert!(approx_eq(&form.apply_word(w, &gen.root), &gen.root, tol));
                    }
                }
            }
        }
    }

    #[test]
    fn presentations_agree_along_an_odd_component(seed in any::<u64>()) {
        let g = random_graph(seed, 6);
        for x in g.vertices() {
            let Some(px) = perp_coxeter_matrix(&g, x).unwrap().presentation().cloned() else { continue };
            let ex = finite_part(&g, x).unwrap().efin;
            for y in g.odd_component(x) {
                let py = perp_coxeter_matrix(&g, y).unwrap();
                let py = py.presentation().expect("certification depends only on the odd component");
                prop_assert_eq!(component_types(&px.orders), component_types(&py.orders));
                prop_assert_eq!(finite_part_types(&px.orders), finite_part_types(&py.orders));
                prop_assert_eq!(&finite_part(&g, y).unwrap().efin, &ex);
            }
        }
    }
}

