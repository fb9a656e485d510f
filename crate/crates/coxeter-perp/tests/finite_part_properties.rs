mod common;

use std::collections::BTreeSet;

use common::{random_graph, random_spherical_candidate, relabel};
use coxeter_perp::finite_part::finite_part;
use coxeter_perp::graph::{CoxeterGraph, Vertex, VertexSet};
use coxeter_perp::oracle::oracle_perp_matrix;
use coxeter_perp::types::{finite_part_types, is_finite_group};
use proptest::prelude::*;

fn named_efin(g: &CoxeterGraph, x: Vertex) -> BTreeSet<(String, String)> {
    finite_part(g, x)
        .unwrap()
        .efin
        .iter()
        .map(|p| (g.name(p.y).to_string(), g.name(p.s).to_string()))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn finite_groups_match_the_oracle(seed in any::<u64>()) {
        let g = random_spherical_candidate(seed, 7);
        prop_assume!(is_finite_group(&g));
        for x in g.vertices() {
            let oracle = oracle_perp_matrix(&g, x, 20_000, 1e-8).unwrap();
            prop_assert_eq!(finite_part(&g, x).unwrap().types(), finite_part_types(&oracle.matrix));
        }
    }

    #[test]
    fn finite_pairs_survive_pruning(seed in any::<u64>()) {
        let g = random_graph(seed, 7);
        for x in g.vertices() {
            for p in finite_part(&g, x).unwrap().efin {
                for t in g.vertices() {
                    prop_assert!(!(g.m(p.y, t).is_even() && g.m(p.s, t) == coxeter_perp::Label::Infinite));
                }
            }
        }
    }

    #[test]
    fn restriction_is_monotone(seed in any::<u64>(), mask in any::<u64>()) {
        let g = random_graph(seed, 7);
        for x in g.vertices() {
            let larger: VertexSet = g.vertices().filter(|&v| v == x || mask >> v & 1 == 1).collect();
            let smaller: VertexSet = larger.iter().copied().filter(|&v| v == x || mask >> (v + 16) & 1 == 1).collect();
            let (gl, gs) = (g.induced(&larger), g.induced(&smaller));
            let xl = gl.vertex(g.name(x)).unwrap();
            let xs = gs.vertex(g.name(x)).unwrap();
            let in_small: BTreeSet<(String, String)> = coxeter_perp::presentation::edge_pairs(&gs, xs, &gs.vertices().collect())
                .iter()
                .map(|p| (gs.name(p.y).to_string(), gs.name(p.s).to_string()))
                .collect();
            let fin_small = named_efin(&gs, xs);
            for p in named_efin(&gl, xl) {
                if in_small.contains(&p) {
                    prop_assert!(fin_small.contains(&p), "{:?} finite in the larger set only", p);
                }
            }
        }
    }

    #[test]
    fn reports_are_relabeling_invariant(seed in any::<u64>(), perm_seed in any::<u64>()) {
        let g = random_graph(seed, 7);
        let (h, map) = relabel(&g, perm_seed);
        for x in g.vertices() {
            let (a, b) = (finite_part(&g, x).unwrap(), finite_part(&h, map[x]).unwrap());
            prop_assert_eq!(a.types(), b.types());
            prop_assert_eq!(a.stage, b.stage);
            let rename = |s: &(String, String)| (h.name(map[g.vertex(&s.0).unwrap()]).to_string(), h.name(map[g.vertex(&s.1).unwrap()]).to_string());
            let renamed: BTreeSet<_> = named_efin(&g, x).iter().map(rename).collect();
            prop_assert_eq!(renamed, named_efin(&h, map[x]));
        }
    }
}
