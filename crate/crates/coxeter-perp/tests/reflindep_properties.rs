mod common;

use common::{random_graph, random_spherical_candidate, relabel};
use coxeter_perp::finite_part::finite_part;
use coxeter_perp::oracle::{enumerate_roots, in_orbit_of_simple};
use coxeter_perp::reflindep::{check_group, sufficient_condition, Rule};
use coxeter_perp::types::is_finite_group;
use coxeter_perp::IrreducibleType;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn verdicts_are_constant_on_odd_components(seed in any::<u64>()) {
        let g = random_graph(seed, 7);
        let v = check_group(&g).unwrap();
        for (&rep, verdict) in &v.per_class {
            for y in g.odd_component(rep) {
                prop_assert_eq!(sufficient_condition(&g, y).unwrap().holds, verdict.holds);
            }
        }
    }

    #[test]
    fn two_spherical_rule_agrees_with_the_per_generator_rule(seed in any::<u64>()) {
        let g = random_graph(seed, 7);
        let v = check_group(&g).unwrap();
        if v.rule_used == Rule::TwoSpherical {
            prop_assert!(v.per_class.values().all(|c| c.holds));
        }
    }

    #[test]
    fn verdicts_survive_relabeling(seed in any::<u64>(), perm_seed in any::<u64>()) {
        let g = random_graph(seed, 7);
        let (h, map) = relabel(&g, perm_seed);
        let (a, b) = (check_group(&g).unwrap(), check_group(&h).unwrap());
        prop_assert_eq!(a.overall, b.overall);
        prop_assert_eq!(a.rule_used, b.rule_used);
        for (&rep, verdict) in &a.per_class {
            let image = h.odd_component(map[rep]);
            let other = b.per_class.iter().find(|(r, _)| image.contains(r)).map(|(_, c)| c.holds);
            prop_assert_eq!(other, Some(verdict.holds));
        }
    }

    #[test]
    fn conjugacy_test_matches_the_orbit_oracle(seed in any::<u64>()) {
        let g = random_spherical_candidate(seed, 7);
        prop_assume!(is_finite_group(&g));
        let roots = enumerate_roots(&g, 20_000);
        for x in g.vertices() {
            let report = finite_part(&g, x).unwrap();
            if let [c] = report.components.as_slice() {
                if c.ty == IrreducibleType::A(1) {
                    let conjugate = in_orbit_of_simple(&g, &roots, x, &c.generators[0].root);
                    prop_assert_eq!(sufficient_condition(&g, x).unwrap().holds, conjugate, "{}", g.to_text());
                }
            }
        }
    }
}
