//! Randomised invariants over the public API, driven by seeded generators.

mod common;

use common::*;
use lexfan::io::{fiber_report_from_wire, fiber_report_to_wire, from_json, to_json, FiberReportWire};
use lexfan::{
    cone_over_complex, feasible, fiber_report, generic_monoid_member, is_member, star_fan, validate_complex,
    ValuedMonomial, Q,
};
use proptest::prelude::*;

fn small() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(small())]

    #[test]
    fn fiber_report_survives_machine_round_trip(seed in any::<u64>()) {
        let c = random_complex(&mut rng(seed));
        let report = fiber_report(&cone_over_complex(&c).unwrap()).unwrap();
        let text = to_json(&fiber_report_to_wire(&report));
        let wire: FiberReportWire = from_json(&text).unwrap();
        let back = fiber_report_from_wire::<Q>(&wire).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(to_json(&fiber_report_to_wire(&back)), text);
    }

    #[test]
    fn report_counts_match_recession_vertices_and_segments(seed in any::<u64>()) {
        let c = random_complex(&mut rng(seed));
        let fan = cone_over_complex(&c).unwrap();
        let report = fiber_report(&fan).unwrap();
        prop_assert_eq!(report.levels.len(), fan.k() + 1);
        for level in &report.levels {
            let rec = fan.recession(level.level).unwrap();
            let vertices: Vec<_> = rec.vertices().into_iter().map(|(_, p)| p).collect();
            prop_assert_eq!(level.component_count(), vertices.len());
            let index = |p: &lexfan::Point<Q>| level.components.iter().position(|s| &s.vertex == p).unwrap();
            let mut segments = Vec::new();
            for cell in rec.cells() {
                let vs = cell.vertices().unwrap();
                if cell.dimension().unwrap() == 1 && vs.len() == 2 {
                    let (a, b) = (index(&vs[0]), index(&vs[1]));
                    segments.push((a.min(b), a.max(b)));
                }
            }
            segments.sort_unstable();
            prop_assert_eq!(&level.edges, &segments);
            for v in 0..vertices.len() {
                let by_hand = segments.iter().filter(|&&(a, b)| a == v || b == v).count();
                prop_assert_eq!(level.degree(v), by_hand);
            }
        }
    }

    #[test]
    fn recession_levels_stay_valid_complexes(seed in any::<u64>()) {
        let c = random_complex(&mut rng(seed));
        let fan = cone_over_complex(&c).unwrap();
        for level in 0..=fan.k() {
            let rec = fan.recession(level).unwrap();
            prop_assert!(validate_complex(&rec).is_valid(), "level {} invalid", level);
            // a coarser level never has more vertices
            if level > 0 {
                let prev = fan.recession(level - 1).unwrap();
                prop_assert!(rec.vertices().len() <= prev.vertices().len());
            }
        }
    }

    #[test]
    fn star_has_one_cone_per_cell_through_the_vertex(seed in any::<u64>()) {
        let c = random_complex(&mut rng(seed));
        for (_, w) in c.vertices() {
            let star = star_fan(&c, &w).unwrap();
            let through = c.cells().iter().filter(|p| p.contains(&w)).count();
            prop_assert_eq!(star.cones().len(), through);
            prop_assert!(star.validate().unwrap().is_valid());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn feasibility_agrees_with_tightness_oracle(seed in any::<u64>()) {
        let (n, k, sys) = random_system(&mut rng(seed));
        let verdict = feasible(n, k, &sys).unwrap();
        prop_assert_eq!(verdict.is_some(), brute_force_feasible(n, k, &sys));
        if let Some(w) = verdict {
            prop_assert!(sys.iter().all(|c| c.satisfied_by(&w)));
        }
    }

    #[test]
    fn membership_is_upward_closed_in_the_valuation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = 1 + (seed % 2) as usize;
        let p = random_pointed(&mut r, n, 2);
        let u = rand_u(&mut r, n, 2);
        let val = rand_lex(&mut r, 2, -3, 3);
        let bump = rand_lex(&mut r, 2, 0, 2);
        let member = is_member(&p, &ValuedMonomial::new(u.clone(), val.clone())).unwrap();
        let raised = is_member(&p, &ValuedMonomial::new(u.clone(), &val + &bump)).unwrap();
        prop_assert!(!member || raised);
        // a dominant valuation succeeds exactly on the generic monoid
        let huge = is_member(&p, &ValuedMonomial::new(u.clone(), lv(&[1000, 0]))).unwrap();
        prop_assert_eq!(huge, generic_monoid_member(&p, &u).unwrap());
    }
}
