//! Property suites for both engines. The acceptance suite re-runs the same
//! predicates at >= 1000 cases; these wrappers keep proptest's shrinking and
//! failure persistence for day-to-day work.

mod common;

use common::*;
use proptest::prelude::*;
use syllogos::model::{ImportPolicy, ProbQuantifierConfig, Quantifier, Verdict};
use syllogos::set_engine::{check_validity, evaluate_statement, EvalError};

proptest! {
    #[test]
    fn countermodels_reverify(
        syl in arb_syllogism(),
        policy in prop_oneof![
            Just(ImportPolicy::NoImport),
            Just(ImportPolicy::UniversalImport),
            Just(ImportPolicy::ExplicitPremise),
        ],
    ) {
        if let Err(why) = check_countermodel_reverifies(&syl, policy, 3) {
            prop_assert!(false, "{why}");
        }
    }

    #[test]
    fn contradictory_pairs_disagree_everywhere(pair_choice in 0usize..2, universe in 0usize..=3) {
        let pair = if pair_choice == 0 {
            (Quantifier::All, Quantifier::SomeNot)
        } else {
            (Quantifier::No, Quantifier::Some)
        };
        if let Err(why) = check_contradictories_disagree(pair, universe) {
            prop_assert!(false, "{why}");
        }
    }

    #[test]
    fn subalternation_needs_a_nonempty_subject(model in arb_two_term_model(5)) {
        if let Err(why) = check_subaltern_on_nonempty(&model) {
            prop_assert!(false, "{why}");
        }
    }

    #[test]
    fn widening_premises_never_narrows_the_conclusion(
        base in (arb_unit_interval(), arb_unit_interval()),
        slack in (arb_unit_rat(), arb_unit_rat()),
    ) {
        use syllogos::model::{rat, Interval};
        let widen = |iv: Interval, by: syllogos::model::Rat| {
            Interval::new((iv.lo - by).max(rat(0, 1)), (iv.hi + by).min(rat(1, 1))).unwrap()
        };
        let widened = (widen(base.0, slack.0), widen(base.1, slack.1));
        if let Err(why) = check_interval_monotonicity(base, widened, 8) {
            prop_assert!(false, "{why}");
        }
    }

    #[test]
    fn qep_alpha_cuts_are_nested(
        t1 in arb_trapezoid(),
        t2 in arb_trapezoid(),
        levels in arb_alpha_levels(),
    ) {
        if let Err(why) = check_qep_nested(t1, t2, &levels) {
            prop_assert!(false, "{why}");
        }
    }

    #[test]
    fn conditional_and_set_readings_agree_on_classical_quantifiers(
        model in arb_two_term_model(5),
        eps_num in 1i64..10,
    ) {
        let epsilon = ProbQuantifierConfig::new(syllogos::model::rat(eps_num, 20)).unwrap();
        if let Err(why) = check_conditional_set_bridge(&model, &epsilon) {
            prop_assert!(false, "{why}");
        }
    }

    #[test]
    fn heuristic_conclusions_never_gain_informativeness(
        q1 in arb_heuristic_quantifier(),
        q2 in arb_heuristic_quantifier(),
        figure in 0usize..4,
    ) {
        if let Err(why) = check_min_heuristic_invariant(q1, q2, figure) {
            prop_assert!(false, "{why}");
        }
    }
}

// Cross-check of the region-vector search against direct enumeration of
// labelled models, on two-term statements where both are cheap.
proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn validity_verdict_matches_direct_model_enumeration(
        q_premise in arb_crisp_quantifier(),
        q_conclusion in arb_crisp_quantifier(),
    ) {
        let premise = stmt(q_premise, "s", "p");
        let conclusion = stmt(q_conclusion, "p", "s");
        let syl = syllogos::model::Syllogism::new(vec![premise.clone()], conclusion.clone()).unwrap();
        let verdict = check_validity(&syl, ImportPolicy::NoImport, 3);

        let mut found_counter = false;
        for n in 1..=3 {
            for model in all_two_term_models(n) {
                let premise_holds = matches!(evaluate_statement(&model, &premise), Ok(true));
                if !premise_holds {
                    continue;
                }
                let refuted = matches!(
                    evaluate_statement(&model, &conclusion),
                    Ok(false) | Err(EvalError::UndefinedProportion { .. })
                );
                if refuted {
                    found_counter = true;
                }
            }
        }
        match verdict {
            Verdict::Valid { .. } => prop_assert!(!found_counter, "search says valid, direct enumeration found a countermodel"),
            Verdict::CounterModel { .. } => prop_assert!(found_counter, "search found a countermodel, direct enumeration did not"),
            Verdict::Undetermined { .. } => prop_assert!(false, "crisp statements cannot be undetermined"),
        }
    }
}

proptest! {
    // parsing is total: arbitrary input produces a statement or an error,
    // never a panic, and reported error positions stay inside the input
    #[test]
    fn parsing_never_panics(input in ".{0,60}") {
        match syllogos::parser::parse_statement(&input) {
            Ok(_) => {}
            Err(e) => prop_assert!(e.position <= input.len(), "position {} beyond input", e.position),
        }
    }

    // the Fréchet fast path never excludes a realizable proportion
    #[test]
    fn frechet_interval_contains_every_brute_force_value(
        bounds in (arb_unit_interval(), arb_unit_interval()),
    ) {
        use syllogos::numeric_engine::{
            frechet_bounds, interval_conclude_exhaustive, ProportionConstraint, ProportionGoal,
            RegionExpr,
        };
        let premises = [
            ProportionConstraint {
                numerator: RegionExpr::term(term("young")),
                denominator: term("single"),
                bounds: bounds.0,
            },
            ProportionConstraint {
                numerator: RegionExpr::term(term("students")),
                denominator: term("single"),
                bounds: bounds.1,
            },
        ];
        let goal = ProportionGoal {
            numerator: RegionExpr::term(term("young")).and(term("students")),
            denominator: term("single"),
        };
        let fast = frechet_bounds(&premises, &goal).expect("conjunction schema");
        if let Ok(brute) = interval_conclude_exhaustive(&premises, &goal, 8) {
            prop_assert!(
                fast.contains_interval(&brute.interval),
                "Fréchet {} excludes brute-force {}",
                fast,
                brute.interval
            );
        }
    }

    // render/parse agreement and serialization stability
    #[test]
    fn rendering_reparses_to_an_equal_statement(statement in arb_renderable_statement()) {
        let rendered = statement.to_string();
        let reparsed = syllogos::parser::parse_statement(&rendered);
        prop_assert_eq!(reparsed, Ok(statement.clone()), "rendered {:?}", rendered);
    }

    #[test]
    fn statement_json_round_trips(statement in arb_renderable_statement()) {
        let json = serde_json::to_string(&statement).unwrap();
        let back: syllogos::model::Statement = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, statement);
    }

    // adding import premises never invalidates a valid syllogism
    #[test]
    fn import_premises_preserve_validity(syl in arb_syllogism()) {
        let before = check_validity(&syl, ImportPolicy::NoImport, 3);
        if before.is_valid() {
            let imported = syllogos::transforms::add_import_premises(
                &syl,
                syllogos::transforms::ImportScope::AllTerms,
            );
            prop_assert_eq!(imported.conclusion(), syl.conclusion());
            prop_assert!(imported.premises().len() >= syl.premises().len());
            let after = check_validity(&imported, ImportPolicy::NoImport, 3);
            prop_assert!(after.is_valid(), "import premises broke validity: {:?}", after);
        }
    }
}

#[test]
fn subalternation_fails_exactly_on_the_empty_subject() {
    let model = model_from_assignment(&[2, 2]); // two atoms in p only, s empty
    let all = stmt(Quantifier::All, "s", "p");
    let some = stmt(Quantifier::Some, "s", "p");
    assert_eq!(evaluate_statement(&model, &all), Ok(true));
    assert_eq!(evaluate_statement(&model, &some), Ok(false));
}
