//! Shared generators and property predicates for the property and
//! acceptance suites. Predicates return `Err(description)` so they can be
//! driven both by `proptest!` macros and by a hand-configured `TestRunner`.

// each test target compiles its own copy and uses a different subset
#![allow(dead_code)]

use proptest::prelude::*;
use syllogos::conditional_engine::{heuristic_conclude, prob_interpret, Informativeness};
use syllogos::model::{
    rat, FiniteModel, ImportPolicy, Interval, ProbQuantifierConfig, Quantifier, Rat, Statement,
    Syllogism, Term, Trapezoid, Verdict,
};
use syllogos::numeric_engine::{
    fuzzy_conclude_qep, interval_conclude_exhaustive, FuzzySchema, NumericError,
    ProportionConstraint, ProportionGoal, RegionExpr,
};
use syllogos::set_engine::{check_validity, evaluate_statement, EvalError};
use syllogos::transforms::{self, ImportScope};

pub fn term(name: &str) -> Term {
    Term::new(name).unwrap()
}

pub fn stmt(q: Quantifier, s: &str, p: &str) -> Statement {
    Statement::new(q, term(s), term(p), false).unwrap()
}

// ---------------------------------------------------------------- strategies

/// Crisp quantifiers the validity oracle understands.
pub fn arb_crisp_quantifier() -> BoxedStrategy<Quantifier> {
    prop_oneof![
        Just(Quantifier::All),
        Just(Quantifier::No),
        Just(Quantifier::Some),
        Just(Quantifier::SomeNot),
        Just(Quantifier::Most),
        Just(Quantifier::Many),
        Just(Quantifier::Few),
        Just(Quantifier::AlmostAll),
        (0u64..3).prop_map(Quantifier::AllBut),
        (0u64..3).prop_map(Quantifier::Exactly),
        (0u64..4).prop_map(Quantifier::AtLeast),
        arb_unit_interval().prop_map(Quantifier::Interval),
    ]
    .boxed()
}

pub fn arb_unit_rat() -> BoxedStrategy<Rat> {
    (0i64..=12, 1i64..=12)
        .prop_map(|(num, den)| rat(num.min(den), den))
        .boxed()
}

pub fn arb_unit_interval() -> BoxedStrategy<Interval> {
    (arb_unit_rat(), arb_unit_rat())
        .prop_map(|(a, b)| Interval::new(a.min(b), a.max(b)).unwrap())
        .boxed()
}

pub fn arb_trapezoid() -> BoxedStrategy<Trapezoid> {
    proptest::collection::vec(arb_unit_rat(), 4)
        .prop_map(|mut values| {
            values.sort();
            Trapezoid::new(values[0], values[1], values[2], values[3]).unwrap()
        })
        .boxed()
}

/// Strictly ascending alpha levels in (0, 1].
pub fn arb_alpha_levels() -> BoxedStrategy<Vec<Rat>> {
    proptest::collection::btree_set(1i64..=20, 1..5)
        .prop_map(|numerators| numerators.into_iter().map(|n| rat(n, 20)).collect())
        .boxed()
}

/// A random two-premise syllogism over terms s/m/p in a random figure.
pub fn arb_syllogism() -> BoxedStrategy<Syllogism> {
    (
        arb_crisp_quantifier(),
        arb_crisp_quantifier(),
        arb_crisp_quantifier(),
        0usize..4,
    )
        .prop_map(|(q1, q2, qc, figure)| {
            let (p1, p2) = match figure {
                0 => (("m", "p"), ("s", "m")),
                1 => (("p", "m"), ("s", "m")),
                2 => (("m", "p"), ("m", "s")),
                _ => (("p", "m"), ("m", "s")),
            };
            Syllogism::new(
                vec![stmt(q1, p1.0, p1.1), stmt(q2, p2.0, p2.1)],
                stmt(qc, "s", "p"),
            )
            .unwrap()
        })
        .boxed()
}

/// A labelled model over the two terms s and p with up to `max` atoms, built
/// directly from per-atom region assignments (no region-vector machinery).
pub fn model_from_assignment(assignment: &[usize]) -> FiniteModel {
    let atoms: Vec<String> = (0..assignment.len()).map(|i| format!("a{i}")).collect();
    let in_region = |want: fn(usize) -> bool| {
        atoms
            .iter()
            .zip(assignment)
            .filter(move |(_, region)| want(**region))
            .map(|(atom, _)| atom.clone())
            .collect::<Vec<_>>()
    };
    FiniteModel::new(atoms.iter().cloned())
        .with_extension(term("s"), in_region(|r| r & 1 != 0))
        .unwrap()
        .with_extension(term("p"), in_region(|r| r & 2 != 0))
        .unwrap()
}

pub fn arb_two_term_model(max_atoms: usize) -> BoxedStrategy<FiniteModel> {
    proptest::collection::vec(0usize..4, 0..=max_atoms)
        .prop_map(|assignment| model_from_assignment(&assignment))
        .boxed()
}

/// All two-term models with exactly `n` atoms.
pub fn all_two_term_models(n: usize) -> Vec<FiniteModel> {
    let count = 4usize.pow(n as u32);
    (0..count)
        .map(|code| {
            let assignment: Vec<usize> = (0..n).map(|i| (code >> (2 * i)) & 3).collect();
            model_from_assignment(&assignment)
        })
        .collect()
}

// ------------------------------------------------------- property predicates

/// (a) Every countermodel re-verifies: all premises hold and the conclusion
/// fails under `evaluate_statement` on the returned labelled model.
pub fn check_countermodel_reverifies(
    syl: &Syllogism,
    policy: ImportPolicy,
    bound: u64,
) -> Result<(), String> {
    let verdict = check_validity(syl, policy, bound);
    let Verdict::CounterModel { model } = &verdict else {
        return Ok(());
    };
    // reconstruct the statements the search actually evaluated
    let mut effective = transforms::desugar_syllogism(syl);
    if policy == ImportPolicy::ExplicitPremise {
        effective = transforms::add_import_premises(&effective, ImportScope::SubjectsOnly);
    }
    for premise in effective.premises() {
        match evaluate_statement(model, premise) {
            Ok(true) => {}
            other => return Err(format!("premise {premise} does not hold: {other:?}")),
        }
        if policy == ImportPolicy::UniversalImport
            && matches!(premise.quantifier(), Quantifier::All | Quantifier::No)
            && model
                .extension(premise.subject())
                .is_some_and(|e| e.is_empty())
        {
            return Err(format!(
                "universal premise {premise} has an empty subject under universal import"
            ));
        }
    }
    match evaluate_statement(model, effective.conclusion()) {
        Ok(false) | Err(EvalError::UndefinedProportion { .. }) => Ok(()),
        other => Err(format!(
            "conclusion {} not falsified: {other:?}",
            effective.conclusion()
        )),
    }
}

/// (b) Contradictory square pairs disagree in every model with |U| <= 4,
/// empty-subject models included.
pub fn check_contradictories_disagree(
    pair: (Quantifier, Quantifier),
    universe: usize,
) -> Result<(), String> {
    let s1 = stmt(pair.0.clone(), "s", "p");
    let s2 = stmt(pair.1.clone(), "s", "p");
    for model in all_two_term_models(universe) {
        let v1 = evaluate_statement(&model, &s1).map_err(|e| e.to_string())?;
        let v2 = evaluate_statement(&model, &s2).map_err(|e| e.to_string())?;
        if v1 == v2 {
            return Err(format!("{s1} and {s2} both {v1} in {model}"));
        }
    }
    Ok(())
}

/// (c) Subalternation (all => some) holds exactly on non-empty subjects.
pub fn check_subaltern_on_nonempty(model: &FiniteModel) -> Result<(), String> {
    let all = stmt(Quantifier::All, "s", "p");
    let some = stmt(Quantifier::Some, "s", "p");
    let subject_nonempty = model
        .extension(&term("s"))
        .is_some_and(|ext| !ext.is_empty());
    let all_holds = evaluate_statement(model, &all).map_err(|e| e.to_string())?;
    let some_holds = evaluate_statement(model, &some).map_err(|e| e.to_string())?;
    if subject_nonempty && all_holds && !some_holds {
        return Err(format!(
            "subalternation fails on non-empty subject in {model}"
        ));
    }
    if !subject_nonempty && !all_holds {
        return Err("universal statements are true of empty subjects".into());
    }
    Ok(())
}

/// (d) Widening premise intervals never narrows the conclusion interval.
pub fn check_interval_monotonicity(
    base: (Interval, Interval),
    widened: (Interval, Interval),
    max_total: u64,
) -> Result<(), String> {
    let premises = |bounds: (Interval, Interval)| {
        [
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
        ]
    };
    let goal = ProportionGoal {
        numerator: RegionExpr::term(term("young")).and(term("students")),
        denominator: term("single"),
    };
    let narrow = interval_conclude_exhaustive(&premises(base), &goal, max_total);
    let wide = interval_conclude_exhaustive(&premises(widened), &goal, max_total);
    match (narrow, wide) {
        (Err(NumericError::Inconsistent), _) => Ok(()),
        (Ok(_), Err(e)) => Err(format!("widened premises became unsatisfiable: {e}")),
        (Err(e), _) => Err(format!("unexpected base failure: {e}")),
        (Ok(narrow), Ok(wide)) => {
            if wide.interval.contains_interval(&narrow.interval) {
                Ok(())
            } else {
                Err(format!(
                    "conclusion narrowed: {} vs widened {}",
                    narrow.interval, wide.interval
                ))
            }
        }
    }
}

/// (e) QEP alpha-cut families are nested.
pub fn check_qep_nested(t1: Trapezoid, t2: Trapezoid, alpha_levels: &[Rat]) -> Result<(), String> {
    let family = fuzzy_conclude_qep(&[t1, t2], FuzzySchema::IntersectionProduct, alpha_levels)
        .map_err(|e| e.to_string())?;
    if family.is_nested() {
        Ok(())
    } else {
        Err(format!("cuts not nested: {:?}", family.cuts()))
    }
}

/// (f) Bridge: the probabilistic reading of the classical quantifiers agrees
/// with set-engine truth at P(P|S) = |S∩P| / |S| on non-empty subjects.
pub fn check_conditional_set_bridge(
    model: &FiniteModel,
    epsilon: &ProbQuantifierConfig,
) -> Result<(), String> {
    let s_ext = model.extension(&term("s")).expect("model has s");
    if s_ext.is_empty() {
        return Ok(());
    }
    let p_ext = model.extension(&term("p")).expect("model has p");
    let inter = s_ext.intersection(p_ext).count() as i64;
    let frequency = rat(inter, s_ext.len() as i64);
    for q in [
        Quantifier::All,
        Quantifier::No,
        Quantifier::Some,
        Quantifier::SomeNot,
    ] {
        let statement = stmt(q.clone(), "s", "p");
        let set_truth = evaluate_statement(model, &statement).map_err(|e| e.to_string())?;
        let constraint = prob_interpret(&statement, epsilon).map_err(|e| e.to_string())?;
        let prob_truth = constraint.holds(frequency, true);
        if set_truth != prob_truth {
            return Err(format!(
                "{statement}: set says {set_truth}, P(P|S)={frequency} says {prob_truth} in {model}"
            ));
        }
    }
    Ok(())
}

/// (g) The heuristic conclusion is never more informative than either
/// premise.
pub fn check_min_heuristic_invariant(
    q1: Quantifier,
    q2: Quantifier,
    figure: usize,
) -> Result<(), String> {
    let order = Informativeness::default();
    let (p1, p2) = match figure {
        0 => (("m", "p"), ("s", "m")),
        1 => (("p", "m"), ("s", "m")),
        2 => (("m", "p"), ("m", "s")),
        _ => (("p", "m"), ("m", "s")),
    };
    let premise1 = stmt(q1.clone(), p1.0, p1.1);
    let premise2 = stmt(q2.clone(), p2.0, p2.1);
    let result = heuristic_conclude(&premise1, &premise2, &order).map_err(|e| e.to_string())?;
    let conclusion_tag = result
        .conclusion
        .quantifier()
        .tag()
        .ok_or("conclusion quantifier has no tag")?;
    let ok_against = |q: &Quantifier| {
        q.tag()
            .is_some_and(|t| order.at_least_as_informative(t, conclusion_tag))
    };
    // the conclusion quantifier must equal one of the premise quantifiers
    if result.conclusion.quantifier() != &q1 && result.conclusion.quantifier() != &q2 {
        return Err(format!(
            "conclusion quantifier {:?} is neither premise's",
            result.conclusion.quantifier()
        ));
    }
    if ok_against(&q1) && ok_against(&q2) {
        Ok(())
    } else {
        Err(format!(
            "{q1:?}/{q2:?} produced a more informative conclusion {conclusion_tag:?}"
        ))
    }
}

/// Tags usable by the heuristic engine.
pub fn arb_heuristic_quantifier() -> BoxedStrategy<Quantifier> {
    prop_oneof![
        Just(Quantifier::All),
        Just(Quantifier::AlmostAll),
        Just(Quantifier::Most),
        Just(Quantifier::Many),
        Just(Quantifier::Few),
        Just(Quantifier::Some),
        Just(Quantifier::No),
        Just(Quantifier::SomeNot),
    ]
    .boxed()
}

/// Any renderable statement: crisp or fuzzy quantifier, negation where the
/// canonical form permits it, multi-word and singleton terms.
pub fn arb_renderable_statement() -> BoxedStrategy<Statement> {
    let quantifier = prop_oneof![
        arb_crisp_quantifier(),
        arb_trapezoid().prop_map(Quantifier::Trapezoid),
    ];
    let term_name = prop_oneof![
        Just("students".to_string()),
        Just("young people".to_string()),
        Just("consulting detective".to_string()),
        Just("tall".to_string()),
        Just("mortal".to_string()),
    ];
    (quantifier, term_name.clone(), term_name, any::<bool>())
        .prop_filter_map("terms must differ", |(q, s, p, negated)| {
            if s == p {
                return None;
            }
            let negated =
                negated && !matches!(q, Quantifier::Some | Quantifier::SomeNot | Quantifier::No);
            Statement::new(q, term(&s), term(&p), negated).ok()
        })
        .boxed()
}
