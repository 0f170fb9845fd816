//! Interval syllogistics: premises bound proportions, the conclusion is the
//! most and least favourable proportion consistent with them. The Fréchet
//! closed form handles the shared-subject conjunction schema; exhaustive
//! region-vector search is the normative semantics it must agree with.

use syllogos::model::{rat, Interval, Term};
use syllogos::numeric_engine::{
    frechet_bounds, interval_conclude, interval_conclude_exhaustive, ProportionConstraint,
    ProportionGoal, RegionExpr,
};

fn main() {
    let single = Term::new("single people").unwrap();
    let young = Term::new("young").unwrap();
    let students = Term::new("students").unwrap();

    // [0.3,0.5] single people are young; [0.7,0.9] single people are students
    let premises = [
        ProportionConstraint {
            numerator: RegionExpr::term(young.clone()),
            denominator: single.clone(),
            bounds: Interval::new(rat(3, 10), rat(1, 2)).unwrap(),
        },
        ProportionConstraint {
            numerator: RegionExpr::term(students.clone()),
            denominator: single.clone(),
            bounds: Interval::new(rat(7, 10), rat(9, 10)).unwrap(),
        },
    ];
    let goal = ProportionGoal {
        numerator: RegionExpr::term(young).and(students),
        denominator: single.clone(),
    };

    let fast = frechet_bounds(&premises, &goal).expect("conjunction schema");
    println!("Fréchet bounds: {fast} {single} are {}", goal.numerator);

    let conclusion = interval_conclude(&premises, &goal, 40).unwrap();
    println!(
        "interval_conclude (route {:?}): {}",
        conclusion.route, conclusion.interval
    );

    let brute = interval_conclude_exhaustive(&premises, &goal, 40).unwrap();
    println!("exhaustive search at max_total 40: {}", brute.interval);
    if let Some(witness) = &brute.witness_min {
        println!("  minimum witnessed by {witness}");
    }
    if let Some(witness) = &brute.witness_max {
        println!("  maximum witnessed by {witness}");
    }
    assert_eq!(fast, brute.interval);
}
