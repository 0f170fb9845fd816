//! Fuzzy syllogistics via the Quantifier Extension Principle: premise
//! quantifiers are trapezoidal fuzzy numbers, the conclusion quantifier is
//! computed alpha-cut by alpha-cut with interval multiplication
//! (the intersection/product schema's ⊗).

use syllogos::model::{rat, Interval, Trapezoid};
use syllogos::numeric_engine::{fuzzy_conclude_qep, FuzzySchema};
use syllogos::parser::{parse_statement_with, NamedQuantifiers};

fn main() {
    // "most students are young; most young students are single"
    let named = NamedQuantifiers::builtin_defaults();
    let p1 = parse_statement_with("Most students are young", &named).unwrap();
    let p2 = parse_statement_with("Most young students are single", &named).unwrap();
    let trapezoid = |s: &syllogos::model::Statement| match s.quantifier() {
        syllogos::model::Quantifier::Trapezoid(t) => *t,
        other => panic!("expected a configured trapezoid, got {other}"),
    };

    let levels = [rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)];
    let family = fuzzy_conclude_qep(
        &[trapezoid(&p1), trapezoid(&p2)],
        FuzzySchema::IntersectionProduct,
        &levels,
    )
    .unwrap();
    println!("most ⊗ most students are young and single:");
    for cut in family.cuts() {
        println!(
            "  alpha {}: {}",
            syllogos::model::format_rat(&cut.alpha),
            cut.cut
        );
    }
    assert!(family.is_nested());

    // "almost all" squared, reading the quantifier as the interval [0.95, 1]
    let almost_all = Trapezoid::from_interval(Interval::new(rat(19, 20), rat(1, 1)).unwrap());
    let squared = fuzzy_conclude_qep(
        &[almost_all, almost_all],
        FuzzySchema::IntersectionProduct,
        &[rat(1, 1)],
    )
    .unwrap();
    println!("\n[0.95,1] ⊗ [0.95,1] = {}", squared.cuts()[0].cut);

    // the default trapezoid for "almost all", cut at the kernel
    let configured = Trapezoid::new(rat(19, 20), rat(97, 100), rat(49, 50), rat(1, 1)).unwrap();
    println!(
        "kernel of [0.95,0.97,0.98,1]: {}",
        configured.alpha_cut(&rat(1, 1))
    );
    let kernel_squared = fuzzy_conclude_qep(
        &[configured, configured],
        FuzzySchema::IntersectionProduct,
        &[rat(1, 1)],
    )
    .unwrap();
    println!("squared at alpha = 1: {}", kernel_squared.cuts()[0].cut);
}
