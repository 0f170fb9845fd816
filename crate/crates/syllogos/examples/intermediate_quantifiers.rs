//! Intermediate syllogistics: crisp "most", "many", "few" and "almost all"
//! between the universal and existential corners. "most S are P" holds when
//! |S ∩ P| > |S − P|; the other thresholds are configurable.

use syllogos::model::{rat, ImportPolicy, Term};
use syllogos::parser::{parse_statement, parse_syllogism_file};
use syllogos::set_engine::{
    check_validity, evaluate_statement, evaluate_statement_with, EvalConfig,
};

fn main() {
    // the worked intermediate syllogism, exhaustively valid at small bounds
    let syllogism = parse_syllogism_file(
        "All students are tall\n\
         Most young people are students\n\
         ---\n\
         Most young people are tall\n",
    )
    .unwrap();
    println!("{syllogism}\n");
    let verdict = check_validity(&syllogism, ImportPolicy::NoImport, 7);
    println!("verdict at bound 7: {verdict:?}\n");

    // crisp "most" on a concrete model: 3 of 5 young people are students
    let young = Term::new("young people").unwrap();
    let students = Term::new("students").unwrap();
    let model = syllogos::model::FiniteModel::new((0..5).map(|i| format!("a{i}")))
        .with_extension(young.clone(), (0..5).map(|i| format!("a{i}")))
        .unwrap()
        .with_extension(students.clone(), (0..3).map(|i| format!("a{i}")))
        .unwrap();
    let most = parse_statement("Most young people are students").unwrap();
    println!(
        "3 of 5: most young people are students = {:?}",
        evaluate_statement(&model, &most)
    );

    // "few" defaults to 'no more than 20%', here 3/5 is too many
    let few = parse_statement("Few young people are students").unwrap();
    println!(
        "3 of 5: few young people are students = {:?}",
        evaluate_statement(&model, &few)
    );

    // thresholds are knobs, not constants
    let generous = EvalConfig {
        theta_few: rat(3, 5),
        ..EvalConfig::default()
    };
    println!(
        "same model with theta_few = 3/5: {:?}",
        evaluate_statement_with(&model, &few, &generous)
    );

    // proportional quantifiers are undefined on an empty subject
    let empty = syllogos::model::FiniteModel::new((0..2).map(|i| format!("a{i}")))
        .with_extension(young, std::iter::empty())
        .unwrap()
        .with_extension(students, (0..2).map(|i| format!("a{i}")))
        .unwrap();
    println!("empty subject: {:?}", evaluate_statement(&empty, &most));
}
