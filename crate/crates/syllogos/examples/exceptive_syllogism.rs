//! Exceptive syllogistics: "all but k" chains computed two ways. The
//! literal arithmetic (assumed cardinality minus the second exception)
//! reproduces the worked example; the sound bound reports what models can
//! actually realize. They disagree, and both are shown.

use std::collections::BTreeMap;
use syllogos::model::Term;
use syllogos::numeric_engine::{
    exceptive_conclude, sound_exception_range_exhaustive, ExceptiveMode, ExceptiveOutcome,
};
use syllogos::parser::parse_statement;

fn main() {
    let p1 = parse_statement("All but 0 students are tall").unwrap();
    let p2 = parse_statement("All but 19 young people are students").unwrap();
    println!("{p1}\n{p2}\nassuming |students| = 100\n");

    let cards: BTreeMap<Term, u64> = [(Term::new("students").unwrap(), 100u64)]
        .into_iter()
        .collect();

    let literal = exceptive_conclude(&p1, &p2, &cards, ExceptiveMode::Literal).unwrap();
    let sound = exceptive_conclude(&p1, &p2, &cards, ExceptiveMode::SoundBound).unwrap();
    println!("literal:     {literal:?}   (100 - 19 = 81)");
    println!("sound-bound:   {sound:?}");
    println!("the literal 81 is far outside the sound range [0,19]\n");

    // scaled down so the exhaustive model search can confirm the arithmetic
    let p1 = parse_statement("All but 1 m are p").unwrap();
    let p2 = parse_statement("All but 2 s are m").unwrap();
    let cards: BTreeMap<Term, u64> = [(Term::new("m").unwrap(), 5u64)].into_iter().collect();
    let sound = exceptive_conclude(&p1, &p2, &cards, ExceptiveMode::SoundBound).unwrap();
    let oracle = sound_exception_range_exhaustive(&p1, &p2, &cards, 12)
        .unwrap()
        .expect("satisfiable premises");
    println!("x1 = 1, x2 = 2, |m| = 5:");
    println!("  arithmetic sound bound: {sound:?}");
    println!(
        "  exhaustive oracle:      exception in [{}, {}]",
        oracle.0, oracle.1
    );
    let ExceptiveOutcome::Sound {
        min_exception,
        max_exception,
    } = sound
    else {
        unreachable!()
    };
    assert_eq!((min_exception, max_exception), oracle);
}
