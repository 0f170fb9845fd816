//! The Logic Square of Opposition, classical and modern. The modern square
//! drops everything but the contradiction (negation) relationships, which
//! is how it dispenses with existential import.

use syllogos::parser::parse_statement;
use syllogos::set_engine::{lso_relation, SquareKind};

fn main() {
    let corners = [
        "All swans are white",
        "No swans are white",
        "Some swans are white",
        "Some swans are not white",
    ];
    for kind in [SquareKind::Classical, SquareKind::Modern] {
        println!("{kind:?} square:");
        for (i, a) in corners.iter().enumerate() {
            for b in corners.iter().skip(i + 1) {
                let s1 = parse_statement(a).unwrap();
                let s2 = parse_statement(b).unwrap();
                match lso_relation(&s1, &s2, kind).unwrap() {
                    Some(relation) => println!("  {a:28} / {b:28} -> {relation}"),
                    None => println!("  {a:28} / {b:28} -> (none)"),
                }
            }
        }
        println!();
    }

    // intermediate quantifiers sit outside the square
    let most = parse_statement("Most swans are white").unwrap();
    let few = parse_statement("Few swans are white").unwrap();
    assert_eq!(
        lso_relation(&most, &few, SquareKind::Classical).unwrap(),
        None
    );
    println!("most/few: no square relation (intermediate quantifiers)");

    // mismatched term pairs are an error rather than 'no relation'
    let other = parse_statement("All geese are white").unwrap();
    let swans = parse_statement("All swans are white").unwrap();
    println!(
        "different subjects: {:?}",
        lso_relation(&swans, &other, SquareKind::Classical)
    );
}
