//! The conditional interpretation: quantifiers as bands on P(P|S), and
//! conclusion generation by the min- and attachment-heuristics.

use syllogos::conditional_engine::{heuristic_conclude, prob_interpret, Informativeness};
use syllogos::model::{rat, ProbQuantifierConfig};
use syllogos::parser::parse_statement;

fn main() {
    let cfg = ProbQuantifierConfig::default();
    println!("probabilistic readings (epsilon = 1/10):");
    for text in [
        "All S are P",
        "No S are P",
        "Some S are P",
        "Some S are not P",
        "Most S are P",
        "Few S are P",
    ] {
        let statement = parse_statement(text).unwrap();
        let constraint = prob_interpret(&statement, &cfg).unwrap();
        println!("  {text:20} -> {}", constraint.describe());
    }

    // AII, figure I: the max-premise is universal, the min-premise
    // existential; the conclusion takes the min quantifier and attaches the
    // min-premise's subject
    let premise1 = parse_statement("All students are tall").unwrap();
    let premise2 = parse_statement("Some young people are students").unwrap();
    let result = heuristic_conclude(&premise1, &premise2, &Informativeness::default()).unwrap();
    println!("\n{premise1}   (max-premise)");
    println!("{premise2}   (min-premise)");
    println!("---");
    println!("{}", result.conclusion);
    for line in &result.trace {
        println!("  {line}");
    }

    // a custom epsilon narrows the most/few bands
    let tight = ProbQuantifierConfig::new(rat(1, 100)).unwrap();
    let most = prob_interpret(&parse_statement("Most S are P").unwrap(), &tight).unwrap();
    println!("\nwith epsilon = 1/100: most -> {}", most.describe());

    // heuristics are generation, not proof: AAA in figure IV is heuristically
    // produced yet classically invalid
    let p1 = parse_statement("All p are m").unwrap();
    let p2 = parse_statement("All m are s").unwrap();
    let generated = heuristic_conclude(&p1, &p2, &Informativeness::default()).unwrap();
    println!("\nfigure IV, all/all generates: {}", generated.conclusion);
    println!("(the set engine refutes that one; see compare_interpretations)");
}
