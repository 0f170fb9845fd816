//! Singular statements as singletons: "Socrates is a human being" desugars
//! to "all {socrates} are human beings", where the braced term's extension
//! has exactly one element in every model the oracle enumerates.

use syllogos::conditional_engine::{prob_interpret, ConditionalError};
use syllogos::model::{ImportPolicy, ProbQuantifierConfig};
use syllogos::parser::{parse_statement, parse_syllogism_file};
use syllogos::set_engine::check_validity;
use syllogos::transforms::{desugar_singular, desugar_syllogism};

fn main() {
    let socrates = parse_statement("Socrates is a human beings").unwrap();
    println!("parsed:    {socrates}");
    let desugared = desugar_singular(&socrates);
    println!("desugared: {desugared}");
    assert!(desugared.subject().is_singleton());
    assert_eq!(desugar_singular(&desugared), desugared); // idempotent

    let syllogism = parse_syllogism_file(
        "All human beings are mortal\n\
         Socrates is a human beings\n\
         ---\n\
         Socrates is mortal\n",
    )
    .unwrap();
    println!("\n{}\n", desugar_syllogism(&syllogism));

    // the validity search desugars on its own
    let verdict = check_validity(&syllogism, ImportPolicy::NoImport, 6);
    println!("set engine: {verdict:?}");
    assert!(verdict.is_valid());

    // the conditional side has no quantifier to hang the link strength on,
    // so it rejects singular statements outright
    match prob_interpret(&socrates, &ProbQuantifierConfig::default()) {
        Err(ConditionalError::Unsupported { reason }) => {
            println!("conditional engine: rejected ({reason})")
        }
        other => println!("unexpected: {other:?}"),
    }
}
