//! The classic Aristotelian syllogism through the set-based validity oracle:
//! parse it, classify its figure, and search every small model for a
//! countermodel.

use syllogos::model::ImportPolicy;
use syllogos::parser::parse_syllogism_file;
use syllogos::set_engine::check_validity;

fn main() {
    let syllogism = parse_syllogism_file(
        "All human beings are mortal\n\
         All Greeks are human beings\n\
         ---\n\
         All Greeks are mortal\n",
    )
    .expect("grammar-valid corpus text");

    println!("{syllogism}\n");
    println!("figure: {}", syllogism.figure().expect("classical form"));
    println!(
        "middle term: {}",
        syllogism.middle_term().expect("classical form")
    );

    let verdict = check_validity(&syllogism, ImportPolicy::NoImport, 6);
    println!("verdict: {verdict:?}");
    assert!(verdict.is_valid());

    // an invalid variant for contrast: swap the conclusion terms
    let invalid = parse_syllogism_file(
        "All human beings are mortal\n\
         All Greeks are human beings\n\
         ---\n\
         All mortal are Greeks\n",
    )
    .unwrap();
    match check_validity(&invalid, ImportPolicy::NoImport, 6) {
        syllogos::model::Verdict::CounterModel { model } => {
            println!("\nswapped conclusion is refuted by:\n{model}");
        }
        other => println!("\nunexpected verdict: {other:?}"),
    }
}
