//! Existential import, three ways. The subaltern mood Barbari (AAI-1) is
//! invalid when universal statements are true of empty subjects, and valid
//! once the import is assumed — either baked into the universal quantifier
//! or stated as an explicit premise.

use syllogos::model::{ImportPolicy, Verdict};
use syllogos::parser::{parse_statement, parse_syllogism_file};
use syllogos::set_engine::check_validity;
use syllogos::transforms::{add_import_premises, ImportScope};

fn main() {
    let barbari = parse_syllogism_file(
        "All DT are MT\n\
         All NT are DT\n\
         ---\n\
         Some NT are MT\n",
    )
    .unwrap();
    println!("{barbari}\n");

    for policy in [
        ImportPolicy::NoImport,
        ImportPolicy::UniversalImport,
        ImportPolicy::ExplicitPremise,
    ] {
        match check_validity(&barbari, policy, 6) {
            Verdict::Valid { bound_checked } => {
                println!("{policy:?}: valid (bound {bound_checked})")
            }
            Verdict::CounterModel { model } => {
                println!(
                    "{policy:?}: countermodel with |U| = {}",
                    model.universe_size()
                );
                print!("{model}");
            }
            Verdict::Undetermined { .. } => unreachable!("crisp statements"),
        }
    }

    // the explicit premises the third policy injects, spelled out
    let imported = add_import_premises(&barbari, ImportScope::SubjectsOnly);
    println!("\nwith explicit import premises:");
    println!("{imported}\n");

    // explicit import premises parse and render as plain statements
    let existence = parse_statement("there is at least one consulting detective").unwrap();
    println!("an existence premise on its own: {existence}");
    assert!(existence.is_existence_import());
}
