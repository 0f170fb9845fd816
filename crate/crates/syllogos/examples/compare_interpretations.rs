//! Both interpretations on the same arguments: where the set-based oracle
//! and the conditional heuristics agree, and where they pull apart.

use syllogos::conditional_engine::{heuristic_conclude, Informativeness};
use syllogos::model::{ImportPolicy, Verdict};
use syllogos::parser::parse_syllogism_file;
use syllogos::set_engine::check_validity;

fn compare(label: &str, corpus: &str) {
    let syllogism = parse_syllogism_file(corpus).unwrap();
    println!("== {label} ==");
    println!("{syllogism}");

    let verdict = check_validity(&syllogism, ImportPolicy::NoImport, 6);
    match &verdict {
        Verdict::Valid { bound_checked } => println!("set-based:   valid (bound {bound_checked})"),
        Verdict::CounterModel { model } => {
            println!(
                "set-based:   countermodel with |U| = {}",
                model.universe_size()
            )
        }
        Verdict::Undetermined { .. } => println!("set-based:   undetermined"),
    }

    let premises = syllogism.premises();
    match heuristic_conclude(&premises[0], &premises[1], &Informativeness::default()) {
        Ok(result) => {
            let matches = &result.conclusion == syllogism.conclusion();
            println!(
                "conditional: {} ({})",
                result.conclusion,
                if matches {
                    "matches the stated conclusion"
                } else {
                    "differs from the stated conclusion"
                }
            );
            let agree = verdict.is_valid() && matches;
            println!("agreement:   {}\n", if agree { "agree" } else { "diverge" });
        }
        Err(error) => {
            println!("conditional: rejected ({error})");
            println!("agreement:   diverge\n");
        }
    }
}

fn main() {
    compare(
        "Barbara",
        "All human beings are mortal\nAll Greeks are human beings\n---\nAll Greeks are mortal\n",
    );
    compare(
        "Barbari (needs import)",
        "All DT are MT\nAll NT are DT\n---\nSome NT are MT\n",
    );
    compare(
        "singular premise",
        "All human beings are mortal\nSocrates is a human beings\n---\nSocrates is mortal\n",
    );
    compare(
        "heuristically tempting, classically invalid (AAA figure IV)",
        "All p are m\nAll m are s\n---\nAll s are p\n",
    );
}
