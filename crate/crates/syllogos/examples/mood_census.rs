//! Census of all 256 classical syllogisms (4 figures x 64 moods): 15 are
//! valid without existential import, 24 once every term is explicitly
//! assumed non-empty.

use syllogos::model::{Figure, ImportPolicy};
use syllogos::set_engine::{count_valid, enumerate_classical_moods, CheckOptions, EvalConfig};
use syllogos::transforms::ImportScope;

fn census(policy: ImportPolicy, scope: ImportScope, label: &str) {
    let results = enumerate_classical_moods(&CheckOptions {
        policy,
        import_scope: scope,
        max_universe: 5,
        eval: EvalConfig::default(),
    });
    println!(
        "{label}: {} of {} valid",
        count_valid(&results),
        results.len()
    );
    for figure in [Figure::I, Figure::II, Figure::III, Figure::IV] {
        let moods: Vec<&str> = results
            .iter()
            .filter(|r| r.figure == figure && r.verdict.is_valid())
            .map(|r| r.mood.as_str())
            .collect();
        println!("  figure {figure:3}: {}", moods.join(" "));
    }
    println!();
}

fn main() {
    census(
        ImportPolicy::NoImport,
        ImportScope::SubjectsOnly,
        "no import",
    );
    census(
        ImportPolicy::ExplicitPremise,
        ImportScope::SubjectsOnly,
        "explicit import, premise subjects only",
    );
    census(
        ImportPolicy::ExplicitPremise,
        ImportScope::AllTerms,
        "explicit import, all terms",
    );
}
