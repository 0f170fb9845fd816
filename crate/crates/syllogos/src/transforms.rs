//! Statement-level rewrites shared by the engines: singular-statement
//! desugaring and existential-import premise injection.

use crate::model::{Statement, StatementMarker, Syllogism, Term};
use serde::{Deserialize, Serialize};

/// Which terms receive an explicit existence premise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImportScope {
    /// The subject terms of the premises, as stated in the explicit-import
    /// proposal.
    SubjectsOnly,
    /// Every term of the syllogism, conclusion included. Needed to recover
    /// the classical count of 24 valid moods.
    AllTerms,
}

/// Rewrites the singular surface form "Name is P" into `all {name} are P`,
/// where `{name}` is a singleton term whose extension has exactly one
/// element in every model the oracle enumerates. Idempotent; statements
/// that are not singular are returned unchanged.
pub fn desugar_singular(stmt: &Statement) -> Statement {
    if stmt.marker() != StatementMarker::Singular {
        return stmt.clone();
    }
    let singleton = Term::singular(stmt.subject().name())
        .expect("singular statements carry a non-empty subject name");
    Statement::new(
        stmt.quantifier().clone(),
        singleton,
        stmt.predicate().clone(),
        stmt.predicate_negated(),
    )
    .expect("desugared singular statement stays canonical")
}

/// Desugars every singular statement in a syllogism.
pub fn desugar_syllogism(syl: &Syllogism) -> Syllogism {
    Syllogism::new(
        syl.premises().iter().map(desugar_singular).collect(),
        desugar_singular(syl.conclusion()),
    )
    .expect("premise count unchanged")
}

/// Appends one existence premise "there is at least one T" per term in
/// scope, encoded as `at least 1 (T, T)`. Idempotent: terms that already
/// have an existence premise are skipped, and so are singleton terms (their
/// extensions are pinned to exactly one element anyway). Never touches the
/// conclusion or the existing premises.
pub fn add_import_premises(syl: &Syllogism, scope: ImportScope) -> Syllogism {
    let mut targets: Vec<Term> = Vec::new();
    let mut push = |term: &Term| {
        if !term.is_singleton() && !targets.contains(term) {
            targets.push(term.clone());
        }
    };
    match scope {
        ImportScope::SubjectsOnly => {
            for premise in syl.premises() {
                if !premise.is_existence_import() {
                    push(premise.subject());
                }
            }
        }
        ImportScope::AllTerms => {
            for stmt in syl.statements() {
                if !stmt.is_existence_import() {
                    push(stmt.subject());
                    push(stmt.predicate());
                }
            }
        }
    }

    let mut premises = syl.premises().to_vec();
    for term in targets {
        let already = premises
            .iter()
            .any(|p| p.is_existence_import() && p.subject() == &term);
        if !already {
            premises.push(Statement::existence(term));
        }
    }
    Syllogism::new(premises, syl.conclusion().clone()).expect("premises never removed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Quantifier;

    fn term(name: &str) -> Term {
        Term::new(name).unwrap()
    }

    fn stmt(q: Quantifier, s: &str, p: &str) -> Statement {
        Statement::new(q, term(s), term(p), false).unwrap()
    }

    #[test]
    fn desugar_produces_singleton_universal() {
        let socrates = Statement::singular("Socrates", term("human beings")).unwrap();
        let desugared = desugar_singular(&socrates);
        assert_eq!(*desugared.quantifier(), Quantifier::All);
        assert!(desugared.subject().is_singleton());
        assert_eq!(desugared.subject().name(), "{socrates}");
        assert_eq!(desugared.marker(), StatementMarker::None);
    }

    #[test]
    fn desugar_is_idempotent() {
        let socrates = Statement::singular("Socrates", term("mortal")).unwrap();
        let once = desugar_singular(&socrates);
        let twice = desugar_singular(&once);
        assert_eq!(once, twice);
    }

    #[test]
    fn import_adds_existence_premise_for_premise_subjects() {
        // no consulting detective is Spanish
        let syl = Syllogism::new(
            vec![stmt(Quantifier::No, "consulting detective", "spanish")],
            stmt(Quantifier::SomeNot, "consulting detective", "spanish"),
        )
        .unwrap();
        let imported = add_import_premises(&syl, ImportScope::SubjectsOnly);
        assert_eq!(imported.premises().len(), 2);
        let added = &imported.premises()[1];
        assert!(added.is_existence_import());
        assert_eq!(
            added.to_string(),
            "there is at least one consulting detective"
        );
        assert_eq!(imported.conclusion(), syl.conclusion());
    }

    #[test]
    fn import_is_idempotent() {
        let syl = Syllogism::new(
            vec![stmt(Quantifier::No, "consulting detective", "spanish")],
            stmt(Quantifier::SomeNot, "consulting detective", "spanish"),
        )
        .unwrap();
        let once = add_import_premises(&syl, ImportScope::SubjectsOnly);
        let twice = add_import_premises(&once, ImportScope::SubjectsOnly);
        assert_eq!(once, twice);
    }

    #[test]
    fn all_terms_scope_covers_predicates_and_conclusion() {
        let syl = Syllogism::new(
            vec![
                stmt(Quantifier::All, "m", "p"),
                stmt(Quantifier::All, "s", "m"),
            ],
            stmt(Quantifier::Some, "s", "p"),
        )
        .unwrap();
        let imported = add_import_premises(&syl, ImportScope::AllTerms);
        let existence_subjects: Vec<&str> = imported
            .premises()
            .iter()
            .filter(|p| p.is_existence_import())
            .map(|p| p.subject().name())
            .collect();
        assert_eq!(existence_subjects, vec!["m", "p", "s"]);
    }
}
