//! Quantified statements "Q S are P" in canonical form.

use crate::model::quantifier::Quantifier;
use crate::model::term::Term;
use crate::model::ModelError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Provenance marker for statements that get special treatment downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatementMarker {
    #[default]
    None,
    /// Parsed from the singular surface form "Name is P"; consumed by
    /// `transforms::desugar_singular`.
    Singular,
    /// Machine-generated existential-import premise "there is at least one T".
    /// The subject = predicate invariant is relaxed for these.
    ExistenceImport,
}

/// A canonical quantified statement.
///
/// Construction always canonicalizes: "some S are not P" becomes the
/// `SomeNot` variant with an un-negated predicate, so each logical statement
/// has exactly one representation of that pair. Fields are private to keep
/// every value canonical; statements are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Statement {
    #[serde(rename = "q")]
    quantifier: Quantifier,
    #[serde(rename = "s")]
    subject: Term,
    #[serde(rename = "p")]
    predicate: Term,
    #[serde(rename = "neg")]
    predicate_negated: bool,
    #[serde(default, skip_serializing_if = "marker_is_none")]
    marker: StatementMarker,
}

fn marker_is_none(marker: &StatementMarker) -> bool {
    *marker == StatementMarker::None
}

impl Statement {
    /// Canonicalizing constructor. Rejects statements relating a term to
    /// itself, malformed interval/trapezoid payloads, and the ambiguous
    /// "some … not … not" double representation.
    pub fn new(
        quantifier: Quantifier,
        subject: Term,
        predicate: Term,
        predicate_negated: bool,
    ) -> Result<Statement, ModelError> {
        Self::with_marker(
            quantifier,
            subject,
            predicate,
            predicate_negated,
            StatementMarker::None,
        )
    }

    pub(crate) fn with_marker(
        quantifier: Quantifier,
        subject: Term,
        predicate: Term,
        predicate_negated: bool,
        marker: StatementMarker,
    ) -> Result<Statement, ModelError> {
        quantifier.validate()?;
        if subject == predicate && marker != StatementMarker::ExistenceImport {
            return Err(ModelError::SubjectEqualsPredicate(subject));
        }
        let (quantifier, predicate_negated) = match (quantifier, predicate_negated) {
            (Quantifier::Some, true) => (Quantifier::SomeNot, false),
            (Quantifier::SomeNot, true) => return Err(ModelError::DoubleNegation),
            other => other,
        };
        Ok(Statement {
            quantifier,
            subject,
            predicate,
            predicate_negated,
            marker,
        })
    }

    /// The singular surface form "Name is P", pending desugaring into
    /// `all {name} are P`.
    pub fn singular(name: &str, predicate: Term) -> Result<Statement, ModelError> {
        Self::with_marker(
            Quantifier::All,
            Term::new(name)?,
            predicate,
            false,
            StatementMarker::Singular,
        )
    }

    /// The existential-import premise "there is at least one T", encoded as
    /// `at least 1 (T, T)` so that it holds exactly when T is non-empty.
    pub fn existence(term: Term) -> Statement {
        Statement {
            quantifier: Quantifier::AtLeast(1),
            subject: term.clone(),
            predicate: term,
            predicate_negated: false,
            marker: StatementMarker::ExistenceImport,
        }
    }

    pub fn quantifier(&self) -> &Quantifier {
        &self.quantifier
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Term {
        &self.predicate
    }

    /// Whether the predicate is complemented ("... are not P"). Negation
    /// is carried uniformly for every quantifier that keeps it after
    /// canonicalization, intermediate ones included, even though only the
    /// most/many forms conventionally appear negated in the wild.
    pub fn predicate_negated(&self) -> bool {
        self.predicate_negated
    }

    pub fn marker(&self) -> StatementMarker {
        self.marker
    }

    pub fn is_singular_surface(&self) -> bool {
        self.marker == StatementMarker::Singular
    }

    pub fn is_existence_import(&self) -> bool {
        self.marker == StatementMarker::ExistenceImport
    }

    /// True when this statement mentions a singleton term.
    pub fn mentions_singleton(&self) -> bool {
        self.subject.is_singleton() || self.predicate.is_singleton()
    }

    /// Replaces the subject/predicate pair, re-canonicalizing.
    pub fn with_terms(&self, subject: Term, predicate: Term) -> Result<Statement, ModelError> {
        Statement::with_marker(
            self.quantifier.clone(),
            subject,
            predicate,
            self.predicate_negated,
            self.marker,
        )
    }

    pub fn terms(&self) -> [&Term; 2] {
        [&self.subject, &self.predicate]
    }
}

fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}

impl fmt::Display for Statement {
    /// The canonical pretty-printer; output re-parses to an equal statement.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.marker {
            StatementMarker::ExistenceImport => {
                return write!(f, "there is at least one {}", self.subject);
            }
            StatementMarker::Singular => {
                return write!(
                    f,
                    "{} is {}",
                    capitalize(self.subject.name()),
                    self.predicate
                );
            }
            StatementMarker::None => {}
        }
        let copula = "are";
        let negation = if self.predicate_negated { "not " } else { "" };
        match &self.quantifier {
            Quantifier::SomeNot => {
                write!(f, "some {} {copula} not {}", self.subject, self.predicate)
            }
            q => write!(
                f,
                "{q} {} {copula} {negation}{}",
                self.subject, self.predicate
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rational::{rat, Interval};

    fn term(name: &str) -> Term {
        Term::new(name).unwrap()
    }

    #[test]
    fn some_not_canonicalizes_to_variant() {
        let s = Statement::new(Quantifier::Some, term("s"), term("p"), true).unwrap();
        assert_eq!(*s.quantifier(), Quantifier::SomeNot);
        assert!(!s.predicate_negated());
        let direct = Statement::new(Quantifier::SomeNot, term("s"), term("p"), false).unwrap();
        assert_eq!(s, direct);
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let s = Statement::new(Quantifier::Some, term("s"), term("p"), true).unwrap();
        let again = Statement::new(
            s.quantifier().clone(),
            s.subject().clone(),
            s.predicate().clone(),
            s.predicate_negated(),
        )
        .unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn identity_case_left_alone() {
        let s = Statement::new(Quantifier::All, term("s"), term("p"), false).unwrap();
        assert_eq!(*s.quantifier(), Quantifier::All);
    }

    #[test]
    fn reversed_interval_rejected() {
        let q = Quantifier::Interval(Interval {
            lo: rat(1, 2),
            hi: rat(3, 10),
        });
        assert!(Statement::new(q, term("s"), term("p"), false).is_err());
    }

    #[test]
    fn subject_equals_predicate_rejected_except_for_existence() {
        assert!(matches!(
            Statement::new(Quantifier::All, term("t"), term("t"), false),
            Err(ModelError::SubjectEqualsPredicate(_))
        ));
        let e = Statement::existence(term("t"));
        assert!(e.is_existence_import());
        assert_eq!(e.subject(), e.predicate());
    }

    #[test]
    fn double_negated_some_not_rejected() {
        assert!(matches!(
            Statement::new(Quantifier::SomeNot, term("s"), term("p"), true),
            Err(ModelError::DoubleNegation)
        ));
    }
}
