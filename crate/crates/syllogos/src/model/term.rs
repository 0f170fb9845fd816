//! Term names: the subjects and predicates statements relate.

use crate::model::ModelError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A term name, case-insensitive and whitespace-normalized.
///
/// Two terms are equal iff their normalized names are equal; no plural or
/// morphological unification is performed ("student" != "students").
/// Singleton terms — the set-based reading of a proper name — are namespaced
/// with braces (`{socrates}`) so they can never collide with a common noun.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Term {
    name: String,
}

fn normalize(name: &str) -> String {
    name.split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

impl Term {
    pub fn new(name: &str) -> Result<Term, ModelError> {
        let name = normalize(name);
        if name.is_empty() {
            return Err(ModelError::EmptyTermName);
        }
        Ok(Term { name })
    }

    /// Builds the singleton term for a proper name: `singular("Socrates")`
    /// yields the term `{socrates}` with the model-side constraint that its
    /// extension has exactly one element.
    pub fn singular(name: &str) -> Result<Term, ModelError> {
        let inner = normalize(name);
        if inner.is_empty() {
            return Err(ModelError::EmptyTermName);
        }
        Ok(Term {
            name: format!("{{{inner}}}"),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// True for brace-namespaced singleton terms.
    pub fn is_singleton(&self) -> bool {
        self.name.starts_with('{') && self.name.ends_with('}')
    }

    /// The proper name inside a singleton term, if this is one.
    pub fn singleton_label(&self) -> Option<&str> {
        if self.is_singleton() {
            Some(&self.name[1..self.name.len() - 1])
        } else {
            None
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_case_and_whitespace_insensitive() {
        let a = Term::new("  Human   Beings ").unwrap();
        let b = Term::new("human beings").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.name(), "human beings");
    }

    #[test]
    fn plural_and_singular_stay_distinct() {
        assert_ne!(
            Term::new("student").unwrap(),
            Term::new("students").unwrap()
        );
    }

    #[test]
    fn empty_names_rejected() {
        assert!(matches!(Term::new("   "), Err(ModelError::EmptyTermName)));
    }

    #[test]
    fn singleton_namespacing_avoids_common_noun_collision() {
        let singular = Term::singular("Socrates").unwrap();
        let noun = Term::new("socrates").unwrap();
        assert_ne!(singular, noun);
        assert!(singular.is_singleton());
        assert!(!noun.is_singleton());
        assert_eq!(singular.singleton_label(), Some("socrates"));
    }
}
