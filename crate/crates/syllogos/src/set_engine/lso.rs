//! Logic Square of Opposition relations between classical statements.
//!
//! The relation tables are data, not code, so an alternative relation set
//! can be swapped in via [`SquareTable::custom`].

use crate::model::{QuantifierTag, Statement};
use crate::set_engine::LsoError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The four classical square relations. `Subaltern` relates a universal
/// corner to its existential counterpart; the universal member of the pair
/// is the superaltern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LsoRelation {
    Contradictory,
    Contrary,
    Subcontrary,
    Subaltern,
}

impl fmt::Display for LsoRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LsoRelation::Contradictory => f.write_str("contradictory"),
            LsoRelation::Contrary => f.write_str("contrary"),
            LsoRelation::Subcontrary => f.write_str("subcontrary"),
            LsoRelation::Subaltern => f.write_str("subaltern"),
        }
    }
}

/// Which square to consult.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SquareKind {
    /// The traditional square: contradiction, contrariety, subcontrariety
    /// and subalternation.
    Classical,
    /// The modern square without existential import: only the negation
    /// (contradiction) relationships remain.
    Modern,
}

/// An unordered-pair lookup table of square relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTable {
    entries: Vec<(QuantifierTag, QuantifierTag, LsoRelation)>,
}

impl SquareTable {
    pub fn classical() -> SquareTable {
        use LsoRelation::*;
        use QuantifierTag::*;
        SquareTable {
            entries: vec![
                (All, SomeNot, Contradictory),
                (No, Some, Contradictory),
                (All, No, Contrary),
                (Some, SomeNot, Subcontrary),
                (All, Some, Subaltern),
                (No, SomeNot, Subaltern),
            ],
        }
    }

    pub fn modern() -> SquareTable {
        use LsoRelation::*;
        use QuantifierTag::*;
        SquareTable {
            entries: vec![(All, SomeNot, Contradictory), (No, Some, Contradictory)],
        }
    }

    pub fn for_kind(kind: SquareKind) -> SquareTable {
        match kind {
            SquareKind::Classical => SquareTable::classical(),
            SquareKind::Modern => SquareTable::modern(),
        }
    }

    /// A user-supplied square, for swapping in alternative relation sets.
    pub fn custom(entries: Vec<(QuantifierTag, QuantifierTag, LsoRelation)>) -> SquareTable {
        SquareTable { entries }
    }

    /// Relation of the unordered tag pair, if the table has one.
    pub fn relation(&self, a: QuantifierTag, b: QuantifierTag) -> Option<LsoRelation> {
        self.entries
            .iter()
            .find(|(x, y, _)| (*x == a && *y == b) || (*x == b && *y == a))
            .map(|(_, _, rel)| *rel)
    }
}

/// Looks up the square relation between two statements over the same
/// subject and predicate. Non-classical quantifiers (and negated
/// predicates, which are not square corners) yield `None`; statements over
/// different term pairs are a [`LsoError::TermMismatch`].
pub fn lso_relation(
    s1: &Statement,
    s2: &Statement,
    square: SquareKind,
) -> Result<Option<LsoRelation>, LsoError> {
    lso_relation_in(s1, s2, &SquareTable::for_kind(square))
}

/// [`lso_relation`] against an explicit table.
pub fn lso_relation_in(
    s1: &Statement,
    s2: &Statement,
    table: &SquareTable,
) -> Result<Option<LsoRelation>, LsoError> {
    if s1.subject() != s2.subject() || s1.predicate() != s2.predicate() {
        return Err(LsoError::TermMismatch);
    }
    if !s1.quantifier().is_classical()
        || !s2.quantifier().is_classical()
        || s1.predicate_negated()
        || s2.predicate_negated()
    {
        return Ok(None);
    }
    let a = s1
        .quantifier()
        .tag()
        .expect("classical quantifiers have tags");
    let b = s2
        .quantifier()
        .tag()
        .expect("classical quantifiers have tags");
    Ok(table.relation(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Quantifier, Term};

    fn stmt(q: Quantifier) -> Statement {
        Statement::new(q, Term::new("s").unwrap(), Term::new("p").unwrap(), false).unwrap()
    }

    #[test]
    fn classical_square_matches_the_standard_relations() {
        let cases = [
            (
                Quantifier::All,
                Quantifier::SomeNot,
                LsoRelation::Contradictory,
            ),
            (Quantifier::No, Quantifier::Some, LsoRelation::Contradictory),
            (Quantifier::All, Quantifier::No, LsoRelation::Contrary),
            (
                Quantifier::Some,
                Quantifier::SomeNot,
                LsoRelation::Subcontrary,
            ),
            (Quantifier::All, Quantifier::Some, LsoRelation::Subaltern),
            (Quantifier::No, Quantifier::SomeNot, LsoRelation::Subaltern),
        ];
        for (a, b, expected) in cases {
            assert_eq!(
                lso_relation(&stmt(a.clone()), &stmt(b.clone()), SquareKind::Classical).unwrap(),
                Some(expected),
                "{a:?} vs {b:?}"
            );
        }
    }

    #[test]
    fn modern_square_keeps_only_contradiction() {
        assert_eq!(
            lso_relation(
                &stmt(Quantifier::All),
                &stmt(Quantifier::SomeNot),
                SquareKind::Modern
            )
            .unwrap(),
            Some(LsoRelation::Contradictory)
        );
        assert_eq!(
            lso_relation(
                &stmt(Quantifier::All),
                &stmt(Quantifier::Some),
                SquareKind::Modern
            )
            .unwrap(),
            None
        );
    }

    #[test]
    fn intermediate_quantifiers_have_no_square_relation() {
        assert_eq!(
            lso_relation(
                &stmt(Quantifier::Most),
                &stmt(Quantifier::Few),
                SquareKind::Classical
            )
            .unwrap(),
            None
        );
    }

    #[test]
    fn different_term_pairs_are_a_mismatch() {
        let other = Statement::new(
            Quantifier::Some,
            Term::new("s").unwrap(),
            Term::new("q").unwrap(),
            false,
        )
        .unwrap();
        assert_eq!(
            lso_relation(&stmt(Quantifier::All), &other, SquareKind::Classical),
            Err(LsoError::TermMismatch)
        );
    }
}
