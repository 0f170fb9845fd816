//! Venn-region cardinality vectors.
//!
//! A model over `t` terms is fully described, up to renaming of atoms, by
//! the cardinality of each of the `2^t` Venn regions. All exhaustive
//! searches in this crate enumerate these vectors rather than labelled
//! models.

use crate::model::{FiniteModel, Term};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Cardinalities of the `2^t` Venn regions over an ordered term list.
/// Region `r` contains the atoms that belong to exactly the terms whose
/// index bit is set in `r`. Total must be at least 1 (models have non-empty
/// universes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionVector {
    terms: Vec<Term>,
    counts: Vec<u64>,
}

impl RegionVector {
    pub fn new(terms: Vec<Term>, counts: Vec<u64>) -> Option<RegionVector> {
        if counts.len() != 1usize << terms.len() {
            return None;
        }
        if counts.iter().sum::<u64>() == 0 {
            return None;
        }
        Some(RegionVector { terms, counts })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn term_index(&self, term: &Term) -> Option<usize> {
        self.terms.iter().position(|t| t == term)
    }

    /// Sum of the counts of the regions selected by `pred` (a predicate on
    /// the region bitmask).
    pub fn count_where(&self, pred: impl Fn(usize) -> bool) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .filter(|(mask, _)| pred(*mask))
            .map(|(_, c)| *c)
            .sum()
    }

    /// Cardinality of a term's extension.
    pub fn term_cardinality(&self, term: &Term) -> Option<u64> {
        let bit = self.term_index(term)?;
        Some(self.count_where(|mask| mask & (1 << bit) != 0))
    }

    /// Cardinality of the region set described by `expr`.
    pub fn expr_cardinality(&self, expr: &RegionExpr) -> Option<u64> {
        let mut bits = Vec::with_capacity(expr.literals().len());
        for (term, positive) in expr.literals() {
            bits.push((self.term_index(term)?, *positive));
        }
        Some(self.count_where(|mask| {
            bits.iter()
                .all(|(bit, positive)| (mask & (1 << bit) != 0) == *positive)
        }))
    }

    /// Materializes a labelled model with atoms `a0, a1, ...` assigned
    /// region by region in index order.
    pub fn to_finite_model(&self) -> FiniteModel {
        let total = self.total();
        let atoms: Vec<String> = (0..total).map(|i| format!("a{i}")).collect();
        let mut region_of = Vec::with_capacity(total as usize);
        for (mask, count) in self.counts.iter().enumerate() {
            for _ in 0..*count {
                region_of.push(mask);
            }
        }
        let mut model = FiniteModel::new(atoms.iter().cloned());
        for (bit, term) in self.terms.iter().enumerate() {
            let extension = atoms
                .iter()
                .zip(&region_of)
                .filter(|(_, mask)| *mask & (1 << bit) != 0)
                .map(|(atom, _)| atom.clone());
            model = model
                .with_extension(term.clone(), extension)
                .expect("atoms are drawn from the universe");
        }
        model
    }
}

impl fmt::Display for RegionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mask, count) in self.counts.iter().enumerate() {
            if *count == 0 {
                continue;
            }
            if f.width().is_some() {
                write!(f, " ")?;
            }
            let mut first = true;
            write!(f, "|")?;
            for (bit, term) in self.terms.iter().enumerate() {
                if !first {
                    write!(f, "∩")?;
                }
                if mask & (1 << bit) == 0 {
                    write!(f, "¬")?;
                }
                write!(f, "{term}")?;
                first = false;
            }
            write!(f, "|={count} ")?;
        }
        Ok(())
    }
}

/// An intersection of (possibly complemented) terms, naming a union of Venn
/// regions: `young ∩ ¬students` is `RegionExpr::term(young).and_not(students)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionExpr {
    literals: Vec<(Term, bool)>,
}

impl RegionExpr {
    pub fn term(term: Term) -> RegionExpr {
        RegionExpr {
            literals: vec![(term, true)],
        }
    }

    pub fn complement_term(term: Term) -> RegionExpr {
        RegionExpr {
            literals: vec![(term, false)],
        }
    }

    pub fn and(mut self, term: Term) -> RegionExpr {
        self.literals.push((term, true));
        self
    }

    pub fn and_not(mut self, term: Term) -> RegionExpr {
        self.literals.push((term, false));
        self
    }

    pub fn literals(&self) -> &[(Term, bool)] {
        &self.literals
    }

    /// The positive term set, when every literal is positive.
    pub fn positive_terms(&self) -> Option<Vec<&Term>> {
        self.literals
            .iter()
            .map(|(t, pos)| pos.then_some(t))
            .collect()
    }

    pub fn mentioned_terms(&self) -> impl Iterator<Item = &Term> {
        self.literals.iter().map(|(t, _)| t)
    }
}

impl fmt::Display for RegionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (term, positive)) in self.literals.iter().enumerate() {
            if i > 0 {
                write!(f, " and ")?;
            }
            if !positive {
                write!(f, "not ")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

/// Calls `visit` for every vector of `parts` non-negative counts summing to
/// exactly `total`, in ascending lexicographic order. `visit` returning
/// `Some(r)` short-circuits the walk.
pub fn for_each_composition<R>(
    total: u64,
    parts: usize,
    mut visit: impl FnMut(&[u64]) -> Option<R>,
) -> Option<R> {
    let mut counts = vec![0u64; parts];
    fn recurse<R>(
        counts: &mut Vec<u64>,
        index: usize,
        remaining: u64,
        visit: &mut impl FnMut(&[u64]) -> Option<R>,
    ) -> Option<R> {
        if index + 1 == counts.len() {
            counts[index] = remaining;
            let result = visit(counts);
            counts[index] = 0;
            return result;
        }
        for value in 0..=remaining {
            counts[index] = value;
            if let Some(r) = recurse(counts, index + 1, remaining - value, visit) {
                counts[index] = 0;
                return Some(r);
            }
        }
        counts[index] = 0;
        None
    }
    if parts == 0 {
        return None;
    }
    recurse(&mut counts, 0, total, &mut visit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(name: &str) -> Term {
        Term::new(name).unwrap()
    }

    #[test]
    fn cardinalities_follow_bitmask_indexing() {
        // terms [s, p]: region 0 = outside both, 1 = s only, 2 = p only, 3 = both
        let rv = RegionVector::new(vec![term("s"), term("p")], vec![4, 3, 2, 1]).unwrap();
        assert_eq!(rv.total(), 10);
        assert_eq!(rv.term_cardinality(&term("s")), Some(4));
        assert_eq!(rv.term_cardinality(&term("p")), Some(3));
        let s_and_p = RegionExpr::term(term("s")).and(term("p"));
        assert_eq!(rv.expr_cardinality(&s_and_p), Some(1));
        let s_not_p = RegionExpr::term(term("s")).and_not(term("p"));
        assert_eq!(rv.expr_cardinality(&s_not_p), Some(3));
    }

    #[test]
    fn materialized_model_matches_counts() {
        let rv = RegionVector::new(vec![term("s"), term("p")], vec![1, 2, 0, 1]).unwrap();
        let model = rv.to_finite_model();
        assert_eq!(model.universe_size(), 4);
        assert_eq!(model.extension(&term("s")).unwrap().len(), 3);
        assert_eq!(model.extension(&term("p")).unwrap().len(), 1);
    }

    #[test]
    fn compositions_are_lexicographic_and_complete() {
        let mut seen = Vec::new();
        for_each_composition::<()>(2, 3, |c| {
            seen.push(c.to_vec());
            None
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![2, 0, 0],
            ]
        );
    }

    #[test]
    fn empty_vectors_rejected() {
        assert!(RegionVector::new(vec![term("s")], vec![0, 0]).is_none());
        assert!(RegionVector::new(vec![term("s")], vec![0]).is_none());
    }
}
