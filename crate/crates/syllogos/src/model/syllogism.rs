//! Syllogisms: ordered premises plus a conclusion, with figure
//! classification for the classical two-premise form.

use crate::model::statement::Statement;
use crate::model::term::Term;
use crate::model::ModelError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// The four Aristotelian figures, classified by where the middle term sits
/// in the two premises: (subject, predicate) -> I, (predicate, predicate)
/// -> II, (subject, subject) -> III, (predicate, subject) -> IV.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Figure {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Figure::I => f.write_str("I"),
            Figure::II => f.write_str("II"),
            Figure::III => f.write_str("III"),
            Figure::IV => f.write_str("IV"),
        }
    }
}

/// An argument with at least one premise and one conclusion. The classical
/// form has exactly two premises chaining three terms; transforms may append
/// further premises (existential import), so the premise list is open-ended.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Syllogism {
    premises: Vec<Statement>,
    conclusion: Statement,
}

impl Syllogism {
    pub fn new(premises: Vec<Statement>, conclusion: Statement) -> Result<Syllogism, ModelError> {
        if premises.is_empty() {
            return Err(ModelError::NoPremises);
        }
        Ok(Syllogism {
            premises,
            conclusion,
        })
    }

    pub fn premises(&self) -> &[Statement] {
        &self.premises
    }

    pub fn conclusion(&self) -> &Statement {
        &self.conclusion
    }

    pub fn statements(&self) -> impl Iterator<Item = &Statement> {
        self.premises
            .iter()
            .chain(std::iter::once(&self.conclusion))
    }

    /// All distinct terms, sorted by name for deterministic enumeration.
    pub fn terms(&self) -> Vec<Term> {
        let set: BTreeSet<Term> = self
            .statements()
            .flat_map(|s| s.terms().into_iter().cloned())
            .collect();
        set.into_iter().collect()
    }

    /// The middle term of the classical two-premise form: occurs in both
    /// premises and not in the conclusion.
    pub fn middle_term(&self) -> Result<Term, ModelError> {
        self.check_classical_shape().map(|(middle, _)| middle)
    }

    /// Figure classification per the position of the middle term; errors on
    /// arguments that are not in classical two-premise shape.
    pub fn figure(&self) -> Result<Figure, ModelError> {
        let (middle, _) = self.check_classical_shape()?;
        let in_subject_1 = *self.premises[0].subject() == middle;
        let in_subject_2 = *self.premises[1].subject() == middle;
        Ok(match (in_subject_1, in_subject_2) {
            (true, false) => Figure::I,
            (false, false) => Figure::II,
            (true, true) => Figure::III,
            (false, true) => Figure::IV,
        })
    }

    /// Validates the classical invariant: two premises, three distinct
    /// terms, each conclusion term in exactly one premise, middle term in
    /// both premises and absent from the conclusion. Returns the middle term
    /// and the premise index containing the conclusion subject.
    fn check_classical_shape(&self) -> Result<(Term, usize), ModelError> {
        let non_import: Vec<&Statement> = self
            .premises
            .iter()
            .filter(|p| !p.is_existence_import())
            .collect();
        if non_import.len() != 2 {
            return Err(ModelError::NotClassicalForm(format!(
                "expected 2 premises, found {}",
                non_import.len()
            )));
        }
        let terms = self.terms();
        let named: Vec<&Term> = terms.iter().collect();
        if named.len() != 3 {
            return Err(ModelError::NotClassicalForm(format!(
                "expected 3 distinct terms, found {}",
                named.len()
            )));
        }
        let subject = self.conclusion.subject();
        let predicate = self.conclusion.predicate();
        let occurs = |t: &Term, s: &Statement| s.subject() == t || s.predicate() == t;
        let subj_in: Vec<usize> = (0..2).filter(|&i| occurs(subject, non_import[i])).collect();
        let pred_in: Vec<usize> = (0..2)
            .filter(|&i| occurs(predicate, non_import[i]))
            .collect();
        if subj_in.len() != 1 || pred_in.len() != 1 || subj_in[0] == pred_in[0] {
            return Err(ModelError::NotClassicalForm(
                "conclusion terms must each occur in exactly one premise".into(),
            ));
        }
        let middle = terms
            .iter()
            .find(|t| *t != subject && *t != predicate)
            .cloned()
            .expect("three distinct terms imply a middle");
        if !(occurs(&middle, non_import[0]) && occurs(&middle, non_import[1])) {
            return Err(ModelError::NotClassicalForm(
                "middle term must occur in both premises".into(),
            ));
        }
        Ok((middle, subj_in[0]))
    }
}

impl fmt::Display for Syllogism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.premises {
            writeln!(f, "{p}")?;
        }
        writeln!(f, "---")?;
        write!(f, "{}", self.conclusion)
    }
}
