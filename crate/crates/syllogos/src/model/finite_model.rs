//! Finite models: a universe of atoms plus one extension per term.

use crate::model::term::Term;
use crate::model::ModelError;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A finite interpretation assigning each term a subset of the universe.
/// Immutable once built; construction validates that every extension is a
/// subset of the universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteModel {
    universe: BTreeSet<String>,
    extensions: BTreeMap<Term, BTreeSet<String>>,
}

impl FiniteModel {
    pub fn new(universe: impl IntoIterator<Item = String>) -> FiniteModel {
        FiniteModel {
            universe: universe.into_iter().collect(),
            extensions: BTreeMap::new(),
        }
    }

    /// Builder-style extension assignment.
    pub fn with_extension(
        mut self,
        term: Term,
        atoms: impl IntoIterator<Item = String>,
    ) -> Result<FiniteModel, ModelError> {
        let atoms: BTreeSet<String> = atoms.into_iter().collect();
        if let Some(stray) = atoms.iter().find(|a| !self.universe.contains(*a)) {
            return Err(ModelError::AtomOutsideUniverse {
                term,
                atom: stray.clone(),
            });
        }
        self.extensions.insert(term, atoms);
        Ok(self)
    }

    pub fn universe(&self) -> &BTreeSet<String> {
        &self.universe
    }

    pub fn universe_size(&self) -> u64 {
        self.universe.len() as u64
    }

    pub fn extension(&self, term: &Term) -> Option<&BTreeSet<String>> {
        self.extensions.get(term)
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.extensions.keys()
    }

    /// Complement of a term's extension within the universe.
    pub fn complement(&self, extension: &BTreeSet<String>) -> BTreeSet<String> {
        self.universe.difference(extension).cloned().collect()
    }
}

impl fmt::Display for FiniteModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "universe {{")?;
        for (i, atom) in self.universe.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{atom}")?;
        }
        writeln!(f, "}}")?;
        for (term, ext) in &self.extensions {
            write!(f, "  {term} = {{")?;
            for (i, atom) in ext.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{atom}")?;
            }
            writeln!(f, "}}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extensions_must_stay_inside_universe() {
        let model = FiniteModel::new(["a0".to_string(), "a1".to_string()]);
        let term = Term::new("students").unwrap();
        assert!(model
            .clone()
            .with_extension(term.clone(), ["a0".to_string()])
            .is_ok());
        assert!(matches!(
            model.with_extension(term, ["a9".to_string()]),
            Err(ModelError::AtomOutsideUniverse { .. })
        ));
    }
}
