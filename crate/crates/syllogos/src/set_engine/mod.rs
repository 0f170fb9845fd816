//! Set-based interpretation: statements as quantity relations between term
//! extensions, with finite-model truth evaluation, an exhaustive small-model
//! validity oracle, and the Logic Square of Opposition.

mod eval;
mod lso;
mod search;

pub use eval::{evaluate_on_regions, evaluate_statement, evaluate_statement_with};
pub use lso::{lso_relation, lso_relation_in, LsoRelation, SquareKind, SquareTable};
pub use search::{
    check_validity, check_validity_with, count_valid, enumerate_classical_moods, CheckOptions,
    MoodResult,
};

use crate::model::rational::rat_serde;
use crate::model::{rat, Rat, Term};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Thresholds for the crisp intermediate quantifiers. Only "most" has a
/// fixed definition (more than half); the rest are interpretive defaults,
/// configurable rather than canonical: "few" as no more than 20%,
/// "almost all" as missing at most 5%, "many" defaulting to the "most"
/// threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// "few S are P" holds when |S∩P| <= theta_few * |S|.
    #[serde(with = "rat_serde")]
    pub theta_few: Rat,
    /// "almost all S are P" holds when |S−P| <= theta_almost_all * |S|.
    #[serde(with = "rat_serde")]
    pub theta_almost_all: Rat,
    /// "many S are P" holds when |S∩P| / |S| > theta_many.
    #[serde(with = "rat_serde")]
    pub theta_many: Rat,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            theta_few: rat(1, 5),
            theta_almost_all: rat(1, 20),
            theta_many: rat(1, 2),
        }
    }
}

/// Errors from crisp truth evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    /// A proportional quantifier over an empty subject extension divides by
    /// zero.
    #[error("proportion undefined: subject term {term} has an empty extension")]
    UndefinedProportion { term: Term },
    #[error("model has no extension for term {term}")]
    MissingExtension { term: Term },
    #[error("fuzzy trapezoid quantifiers have no crisp truth value")]
    FuzzyQuantifier,
}

/// Errors from square-of-opposition lookups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LsoError {
    #[error("statements must share subject and predicate")]
    TermMismatch,
}
