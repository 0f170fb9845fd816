//! Quantity-computing set-based models: interval syllogistics
//! (proportion-bounds optimization), fuzzy syllogistics (QEP over
//! alpha-cuts) and exceptive syllogistics (arithmetic on exception sizes).

pub mod exceptive;
pub mod fuzzy;
pub mod interval;
pub mod region;

pub use exceptive::{
    exceptive_conclude, sound_exception_range, sound_exception_range_exhaustive, ExceptiveChain,
    ExceptiveMode, ExceptiveOutcome,
};
pub use fuzzy::{fuzzy_conclude_qep, AlphaCutFamily, FuzzySchema};
pub use interval::{
    frechet_bounds, interval_conclude, interval_conclude_exhaustive, ConclusionRoute,
    IntervalConclusion, ProportionConstraint, ProportionGoal,
};
pub use region::{for_each_composition, RegionExpr, RegionVector};

use crate::model::Term;
use thiserror::Error;

/// Errors from the numeric engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("no region vector satisfies the premise constraints")]
    Inconsistent,
    #[error("every satisfying region vector leaves the denominator {term} empty")]
    EmptyDenominator { term: Term },
    #[error("conclusion derivation needs at least one premise")]
    NoPremises,
    #[error("alpha levels must be strictly ascending within (0, 1]")]
    BadAlphaLevels,
    #[error("an assumed cardinality is required (e.g. --card students=100)")]
    CardinalityRequired,
    #[error("assumed cardinality {card} is smaller than the exception size {needed}")]
    CardinalityTooSmall { card: u64, needed: u64 },
    #[error("assumed cardinality {card} is beyond desk scale (max 1000000)")]
    CardinalityTooLarge { card: u64 },
    #[error("not an exceptive (all but k) premise: {statement}")]
    NotExceptive { statement: String },
    #[error("premises do not chain: expected middle term {expected_middle}, found {found}")]
    BrokenChain { expected_middle: Term, found: Term },
}
