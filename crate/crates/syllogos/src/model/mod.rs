//! Domain types shared by both interpretation engines. No inference logic
//! lives here; everything is an immutable value after construction.

pub mod finite_model;
pub mod quantifier;
pub mod rational;
pub mod statement;
pub mod syllogism;
pub mod term;

pub use finite_model::FiniteModel;
pub use quantifier::{Quantifier, QuantifierTag};
pub use rational::{format_rat, parse_rat, rat, Interval, Rat, Trapezoid};
pub use statement::{Statement, StatementMarker};
pub use syllogism::{Figure, Syllogism};
pub use term::Term;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Invariant violations raised by the canonicalizing constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("term name is empty after normalization")]
    EmptyTermName,
    #[error("statement relates term {0} to itself")]
    SubjectEqualsPredicate(Term),
    #[error("interval lower bound {lo} exceeds upper bound {hi}")]
    IntervalOrder { lo: Rational64, hi: Rational64 },
    #[error("trapezoid values must satisfy a <= c <= d <= b")]
    TrapezoidOrder,
    #[error("proportion values must lie in [0, 1]")]
    OutOfUnitRange,
    #[error("'some ... not' with a negated predicate has no canonical form")]
    DoubleNegation,
    #[error("a syllogism needs at least one premise")]
    NoPremises,
    #[error("not in classical two-premise form: {0}")]
    NotClassicalForm(String),
    #[error("atom {atom} assigned to {term} is not in the universe")]
    AtomOutsideUniverse { term: Term, atom: String },
    #[error("epsilon must satisfy 0 < epsilon < 1/2, got {0}")]
    BadEpsilon(Rational64),
}

/// Import policy for the set-based validity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImportPolicy {
    /// Statements mean exactly what their truth tables say; universal
    /// statements are true of empty subjects.
    NoImport,
    /// Universal premises additionally assert a non-empty subject during
    /// evaluation.
    UniversalImport,
    /// Existential import is stated as explicit extra premises
    /// ("there is at least one T") before checking.
    ExplicitPremise,
}

/// Configuration for the probabilistic reading of quantifiers: "most" means
/// `1 - epsilon <= P(P|S) < 1` and "few" means `0 < P(P|S) <= epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbQuantifierConfig {
    #[serde(with = "rational::rat_serde")]
    epsilon: Rat,
}

impl ProbQuantifierConfig {
    /// Requires `0 < epsilon < 1/2` so the "most" and "few" bands are
    /// disjoint.
    pub fn new(epsilon: Rat) -> Result<ProbQuantifierConfig, ModelError> {
        use num_traits::Zero;
        if epsilon <= Rat::zero() || epsilon >= rat(1, 2) {
            return Err(ModelError::BadEpsilon(epsilon));
        }
        Ok(ProbQuantifierConfig { epsilon })
    }

    pub fn epsilon(&self) -> Rat {
        self.epsilon
    }
}

impl Default for ProbQuantifierConfig {
    /// "epsilon is small": 1/10 by default, purely a configuration choice.
    fn default() -> Self {
        ProbQuantifierConfig {
            epsilon: rat(1, 10),
        }
    }
}

/// Validity query outcome. `Valid(k)` is a claim only up to universe size
/// `k`; the small-model property is not assumed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Valid { bound_checked: u64 },
    CounterModel { model: FiniteModel },
    Undetermined { bound_checked: u64 },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }

    pub fn counter_model(&self) -> Option<&FiniteModel> {
        match self {
            Verdict::CounterModel { model } => Some(model),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_band_bounds_enforced() {
        assert!(ProbQuantifierConfig::new(rat(1, 10)).is_ok());
        assert!(ProbQuantifierConfig::new(rat(1, 2)).is_err());
        assert!(ProbQuantifierConfig::new(rat(0, 1)).is_err());
        assert!(ProbQuantifierConfig::new(rat(-1, 10)).is_err());
    }

    #[test]
    fn domain_types_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Term>();
        assert_send_sync::<Quantifier>();
        assert_send_sync::<Statement>();
        assert_send_sync::<Syllogism>();
        assert_send_sync::<FiniteModel>();
        assert_send_sync::<Verdict>();
        assert_send_sync::<ImportPolicy>();
        assert_send_sync::<ProbQuantifierConfig>();
    }

    #[test]
    fn statement_json_uses_the_documented_keys() {
        let statement = Statement::new(
            Quantifier::Most,
            Term::new("young people").unwrap(),
            Term::new("tall").unwrap(),
            true,
        )
        .unwrap();
        let json = serde_json::to_value(&statement).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"q": "most", "s": "young people", "p": "tall", "neg": true})
        );
        let back: Statement = serde_json::from_value(json).unwrap();
        assert_eq!(back, statement);
    }
}
