//! Conditional interpretation: quantifiers as conditional-probability
//! constraints, and heuristic conclusion generation.
//!
//! Statements are read as "if x is S, then x is P", the quantifier measuring
//! the strength of the link as a band on P(P|S). Inference is heuristic, not
//! deductive: conclusions are generated by the min-heuristic (take the
//! quantifier of the least informative premise) and the attachment-heuristic
//! (take the conclusion subject from a premise subject that is an end term).
//! No probabilistic validity is certified.

use crate::model::{ProbQuantifierConfig, Quantifier, QuantifierTag, Rat, Statement, Term};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The probabilistic reading of a quantified statement as a constraint on
/// the conditional probability P(P|S).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbConstraintKind {
    /// P(P|S) = 1
    Eq1,
    /// P(P|S) = 0
    Eq0,
    /// P(P|S) > 0 and S is not empty
    GtZeroWithExistence,
    /// P(P|S) < 1 and S is not empty
    LtOneWithExistence,
    /// 1 − ε ≤ P(P|S) < 1
    MostBand,
    /// 0 < P(P|S) ≤ ε
    FewBand,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbConstraint {
    pub kind: ProbConstraintKind,
    #[serde(with = "crate::model::rational::rat_serde")]
    pub epsilon: Rat,
}

impl ProbConstraint {
    /// Whether a conditional probability `p` (with the stated emptiness of
    /// the subject) satisfies this constraint.
    pub fn holds(&self, p: Rat, subject_nonempty: bool) -> bool {
        match self.kind {
            ProbConstraintKind::Eq1 => p.is_one(),
            ProbConstraintKind::Eq0 => p.is_zero(),
            ProbConstraintKind::GtZeroWithExistence => subject_nonempty && p > Rat::zero(),
            ProbConstraintKind::LtOneWithExistence => subject_nonempty && p < Rat::one(),
            ProbConstraintKind::MostBand => Rat::one() - self.epsilon <= p && p < Rat::one(),
            ProbConstraintKind::FewBand => Rat::zero() < p && p <= self.epsilon,
        }
    }

    /// The constraint in the notation of the probabilistic reading table.
    pub fn describe(&self) -> String {
        let eps = crate::model::format_rat(&self.epsilon);
        match self.kind {
            ProbConstraintKind::Eq1 => "P(P|S) = 1".into(),
            ProbConstraintKind::Eq0 => "P(P|S) = 0".into(),
            ProbConstraintKind::GtZeroWithExistence => "P(P|S) > 0 and S not empty".into(),
            ProbConstraintKind::LtOneWithExistence => "P(P|S) < 1 and S not empty".into(),
            ProbConstraintKind::MostBand => format!("1 − {eps} ≤ P(P|S) < 1"),
            ProbConstraintKind::FewBand => format!("0 < P(P|S) ≤ {eps}"),
        }
    }
}

/// Errors from the conditional engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionalError {
    /// The conditional interpretation defines no reading for this
    /// statement: interval/fuzzy/exception/absolute quantifiers, negated
    /// intermediate predicates, and singular statements (a property cannot
    /// be a quantifier).
    #[error("the conditional interpretation does not cover this statement: {reason}")]
    Unsupported { reason: String },
    #[error("premises must share exactly one middle term")]
    NoSharedMiddle,
}

/// Maps a statement to its conditional-probability constraint, following
/// the probabilistic reading of "all", "no", "some", "some … not", "most"
/// and "few". The existence rider appears exactly on "some"/"some … not".
pub fn prob_interpret(
    stmt: &Statement,
    cfg: &ProbQuantifierConfig,
) -> Result<ProbConstraint, ConditionalError> {
    if stmt.is_singular_surface() || stmt.mentions_singleton() {
        return Err(ConditionalError::Unsupported {
            reason: "singular statements have no quantifier to measure the link".into(),
        });
    }
    if stmt.predicate_negated() {
        return Err(ConditionalError::Unsupported {
            reason: "negated predicates have no probabilistic reading here".into(),
        });
    }
    let kind = match stmt.quantifier() {
        Quantifier::All => ProbConstraintKind::Eq1,
        Quantifier::No => ProbConstraintKind::Eq0,
        Quantifier::Some => ProbConstraintKind::GtZeroWithExistence,
        Quantifier::SomeNot => ProbConstraintKind::LtOneWithExistence,
        Quantifier::Most => ProbConstraintKind::MostBand,
        Quantifier::Few => ProbConstraintKind::FewBand,
        other => {
            return Err(ConditionalError::Unsupported {
                reason: format!("quantifier '{other}' has no probabilistic reading"),
            })
        }
    };
    Ok(ProbConstraint {
        kind,
        epsilon: cfg.epsilon(),
    })
}

/// A strict total informativeness order over quantifier tags, most
/// informative first.
///
/// The default runs from the universal down to the existential corner:
/// all > most > few > some > no > some…not, with "almost all" slotted next
/// to "all" and "many" next to "most". The relative order of the six named
/// tags follows the probability-heuristics literature; the order is a
/// parameter, not a fixed rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Informativeness {
    order: Vec<QuantifierTag>,
}

impl Default for Informativeness {
    fn default() -> Self {
        use QuantifierTag::*;
        Informativeness {
            order: vec![All, AlmostAll, Most, Many, Few, Some, No, SomeNot],
        }
    }
}

impl Informativeness {
    /// A custom order; must mention each tag at most once.
    pub fn new(order: Vec<QuantifierTag>) -> Option<Informativeness> {
        let mut seen = order.clone();
        seen.sort();
        seen.dedup();
        (seen.len() == order.len()).then_some(Informativeness { order })
    }

    /// Rank in the order (0 = most informative); `None` for tags outside it.
    pub fn rank(&self, tag: QuantifierTag) -> Option<usize> {
        self.order.iter().position(|t| *t == tag)
    }

    /// True when `a` is at least as informative as `b`.
    pub fn at_least_as_informative(&self, a: QuantifierTag, b: QuantifierTag) -> bool {
        match (self.rank(a), self.rank(b)) {
            (Some(ra), Some(rb)) => ra <= rb,
            _ => false,
        }
    }
}

/// A heuristically generated conclusion with its derivation trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeuristicConclusion {
    pub conclusion: Statement,
    /// Index (0 or 1) of the max- and min-premise.
    pub max_premise: usize,
    pub min_premise: usize,
    /// Two lines mirroring the schema annotations: min-heuristic, then
    /// attachment-heuristic.
    pub trace: Vec<String>,
}

/// Generates a conclusion from two premises sharing one middle term.
///
/// 1. The premise whose quantifier ranks lower in `order` is the
///    min-premise; on a tie the first premise keeps the max slot (premise
///    pairs arrive organized from the universal toward the existential).
/// 2. min-heuristic: the conclusion quantifier is the min-premise's.
/// 3. attachment-heuristic: the conclusion subject is the min-premise's
///    subject if that is an end term, else the max-premise's subject if an
///    end term, else the min-premise's end term; the conclusion predicate
///    is the other end term.
pub fn heuristic_conclude(
    premise1: &Statement,
    premise2: &Statement,
    order: &Informativeness,
) -> Result<HeuristicConclusion, ConditionalError> {
    for premise in [premise1, premise2] {
        if premise.is_singular_surface() || premise.mentions_singleton() {
            return Err(ConditionalError::Unsupported {
                reason: "singular premises have no quantifier to rank".into(),
            });
        }
        if premise.predicate_negated() {
            return Err(ConditionalError::Unsupported {
                reason: "negated predicates are outside the heuristic schema".into(),
            });
        }
    }
    let tag1 = ranked_tag(premise1, order)?;
    let tag2 = ranked_tag(premise2, order)?;

    let (middle, ends) = split_terms(premise1, premise2)?;

    // rank 0 is most informative; ties keep premise order (first = max)
    let min_index = if order.rank(tag2) >= order.rank(tag1) {
        1
    } else {
        0
    };
    let max_index = 1 - min_index;
    let premises = [premise1, premise2];
    let min_premise = premises[min_index];
    let max_premise = premises[max_index];

    let subject = if is_end(min_premise.subject(), &ends) {
        min_premise.subject().clone()
    } else if is_end(max_premise.subject(), &ends) {
        max_premise.subject().clone()
    } else {
        end_of(min_premise, &middle).clone()
    };
    let predicate = ends
        .iter()
        .find(|t| **t != subject)
        .expect("two distinct end terms")
        .clone();

    let conclusion = Statement::new(
        min_premise.quantifier().clone(),
        subject.clone(),
        predicate,
        false,
    )
    .expect("end terms are distinct");

    let trace = vec![
        format!(
            "min-heuristic: conclusion quantifier '{}' taken from premise {} (the least informative)",
            min_premise.quantifier(),
            min_index + 1
        ),
        format!(
            "attachment-heuristic: conclusion subject '{subject}' taken from the premises' end terms"
        ),
    ];

    Ok(HeuristicConclusion {
        conclusion,
        max_premise: max_index,
        min_premise: min_index,
        trace,
    })
}

fn ranked_tag(
    stmt: &Statement,
    order: &Informativeness,
) -> Result<QuantifierTag, ConditionalError> {
    let tag = stmt
        .quantifier()
        .tag()
        .ok_or_else(|| ConditionalError::Unsupported {
            reason: format!(
                "quantifier '{}' is outside the informativeness order",
                stmt.quantifier()
            ),
        })?;
    if order.rank(tag).is_none() {
        return Err(ConditionalError::Unsupported {
            reason: format!(
                "quantifier '{}' is outside the informativeness order",
                stmt.quantifier()
            ),
        });
    }
    Ok(tag)
}

/// Splits the four term slots into the shared middle and the two end terms.
fn split_terms(
    premise1: &Statement,
    premise2: &Statement,
) -> Result<(Term, [Term; 2]), ConditionalError> {
    let in_p2 = |t: &Term| premise2.subject() == t || premise2.predicate() == t;
    let shared: Vec<&Term> = premise1.terms().into_iter().filter(|t| in_p2(t)).collect();
    if shared.len() != 1 {
        return Err(ConditionalError::NoSharedMiddle);
    }
    let middle = shared[0].clone();
    let end1 = end_of(premise1, &middle).clone();
    let end2 = end_of(premise2, &middle).clone();
    if end1 == end2 {
        return Err(ConditionalError::NoSharedMiddle);
    }
    Ok((middle, [end1, end2]))
}

fn end_of<'s>(stmt: &'s Statement, middle: &Term) -> &'s Term {
    if stmt.subject() == middle {
        stmt.predicate()
    } else {
        stmt.subject()
    }
}

fn is_end(term: &Term, ends: &[Term; 2]) -> bool {
    ends.iter().any(|e| e == term)
}
