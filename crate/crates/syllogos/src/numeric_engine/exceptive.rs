//! Exceptive syllogistics: arithmetic on exception sizes.
//!
//! For the chain `all but x1 M are P; all but x2 S are M`, two readings of
//! the conclusion's exception are implemented side by side:
//!
//! * `Literal` is the straight subtraction reading: the conclusion
//!   exception is `assumed_cardinality − x2` (e.g. 100 − 19 = 81 with an
//!   assumed cardinality of 100).
//! * `SoundBound` reports the exact range of exception sizes `|S − P|`
//!   realizable by models satisfying both premises and the supplied
//!   cardinality assumptions.
//!
//! The two disagree in general (with x1 = x2 = 0 the literal formula yields
//! the assumed cardinality while the only realizable exception is 0); both
//! are reported so the divergence stays visible.

use crate::model::{Quantifier, Statement, Term};
use crate::numeric_engine::region::{for_each_composition, RegionVector};
use crate::numeric_engine::NumericError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExceptiveMode {
    Literal,
    SoundBound,
}

/// The derived conclusion exception, per mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExceptiveOutcome {
    /// "all but `exception` S are P" by the literal arithmetic.
    Literal { exception: u64 },
    /// The exception size lies in `[min_exception, max_exception]`.
    Sound {
        min_exception: u64,
        max_exception: u64,
    },
}

/// The validated premise chain `all but x1 M are P; all but x2 S are M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptiveChain {
    pub x1: u64,
    pub x2: u64,
    pub subject: Term,
    pub middle: Term,
    pub predicate: Term,
}

impl ExceptiveChain {
    /// Extracts the chain from two statements, checking quantifiers, shapes
    /// and the shared middle term.
    pub fn from_premises(
        premise1: &Statement,
        premise2: &Statement,
    ) -> Result<ExceptiveChain, NumericError> {
        let exception_of = |s: &Statement| match s.quantifier() {
            Quantifier::AllBut(k) if !s.predicate_negated() => Some(*k),
            _ => None,
        };
        let x1 = exception_of(premise1).ok_or_else(|| NumericError::NotExceptive {
            statement: premise1.to_string(),
        })?;
        let x2 = exception_of(premise2).ok_or_else(|| NumericError::NotExceptive {
            statement: premise2.to_string(),
        })?;
        if premise2.predicate() != premise1.subject() {
            return Err(NumericError::BrokenChain {
                expected_middle: premise1.subject().clone(),
                found: premise2.predicate().clone(),
            });
        }
        Ok(ExceptiveChain {
            x1,
            x2,
            subject: premise2.subject().clone(),
            middle: premise1.subject().clone(),
            predicate: premise1.predicate().clone(),
        })
    }
}

/// Derives the conclusion exception for `all but ? S are P`.
///
/// `cards` maps terms to assumed cardinalities; exceptive reasoning cannot
/// produce a number without one. `Literal` requires a single assumed
/// cardinality — the middle term's if given, otherwise the subject's,
/// otherwise any supplied value — and returns `card − x2`. `SoundBound`
/// treats every supplied cardinality as a constraint and reports the exact
/// realizable range of `|S − P|`.
pub fn exceptive_conclude(
    premise1: &Statement,
    premise2: &Statement,
    cards: &BTreeMap<Term, u64>,
    mode: ExceptiveMode,
) -> Result<ExceptiveOutcome, NumericError> {
    let chain = ExceptiveChain::from_premises(premise1, premise2)?;
    match mode {
        ExceptiveMode::Literal => {
            let card = cards
                .get(&chain.middle)
                .or_else(|| cards.get(&chain.subject))
                .or_else(|| cards.values().next())
                .copied()
                .ok_or(NumericError::CardinalityRequired)?;
            if card < chain.x1.max(chain.x2) {
                return Err(NumericError::CardinalityTooSmall {
                    card,
                    needed: chain.x1.max(chain.x2),
                });
            }
            Ok(ExceptiveOutcome::Literal {
                exception: card - chain.x2,
            })
        }
        ExceptiveMode::SoundBound => {
            let (min, max) = sound_exception_range(&chain, cards)?;
            Ok(ExceptiveOutcome::Sound {
                min_exception: min,
                max_exception: max,
            })
        }
    }
}

/// Exact min/max of `|S − P|` over non-negative integer region counts with
/// `|M − P| = x1`, `|S − M| = x2` and the supplied cardinalities. Solved by
/// scanning the bounded free choices; every region count is determined by
/// (a, u, w) below together with the constraints:
///
/// ```text
/// a = |S ∩ M − P|   (a <= x1, rest of x1 outside S)
/// u = |S − M ∩ P|   (u <= x2, v = x2 − u misses P)
/// w = |S ∩ M ∩ P|
/// exception |S − P| = a + v
/// ```
pub fn sound_exception_range(
    chain: &ExceptiveChain,
    cards: &BTreeMap<Term, u64>,
) -> Result<(u64, u64), NumericError> {
    let card_s = cards.get(&chain.subject).copied();
    let card_m = cards.get(&chain.middle).copied();
    let card_p = cards.get(&chain.predicate).copied();
    for card in [card_s, card_m, card_p].into_iter().flatten() {
        if card > 1_000_000 {
            return Err(NumericError::CardinalityTooLarge { card });
        }
    }

    let mut best: Option<(u64, u64)> = None;
    for a in 0..=chain.x1 {
        let b = chain.x1 - a; // |M − P| outside S
        for u in 0..=chain.x2 {
            let v = chain.x2 - u;
            // w = |S ∩ M ∩ P| is pinned by |S| when given, else free
            let w_choices: Vec<u64> = match card_s {
                Some(n) => match n.checked_sub(a + u + v) {
                    Some(w) => vec![w],
                    None => continue,
                },
                None => match (card_m, card_p) {
                    (Some(n), _) => (0..=n).collect(),
                    (None, Some(n)) => (0..=n).collect(),
                    (None, None) => vec![0],
                },
            };
            for w in w_choices {
                // y = |M ∩ P − S| absorbs the rest of |M| when given
                let y = match card_m {
                    Some(n) => match n.checked_sub(w + a + b) {
                        Some(y) => y,
                        None => continue,
                    },
                    None => 0,
                };
                // z = |P − S − M| absorbs the rest of |P| when given
                if let Some(n) = card_p {
                    if n.checked_sub(w + u + y).is_none() {
                        continue;
                    }
                }
                let exception = a + v;
                best = Some(match best {
                    None => (exception, exception),
                    Some((lo, hi)) => (lo.min(exception), hi.max(exception)),
                });
            }
        }
    }
    best.ok_or(NumericError::Inconsistent)
}

/// Brute-force oracle for the sound bound: enumerates region vectors over
/// (S, M, P) up to `max_total` atoms, keeps those where both premises hold
/// under the set engine's statement evaluation and the cardinality
/// assumptions match, and collects the realized exception sizes.
/// Exponentially slower than [`sound_exception_range`] but independent of
/// its arithmetic; the two must agree wherever the totals can realize the
/// cardinalities.
pub fn sound_exception_range_exhaustive(
    premise1: &Statement,
    premise2: &Statement,
    cards: &BTreeMap<Term, u64>,
    max_total: u64,
) -> Result<Option<(u64, u64)>, NumericError> {
    use crate::set_engine::{evaluate_on_regions, EvalConfig};
    let chain = ExceptiveChain::from_premises(premise1, premise2)?;
    let mut terms = vec![
        chain.subject.clone(),
        chain.middle.clone(),
        chain.predicate.clone(),
    ];
    terms.sort();
    let bit = |t: &Term| terms.iter().position(|x| x == t).unwrap();
    let (s_bit, p_bit) = (bit(&chain.subject), bit(&chain.predicate));
    let eval_cfg = EvalConfig::default();

    let mut range: Option<(u64, u64)> = None;
    for total in 1..=max_total {
        for_each_composition::<()>(total, 8, |counts| {
            let rv = RegionVector::new(terms.clone(), counts.to_vec()).expect("positive total");
            for (term, expected) in cards {
                if rv.term_cardinality(term) != Some(*expected) {
                    return None;
                }
            }
            let premises_hold = [premise1, premise2]
                .iter()
                .all(|p| matches!(evaluate_on_regions(&rv, p, &eval_cfg), Ok(true)));
            if !premises_hold {
                return None;
            }
            let exception =
                rv.count_where(|mask| mask & (1 << s_bit) != 0 && mask & (1 << p_bit) == 0);
            range = Some(match range {
                None => (exception, exception),
                Some((lo, hi)) => (lo.min(exception), hi.max(exception)),
            });
            None
        });
    }
    Ok(range)
}
