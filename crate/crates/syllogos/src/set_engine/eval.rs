//! Finite-model truth evaluation for crisp quantifiers.
//!
//! Two independent routes compute the same truth table: [`evaluate_statement`]
//! works on labelled extensions (actual set operations), while
//! [`evaluate_on_regions`] works on Venn-region cardinalities. The model
//! search uses the region route; returned countermodels are re-checkable
//! with the set route.

use crate::model::{rat, FiniteModel, Quantifier, Rat, Statement, Term};
use crate::numeric_engine::region::RegionVector;
use crate::set_engine::{EvalConfig, EvalError};
use std::collections::BTreeSet;

/// Truth of `stmt` in `model` with default thresholds.
pub fn evaluate_statement(model: &FiniteModel, stmt: &Statement) -> Result<bool, EvalError> {
    evaluate_statement_with(model, stmt, &EvalConfig::default())
}

/// Truth of `stmt` in `model`.
///
/// Proportional quantifiers (most, many, few, almost all, intervals) are
/// undefined on an empty subject extension and yield
/// [`EvalError::UndefinedProportion`]; fuzzy trapezoids have no crisp truth
/// value and yield [`EvalError::FuzzyQuantifier`].
pub fn evaluate_statement_with(
    model: &FiniteModel,
    stmt: &Statement,
    cfg: &EvalConfig,
) -> Result<bool, EvalError> {
    let subject = extension(model, stmt.subject())?;
    let predicate_raw = extension(model, stmt.predicate())?;
    let predicate: BTreeSet<String> = if stmt.predicate_negated() {
        model.complement(predicate_raw)
    } else {
        predicate_raw.clone()
    };

    let s_card = subject.len() as u64;
    let inter = subject.intersection(&predicate).count() as u64;
    let minus = subject.difference(&predicate).count() as u64;

    decide(stmt, s_card, inter, minus, cfg)
}

/// Truth of `stmt` on a region-cardinality vector. Same contract as
/// [`evaluate_statement_with`], computed from counts alone.
pub fn evaluate_on_regions(
    regions: &RegionVector,
    stmt: &Statement,
    cfg: &EvalConfig,
) -> Result<bool, EvalError> {
    let s_bit = regions
        .term_index(stmt.subject())
        .ok_or_else(|| EvalError::MissingExtension {
            term: stmt.subject().clone(),
        })?;
    let p_bit =
        regions
            .term_index(stmt.predicate())
            .ok_or_else(|| EvalError::MissingExtension {
                term: stmt.predicate().clone(),
            })?;
    let negated = stmt.predicate_negated();

    let mut s_card = 0u64;
    let mut inter = 0u64;
    let mut minus = 0u64;
    for (mask, count) in regions.counts().iter().enumerate() {
        if mask & (1 << s_bit) == 0 {
            continue;
        }
        s_card += count;
        let in_p = (mask & (1 << p_bit) != 0) != negated;
        if in_p {
            inter += count;
        } else {
            minus += count;
        }
    }

    decide(stmt, s_card, inter, minus, cfg)
}

fn extension<'m>(model: &'m FiniteModel, term: &Term) -> Result<&'m BTreeSet<String>, EvalError> {
    model
        .extension(term)
        .ok_or_else(|| EvalError::MissingExtension { term: term.clone() })
}

/// The quantifier truth table over the three cardinalities |S|, |S∩P| and
/// |S−P| that every crisp quantifier in scope depends on.
fn decide(
    stmt: &Statement,
    s_card: u64,
    inter: u64,
    minus: u64,
    cfg: &EvalConfig,
) -> Result<bool, EvalError> {
    let proportion = || -> Result<Rat, EvalError> {
        if s_card == 0 {
            return Err(EvalError::UndefinedProportion {
                term: stmt.subject().clone(),
            });
        }
        Ok(rat(inter as i64, s_card as i64))
    };
    match stmt.quantifier() {
        Quantifier::All => Ok(minus == 0),
        Quantifier::No => Ok(inter == 0),
        Quantifier::Some => Ok(inter > 0),
        Quantifier::SomeNot => Ok(minus > 0),
        // most(S,P) iff |S ∩ P| > |S − P|, undefined on an empty subject
        Quantifier::Most => {
            proportion()?;
            Ok(inter > minus)
        }
        Quantifier::Many => Ok(proportion()? > cfg.theta_many),
        Quantifier::Few => Ok(proportion()? <= cfg.theta_few),
        Quantifier::AlmostAll => {
            proportion()?;
            Ok(rat(minus as i64, 1) <= cfg.theta_almost_all * rat(s_card as i64, 1))
        }
        Quantifier::AllBut(k) => Ok(minus == *k),
        Quantifier::Exactly(k) => Ok(inter == *k),
        Quantifier::AtLeast(k) => Ok(inter >= *k),
        Quantifier::Interval(bounds) => {
            let p = proportion()?;
            Ok(bounds.lo <= p && p <= bounds.hi)
        }
        Quantifier::Trapezoid(_) => Err(EvalError::FuzzyQuantifier),
    }
}
