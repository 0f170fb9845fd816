//! Exhaustive small-model validity oracle.
//!
//! Models are enumerated as Venn-region cardinality vectors (models that
//! differ only by atom renaming are equivalent for every quantifier in
//! scope), by universe size and then in lexicographic order of the region
//! counts, so verdicts are deterministic.

use crate::model::{ImportPolicy, Quantifier, QuantifierTag, Statement, Syllogism, Term, Verdict};
use crate::numeric_engine::region::{for_each_composition, RegionVector};
use crate::set_engine::eval::evaluate_on_regions;
use crate::set_engine::{EvalConfig, EvalError};
use crate::transforms::{self, ImportScope};
use serde::{Deserialize, Serialize};

/// Knobs for the validity search.
#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub policy: ImportPolicy,
    /// Which terms get explicit existence premises under
    /// [`ImportPolicy::ExplicitPremise`].
    pub import_scope: ImportScope,
    pub max_universe: u64,
    pub eval: EvalConfig,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            policy: ImportPolicy::NoImport,
            import_scope: ImportScope::SubjectsOnly,
            max_universe: 6,
            eval: EvalConfig::default(),
        }
    }
}

/// Searches every model with 1..=`max_universe` atoms over the syllogism's
/// terms for one that satisfies all premises and falsifies the conclusion.
///
/// Singular statements are desugared first, and singleton terms keep
/// extensions of exactly one element throughout the search. A premise whose
/// proportion is undefined (empty subject) counts as unsatisfied; a
/// conclusion whose proportion is undefined counts as falsified, mirroring
/// the motivation for explicit import (avoiding conclusions undefined by a
/// zero denominator). Fuzzy-quantified statements have no crisp truth value,
/// so the search reports `Undetermined` for them.
pub fn check_validity(syl: &Syllogism, policy: ImportPolicy, max_universe: u64) -> Verdict {
    check_validity_with(
        syl,
        &CheckOptions {
            policy,
            max_universe,
            ..CheckOptions::default()
        },
    )
}

/// [`check_validity`] with full control over scope and thresholds.
pub fn check_validity_with(syl: &Syllogism, opts: &CheckOptions) -> Verdict {
    let mut syl = transforms::desugar_syllogism(syl);
    if opts.policy == ImportPolicy::ExplicitPremise {
        syl = transforms::add_import_premises(&syl, opts.import_scope);
    }
    if syl
        .statements()
        .any(|s| matches!(s.quantifier(), Quantifier::Trapezoid(_)))
    {
        return Verdict::Undetermined { bound_checked: 0 };
    }

    let terms = syl.terms();
    let singleton_bits: Vec<usize> = terms
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_singleton())
        .map(|(i, _)| i)
        .collect();
    let regions = 1usize << terms.len();

    for total in 1..=opts.max_universe {
        let counter = for_each_composition(total, regions, |counts| {
            let rv = RegionVector::new(terms.clone(), counts.to_vec())
                .expect("composition totals are positive");
            if !singleton_bits
                .iter()
                .all(|bit| rv.count_where(|mask| mask & (1 << bit) != 0) == 1)
            {
                return None;
            }
            if !premises_hold(&syl, &rv, opts) {
                return None;
            }
            match evaluate_on_regions(&rv, syl.conclusion(), &opts.eval) {
                Ok(true) => None,
                // false, or undefined by a zero denominator: refuted
                Ok(false) | Err(EvalError::UndefinedProportion { .. }) => Some(rv),
                Err(_) => None,
            }
        });
        if let Some(rv) = counter {
            return Verdict::CounterModel {
                model: rv.to_finite_model(),
            };
        }
    }
    Verdict::Valid {
        bound_checked: opts.max_universe,
    }
}

fn premises_hold(syl: &Syllogism, rv: &RegionVector, opts: &CheckOptions) -> bool {
    syl.premises().iter().all(|premise| {
        if opts.policy == ImportPolicy::UniversalImport
            && matches!(premise.quantifier(), Quantifier::All | Quantifier::No)
            && rv.term_cardinality(premise.subject()) == Some(0)
        {
            return false;
        }
        matches!(evaluate_on_regions(rv, premise, &opts.eval), Ok(true))
    })
}

/// One classified mood of the classical census.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MoodResult {
    pub figure: crate::model::Figure,
    /// Three letters over A/E/I/O: both premises, then the conclusion.
    pub mood: String,
    pub verdict: Verdict,
}

/// Classifies all 256 classical syllogisms (4 figures x 64 moods) at the
/// given bound. Deterministic order: figures I-IV, moods AAA..OOO.
pub fn enumerate_classical_moods(opts: &CheckOptions) -> Vec<MoodResult> {
    use crate::model::Figure::{self, I, II, III, IV};
    let minor = Term::new("s").unwrap();
    let major = Term::new("p").unwrap();
    let middle = Term::new("m").unwrap();
    let letters = [
        QuantifierTag::All,
        QuantifierTag::No,
        QuantifierTag::Some,
        QuantifierTag::SomeNot,
    ];

    let quantifier = |tag: QuantifierTag| match tag {
        QuantifierTag::All => Quantifier::All,
        QuantifierTag::No => Quantifier::No,
        QuantifierTag::Some => Quantifier::Some,
        QuantifierTag::SomeNot => Quantifier::SomeNot,
        _ => unreachable!("classical census uses classical tags"),
    };
    let letter = |tag: QuantifierTag| match tag {
        QuantifierTag::All => 'A',
        QuantifierTag::No => 'E',
        QuantifierTag::Some => 'I',
        QuantifierTag::SomeNot => 'O',
        _ => unreachable!(),
    };
    // (major premise terms, minor premise terms) per figure
    let premise_terms = |figure: Figure| -> ((Term, Term), (Term, Term)) {
        match figure {
            I => (
                (middle.clone(), major.clone()),
                (minor.clone(), middle.clone()),
            ),
            II => (
                (major.clone(), middle.clone()),
                (minor.clone(), middle.clone()),
            ),
            III => (
                (middle.clone(), major.clone()),
                (middle.clone(), minor.clone()),
            ),
            IV => (
                (major.clone(), middle.clone()),
                (middle.clone(), minor.clone()),
            ),
        }
    };

    let mut results = Vec::with_capacity(256);
    for figure in [I, II, III, IV] {
        let ((s1, p1), (s2, p2)) = premise_terms(figure);
        for q1 in letters {
            for q2 in letters {
                for qc in letters {
                    let syl = Syllogism::new(
                        vec![
                            Statement::new(quantifier(q1), s1.clone(), p1.clone(), false).unwrap(),
                            Statement::new(quantifier(q2), s2.clone(), p2.clone(), false).unwrap(),
                        ],
                        Statement::new(quantifier(qc), minor.clone(), major.clone(), false)
                            .unwrap(),
                    )
                    .unwrap();
                    results.push(MoodResult {
                        figure,
                        mood: [letter(q1), letter(q2), letter(qc)].iter().collect(),
                        verdict: check_validity_with(&syl, opts),
                    });
                }
            }
        }
    }
    results
}

/// Number of census entries valid at the bound.
pub fn count_valid(results: &[MoodResult]) -> usize {
    results.iter().filter(|r| r.verdict.is_valid()).count()
}
