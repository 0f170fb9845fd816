//! Interval syllogistics: restriction propagation over proportion bounds.
//!
//! The normative semantics is brute force: enumerate region-cardinality
//! vectors up to a total, keep those satisfying every premise constraint,
//! and report the least and greatest value the goal proportion takes. The
//! Fréchet closed form is a fast path for the shared-subject conjunction
//! schema and must agree with the brute force wherever both apply.

use crate::model::{rat, Interval, Rat, Term};
use crate::numeric_engine::region::{for_each_composition, RegionExpr, RegionVector};
use crate::numeric_engine::NumericError;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A premise "the proportion of `numerator` among `denominator` lies in
/// `bounds`": `lo <= |numerator ∩ denominator| / |denominator| <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProportionConstraint {
    pub numerator: RegionExpr,
    pub denominator: Term,
    pub bounds: Interval,
}

/// The conclusion shape: same as a constraint, bounds to be computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProportionGoal {
    pub numerator: RegionExpr,
    pub denominator: Term,
}

/// Which route produced the conclusion interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConclusionRoute {
    Frechet,
    BruteForce,
}

/// The derived proportion interval, with witnessing region vectors when the
/// brute-force route computed it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalConclusion {
    pub interval: Interval,
    pub witness_min: Option<RegionVector>,
    pub witness_max: Option<RegionVector>,
    pub route: ConclusionRoute,
}

/// Bounds on the goal proportion over every region vector with total at
/// most `max_total` satisfying the premises. Uses the Fréchet closed form
/// when the premises share one denominator term and the goal is their
/// conjunction proportion; falls back to exhaustive search otherwise.
pub fn interval_conclude(
    premises: &[ProportionConstraint],
    goal: &ProportionGoal,
    max_total: u64,
) -> Result<IntervalConclusion, NumericError> {
    if let Some(interval) = frechet_bounds(premises, goal) {
        return Ok(IntervalConclusion {
            interval,
            witness_min: None,
            witness_max: None,
            route: ConclusionRoute::Frechet,
        });
    }
    interval_conclude_exhaustive(premises, goal, max_total)
}

/// The Fréchet fast path: for premises `|A ∩ D| / |D| ∈ [a1, b1]` and
/// `|B ∩ D| / |D| ∈ [a2, b2]` with goal `|A ∩ B ∩ D| / |D|`, the tight
/// bounds are `[max(0, a1 + a2 − 1), min(b1, b2)]`. Returns `None` when the
/// arguments are not in this schema.
pub fn frechet_bounds(
    premises: &[ProportionConstraint],
    goal: &ProportionGoal,
) -> Option<Interval> {
    if premises.len() != 2 {
        return None;
    }
    let denominator = &premises[0].denominator;
    if premises[1].denominator != *denominator || goal.denominator != *denominator {
        return None;
    }
    let single_positive = |expr: &RegionExpr| -> Option<Term> {
        match expr.positive_terms() {
            Some(terms) if terms.len() == 1 && *terms[0] != *denominator => Some(terms[0].clone()),
            _ => None,
        }
    };
    let t1 = single_positive(&premises[0].numerator)?;
    let t2 = single_positive(&premises[1].numerator)?;
    if t1 == t2 {
        return None;
    }
    let goal_terms = goal.numerator.positive_terms()?;
    if goal_terms.len() != 2 {
        return None;
    }
    let pair_matches = (*goal_terms[0] == t1 && *goal_terms[1] == t2)
        || (*goal_terms[0] == t2 && *goal_terms[1] == t1);
    if !pair_matches {
        return None;
    }

    let lo = (premises[0].bounds.lo + premises[1].bounds.lo - rat(1, 1)).max(Rat::zero());
    let hi = premises[0].bounds.hi.min(premises[1].bounds.hi);
    // inconsistent premise bounds would cross; clamp is never needed for
    // unit-interval inputs because lo <= a1 <= b1 and lo <= a2 <= b2
    Interval::new(lo, hi)
}

/// The exhaustive route. Regions lying outside every denominator cannot
/// affect any proportion and are pinned to zero, which keeps the search at
/// desk scale for the schemas the engine exhibits.
pub fn interval_conclude_exhaustive(
    premises: &[ProportionConstraint],
    goal: &ProportionGoal,
    max_total: u64,
) -> Result<IntervalConclusion, NumericError> {
    let mut terms: Vec<Term> = Vec::new();
    let mut push = |t: &Term| {
        if !terms.contains(t) {
            terms.push(t.clone());
        }
    };
    for premise in premises {
        push(&premise.denominator);
        premise.numerator.mentioned_terms().for_each(&mut push);
    }
    push(&goal.denominator);
    goal.numerator.mentioned_terms().for_each(&mut push);
    terms.sort();

    let denominator_bits: Vec<usize> = premises
        .iter()
        .map(|p| &p.denominator)
        .chain(std::iter::once(&goal.denominator))
        .map(|d| terms.iter().position(|t| t == d).expect("collected above"))
        .collect();
    let relevant: Vec<usize> = (0..1usize << terms.len())
        .filter(|mask| denominator_bits.iter().any(|bit| mask & (1 << bit) != 0))
        .collect();

    let mut found_satisfying = false;
    let mut best: Option<(Rat, RegionVector, Rat, RegionVector)> = None;

    for total in 1..=max_total {
        for_each_composition::<()>(total, relevant.len(), |relevant_counts| {
            let mut counts = vec![0u64; 1 << terms.len()];
            for (slot, mask) in relevant.iter().enumerate() {
                counts[*mask] = relevant_counts[slot];
            }
            let rv = RegionVector::new(terms.clone(), counts)?;
            if !premises.iter().all(|p| constraint_holds(&rv, p)) {
                return None;
            }
            found_satisfying = true;
            let value = proportion(&rv, &goal.numerator, &goal.denominator)?;
            match &mut best {
                None => best = Some((value, rv.clone(), value, rv)),
                Some((min, min_witness, max, max_witness)) => {
                    if value < *min {
                        *min = value;
                        *min_witness = rv.clone();
                    }
                    if value > *max {
                        *max = value;
                        *max_witness = rv;
                    }
                }
            }
            None
        });
    }

    match best {
        Some((min, min_witness, max, max_witness)) => Ok(IntervalConclusion {
            interval: Interval::new(min, max).expect("min <= max by construction"),
            witness_min: Some(min_witness),
            witness_max: Some(max_witness),
            route: ConclusionRoute::BruteForce,
        }),
        None if found_satisfying => Err(NumericError::EmptyDenominator {
            term: goal.denominator.clone(),
        }),
        None => Err(NumericError::Inconsistent),
    }
}

fn constraint_holds(rv: &RegionVector, constraint: &ProportionConstraint) -> bool {
    match proportion(rv, &constraint.numerator, &constraint.denominator) {
        Some(p) => constraint.bounds.contains(&p),
        None => false,
    }
}

fn proportion(rv: &RegionVector, numerator: &RegionExpr, denominator: &Term) -> Option<Rat> {
    let den = rv.term_cardinality(denominator)?;
    if den == 0 {
        return None;
    }
    let num = rv.expr_cardinality(&numerator.clone().and(denominator.clone()))?;
    Some(rat(num as i64, den as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(name: &str) -> Term {
        Term::new(name).unwrap()
    }

    fn constraint(num: &str, den: &str, lo: Rat, hi: Rat) -> ProportionConstraint {
        ProportionConstraint {
            numerator: RegionExpr::term(term(num)),
            denominator: term(den),
            bounds: Interval::new(lo, hi).unwrap(),
        }
    }

    fn conjunction_goal(a: &str, b: &str, den: &str) -> ProportionGoal {
        ProportionGoal {
            numerator: RegionExpr::term(term(a)).and(term(b)),
            denominator: term(den),
        }
    }

    #[test]
    fn interval_syllogism_from_the_worked_example() {
        // [0.3,0.5] single people are young; [0.7,0.9] single people are
        // students |- [0,0.5] single people are young and students
        let premises = [
            constraint("young", "single people", rat(3, 10), rat(1, 2)),
            constraint("students", "single people", rat(7, 10), rat(9, 10)),
        ];
        let goal = conjunction_goal("young", "students", "single people");
        let conclusion = interval_conclude(&premises, &goal, 40).unwrap();
        assert_eq!(conclusion.route, ConclusionRoute::Frechet);
        assert_eq!(
            conclusion.interval,
            Interval::new(rat(0, 1), rat(1, 2)).unwrap()
        );
    }

    #[test]
    fn certain_premises_give_a_certain_conjunction() {
        let premises = [
            constraint("young", "single", rat(1, 1), rat(1, 1)),
            constraint("students", "single", rat(1, 1), rat(1, 1)),
        ];
        let goal = conjunction_goal("young", "students", "single");
        let conclusion = interval_conclude(&premises, &goal, 20).unwrap();
        assert_eq!(
            conclusion.interval,
            Interval::new(rat(1, 1), rat(1, 1)).unwrap()
        );
    }

    #[test]
    fn frechet_agrees_with_brute_force_on_aligned_totals() {
        // lcm of the bound denominators divides 40, so endpoints match exactly
        let premises = [
            constraint("young", "single", rat(3, 5), rat(4, 5)),
            constraint("students", "single", rat(1, 2), rat(7, 10)),
        ];
        let goal = conjunction_goal("young", "students", "single");
        let fast = frechet_bounds(&premises, &goal).unwrap();
        assert_eq!(fast, Interval::new(rat(1, 10), rat(7, 10)).unwrap());
        let brute = interval_conclude_exhaustive(&premises, &goal, 40).unwrap();
        assert_eq!(brute.interval, fast);
        assert!(brute.witness_min.is_some() && brute.witness_max.is_some());
    }

    #[test]
    fn inconsistent_premises_reported() {
        let premises = [
            constraint("young", "single", rat(1, 1), rat(1, 1)),
            ProportionConstraint {
                numerator: RegionExpr::term(term("young")),
                denominator: term("single"),
                bounds: Interval::new(rat(0, 1), rat(0, 1)).unwrap(),
            },
        ];
        // not the conjunction schema (same numerator term), so brute force runs
        let goal = conjunction_goal("young", "students", "single");
        assert_eq!(
            interval_conclude(&premises, &goal, 10),
            Err(NumericError::Inconsistent)
        );
    }

    #[test]
    fn empty_goal_denominator_reported() {
        // the budget of one atom is spent satisfying the premise, which
        // pins it outside the goal denominator
        let premises = [ProportionConstraint {
            numerator: RegionExpr::complement_term(term("students")),
            denominator: term("single"),
            bounds: Interval::new(rat(1, 1), rat(1, 1)).unwrap(),
        }];
        let goal = ProportionGoal {
            numerator: RegionExpr::term(term("young")),
            denominator: term("students"),
        };
        assert_eq!(
            interval_conclude_exhaustive(&premises, &goal, 1),
            Err(NumericError::EmptyDenominator {
                term: term("students")
            })
        );
    }

    #[test]
    fn off_schema_goals_take_the_brute_route() {
        let premises = [
            constraint("young", "single", rat(1, 2), rat(1, 1)),
            constraint("students", "young", rat(1, 2), rat(1, 1)),
        ];
        let goal = conjunction_goal("young", "students", "single");
        let conclusion = interval_conclude(&premises, &goal, 8).unwrap();
        assert_eq!(conclusion.route, ConclusionRoute::BruteForce);
    }
}
