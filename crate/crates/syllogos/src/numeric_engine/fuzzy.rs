//! Fuzzy syllogistics: the Quantifier Extension Principle over alpha-cuts.
//!
//! Only the intersection/product schema is supported; its combination rule
//! on alpha-cut intervals is endpoint multiplication, which is exact for
//! values in `[0, 1]` and sidesteps general fuzzy-arithmetic pitfalls.

use crate::model::{Interval, Rat, Trapezoid};
use crate::numeric_engine::NumericError;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Inference schema for the fuzzy engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FuzzySchema {
    /// `Q1 S are A; Q2 (S and A) are B |- Q1 ⊗ Q2 S are A and B`, with ⊗
    /// the fuzzy multiplication.
    IntersectionProduct,
}

/// One alpha level with the conclusion interval it cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaCut {
    #[serde(with = "crate::model::rational::rat_serde")]
    pub alpha: Rat,
    pub cut: Interval,
}

/// The conclusion quantifier as a family of alpha-cut intervals, ascending
/// in alpha. This is a piecewise approximation of the exact fuzzy number;
/// cuts are nested (higher alpha, narrower cut).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaCutFamily {
    cuts: Vec<AlphaCut>,
}

impl AlphaCutFamily {
    pub fn cuts(&self) -> &[AlphaCut] {
        &self.cuts
    }

    /// Nesting check: for alpha <= alpha', cut(alpha') ⊆ cut(alpha).
    pub fn is_nested(&self) -> bool {
        self.cuts
            .windows(2)
            .all(|pair| pair[0].cut.contains_interval(&pair[1].cut))
    }
}

/// Propagates the premise quantifiers through the schema at each alpha
/// level: take the alpha-cut of every premise trapezoid and combine the
/// cuts (interval multiplication for the intersection/product schema).
///
/// `alpha_levels` must be sorted ascending within `(0, 1]`.
pub fn fuzzy_conclude_qep(
    premises: &[Trapezoid],
    schema: FuzzySchema,
    alpha_levels: &[Rat],
) -> Result<AlphaCutFamily, NumericError> {
    if premises.is_empty() {
        return Err(NumericError::NoPremises);
    }
    let ascending = alpha_levels.windows(2).all(|w| w[0] < w[1]);
    let in_range = alpha_levels
        .iter()
        .all(|a| *a > Rat::zero() && *a <= Rat::one());
    if alpha_levels.is_empty() || !ascending || !in_range {
        return Err(NumericError::BadAlphaLevels);
    }

    let FuzzySchema::IntersectionProduct = schema;
    let cuts = alpha_levels
        .iter()
        .map(|alpha| {
            let combined = premises
                .iter()
                .map(|t| t.alpha_cut(alpha))
                .reduce(|acc, cut| acc.mul_nonneg(&cut))
                .expect("at least one premise");
            AlphaCut {
                alpha: *alpha,
                cut: combined,
            }
        })
        .collect();
    Ok(AlphaCutFamily { cuts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rat;

    fn one() -> Rat {
        rat(1, 1)
    }

    #[test]
    fn almost_all_interval_squared() {
        // "almost all" as the crisp interval [0.95, 1]
        let almost_all = Trapezoid::from_interval(Interval::new(rat(19, 20), one()).unwrap());
        let family = fuzzy_conclude_qep(
            &[almost_all, almost_all],
            FuzzySchema::IntersectionProduct,
            &[one()],
        )
        .unwrap();
        assert_eq!(
            family.cuts(),
            &[AlphaCut {
                alpha: one(),
                cut: Interval::new(rat(361, 400), one()).unwrap()
            }]
        );
    }

    #[test]
    fn point_one_is_the_multiplicative_identity() {
        let q = Trapezoid::new(rat(1, 2), rat(3, 5), rat(7, 10), rat(4, 5)).unwrap();
        let identity = Trapezoid::point(one());
        let levels = [rat(1, 4), rat(1, 2), one()];
        let family =
            fuzzy_conclude_qep(&[q, identity], FuzzySchema::IntersectionProduct, &levels).unwrap();
        for AlphaCut { alpha, cut } in family.cuts() {
            assert_eq!(*cut, q.alpha_cut(alpha));
        }
    }

    #[test]
    fn kernel_cut_squared() {
        // [0.95, 0.97, 0.98, 1] at alpha = 1 cuts to [0.97, 0.98]
        let t = Trapezoid::new(rat(19, 20), rat(97, 100), rat(49, 50), one()).unwrap();
        let family =
            fuzzy_conclude_qep(&[t, t], FuzzySchema::IntersectionProduct, &[one()]).unwrap();
        assert_eq!(
            family.cuts(),
            &[AlphaCut {
                alpha: one(),
                cut: Interval::new(rat(9409, 10000), rat(9604, 10000)).unwrap()
            }]
        );
    }

    #[test]
    fn cuts_are_nested() {
        let t1 = Trapezoid::new(rat(1, 10), rat(3, 10), rat(2, 5), rat(9, 10)).unwrap();
        let t2 = Trapezoid::new(rat(0, 1), rat(1, 2), rat(1, 2), one()).unwrap();
        let levels = [rat(1, 10), rat(1, 4), rat(1, 2), rat(3, 4), one()];
        let family =
            fuzzy_conclude_qep(&[t1, t2], FuzzySchema::IntersectionProduct, &levels).unwrap();
        assert!(family.is_nested());
    }

    #[test]
    fn malformed_alpha_levels_rejected() {
        let t = Trapezoid::point(one());
        for levels in [
            vec![],
            vec![rat(0, 1)],
            vec![rat(1, 2), rat(1, 4)],
            vec![rat(3, 2)],
        ] {
            assert_eq!(
                fuzzy_conclude_qep(&[t], FuzzySchema::IntersectionProduct, &levels),
                Err(NumericError::BadAlphaLevels),
                "{levels:?}"
            );
        }
    }
}
