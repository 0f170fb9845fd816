//! Quantifier variants: classical, intermediate crisp, absolute, exception,
//! proportion-interval and fuzzy-trapezoid.

use crate::model::rational::{in_unit, rat_serde, Interval, Rat, Trapezoid};
use crate::model::ModelError;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A generalized quantifier. Interval and trapezoid payloads carry exact
/// rationals in `[0, 1]`; the constructors on [`Interval`] and [`Trapezoid`]
/// enforce ordering, [`Quantifier::validate`] enforces the unit range.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Quantifier {
    All,
    No,
    Some,
    SomeNot,
    Most,
    Many,
    Few,
    AlmostAll,
    /// "all but k": exactly k subject elements fall outside the predicate.
    AllBut(u64),
    Exactly(u64),
    AtLeast(u64),
    /// Proportion constrained to a closed subinterval of `[0, 1]`.
    Interval(Interval),
    /// Fuzzy proportional quantifier `[a, c, d, b]`.
    Trapezoid(Trapezoid),
}

/// Bare quantifier kind, used for informativeness orders and square tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuantifierTag {
    All,
    No,
    Some,
    SomeNot,
    Most,
    Many,
    Few,
    AlmostAll,
}

impl Quantifier {
    pub fn validate(&self) -> Result<(), ModelError> {
        match self {
            Quantifier::Interval(iv) => {
                if iv.lo > iv.hi {
                    return Err(ModelError::IntervalOrder {
                        lo: iv.lo,
                        hi: iv.hi,
                    });
                }
                if !in_unit(&iv.lo) || !in_unit(&iv.hi) {
                    return Err(ModelError::OutOfUnitRange);
                }
                Ok(())
            }
            Quantifier::Trapezoid(t) => {
                if !(t.a <= t.c && t.c <= t.d && t.d <= t.b) {
                    return Err(ModelError::TrapezoidOrder);
                }
                if !(in_unit(&t.a) && in_unit(&t.b)) {
                    return Err(ModelError::OutOfUnitRange);
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// The classical/intermediate tag, if this quantifier has one.
    pub fn tag(&self) -> Option<QuantifierTag> {
        match self {
            Quantifier::All => Some(QuantifierTag::All),
            Quantifier::No => Some(QuantifierTag::No),
            Quantifier::Some => Some(QuantifierTag::Some),
            Quantifier::SomeNot => Some(QuantifierTag::SomeNot),
            Quantifier::Most => Some(QuantifierTag::Most),
            Quantifier::Many => Some(QuantifierTag::Many),
            Quantifier::Few => Some(QuantifierTag::Few),
            Quantifier::AlmostAll => Some(QuantifierTag::AlmostAll),
            _ => None,
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(
            self,
            Quantifier::All | Quantifier::No | Quantifier::Some | Quantifier::SomeNot
        )
    }

    /// Proportional quantifiers divide by the subject cardinality and are
    /// undefined on an empty subject.
    pub fn is_proportional(&self) -> bool {
        matches!(
            self,
            Quantifier::Most
                | Quantifier::Many
                | Quantifier::Few
                | Quantifier::AlmostAll
                | Quantifier::Interval(_)
        )
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantifier::All => f.write_str("all"),
            Quantifier::No => f.write_str("no"),
            Quantifier::Some => f.write_str("some"),
            Quantifier::SomeNot => f.write_str("some … not"),
            Quantifier::Most => f.write_str("most"),
            Quantifier::Many => f.write_str("many"),
            Quantifier::Few => f.write_str("few"),
            Quantifier::AlmostAll => f.write_str("almost all"),
            Quantifier::AllBut(k) => write!(f, "all but {k}"),
            Quantifier::Exactly(k) => write!(f, "exactly {k}"),
            Quantifier::AtLeast(k) => write!(f, "at least {k}"),
            Quantifier::Interval(iv) => write!(f, "{iv}"),
            Quantifier::Trapezoid(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Display for QuantifierTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuantifierTag::All => f.write_str("all"),
            QuantifierTag::No => f.write_str("no"),
            QuantifierTag::Some => f.write_str("some"),
            QuantifierTag::SomeNot => f.write_str("some?not"),
            QuantifierTag::Most => f.write_str("most"),
            QuantifierTag::Many => f.write_str("many"),
            QuantifierTag::Few => f.write_str("few"),
            QuantifierTag::AlmostAll => f.write_str("almost all"),
        }
    }
}

// JSON encoding, documented in the repository README: niladic quantifiers are
// plain strings ("all", "some-not", ...); parameterized ones are single-key
// objects ({"all-but": 3}, {"interval": {"lo": {"num":3,"den":10}, ...}}).

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    #[serde(with = "rat_serde")]
    lo: Rat,
    #[serde(with = "rat_serde")]
    hi: Rat,
}

#[derive(Serialize, Deserialize)]
struct TrapezoidRepr {
    #[serde(with = "rat_serde")]
    a: Rat,
    #[serde(with = "rat_serde")]
    c: Rat,
    #[serde(with = "rat_serde")]
    d: Rat,
    #[serde(with = "rat_serde")]
    b: Rat,
}

#[derive(Serialize, Deserialize)]
enum ParamRepr {
    #[serde(rename = "all-but")]
    AllBut(u64),
    #[serde(rename = "exactly")]
    Exactly(u64),
    #[serde(rename = "at-least")]
    AtLeast(u64),
    #[serde(rename = "interval")]
    Interval(IntervalRepr),
    #[serde(rename = "trapezoid")]
    Trapezoid(TrapezoidRepr),
}

impl Serialize for Quantifier {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Quantifier::All => "all".serialize(ser),
            Quantifier::No => "no".serialize(ser),
            Quantifier::Some => "some".serialize(ser),
            Quantifier::SomeNot => "some-not".serialize(ser),
            Quantifier::Most => "most".serialize(ser),
            Quantifier::Many => "many".serialize(ser),
            Quantifier::Few => "few".serialize(ser),
            Quantifier::AlmostAll => "almost-all".serialize(ser),
            Quantifier::AllBut(k) => ParamRepr::AllBut(*k).serialize(ser),
            Quantifier::Exactly(k) => ParamRepr::Exactly(*k).serialize(ser),
            Quantifier::AtLeast(k) => ParamRepr::AtLeast(*k).serialize(ser),
            Quantifier::Interval(iv) => ParamRepr::Interval(IntervalRepr {
                lo: iv.lo,
                hi: iv.hi,
            })
            .serialize(ser),
            Quantifier::Trapezoid(t) => ParamRepr::Trapezoid(TrapezoidRepr {
                a: t.a,
                c: t.c,
                d: t.d,
                b: t.b,
            })
            .serialize(ser),
        }
    }
}

impl<'de> Deserialize<'de> for Quantifier {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Quantifier, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Name(String),
            Param(ParamRepr),
        }
        let q = match Repr::deserialize(de)? {
            Repr::Name(name) => match name.as_str() {
                "all" => Quantifier::All,
                "no" => Quantifier::No,
                "some" => Quantifier::Some,
                "some-not" => Quantifier::SomeNot,
                "most" => Quantifier::Most,
                "many" => Quantifier::Many,
                "few" => Quantifier::Few,
                "almost-all" => Quantifier::AlmostAll,
                other => return Err(D::Error::custom(format!("unknown quantifier {other:?}"))),
            },
            Repr::Param(ParamRepr::AllBut(k)) => Quantifier::AllBut(k),
            Repr::Param(ParamRepr::Exactly(k)) => Quantifier::Exactly(k),
            Repr::Param(ParamRepr::AtLeast(k)) => Quantifier::AtLeast(k),
            Repr::Param(ParamRepr::Interval(r)) => {
                Quantifier::Interval(Interval { lo: r.lo, hi: r.hi })
            }
            Repr::Param(ParamRepr::Trapezoid(r)) => Quantifier::Trapezoid(Trapezoid {
                a: r.a,
                c: r.c,
                d: r.d,
                b: r.b,
            }),
        };
        q.validate().map_err(D::Error::custom)?;
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rational::rat;

    #[test]
    fn interval_validation_rejects_reversed_bounds() {
        let q = Quantifier::Interval(Interval {
            lo: rat(1, 2),
            hi: rat(3, 10),
        });
        assert!(matches!(
            q.validate(),
            Err(ModelError::IntervalOrder { .. })
        ));
    }

    #[test]
    fn json_shapes_match_documented_schema() {
        let q = Quantifier::Interval(Interval {
            lo: rat(3, 10),
            hi: rat(1, 2),
        });
        let json = serde_json::to_value(&q).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"interval": {"lo": {"num": 3, "den": 10}, "hi": {"num": 1, "den": 2}}})
        );
        assert_eq!(
            serde_json::to_value(Quantifier::SomeNot).unwrap(),
            serde_json::json!("some-not")
        );
        let back: Quantifier = serde_json::from_value(json).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn json_rejects_malformed_interval() {
        let bad = serde_json::json!({"interval": {"lo": {"num": 1, "den": 2}, "hi": {"num": 3, "den": 10}}});
        assert!(serde_json::from_value::<Quantifier>(bad).is_err());
    }
}
