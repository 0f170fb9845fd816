//! Exact rational arithmetic helpers shared across the crate.
//!
//! All proportions, probabilities and fuzzy membership values are
//! `num_rational::Rational64` so that reference values like `[0, 0.5]`
//! compare bit-exactly, with no floating-point tolerance anywhere.

use num_rational::Rational64;
use num_traits::Signed;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Crate-wide exact rational type.
pub type Rat = Rational64;

/// Convenience constructor: `rat(3, 10)` is `3/10`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

/// Parses `"0.3"`, `"3/10"` or `"2"` into an exact rational.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().ok()?;
        let den: i64 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Rat::new(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let whole_neg = whole.trim_start().starts_with('-');
        let whole: i64 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 12 {
            return None;
        }
        let scale = 10i64.checked_pow(frac.len() as u32)?;
        let frac_val: i64 = frac.parse().ok()?;
        let magnitude = Rat::from_integer(whole.abs()) + Rat::new(frac_val, scale);
        return Some(if whole_neg || whole < 0 {
            -magnitude
        } else {
            magnitude
        });
    }
    text.parse::<i64>().ok().map(Rat::from_integer)
}

/// Renders a rational as a terminating decimal when one exists (denominator
/// of the form 2^a * 5^b), otherwise as `num/den`. `1/2` prints as `0.5`,
/// `1/3` prints as `1/3`.
pub fn format_rat(value: &Rat) -> String {
    if value.is_integer() {
        return value.numer().to_string();
    }
    let mut den = *value.denom();
    let mut twos = 0u32;
    let mut fives = 0u32;
    while den % 2 == 0 {
        den /= 2;
        twos += 1;
    }
    while den % 5 == 0 {
        den /= 5;
        fives += 1;
    }
    if den != 1 {
        return format!("{}/{}", value.numer(), value.denom());
    }
    let digits = twos.max(fives);
    let scale = 10i64.pow(digits);
    let scaled = (value * Rat::from_integer(scale)).to_integer();
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.abs();
    let whole = abs / scale;
    let frac = abs % scale;
    let frac_str = format!("{:0width$}", frac, width = digits as usize);
    let frac_str = frac_str.trim_end_matches('0');
    format!("{sign}{whole}.{frac_str}")
}

/// True when `value` lies in the closed unit interval.
pub fn in_unit(value: &Rat) -> bool {
    !value.is_negative() && *value <= Rat::from_integer(1)
}

/// Serde bridge implementing the documented `{"num": i, "den": j}` schema.
pub mod rat_serde {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct RatRepr {
        num: i64,
        den: i64,
    }

    pub fn serialize<S: Serializer>(value: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        RatRepr {
            num: *value.numer(),
            den: *value.denom(),
        }
        .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let repr = RatRepr::deserialize(de)?;
        if repr.den == 0 {
            return Err(D::Error::custom("rational with zero denominator"));
        }
        Ok(Rat::new(repr.num, repr.den))
    }
}

/// A closed rational interval `[lo, hi]` with `lo <= hi`, both in `[0, 1]`
/// for quantifier use (the constructor enforces ordering only; unit-range
/// checks live in the quantifier constructor).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "rat_serde")]
    pub lo: Rat,
    #[serde(with = "rat_serde")]
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Option<Interval> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn point(value: Rat) -> Interval {
        Interval {
            lo: value,
            hi: value,
        }
    }

    pub fn contains(&self, value: &Rat) -> bool {
        self.lo <= *value && *value <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Endpoint product, valid for non-negative intervals (all quantifier
    /// values live in `[0, 1]`).
    pub fn mul_nonneg(&self, other: &Interval) -> Interval {
        debug_assert!(!self.lo.is_negative() && !other.lo.is_negative());
        Interval {
            lo: self.lo * other.lo,
            hi: self.hi * other.hi,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", format_rat(&self.lo), format_rat(&self.hi))
    }
}

/// Trapezoidal fuzzy number `[a, c, d, b]`: support `[a, b]`, kernel `[c, d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trapezoid {
    #[serde(with = "rat_serde")]
    pub a: Rat,
    #[serde(with = "rat_serde")]
    pub c: Rat,
    #[serde(with = "rat_serde")]
    pub d: Rat,
    #[serde(with = "rat_serde")]
    pub b: Rat,
}

impl Trapezoid {
    /// Requires `a <= c <= d <= b` (kernel inside support).
    pub fn new(a: Rat, c: Rat, d: Rat, b: Rat) -> Option<Trapezoid> {
        (a <= c && c <= d && d <= b).then_some(Trapezoid { a, c, d, b })
    }

    /// Degenerate trapezoid whose kernel equals its support, i.e. the crisp
    /// interval `[lo, hi]` seen as a fuzzy number.
    pub fn from_interval(interval: Interval) -> Trapezoid {
        Trapezoid {
            a: interval.lo,
            c: interval.lo,
            d: interval.hi,
            b: interval.hi,
        }
    }

    /// The crisp point `x` as a fuzzy number.
    pub fn point(value: Rat) -> Trapezoid {
        Trapezoid {
            a: value,
            c: value,
            d: value,
            b: value,
        }
    }

    pub fn support(&self) -> Interval {
        Interval {
            lo: self.a,
            hi: self.b,
        }
    }

    pub fn kernel(&self) -> Interval {
        Interval {
            lo: self.c,
            hi: self.d,
        }
    }

    /// The alpha-cut `[a + alpha*(c - a), b - alpha*(b - d)]` for
    /// `alpha` in `[0, 1]`; at 0 this is the support, at 1 the kernel.
    pub fn alpha_cut(&self, alpha: &Rat) -> Interval {
        debug_assert!(!alpha.is_negative() && *alpha <= Rat::from_integer(1));
        Interval {
            lo: self.a + alpha * (self.c - self.a),
            hi: self.b - alpha * (self.b - self.d),
        }
    }
}

impl fmt::Display for Trapezoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{},{}]",
            format_rat(&self.a),
            format_rat(&self.c),
            format_rat(&self.d),
            format_rat(&self.b)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_decimal_is_exact() {
        assert_eq!(parse_rat("0.3"), Some(rat(3, 10)));
        assert_eq!(parse_rat("0.95"), Some(rat(19, 20)));
        assert_eq!(parse_rat("3/10"), Some(rat(3, 10)));
        assert_eq!(parse_rat("1"), Some(rat(1, 1)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("0.x"), None);
    }

    #[test]
    fn format_prefers_terminating_decimals() {
        assert_eq!(format_rat(&rat(1, 2)), "0.5");
        assert_eq!(format_rat(&rat(3, 10)), "0.3");
        assert_eq!(format_rat(&rat(1, 3)), "1/3");
        assert_eq!(format_rat(&rat(0, 1)), "0");
        assert_eq!(format_rat(&rat(19, 20)), "0.95");
    }

    #[test]
    fn display_round_trips_through_parse() {
        for value in [rat(0, 1), rat(1, 2), rat(7, 40), rat(2, 3), rat(19, 20)] {
            assert_eq!(parse_rat(&format_rat(&value)), Some(value));
        }
    }

    #[test]
    fn alpha_cut_interpolates_support_to_kernel() {
        let t = Trapezoid::new(rat(19, 20), rat(97, 100), rat(98, 100), rat(1, 1)).unwrap();
        assert_eq!(t.alpha_cut(&rat(0, 1)), t.support());
        assert_eq!(t.alpha_cut(&rat(1, 1)), t.kernel());
        let half = t.alpha_cut(&rat(1, 2));
        assert!(t.support().contains_interval(&half));
        assert!(half.contains_interval(&t.kernel()));
    }
}
