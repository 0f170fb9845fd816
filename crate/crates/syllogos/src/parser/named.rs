//! Named-quantifier configuration: a JSON map from surface names to
//! interval or trapezoid quantifiers, resolved by the parser before the
//! built-in determiners.
//!
//! Fuzzy trapezoid quantifiers have no inline name syntax; runs that want
//! "most" to mean a trapezoid load a configuration (via `--quantifiers` or
//! the `SYLLOGOS_QUANTIFIERS` environment variable).
//!
//! Number values must be exact: `{"num": 19, "den": 20}`, an integer, or a
//! string like `"0.95"` / `"19/20"`. Bare JSON floats are rejected because
//! they do not round-trip exactly.

use crate::model::{parse_rat, Interval, Quantifier, Rat, Trapezoid};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("quantifier config is not valid JSON: {0}")]
    Json(String),
    #[error("quantifier {name:?}: {reason}")]
    Entry { name: String, reason: String },
}

/// Surface name -> quantifier map. Names are case- and
/// whitespace-normalized like term names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NamedQuantifiers {
    map: BTreeMap<String, Quantifier>,
}

fn normalize(name: &str) -> String {
    name.split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

impl NamedQuantifiers {
    pub fn empty() -> NamedQuantifiers {
        NamedQuantifiers::default()
    }

    /// The configuration shipped with the crate: "almost all" as
    /// `[0.95, 0.97, 0.98, 1]`, "few" as `[0, 0.08, 0.12, 0.2]`, plus
    /// interpretive trapezoids for "most" and "many". A commonly quoted
    /// variant of "few", `[0, 0.8, 0.12, 0.2]`, violates the trapezoid
    /// ordering and is presumed a typo of the value shipped here; see the
    /// README note.
    pub fn builtin_defaults() -> NamedQuantifiers {
        use crate::model::rat;
        let trap = |a, c, d, b| Quantifier::Trapezoid(Trapezoid { a, c, d, b });
        let mut named = NamedQuantifiers::empty();
        named.insert(
            "almost all",
            trap(rat(19, 20), rat(97, 100), rat(49, 50), rat(1, 1)),
        );
        named.insert("few", trap(rat(0, 1), rat(2, 25), rat(3, 25), rat(1, 5)));
        named.insert("most", trap(rat(1, 2), rat(11, 20), rat(1, 1), rat(1, 1)));
        named.insert("many", trap(rat(2, 5), rat(1, 2), rat(1, 1), rat(1, 1)));
        named
    }

    pub fn insert(&mut self, name: &str, quantifier: Quantifier) {
        self.map.insert(normalize(name), quantifier);
    }

    pub fn get(&self, name: &str) -> Option<&Quantifier> {
        self.map.get(&normalize(name))
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// First configured name bound to this quantifier (for rendering
    /// conclusions with their surface names).
    pub fn name_of(&self, quantifier: &Quantifier) -> Option<&str> {
        self.map
            .iter()
            .find(|(_, q)| *q == quantifier)
            .map(|(name, _)| name.as_str())
    }

    /// Longest configured name matching a prefix of `words`, with the
    /// number of words it consumes.
    pub fn longest_match(&self, words: &[&str]) -> Option<(usize, &Quantifier)> {
        for len in (1..=words.len().min(4)).rev() {
            let candidate = words[..len].join(" ").to_lowercase();
            if let Some(q) = self.map.get(&candidate) {
                return Some((len, q));
            }
        }
        None
    }

    pub fn from_json_str(text: &str) -> Result<NamedQuantifiers, ConfigError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| ConfigError::Json(e.to_string()))?;
        let object = value.as_object().ok_or_else(|| {
            ConfigError::Json("expected a top-level object mapping names to quantifiers".into())
        })?;
        let mut named = NamedQuantifiers::empty();
        for (name, entry) in object {
            let quantifier = parse_entry(name, entry)?;
            quantifier.validate().map_err(|e| ConfigError::Entry {
                name: name.clone(),
                reason: e.to_string(),
            })?;
            named.insert(name, quantifier);
        }
        Ok(named)
    }
}

fn parse_entry(name: &str, entry: &serde_json::Value) -> Result<Quantifier, ConfigError> {
    let entry_err = |reason: &str| ConfigError::Entry {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    let object = entry
        .as_object()
        .ok_or_else(|| entry_err("expected an object with a \"kind\" field"))?;
    let kind = object
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| entry_err("missing \"kind\" (\"interval\" or \"trapezoid\")"))?;
    let number = |field: &str| -> Result<Rat, ConfigError> {
        let value = object
            .get(field)
            .ok_or_else(|| entry_err(&format!("missing field {field:?}")))?;
        exact_number(value).ok_or_else(|| {
            entry_err(&format!(
                "field {field:?} must be exact: an integer, {{\"num\",\"den\"}}, or a string like \"0.95\""
            ))
        })
    };
    match kind {
        "interval" => Ok(Quantifier::Interval(Interval {
            lo: number("lo")?,
            hi: number("hi")?,
        })),
        "trapezoid" => Ok(Quantifier::Trapezoid(Trapezoid {
            a: number("a")?,
            c: number("c")?,
            d: number("d")?,
            b: number("b")?,
        })),
        other => Err(entry_err(&format!("unknown kind {other:?}"))),
    }
}

fn exact_number(value: &serde_json::Value) -> Option<Rat> {
    match value {
        serde_json::Value::Number(n) => {
            let int = n.as_i64()?;
            Some(Rat::from_integer(int))
        }
        serde_json::Value::String(s) => parse_rat(s),
        serde_json::Value::Object(o) => {
            let num = o.get("num")?.as_i64()?;
            let den = o.get("den")?.as_i64()?;
            if den == 0 {
                return None;
            }
            Some(Rat::new(num, den))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::rat;

    #[test]
    fn loads_interval_and_trapezoid_entries() {
        let json = r#"{
            "almost all": {"kind": "trapezoid", "a": "0.95", "c": "0.97", "d": "0.98", "b": 1},
            "few": {"kind": "interval", "lo": 0, "hi": {"num": 1, "den": 5}}
        }"#;
        let named = NamedQuantifiers::from_json_str(json).unwrap();
        assert_eq!(
            named.get("Almost  All"),
            Some(&Quantifier::Trapezoid(
                Trapezoid::new(rat(19, 20), rat(97, 100), rat(49, 50), rat(1, 1)).unwrap()
            ))
        );
        assert_eq!(
            named.get("few"),
            Some(&Quantifier::Interval(
                Interval::new(rat(0, 1), rat(1, 5)).unwrap()
            ))
        );
    }

    #[test]
    fn bare_floats_are_rejected() {
        let json = r#"{"most": {"kind": "interval", "lo": 0.5, "hi": 1}}"#;
        assert!(matches!(
            NamedQuantifiers::from_json_str(json),
            Err(ConfigError::Entry { .. })
        ));
    }

    #[test]
    fn malformed_trapezoids_are_rejected() {
        let json = r#"{"few": {"kind": "trapezoid", "a": 0, "c": "0.8", "d": "0.12", "b": "0.2"}}"#;
        assert!(matches!(
            NamedQuantifiers::from_json_str(json),
            Err(ConfigError::Entry { .. })
        ));
    }

    #[test]
    fn builtin_defaults_are_well_formed() {
        let named = NamedQuantifiers::builtin_defaults();
        for name in ["almost all", "few", "most", "many"] {
            assert!(named.get(name).is_some(), "{name}");
            named.get(name).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn longest_match_prefers_multiword_names() {
        let named = NamedQuantifiers::builtin_defaults();
        let words = ["almost", "all", "students"];
        let (consumed, q) = named.longest_match(&words).unwrap();
        assert_eq!(consumed, 2);
        assert!(matches!(q, Quantifier::Trapezoid(_)));
    }
}
