//! Characteristic numbers of closed oriented 4-manifolds.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::InvariantError;

/// The shipped table, validated by [`Closed4Table::builtin`].
pub const BUILTIN_TABLE: &str = include_str!("../../data/closed4.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Closed4Entry {
    pub name: String,
    pub spin: bool,
    pub integral_p1: i64,
    pub signature: i64,
    #[serde(serialize_with = "ser_ratio", deserialize_with = "de_ratio")]
    pub a_hat: Rational64,
}

fn ser_ratio<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn de_ratio<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Text(String),
    }
    match Raw::deserialize(d)? {
        Raw::Int(n) => Ok(Rational64::from_integer(n)),
        Raw::Text(t) => Rational64::from_str(t.trim())
            .map_err(|_| serde::de::Error::custom(format!("not a rational number: {t:?}"))),
    }
}

impl Closed4Entry {
    /// `½∫p₁`, exact.
    pub fn half_p1(&self) -> Rational64 {
        Rational64::new(self.integral_p1, 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TableIssue {
    /// `Â ≠ −∫p₁ / 24`.
    AHat { expected: String, found: String },
    /// Spin entry whose `Â` is not an even integer.
    AHatNotEven { found: String },
    /// Spin entry with `∫p₁ ≢ 0 mod 48`.
    P1NotDivisibleBy48 { integral_p1: i64 },
    /// `σ ≠ ∫p₁ / 3`.
    Signature { expected: String, found: i64 },
    DuplicateName,
}

impl fmt::Display for TableIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableIssue::AHat { expected, found } => write!(f, "a_hat is {found}, expected {expected}"),
            TableIssue::AHatNotEven { found } => write!(f, "spin entry has a_hat {found}, not an even integer"),
            TableIssue::P1NotDivisibleBy48 { integral_p1 } => {
                write!(f, "spin entry has integral_p1 = {integral_p1}, not divisible by 48")
            }
            TableIssue::Signature { expected, found } => {
                write!(f, "signature is {found}, expected integral_p1 / 3 = {expected}")
            }
            TableIssue::DuplicateName => write!(f, "duplicate name"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub checked: usize,
    pub issues: Vec<(String, TableIssue)>,
}

impl TableReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn flagged(&self) -> BTreeSet<&str> {
        self.issues.iter().map(|(n, _)| n.as_str()).collect()
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "checked={} issues={}", self.checked, self.issues.len())?;
        for (name, issue) in &self.issues {
            write!(f, "\n{name}: {issue}")?;
        }
        Ok(())
    }
}

pub fn validate_table(entries: &[Closed4Entry]) -> TableReport {
    let mut report = TableReport {
        checked: entries.len(),
        issues: Vec::new(),
    };
    let mut seen = BTreeSet::new();
    for e in entries {
        let mut flag = |issue| report.issues.push((e.name.clone(), issue));
        if !seen.insert(e.name.as_str()) {
            flag(TableIssue::DuplicateName);
        }
        let expected = Rational64::new(-e.integral_p1, 24);
        if e.a_hat != expected {
            flag(TableIssue::AHat {
                expected: expected.to_string(),
                found: e.a_hat.to_string(),
            });
        }
        let sigma = Rational64::new(e.integral_p1, 3);
        if sigma != Rational64::from_integer(e.signature) {
            flag(TableIssue::Signature {
                expected: sigma.to_string(),
                found: e.signature,
            });
        }
        if e.spin {
            if !e.a_hat.is_integer() || e.a_hat.to_integer() % 2 != 0 {
                flag(TableIssue::AHatNotEven {
                    found: e.a_hat.to_string(),
                });
            }
            if e.integral_p1 % 48 != 0 {
                flag(TableIssue::P1NotDivisibleBy48 {
                    integral_p1: e.integral_p1,
                });
            }
        }
    }
    report
}

/// A validated table.
#[derive(Clone, Debug)]
pub struct Closed4Table {
    entries: Vec<Closed4Entry>,
}

impl Closed4Table {
    /// Rejects tables that fail [`validate_table`].
    pub fn new(entries: Vec<Closed4Entry>) -> Result<Self, InvariantError> {
        let report = validate_table(&entries);
        if !report.is_valid() {
            return Err(InvariantError::InvalidTable(report.to_string()));
        }
        Ok(Closed4Table { entries })
    }

    pub fn from_json(text: &str) -> Result<Self, InvariantError> {
        let entries: Vec<Closed4Entry> =
            serde_json::from_str(text).map_err(|e| InvariantError::InvalidTable(e.to_string()))?;
        Self::new(entries)
    }

    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_TABLE).expect("shipped table is valid")
    }

    pub fn entries(&self) -> &[Closed4Entry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Closed4Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn spin_entries(&self) -> impl Iterator<Item = &Closed4Entry> {
        self.entries.iter().filter(|e| e.spin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(name: &str, spin: bool, p1: i64, sigma: i64, a_hat: Rational64) -> Closed4Entry {
        Closed4Entry {
            name: name.into(),
            spin,
            integral_p1: p1,
            signature: sigma,
            a_hat,
        }
    }

    #[test]
    fn builtin_table_is_valid() {
        let t = Closed4Table::builtin();
        assert_eq!(t.get("K3").unwrap().half_p1(), Rational64::from_integer(-24));
        assert_eq!(t.get("CP2").unwrap().a_hat, Rational64::new(-1, 8));
        assert!(t.spin_entries().all(|e| e.integral_p1 % 48 == 0));
    }

    #[test]
    fn corrupted_spin_entry_is_flagged() {
        let bad = entry("fake", true, -24, -8, Rational64::from_integer(1));
        let report = validate_table(std::slice::from_ref(&bad));
        assert!(report
            .issues
            .iter()
            .any(|(_, i)| matches!(i, TableIssue::P1NotDivisibleBy48 { integral_p1: -24 })));
        // The same numbers are fine for a non-spin manifold (Enriques surface).
        let ok = Closed4Entry { spin: false, ..bad };
        assert!(validate_table(&[ok]).is_valid());
    }

    #[test]
    fn a_hat_mismatch_is_flagged() {
        let bad = entry("K3", true, -48, -16, Rational64::from_integer(-2));
        let report = validate_table(&[bad]);
        assert!(matches!(report.issues[0].1, TableIssue::AHat { .. }));
    }

    #[test]
    fn parses_integer_and_fraction_a_hat() {
        let t: Vec<Closed4Entry> = serde_json::from_str(
            r#"[{"name":"a","spin":false,"integral_p1":3,"signature":1,"a_hat":"-1/8"},
                {"name":"b","spin":true,"integral_p1":0,"signature":0,"a_hat":0}]"#,
        )
        .unwrap();
        assert!(validate_table(&t).is_valid());
        let back = serde_json::to_string(&t[0]).unwrap();
        assert!(back.contains("\"-1/8\""));
    }
}
