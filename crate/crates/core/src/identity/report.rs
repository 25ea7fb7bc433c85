use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::schur::SchurExpansion;

/// Named integer parameters of a check, kept in insertion order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Parameters(Vec<(&'static str, i64)>);

impl Parameters {
    pub fn new() -> Self {
        Parameters::default()
    }

    pub fn with(mut self, name: &'static str, value: i64) -> Self {
        self.0.push((name, value));
        self
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, i64)> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for (n, v) in &self.0 {
            write!(f, "{sep}{n}={v}")?;
            sep = " ";
        }
        Ok(())
    }
}

impl fmt::Debug for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Parameters {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (n, v) in &self.0 {
            map.serialize_entry(n, v)?;
        }
        map.end()
    }
}

/// Outcome of one exact equality check between two Schur expansions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub parameter: Parameters,
    pub passed: bool,
    pub lhs: SchurExpansion,
    pub rhs: SchurExpansion,
    /// `lhs - rhs`; empty exactly when the check passed.
    pub discrepancy: SchurExpansion,
}

impl LemmaReport {
    pub fn compare(
        lemma: impl Into<String>,
        parameter: Parameters,
        lhs: SchurExpansion,
        rhs: SchurExpansion,
    ) -> Self {
        let discrepancy = &lhs - &rhs;
        LemmaReport {
            lemma: lemma.into(),
            parameter,
            passed: discrepancy.is_zero(),
            lhs,
            rhs,
            discrepancy,
        }
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.lemma, self.parameter)?;
        if !self.passed {
            write!(f, " discrepancy: {}", self.discrepancy)?;
        }
        Ok(())
    }
}
