use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::SchurExpansion;

/// A product `e_{k1} e_{k2} ...` of elementary symmetric functions.
///
/// Any negative index makes the whole product zero; `e_0 = 1` factors are
/// dropped. Indices are kept in descending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EProduct {
    indices: Vec<u32>,
    is_zero: bool,
}

impl EProduct {
    pub fn new<I: IntoIterator<Item = i64>>(indices: I) -> Self {
        let mut kept = Vec::new();
        let mut is_zero = false;
        for k in indices {
            if k < 0 {
                is_zero = true;
            } else if k > 0 {
                kept.push(k as u32);
            }
        }
        if is_zero {
            kept.clear();
        }
        kept.sort_unstable_by(|a, b| b.cmp(a));
        EProduct { indices: kept, is_zero }
    }

    pub fn zero() -> Self {
        EProduct { indices: Vec::new(), is_zero: true }
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }

    /// Positive indices, descending. Empty for the zero product and for 1.
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn degree(&self) -> u64 {
        self.indices.iter().map(|&k| k as u64).sum()
    }

    /// Schur expansion by iterated Pieri, largest factor first.
    pub fn expand(&self) -> SchurExpansion {
        if self.is_zero {
            return SchurExpansion::zero();
        }
        self.indices
            .iter()
            .fold(SchurExpansion::one(), |acc, &k| acc.pieri_mul_e(k as i64))
    }
}

pub fn expand_eproduct(p: &EProduct) -> SchurExpansion {
    p.expand()
}

impl fmt::Display for EProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero {
            return f.write_str("0");
        }
        if self.indices.is_empty() {
            return f.write_str("1");
        }
        for (i, k) in self.indices.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "e{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for EProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `e2*e1*e1`, `e_2 * e_{-1}`, `1` and `0`.
impl FromStr for EProduct {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        match text {
            "0" => return Ok(EProduct::zero()),
            "1" => return Ok(EProduct::new([])),
            _ => {}
        }
        let mut indices = Vec::new();
        for factor in text.split('*') {
            let body = factor
                .trim()
                .strip_prefix('e')
                .ok_or_else(|| Error::EProduct(s.to_string()))?;
            let body = body.strip_prefix('_').unwrap_or(body);
            let body = body
                .strip_prefix('{')
                .and_then(|b| b.strip_suffix('}'))
                .unwrap_or(body);
            let k: i64 = body.parse().map_err(|_| Error::EProduct(s.to_string()))?;
            indices.push(k);
        }
        Ok(EProduct::new(indices))
    }
}
