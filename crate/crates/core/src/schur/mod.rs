//! Sparse exact arithmetic in the Schur basis.
//!
//! [`SchurExpansion`] is a finite map from partitions to nonzero integer
//! coefficients. The only products implemented are those the identity
//! machinery needs: multiplication by `e_k` through the dual Pieri rule,
//! and, built on top of it, expansion of products of `e_k`'s.

mod eproduct;
mod jacobi_trudi;
mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use eproduct::{expand_eproduct, EProduct};
pub use jacobi_trudi::{jacobi_trudi_e, jacobi_trudi_expand, SignedEProduct};
pub use oracle::{monomial_oracle_expand, schur_polynomial, MonomialPoly};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `s_∅ = 1`.
    pub fn one() -> Self {
        Self::term(Partition::empty())
    }

    /// A single `s_λ` with coefficient 1.
    pub fn term(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SchurExpansion { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c.into());
        }
        out
    }

    /// Adds `c * s_λ`, pruning the key if the coefficient cancels.
    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    /// Distinct weights among the keys; a homogeneous expansion has one.
    pub fn degrees(&self) -> BTreeSet<u64> {
        self.terms.keys().map(Partition::weight).collect()
    }

    pub fn scale(&self, c: &BigInt) -> SchurExpansion {
        if c.is_zero() {
            return Self::zero();
        }
        SchurExpansion {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Every stored coefficient positive; the zero expansion counts as positive.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// Multiplies by `e_k`: each `s_μ` becomes the sum of `s_λ` over
    /// `λ ⊇ μ` with `λ/μ` a vertical strip of `k` boxes.
    pub fn pieri_mul_e(&self, k: i64) -> SchurExpansion {
        if k < 0 {
            return Self::zero();
        }
        if k == 0 {
            return self.clone();
        }
        let mut out = SchurExpansion::zero();
        for (mu, c) in &self.terms {
            for lambda in vertical_strips(mu, k as usize) {
                out.add_term(lambda, c.clone());
            }
        }
        out
    }

    /// `Δ^μ`: sends `s_λ` to `s_{λ ∪ μ}`. Injective on keys, so coefficients
    /// carry over unchanged.
    pub fn delta(&self, mu: &Partition) -> SchurExpansion {
        SchurExpansion {
            terms: self.terms.iter().map(|(l, c)| (l.union(mu), c.clone())).collect(),
        }
    }
}

/// All `λ` obtained from `μ` by adding a vertical strip of `k` boxes,
/// each exactly once.
pub fn vertical_strips(mu: &Partition, k: usize) -> Vec<Partition> {
    let rows = mu.len() + k;
    let base: Vec<u32> = (0..rows).map(|i| mu.part(i)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);

    fn rec(i: usize, rem: usize, base: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == base.len() {
            if rem == 0 {
                out.push(Partition::from_parts_unsorted(cur.clone()));
            }
            return;
        }
        if base.len() - i < rem {
            return;
        }
        let prev = if i == 0 { u32::MAX } else { cur[i - 1] };
        if prev >= base[i] {
            cur.push(base[i]);
            rec(i + 1, rem, base, cur, out);
            cur.pop();
        }
        if rem > 0 && prev > base[i] {
            cur.push(base[i] + 1);
            rec(i + 1, rem - 1, base, cur, out);
            cur.pop();
        }
    }

    rec(0, k, &base, &mut cur, &mut out);
    out
}

pub fn add(a: &SchurExpansion, b: &SchurExpansion) -> SchurExpansion {
    a + b
}

pub fn scale(c: &BigInt, a: &SchurExpansion) -> SchurExpansion {
    a.scale(c)
}

pub fn pieri_mul_e(a: &SchurExpansion, k: i64) -> SchurExpansion {
    a.pieri_mul_e(k)
}

pub fn delta(a: &SchurExpansion, mu: &Partition) -> SchurExpansion {
    a.delta(mu)
}

pub fn is_schur_positive(a: &SchurExpansion) -> bool {
    a.is_schur_positive()
}

impl AddAssign<&SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: &SchurExpansion) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl AddAssign for SchurExpansion {
    fn add_assign(&mut self, rhs: SchurExpansion) {
        for (l, c) in rhs.terms {
            self.add_term(l, c);
        }
    }
}

impl SubAssign<&SchurExpansion> for SchurExpansion {
    fn sub_assign(&mut self, rhs: &SchurExpansion) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), -c);
        }
    }
}

impl SubAssign for SchurExpansion {
    fn sub_assign(&mut self, rhs: SchurExpansion) {
        for (l, c) in rhs.terms {
            self.add_term(l, -c);
        }
    }
}

impl Add for &SchurExpansion {
    type Output = SchurExpansion;
    fn add(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SchurExpansion {
    type Output = SchurExpansion;
    fn add(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self += rhs;
        self
    }
}

impl Sub for &SchurExpansion {
    type Output = SchurExpansion;
    fn sub(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SchurExpansion {
    type Output = SchurExpansion;
    fn sub(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self -= rhs;
        self
    }
}

impl Neg for SchurExpansion {
    type Output = SchurExpansion;
    fn neg(mut self) -> SchurExpansion {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl std::iter::Sum for SchurExpansion {
    fn sum<I: Iterator<Item = SchurExpansion>>(iter: I) -> Self {
        let mut acc = SchurExpansion::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl FromIterator<Partition> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = Partition>>(iter: I) -> Self {
        let mut acc = SchurExpansion::zero();
        for l in iter {
            acc.add_term(l, BigInt::one());
        }
        acc
    }
}

// Text form: `s[4] + 2*s[2,2] - s[1,1,1,1]`, `0` when empty.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SchurExpansion {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Expansion { input: input.to_string(), reason: reason.to_string() };
        let text = input.trim();
        if text == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = text;
        let mut first = true;
        while !rest.is_empty() {
            let mut negative = false;
            rest = rest.trim_start();
            if let Some(r) = rest.strip_prefix('-') {
                negative = true;
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(fail("leading `+`"));
                }
                rest = r.trim_start();
            } else if !first {
                return Err(fail("expected `+` or `-` between terms"));
            }
            let coeff_end = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            let mut coeff = BigInt::one();
            if coeff_end > 0 {
                coeff = rest[..coeff_end].parse().map_err(|_| fail("bad coefficient"))?;
                rest = rest[coeff_end..]
                    .trim_start()
                    .strip_prefix('*')
                    .ok_or_else(|| fail("expected `*` after coefficient"))?
                    .trim_start();
            }
            rest = rest.strip_prefix('s').ok_or_else(|| fail("expected `s[...]`"))?;
            let close = rest.find(']').ok_or_else(|| fail("unclosed `[`"))?;
            let lambda: Partition = rest[..=close].parse().map_err(|_| fail("bad partition"))?;
            rest = &rest[close + 1..];
            if negative {
                coeff = -coeff;
            }
            out.add_term(lambda, coeff);
            first = false;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use proptest::prelude::*;

    fn s(parts: &[u32]) -> SchurExpansion {
        SchurExpansion::term(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn add_and_scale() {
        let a = s(&[2]) + s(&[1, 1]);
        assert_eq!(&a + &SchurExpansion::zero(), a);
        assert_eq!(a.len(), 2);
        assert!((s(&[2]) - s(&[2])).is_zero());
        assert_eq!(a.scale(&BigInt::one()), a);
        assert!(a.scale(&BigInt::zero()).is_zero());
        assert_eq!(
            SchurExpansion::one().scale(&BigInt::from(-2)),
            SchurExpansion::from_terms([(Partition::empty(), -2)])
        );
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(SchurExpansion::one().pieri_mul_e(3), s(&[1, 1, 1]));
        assert_eq!(s(&[2, 1]).pieri_mul_e(0), s(&[2, 1]));
        assert!(s(&[2, 1]).pieri_mul_e(-1).is_zero());
        assert_eq!(SchurExpansion::one().pieri_mul_e(1).pieri_mul_e(1), s(&[2]) + s(&[1, 1]));
    }

    #[test]
    fn pieri_commutes() {
        for w in 0..=6 {
            for mu in partitions_of(w) {
                let a = SchurExpansion::term(mu);
                for j in 0..=4 {
                    for k in 0..=4 {
                        assert_eq!(a.pieri_mul_e(j).pieri_mul_e(k), a.pieri_mul_e(k).pieri_mul_e(j));
                    }
                }
            }
        }
    }

    #[test]
    fn vertical_strips_are_vertical_strips() {
        for w in 0..=6 {
            for mu in partitions_of(w) {
                for k in 0..=4usize {
                    let strips = vertical_strips(&mu, k);
                    let brute: Vec<Partition> = partitions_of(w + k as u32)
                        .into_iter()
                        .filter(|l| l.is_vertical_strip_over(&mu))
                        .collect();
                    let mut sorted = strips.clone();
                    sorted.sort();
                    assert_eq!(sorted, brute, "mu={mu} k={k}");
                }
            }
        }
    }

    #[test]
    fn delta_examples() {
        let a = s(&[3]) + s(&[1, 1, 1]);
        assert_eq!(a.delta(&Partition::empty()), a);
        assert_eq!(s(&[2]).delta(&Partition::new(vec![1, 1]).unwrap()), s(&[2, 1, 1]));
        assert_eq!(
            a.delta(&Partition::new(vec![2, 2]).unwrap()),
            s(&[3, 2, 2]) + s(&[2, 2, 1, 1, 1])
        );
    }

    #[test]
    fn positivity() {
        assert!(SchurExpansion::zero().is_schur_positive());
        assert!((s(&[2]) + s(&[1, 1])).is_schur_positive());
        assert!(!(s(&[2]) - s(&[1, 1])).is_schur_positive());
    }

    #[test]
    fn text_examples() {
        let a = s(&[1, 1, 1, 1]) + s(&[2, 2]) + s(&[4]);
        assert_eq!(a.to_string(), "s[4] + s[2,2] + s[1,1,1,1]");
        assert_eq!(SchurExpansion::zero().to_string(), "0");
        let b = s(&[2]).scale(&BigInt::from(-3)) + s(&[1, 1]);
        assert_eq!(b.to_string(), "-3*s[2] + s[1,1]");
        assert_eq!("-3*s[2] + s[1,1]".parse::<SchurExpansion>().unwrap(), b);
        assert_eq!("s[]".parse::<SchurExpansion>().unwrap(), SchurExpansion::one());
        assert!("s[2] s[1]".parse::<SchurExpansion>().is_err());
        assert!("2 s[2]".parse::<SchurExpansion>().is_err());
    }

    fn arb_expansion() -> impl Strategy<Value = SchurExpansion> {
        prop::collection::vec(
            (prop::collection::vec(1u32..5, 0..5).prop_map(Partition::from_parts_unsorted), -20i64..20),
            0..6,
        )
        .prop_map(SchurExpansion::from_terms)
    }

    proptest! {
        #[test]
        fn text_round_trip(a in arb_expansion()) {
            let text = a.to_string();
            let back: SchurExpansion = text.parse().unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn delta_preserves_coefficients(a in arb_expansion(), mu in prop::collection::vec(1u32..4, 0..3)) {
            let mu = Partition::from_parts_unsorted(mu);
            let d = a.delta(&mu);
            prop_assert_eq!(d.len(), a.len());
            let mut before: Vec<_> = a.iter().map(|(_, c)| c.clone()).collect();
            let mut after: Vec<_> = d.iter().map(|(_, c)| c.clone()).collect();
            before.sort();
            after.sort();
            prop_assert_eq!(before, after);
        }
    }
}
