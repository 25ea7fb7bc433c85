//! Integer partitions, the index type of the Schur basis.
//!
//! A [`Partition`] keeps its parts largest-first with no zeros, so two
//! partitions are equal exactly when their part sequences are. The total
//! order used everywhere (iteration, serialization) is weight ascending,
//! then reverse-lexicographic on the parts: `[4] < [3,1] < [2,2] < ...`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validating constructor: parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Partition(format!("{parts:?}"), "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Partition(format!("{parts:?}"), "parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros; never fails.
    pub fn from_parts_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(1^k)`, the shape of `e_k`.
    pub fn column(k: u32) -> Self {
        Partition { parts: vec![1; k as usize] }
    }

    /// `(k)`, a single row.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// Builds `(4^m4, 3^m3, 2^m2, 1^m1)` from nonnegative multiplicities.
    pub fn from_multiplicities(mults: &[(u32, usize)]) -> Self {
        let mut parts = Vec::new();
        for &(part, m) in mults {
            parts.extend(std::iter::repeat(part).take(m));
        }
        Self::from_parts_unsorted(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of nonzero parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ_i` with 0-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let mut conj = vec![0u32; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// Multiset union of parts, `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                merged.push(self.parts[i]);
                i += 1;
            } else {
                merged.push(other.parts[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.parts[i..]);
        merged.extend_from_slice(&other.parts[j..]);
        Partition { parts: merged }
    }

    /// Diagram containment `μ ⊆ self`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// True iff `self / mu` is a vertical strip (at most one box per row).
    pub fn is_vertical_strip_over(&self, mu: &Partition) -> bool {
        self.contains(mu) && (0..self.len()).all(|i| self.part(i) - mu.part(i) <= 1)
    }

    /// True iff `self / mu` is a horizontal strip (at most one box per column).
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        // Interlacing: λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ ...
        self.contains(mu) && (1..self.len()).all(|i| mu.part(i - 1) >= self.part(i))
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn union(lambda: &Partition, mu: &Partition) -> Partition {
    lambda.union(mu)
}

pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu)
}

pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.is_vertical_strip_over(mu)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why| Error::Partition(s.to_string(), why);
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected `[p1,p2,...]`"))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad("parts must be integers")))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| bad("parts must be positive and weakly decreasing"))
    }
}

/// Multiplicities of the parts 4, 3, 2, 1 before validity filtering.
///
/// The shape expressions in the lemma families routinely produce negative
/// exponents at the edges of their summation ranges; such a shape denotes
/// the zero Schur term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShapeMultiplicities {
    pub m4: i64,
    pub m3: i64,
    pub m2: i64,
    pub m1: i64,
}

impl ShapeMultiplicities {
    pub fn new(m4: i64, m3: i64, m2: i64, m1: i64) -> Self {
        ShapeMultiplicities { m4, m3, m2, m1 }
    }

    pub fn is_valid(&self) -> bool {
        self.m4 >= 0 && self.m3 >= 0 && self.m2 >= 0 && self.m1 >= 0
    }

    /// `None` is the zero marker.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_valid() {
            return None;
        }
        let mut parts = Vec::with_capacity((self.m4 + self.m3 + self.m2 + self.m1) as usize);
        for (part, m) in [(4, self.m4), (3, self.m3), (2, self.m2), (1, self.m1)] {
            parts.extend(std::iter::repeat(part).take(m as usize));
        }
        Some(Partition { parts })
    }
}

pub fn shape_from_multiplicities(s: ShapeMultiplicities) -> Option<Partition> {
    s.to_partition()
}

/// All partitions of `n` with every part at most `max_part`, in canonical order.
pub fn partitions_bounded(n: u32, max_part: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` with every part in {3, 4}.
pub fn partitions_34(n: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=n / 4)
        .filter(|a| (n - 4 * a) % 3 == 0)
        .map(|a| {
            Partition::from_multiplicities(&[(4, a as usize), (3, ((n - 4 * a) / 3) as usize)])
        })
        .collect();
    out.sort();
    out
}

/// Partitions of `2r - 2` of the form `(4^i4, 3^{2 i3}, 2^{2 i2}, 1^{2 i1})`.
pub fn r_shapes(r: u32) -> Vec<Partition> {
    assert!(r >= 1, "r_shapes needs r >= 1");
    let n = 2 * (r - 1);
    partitions_bounded(n, 4)
        .into_iter()
        .filter(|p| (1..=3).all(|part| p.multiplicity(part) % 2 == 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal recurrence, independent of the generator.
    fn partition_numbers(max: usize) -> Vec<u64> {
        let mut p = vec![0i64; max + 1];
        p[0] = 1;
        for n in 1..=max {
            let mut k = 1i64;
            let mut acc = 0i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[n - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= n {
                    acc += sign * p[n - g2];
                }
                k += 1;
            }
            p[n] = acc;
        }
        p.into_iter().map(|v| v as u64).collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::column(5).conjugate(), Partition::row(5));
        assert_eq!(p(&[3, 2, 2, 1]).conjugate(), p(&[4, 3, 1]));
    }

    #[test]
    fn conjugate_is_involution_up_to_12() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().weight(), lam.weight());
            }
        }
    }

    #[test]
    fn union_examples() {
        assert_eq!(p(&[2, 1]).union(&p(&[2])), p(&[2, 2, 1]));
        assert_eq!(p(&[3, 1]).union(&Partition::empty()), p(&[3, 1]));
        assert_eq!(p(&[1, 1]).union(&p(&[1, 1])), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn containment_and_strips() {
        assert!(contains(&p(&[2, 2]), &p(&[2, 1])));
        assert!(contains(&p(&[2, 1]), &Partition::empty()));
        assert!(!contains(&p(&[2, 1]), &p(&[1, 1, 1])));
        assert!(is_vertical_strip(&p(&[2, 1]), &p(&[1])));
        assert!(!is_vertical_strip(&p(&[3, 1]), &p(&[1])));
        assert!(is_vertical_strip(&p(&[3, 1]), &p(&[3, 1])));
    }

    #[test]
    fn vertical_strip_box_count() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                for m in 0..=n {
                    for mu in partitions_of(m) {
                        if is_vertical_strip(&lam, &mu) {
                            assert!(contains(&lam, &mu));
                            let rows = (0..lam.len()).filter(|&i| lam.part(i) > mu.part(i)).count();
                            assert_eq!(lam.weight() - mu.weight(), rows as u64);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_counts_match_recurrence() {
        let expected = partition_numbers(20);
        assert_eq!(&expected[..11], &[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for n in 0..=20u32 {
            let all = partitions_of(n);
            assert_eq!(all.len() as u64, expected[n as usize], "n={n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]), "canonical order at n={n}");
            assert!(all.iter().all(|l| l.weight() == n as u64));
        }
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn partitions_34_examples() {
        assert_eq!(partitions_34(0), vec![Partition::empty()]);
        assert!(partitions_34(5).is_empty());
        assert_eq!(partitions_34(12), vec![p(&[4, 4, 4]), p(&[3, 3, 3, 3])]);
    }

    #[test]
    fn r_shapes_examples() {
        assert_eq!(r_shapes(1), vec![Partition::empty()]);
        assert_eq!(r_shapes(2), vec![p(&[1, 1])]);
        assert_eq!(r_shapes(3), vec![p(&[4]), p(&[2, 2]), p(&[1, 1, 1, 1])]);
        let mut r4 = vec![p(&[1, 1, 1, 1, 1, 1]), p(&[2, 2, 1, 1]), p(&[4, 1, 1]), p(&[3, 3])];
        r4.sort();
        assert_eq!(r_shapes(4), r4);
    }

    #[test]
    fn r_shapes_invariants() {
        for r in 1..=14 {
            for lam in r_shapes(r) {
                assert_eq!(lam.weight(), 2 * (r as u64 - 1));
                assert!(lam.largest() <= 4);
                for part in 1..=3 {
                    assert_eq!(lam.multiplicity(part) % 2, 0);
                }
            }
        }
    }

    #[test]
    fn multiplicity_shapes() {
        assert_eq!(shape_from_multiplicities(ShapeMultiplicities::new(0, 0, 0, 0)), Some(Partition::empty()));
        assert_eq!(
            shape_from_multiplicities(ShapeMultiplicities::new(1, 0, 2, 1)),
            Some(p(&[4, 2, 2, 1]))
        );
        assert_eq!(shape_from_multiplicities(ShapeMultiplicities::new(0, -1, 3, 0)), None);
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[4, 2, 2, 1]).to_string(), "[4,2,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
        assert!("4,2".parse::<Partition>().is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..8, 0..8).prop_map(Partition::from_parts_unsorted)
    }

    proptest! {
        #[test]
        fn text_round_trip(lam in arb_partition()) {
            let s = lam.to_string();
            let back: Partition = s.parse().unwrap();
            prop_assert_eq!(&back, &lam);
            prop_assert_eq!(back.to_string(), s);
        }

        #[test]
        fn union_laws(a in arb_partition(), b in arb_partition(), c in arb_partition()) {
            prop_assert_eq!(a.union(&b), b.union(&a));
            prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
            prop_assert_eq!(a.union(&b).weight(), a.weight() + b.weight());
        }
    }
}
