//! The named multi-index families of Schur terms.
//!
//! Shapes are written through their multiplicities `(m4, m3, m2, m1)` of the
//! parts 4, 3, 2, 1. A negative multiplicity makes the term vanish and an
//! inverted range is an empty sum.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::ShapeMultiplicities;
use crate::schur::SchurExpansion;

use super::unit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    A,
    B,
    T,
    N,
    M,
    C,
    D,
    E,
}

impl FamilyKind {
    fn letter(self) -> char {
        match self {
            FamilyKind::A => 'A',
            FamilyKind::B => 'B',
            FamilyKind::T => 'T',
            FamilyKind::N => 'N',
            FamilyKind::M => 'M',
            FamilyKind::C => 'C',
            FamilyKind::D => 'D',
            FamilyKind::E => 'E',
        }
    }

    fn valid(self, index: u8) -> bool {
        match self {
            FamilyKind::A | FamilyKind::B => (1..=4).contains(&index),
            FamilyKind::T => {
                (1..=10).contains(&index)
                    || ((1..=8).contains(&(index / 10)) && (1..=2).contains(&(index % 10)))
            }
            FamilyKind::N | FamilyKind::M => (1..=6).contains(&index),
            FamilyKind::C => (1..=5).contains(&index),
            FamilyKind::D | FamilyKind::E => (1..=9).contains(&index),
        }
    }
}

/// One of the closed set of family names, e.g. `A3`, `T10` or `T42`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyName {
    kind: FamilyKind,
    index: u8,
}

impl FamilyName {
    pub fn new(kind: FamilyKind, index: u8) -> Result<Self> {
        if kind.valid(index) {
            Ok(FamilyName { kind, index })
        } else {
            Err(Error::UnknownFamily(format!("{}{index}", kind.letter())))
        }
    }

    pub fn kind(self) -> FamilyKind {
        self.kind
    }

    pub fn index(self) -> u8 {
        self.index
    }

    /// Every valid name, in kind then index order.
    pub fn all() -> Vec<FamilyName> {
        use FamilyKind::*;
        [A, B, T, N, M, C, D, E]
            .into_iter()
            .flat_map(|kind| (1..=82).filter_map(move |i| FamilyName::new(kind, i).ok()))
            .collect()
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)
    }
}

impl fmt::Debug for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let mut chars = s.trim().chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => FamilyKind::A,
            Some('B') => FamilyKind::B,
            Some('T') => FamilyKind::T,
            Some('N') => FamilyKind::N,
            Some('M') => FamilyKind::M,
            Some('C') => FamilyKind::C,
            Some('D') => FamilyKind::D,
            Some('E') => FamilyKind::E,
            _ => return Err(unknown()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let index: u8 = digits.parse().map_err(|_| unknown())?;
        FamilyName::new(kind, index).map_err(|_| unknown())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId {
    pub name: FamilyName,
    pub t: u32,
}

impl FamilyId {
    pub fn new(name: FamilyName, t: u32) -> Self {
        FamilyId { name, t }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(t={})", self.name, self.t)
    }
}

/// Evaluates a family at its `t`.
///
/// ```
/// use schurq::identity::{family_sum, FamilyId};
/// let e1 = family_sum(&FamilyId::new("E1".parse().unwrap(), 0));
/// assert_eq!(e1.to_string(), "s[4] + s[3,1]");
/// ```
pub fn family_sum(id: &FamilyId) -> SchurExpansion {
    let t = i64::from(id.t);
    let i = id.name.index;
    match id.name.kind {
        FamilyKind::A => sum_points(A_RANGES[usize::from(i - 1)].points(t), |k, ii, j| a_point(i, t, k, ii, j)),
        FamilyKind::B => sum_points(B_RANGES[usize::from(i - 1)].points(t), |k, ii, j| b_point(i, t, k, ii, j)),
        FamilyKind::T => t_family(i, t),
        FamilyKind::N => n_family(i, t),
        FamilyKind::M => m_family(i, t),
        FamilyKind::C => c_family(i, t),
        FamilyKind::D => d_family(i, t),
        FamilyKind::E => e_family(i, t),
    }
}

/// Accumulator for plain sums of (possibly Pieri-multiplied) Schur terms.
#[derive(Default)]
struct Acc(SchurExpansion);

impl Acc {
    fn s(&mut self, m4: i64, m3: i64, m2: i64, m1: i64) {
        if let Some(p) = ShapeMultiplicities::new(m4, m3, m2, m1).to_partition() {
            self.0.add_term(p, unit());
        }
    }

    fn done(self) -> SchurExpansion {
        self.0
    }
}

/// `e_k · s_shape`, zero when `k < 0` or the shape is invalid.
fn es(k: i64, m4: i64, m3: i64, m2: i64, m1: i64) -> SchurExpansion {
    match ShapeMultiplicities::new(m4, m3, m2, m1).to_partition() {
        Some(p) if k >= 0 => SchurExpansion::term(p).pieri_mul_e(k),
        _ => SchurExpansion::zero(),
    }
}

fn rng(lo: i64, hi: i64) -> RangeInclusive<i64> {
    lo..=hi
}

/// A `(k, i, j)` box: `k` in `klo..=t+khi`, `i` in `0..=k+ihi`,
/// `j` in `0..=2t-2k-jhi`.
#[derive(Clone, Copy)]
pub(crate) struct KijRange {
    klo: i64,
    khi: i64,
    ihi: i64,
    jhi: i64,
}

impl KijRange {
    const fn new(klo: i64, khi: i64, ihi: i64, jhi: i64) -> Self {
        KijRange { klo, khi, ihi, jhi }
    }

    pub(crate) fn points(self, t: i64) -> Vec<(i64, i64, i64)> {
        let mut out = Vec::new();
        for k in rng(self.klo, t + self.khi) {
            for i in rng(0, k + self.ihi) {
                for j in rng(0, 2 * t - 2 * k - self.jhi) {
                    out.push((k, i, j));
                }
            }
        }
        out
    }
}

fn sum_points<F>(points: Vec<(i64, i64, i64)>, f: F) -> SchurExpansion
where
    F: Fn(i64, i64, i64) -> SchurExpansion,
{
    points.into_iter().map(|(k, i, j)| f(k, i, j)).sum()
}

const A_RANGES: [KijRange; 4] = [
    KijRange::new(0, 0, 0, 0),
    KijRange::new(0, -1, 0, 1),
    KijRange::new(1, 0, 0, 0),
    KijRange::new(1, 0, -1, -1),
];

const B_RANGES: [KijRange; 4] = [
    KijRange::new(0, -1, 0, 1),
    KijRange::new(0, -1, 0, 2),
    KijRange::new(1, -1, 0, 1),
    KijRange::new(1, 0, -1, 0),
];

/// Summation boxes of `T_1 .. T_8`; item `m` of the pointwise lemma uses the
/// box of `T_{2m-1}`.
pub(crate) const T_RANGES: [KijRange; 8] = [
    KijRange::new(0, -1, 0, 1),
    KijRange::new(0, -1, 0, 1),
    KijRange::new(0, -1, 0, 2),
    KijRange::new(0, -1, 0, 2),
    KijRange::new(1, -1, 0, 1),
    KijRange::new(1, -1, 0, 1),
    KijRange::new(1, 0, -1, 0),
    KijRange::new(1, 0, -1, 0),
];

pub(crate) fn a_point(m: u8, t: i64, k: i64, i: i64, j: i64) -> SchurExpansion {
    let c = 4 * t - 3 * k - 2 * j - i;
    match m {
        1 | 2 => es(k, 0, i, k - i + j, c),
        3 => es(k - 1, 0, i, k - i + j, c + 1),
        4 => es(k, 0, i, k - i + j - 1, c + 2),
        _ => unreachable!("A{m}"),
    }
}

pub(crate) fn b_point(m: u8, t: i64, k: i64, i: i64, j: i64) -> SchurExpansion {
    let c = 4 * t - 3 * k - 2 * j - i;
    match m {
        1 | 2 => es(k, 0, i, k - i + j, c - 2),
        3 => es(k - 1, 0, i, k - i + j, c - 1),
        4 => es(k, 0, i, k - i + j - 1, c),
        _ => unreachable!("B{m}"),
    }
}

/// Offsets `(da, db2, db3, pk, pj)` of `T_1 .. T_8` relative to the plain
/// `P` double sum.
const T_OFFSETS: [(i64, i64, i64, i64, i64); 8] = [
    (1, 0, 1, 1, -1),
    (0, 0, 0, 0, 0),
    (1, 0, 1, 1, -1),
    (0, 0, 0, 0, 0),
    (-1, 0, -1, 0, 0),
    (-2, 0, -2, -1, 1),
    (-1, -1, -1, 0, 0),
    (-2, -1, -2, -1, 1),
];

/// `T_m(t, i, j, k)` for `m` in `1..=8`. The bounds `β` are taken at the
/// unshifted `(k, j)`; only the shape `P` sees the shift.
pub(crate) fn t_point(m: u8, t: i64, i: i64, j: i64, k: i64) -> SchurExpansion {
    let (da, db2, db3, pk, pj) = T_OFFSETS[usize::from(m - 1)];
    let beta1 = 4 * k + i + 2 * j - 4 * t;
    let beta2 = k - i + j;
    let (k2, j2) = (k + pk, j + pj);
    let mut acc = Acc::default();
    for a in rng(0, beta1 + da) {
        let beta3 = beta1 - a;
        for b in rng(0, (beta2 + db2).min(beta3 + db3)) {
            acc.s(a, i - a + b, 4 * t - 2 * k2 - 2 * i - j2 - b, 4 * k2 + i + 2 * j2 - a - b - 4 * t);
        }
    }
    acc.done()
}

fn t_family(m: u8, t: i64) -> SchurExpansion {
    match m {
        1..=8 => sum_points(T_RANGES[usize::from(m - 1)].points(t), |k, i, j| t_point(m, t, i, j, k)),
        9 => rng(0, t).map(|k| es(k, 0, k, 2 * t - 2 * k, 0)).sum(),
        10 => rng(0, t - 1).map(|k| es(k, 0, k + 1, 2 * t - 2 * k - 2, 1)).sum(),
        _ => match m % 10 {
            1 => q1_sum(t, Q1_SPECS[usize::from(m / 10 - 1)]),
            _ => q2_sum(t, Q2_SPECS[usize::from(m / 10 - 1)]),
        },
    }
}

/// Bounds of a `Q_1` quadruple sum: `k` in `0..=t+khi`, `j` in
/// `jlo..=2t-2k-jhi`, `a` up to `γ1+da`, `b` in `blo..=min(j+bj, γ2+dg)`.
#[derive(Clone, Copy)]
pub(crate) struct Q1Spec {
    khi: i64,
    jlo: i64,
    jhi: i64,
    da: i64,
    bj: i64,
    dg: i64,
    blo: i64,
}

/// Bounds of a `Q_2` quadruple sum: `k` in `klo..=t+khi`, `i` in
/// `ilo..=k+ihi`, `j` in `jlo..=2t-2k-jhi`, `a` up to `γ3+da`.
#[derive(Clone, Copy)]
pub(crate) struct Q2Spec {
    klo: i64,
    khi: i64,
    ilo: i64,
    ihi: i64,
    jlo: i64,
    jhi: i64,
    da: i64,
}

const fn q1(khi: i64, jlo: i64, jhi: i64, da: i64, bj: i64, dg: i64, blo: i64) -> Q1Spec {
    Q1Spec { khi, jlo, jhi, da, bj, dg, blo }
}

const fn q2(klo: i64, khi: i64, ilo: i64, ihi: i64, jlo: i64, jhi: i64, da: i64) -> Q2Spec {
    Q2Spec { klo, khi, ilo, ihi, jlo, jhi, da }
}

// T_21 and T_22 are not aliases of T_11 and T_12; see `as_printed`.
const Q1_SPECS: [Q1Spec; 8] = [
    q1(-1, 0, 1, 0, 0, 0, 0),
    q1(-1, -1, 2, 1, 1, 1, 0),
    q1(0, 0, 2, 0, 0, 0, 0),
    q1(-1, -1, 3, 1, 1, 1, 0),
    q1(-1, -1, 2, 0, 1, 0, 0),
    q1(-1, -2, 3, 1, 2, 1, 0),
    q1(0, -2, 2, 1, 1, 0, -1),
    q1(-1, 0, 2, 1, 0, 1, 0),
];

const Q2_SPECS: [Q2Spec; 8] = [
    q2(0, 0, 0, 0, 0, 1, 0),
    q2(0, -1, -1, -1, 0, 1, 1),
    q2(0, 0, 0, 0, 0, 2, 0),
    q2(0, -1, -1, -1, 0, 2, 1),
    q2(0, -1, -1, -1, 0, 1, 0),
    q2(-2, -3, 0, 2, 2, 3, 1),
    q2(0, 0, 0, -1, -1, 1, 0),
    q2(-1, -1, 0, 0, 0, 2, 1),
];

fn q1_sum(t: i64, q: Q1Spec) -> SchurExpansion {
    let mut acc = Acc::default();
    for k in rng(0, t + q.khi) {
        for j in rng(q.jlo, 2 * t - 2 * k - q.jhi) {
            let gamma1 = 5 * k + 2 * j + 2 - 4 * t;
            for a in rng(0, gamma1 + q.da) {
                let gamma2 = gamma1 - a;
                for b in rng(q.blo, (j + q.bj).min(gamma2 + q.dg)) {
                    acc.s(a, k - a + b + 1, 4 * t - 4 * k - j - b - 1, 5 * k + 2 * j - a - b - 4 * t + 3);
                }
            }
        }
    }
    acc.done()
}

fn q2_sum(t: i64, q: Q2Spec) -> SchurExpansion {
    let mut acc = Acc::default();
    for k in rng(q.klo, t + q.khi) {
        for i in rng(q.ilo, k + q.ihi) {
            for j in rng(q.jlo, 2 * t - 2 * k - q.jhi) {
                let gamma3 = 3 * k + 2 * i + j - 4 * t;
                for a in rng(0, gamma3 + q.da) {
                    acc.s(a, k - a + j + 1, 4 * t - 3 * k - i - 2 * j, 3 * k + 2 * i + j - a - 4 * t + 1);
                }
            }
        }
    }
    acc.done()
}

/// The naive `T_21` and `T_22`, which just repeat `T_11` and `T_12`.
///
/// These do not satisfy the difference identities (the first failure is at
/// `t = 1`); they are kept so that the failure stays reproducible.
pub mod as_printed {
    use super::*;

    pub fn t21(t: u32) -> SchurExpansion {
        q1_sum(i64::from(t), Q1_SPECS[0])
    }

    pub fn t22(t: u32) -> SchurExpansion {
        q2_sum(i64::from(t), Q2_SPECS[0])
    }
}

fn n_family(m: u8, t: i64) -> SchurExpansion {
    let mut acc = Acc::default();
    match m {
        1 => {
            for k in rng(0, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 1) {
                    for a in rng(0, 5 * k + j - 4 * t - 1) {
                        acc.s(a, k - a + j + 1, 4 * t - 4 * k - 2 * j + 1, 5 * k + j - 1 - 4 * t - a);
                    }
                }
            }
        }
        2 => {
            for k in rng(0, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 2) {
                    for a in rng(0, 5 * k + j - 4 * t + 2) {
                        acc.s(a, k - a + j + 1, 4 * t - 4 * k - 2 * j - 1, 5 * k + j + 3 - 4 * t - a);
                    }
                }
            }
        }
        3 | 4 => {
            let extra = i64::from(m == 4);
            for k in rng(0, t - 1) {
                for a in rng(0, k) {
                    for b in rng(0, (2 * t - 2 * k - 2 + extra).min(k - a)) {
                        acc.s(a, k - a + b + 1, 2 * t - 2 * k - b, k - a - b + 1);
                    }
                }
            }
        }
        5 => {
            for k in rng(0, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 2) {
                    for a in rng((5 * k + j - 4 * t + 3).max(0), 5 * k + 2 * j - 4 * t + 3) {
                        acc.s(a, 6 * k - 4 * t + 2 * j - 2 * a + 4, 8 * t - 9 * k - 3 * j + a - 4, 0);
                    }
                }
            }
        }
        6 => {
            for k in rng(0, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 1) {
                    for a in rng((5 * k + j - 4 * t + 1).max(0), 5 * k + 2 * j - 4 * t + 1) {
                        acc.s(a, 6 * k - 4 * t + 2 * j - 2 * a + 2, 8 * t - 9 * k - 3 * j + a - 1, 0);
                    }
                }
            }
        }
        _ => unreachable!("N{m}"),
    }
    acc.done()
}

fn m_family(m: u8, t: i64) -> SchurExpansion {
    let mut acc = Acc::default();
    match m {
        1 => {
            for k in rng(0, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 2) {
                    for a in rng(0, 5 * k + j + 2 - 4 * t) {
                        acc.s(a, k + 1 - a + j, 4 * t - 2 * j - 1 - 4 * k, 5 * k + j - 4 * t + 3 - a);
                    }
                }
            }
        }
        2 => {
            for k in rng(0, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 2) {
                    for a in rng(0, 5 * k + j - 4 * t - 1) {
                        acc.s(a, k + 1 - a + j, 4 * t + 1 - 4 * k - 2 * j, 5 * k + j - 4 * t - 1 - a);
                    }
                }
            }
        }
        3 => {
            // No `j` is in scope here, so the bound on `a` is the one at
            // which the last part runs out.
            for k in rng(0, t - 1) {
                for i in rng(1, k) {
                    for a in rng(0, k + 2 * i - 2 * t - 4) {
                        acc.s(a, 2 * t - k - a, k + 4 - i, k + 2 * i - 2 * t - 4 - a);
                    }
                }
            }
        }
        4 => {
            for k in rng(0, t - 1) {
                for i in rng(0, k) {
                    for a in rng(0, k + 2 * i - 2 * t - 1) {
                        acc.s(a, 2 * t - a - k, k - i + 2, k + 2 * i - 2 * t - a);
                    }
                }
            }
        }
        5 => {
            for k in rng(0, t - 1) {
                for i in rng(0, k) {
                    for j in rng(0, 2 * t - 2 * k - 2) {
                        let top = 3 * k + j + 2 * i - 4 * t + 1;
                        for a in rng(top.max(0), top) {
                            acc.s(a, k + 1 - a + j, 4 * t - 2 * j - i - 3 * k, 0);
                        }
                    }
                }
            }
        }
        6 => {
            for k in rng(1, t - 1) {
                for i in rng(0, k) {
                    for j in rng(0, 2 * t - 2 * k - 1) {
                        let top = 3 * k + j + 2 * i - 4 * t - 1;
                        for a in rng(top.max(0), top) {
                            acc.s(a, k + 1 - a + j, 4 * t - 2 * j - i - 3 * k + 1, 0);
                        }
                    }
                }
            }
        }
        _ => unreachable!("M{m}"),
    }
    acc.done()
}

fn c_family(m: u8, t: i64) -> SchurExpansion {
    let mut acc = Acc::default();
    match m {
        1 => {
            for k in rng(1, t) {
                for a in rng(0, 5 * k - 4 * t - 3) {
                    acc.s(a, k - a, 4 * t - 4 * k + 3, 5 * k - 4 * t - a - 2);
                }
            }
        }
        2 => {
            for k in rng(1, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 1) {
                    let top = 5 * k + j - 4 * t - 1;
                    for a in rng(top.max(0), top) {
                        acc.s(a, k - a + j + 1, 4 * t - 4 * k - 2 * j + 1, 0);
                    }
                }
            }
        }
        3 => {
            for k in rng(0, t - 1) {
                for a in rng(0, 3 * k - 2 * t + 1) {
                    acc.s(a, 2 * t - k - a, 1, 3 * k - 2 * t - a + 2);
                }
            }
        }
        4 => {
            for k in rng(0, t - 1) {
                let top = 5 * k - 4 * t + 1;
                for a in rng(top.max(0), top) {
                    acc.s(a, k + 1 - a, 4 * t - 4 * k, 0);
                }
            }
        }
        5 => {
            for k in rng(1, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 2) {
                    let top = 5 * k + j - 4 * t + 2;
                    for a in rng(top.max(0), top) {
                        acc.s(a, k + j - a + 2, 4 * t - 4 * k - 2 * j - 2, 0);
                    }
                }
            }
        }
        _ => unreachable!("C{m}"),
    }
    acc.done()
}

fn d_family(m: u8, t: i64) -> SchurExpansion {
    let mut acc = Acc::default();
    match m {
        1 => {
            for k in rng(0, t - 2) {
                for j in rng(1, 2 * t - 2 * k - 3) {
                    let top = 5 * k + j - 4 * t + 3;
                    for a in rng(top.max(0), top) {
                        acc.s(a, k + 1 - a + j, 4 * t - 2 * j - 4 * k - 1, 0);
                    }
                }
            }
        }
        2 => {
            for a in rng(0, t - 3) {
                acc.s(a, t - a, 3, t - a - 2);
            }
        }
        3 => {
            for k in rng(0, t - 2) {
                for a in rng(0, 5 * k - 4 * t + 2) {
                    acc.s(a, k + 1 - a, 4 * t - 4 * k - 1, 5 * k - 4 * t - a + 3);
                }
            }
        }
        4 => {
            for k in rng(0, t - 2) {
                for a in rng(0, 3 * k - 2 * t) {
                    acc.s(a, 2 * t - k - a - 1, 3, 3 * k - 2 * t - a + 1);
                }
            }
        }
        5 => {
            for k in rng(0, t - 1) {
                for a in rng(0, 3 * k - 2 * t - 1) {
                    acc.s(a, 2 * t - a - k, 2, 3 * k - 2 * t - a);
                }
            }
        }
        6 => {
            for k in rng(0, t - 1) {
                for a in rng(0, 3 * k - 2 * t - 3) {
                    acc.s(a, 2 * t - a - k, 3, 3 * k - 2 * t - a - 2);
                }
            }
        }
        7 => {
            // The display names its middle index `j`, but the summand only
            // involves `i`.
            for k in rng(0, t - 1) {
                for i in rng(0, k - 2) {
                    let top = k + 2 * i - 2 * t;
                    for a in rng(top.max(0), top) {
                        acc.s(a, 2 * t - k - a, k - i + 2, 0);
                    }
                }
            }
        }
        8 => {
            for k in rng(1, t - 1) {
                for i in rng(0, k - 1) {
                    let top = k - 2 * t + 2 * i;
                    for a in rng(top.max(0), top) {
                        acc.s(a, 2 * t - a - k, k - i + 2, 0);
                    }
                }
            }
        }
        9 => {
            for k in rng(1, t - 1) {
                for j in rng(0, 2 * t - 2 * k - 2) {
                    let top = 5 * k + j - 4 * t + 1;
                    for a in rng(top.max(0), top) {
                        acc.s(a, k + 1 - a + j, 4 * t - 4 * k - 2 * j, 0);
                    }
                }
            }
        }
        _ => unreachable!("D{m}"),
    }
    acc.done()
}

fn e_family(m: u8, t: i64) -> SchurExpansion {
    let mut acc = Acc::default();
    match m {
        1 | 4 => {
            for a in rng(0, t + i64::from(m == 1)) {
                acc.s(a, t + 1 - a, 0, t + 1 - a);
            }
        }
        2 => {
            for k in rng(0, t) {
                for a in rng(0, 3 * k - 2 * t - 1) {
                    acc.s(a, 2 * t - k - a + 1, 1, 3 * k - 2 * t - 1 - a);
                }
            }
        }
        3 => {
            for k in rng(0, t) {
                for a in rng(0, 3 * k - 2 * t - 2) {
                    acc.s(a, 2 * t - k - a + 2, 0, 3 * k - 2 * t - 2 - a);
                }
            }
        }
        5 => {
            for a in rng(0, t - 1) {
                acc.s(a, t + 1 - a, 1, t - 1 - a);
            }
        }
        6 => {
            for k in rng(0, t - 1) {
                for a in rng(0, 3 * k - 2 * t + 1) {
                    acc.s(a, 2 * t - k - a, 1, 3 * k + 2 - 2 * t - a);
                }
            }
        }
        7 => {
            for k in rng(0, t - 1) {
                for a in rng(0, 3 * k - 2 * t) {
                    acc.s(a, 2 * t + 1 - k - a, 0, 3 * k + 1 - 2 * t - a);
                }
            }
        }
        8 => {
            for k in rng(0, t - 1) {
                for a in rng(0, 3 * k - 2 * t) {
                    acc.s(a, 2 * t - k - a, 2, 3 * k - 2 * t - a);
                }
            }
        }
        9 => {
            for k in rng(0, t - 1) {
                for a in rng(0, 3 * k - 2 * t - 1) {
                    acc.s(a, 2 * t + 1 - k - a, 1, 3 * k - 1 - 2 * t - a);
                }
            }
        }
        _ => unreachable!("E{m}"),
    }
    acc.done()
}

/// `Σ_k Σ_a s_shape(k, a)` for `a` pinned to the single value `top(k)`
/// when that is nonnegative; the common shape of the grouping corrections.
pub(crate) fn pinned_sum(
    ks: RangeInclusive<i64>,
    top: impl Fn(i64) -> i64,
    shape: impl Fn(i64, i64) -> (i64, i64, i64, i64),
) -> SchurExpansion {
    let mut acc = Acc::default();
    for k in ks {
        let top = top(k);
        for a in rng(top.max(0), top) {
            let (m4, m3, m2, m1) = shape(k, a);
            acc.s(m4, m3, m2, m1);
        }
    }
    acc.done()
}

/// Plain sum of single Schur terms given by multiplicities.
pub(crate) fn s_sum(shapes: impl IntoIterator<Item = (i64, i64, i64, i64)>) -> SchurExpansion {
    let mut acc = Acc::default();
    for (m4, m3, m2, m1) in shapes {
        acc.s(m4, m3, m2, m1);
    }
    acc.done()
}
