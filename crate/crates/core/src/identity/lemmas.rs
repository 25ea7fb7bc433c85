use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::schur::SchurExpansion;

use super::families::{
    a_point, b_point, family_sum, pinned_sum, s_sum, t_point, FamilyId, T_RANGES,
};
use super::{delta11, delta22, lhs_l, par34_sum, rhs_r, LemmaReport, Parameters};

/// The lemma groups that can be checked by number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaId {
    L3_2,
    L3_3,
    L3_4,
    L3_5,
    L3_6,
    L3_7,
    L3_8,
    L3_9,
    L3_10,
    /// The ten cancellation identities used to finish the second-level
    /// computation.
    Grouping,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::L3_2,
        LemmaId::L3_3,
        LemmaId::L3_4,
        LemmaId::L3_5,
        LemmaId::L3_6,
        LemmaId::L3_7,
        LemmaId::L3_8,
        LemmaId::L3_9,
        LemmaId::L3_10,
        LemmaId::Grouping,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LemmaId::L3_2 => "3.2",
            LemmaId::L3_3 => "3.3",
            LemmaId::L3_4 => "3.4",
            LemmaId::L3_5 => "3.5",
            LemmaId::L3_6 => "3.6",
            LemmaId::L3_7 => "3.7",
            LemmaId::L3_8 => "3.8",
            LemmaId::L3_9 => "3.9",
            LemmaId::L3_10 => "3.10",
            LemmaId::Grouping => "grouping",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.label() == s.trim())
            .ok_or_else(|| Error::Input(format!("unknown lemma `{s}`")))
    }
}

/// Runs every check belonging to `lemma` at parameter `t`.
pub fn check_lemma(lemma: LemmaId, t: u32) -> Vec<LemmaReport> {
    match lemma {
        LemmaId::L3_2 => check_lemma_3_2(t).to_vec(),
        LemmaId::L3_3 => check_lemma_3_3(t),
        LemmaId::L3_4 => vec![check_lemma_3_4(t)],
        LemmaId::L3_5 => check_lemma_3_5(t),
        LemmaId::L3_6 => check_lemma_3_6(t),
        LemmaId::L3_7 => check_lemma_3_7(t),
        LemmaId::L3_8 => check_lemma_3_8(t).to_vec(),
        LemmaId::L3_9 => check_lemma_3_9(t).to_vec(),
        LemmaId::L3_10 => check_lemma_3_10(t).to_vec(),
        LemmaId::Grouping => check_grouping_relations(t),
    }
}

fn fam(name: &str, t: u32) -> SchurExpansion {
    let name = name.parse().expect("family names in this module are valid");
    family_sum(&FamilyId::new(name, t))
}

/// `Σ sign · family(t)`.
fn combo(terms: &[(i8, &str)], t: u32) -> SchurExpansion {
    terms
        .iter()
        .map(|&(sign, name)| {
            let v = fam(name, t);
            if sign < 0 {
                -v
            } else {
                v
            }
        })
        .sum()
}

fn t_param(t: u32) -> Parameters {
    Parameters::new().with("t", t.into())
}

/// `L(2t+1)` against the A-combination and `L(2t)` against the B-combination.
pub fn check_lemma_3_2(t: u32) -> [LemmaReport; 2] {
    let a = combo(&[(1, "A1"), (1, "A2"), (-1, "A3"), (-1, "A4")], t);
    let b = combo(&[(1, "B1"), (1, "B2"), (-1, "B3"), (-1, "B4")], t);
    [
        LemmaReport::compare("3.2/odd", t_param(t), lhs_l(2 * t + 1), a),
        LemmaReport::compare("3.2/even", t_param(t), lhs_l(2 * t), b),
    ]
}

const ROMAN: [&str; 4] = ["i", "ii", "iii", "iv"];

/// Item `item` (1 to 4) of the pointwise lemma at one `(k, i, j)`, or `None`
/// when the point lies outside that item's range.
pub fn check_lemma_3_3_point(t: u32, item: u8, k: i64, i: i64, j: i64) -> Option<LemmaReport> {
    if !(1..=4).contains(&item) {
        return None;
    }
    let t64 = i64::from(t);
    let range = T_RANGES[usize::from(2 * item - 2)];
    if !range.points(t64).contains(&(k, i, j)) {
        return None;
    }
    let lhs = a_point(item, t64, k, i, j) - delta11(&b_point(item, t64, k, i, j));
    let rhs = t_point(2 * item - 1, t64, i, j, k) + t_point(2 * item, t64, i, j, k);
    let params = t_param(t).with("k", k).with("i", i).with("j", j);
    Some(LemmaReport::compare(
        format!("3.3/{}", ROMAN[usize::from(item - 1)]),
        params,
        lhs,
        rhs,
    ))
}

/// All four items over every point of their ranges.
pub fn check_lemma_3_3(t: u32) -> Vec<LemmaReport> {
    (1..=4u8)
        .flat_map(|item| {
            T_RANGES[usize::from(2 * item - 2)]
                .points(i64::from(t))
                .into_iter()
                .filter_map(move |(k, i, j)| check_lemma_3_3_point(t, item, k, i, j))
        })
        .collect()
}

pub fn check_lemma_3_4(t: u32) -> LemmaReport {
    let lhs = lhs_l(2 * t + 1) - delta11(&lhs_l(2 * t));
    let rhs = combo(
        &[
            (1, "T1"),
            (1, "T2"),
            (1, "T3"),
            (1, "T4"),
            (-1, "T5"),
            (-1, "T6"),
            (-1, "T7"),
            (-1, "T8"),
            (1, "T9"),
            (-1, "T10"),
        ],
        t,
    );
    LemmaReport::compare("3.4", t_param(t), lhs, rhs)
}

/// `T_i(t+1) - Δ^(2,2) T_i(t) = T_i1(t) + T_i2(t)` for `i = 1..8`.
pub fn check_lemma_3_5(t: u32) -> Vec<LemmaReport> {
    (1..=8)
        .map(|i| {
            let ti = format!("T{i}");
            let lhs = fam(&ti, t + 1) - delta22(&fam(&ti, t));
            let rhs = fam(&format!("T{i}1"), t) + fam(&format!("T{i}2"), t);
            LemmaReport::compare(format!("3.5/{ti}"), t_param(t), lhs, rhs)
        })
        .collect()
}

type Identity<'a> = (&'a str, &'a [(i8, &'a str)], &'a [(i8, &'a str)]);

fn run_identities(lemma: &str, ids: &[Identity<'_>], t: u32) -> Vec<LemmaReport> {
    ids.iter()
        .map(|(label, lhs, rhs)| {
            LemmaReport::compare(format!("{lemma}/{label}"), t_param(t), combo(lhs, t), combo(rhs, t))
        })
        .collect()
}

pub fn check_lemma_3_6(t: u32) -> Vec<LemmaReport> {
    const IDS: [Identity<'static>; 8] = [
        ("T41-T61", &[(1, "T41"), (-1, "T61")], &[(-1, "N1")]),
        ("T31-T71", &[(1, "T31"), (-1, "T71")], &[(1, "N2"), (-1, "N3")]),
        ("T11-T81", &[(1, "T11"), (-1, "T81")], &[(1, "N4"), (-1, "N5")]),
        ("T21-T51", &[(1, "T21"), (-1, "T51")], &[(1, "N6")]),
        ("T32-T72", &[(1, "T32"), (-1, "T72")], &[(-1, "M1")]),
        ("T42-T62", &[(1, "T42"), (-1, "T62")], &[(1, "M2"), (-1, "M3")]),
        ("T12-T82", &[(1, "T12"), (-1, "T82")], &[(1, "M4"), (-1, "M5")]),
        ("T22-T52", &[(1, "T22"), (-1, "T52")], &[(1, "M6")]),
    ];
    run_identities("3.6", &IDS, t)
}

pub fn check_lemma_3_7(t: u32) -> Vec<LemmaReport> {
    const IDS: [Identity<'static>; 6] = [
        ("N2-N1", &[(1, "N2"), (-1, "N1")], &[(1, "C1"), (-1, "C2")]),
        ("N4-N3", &[(1, "N4"), (-1, "N3")], &[(1, "C3")]),
        ("N6-N5", &[(1, "N6"), (-1, "N5")], &[(1, "C4"), (1, "C5")]),
        ("M2-M1", &[(1, "M2"), (-1, "M1")], &[(1, "D1"), (-1, "D2"), (-1, "D3"), (-1, "D4")]),
        ("M4-M3", &[(1, "M4"), (-1, "M3")], &[(1, "D5"), (1, "D6"), (-1, "D7")]),
        ("M6-M5", &[(1, "M6"), (-1, "M5")], &[(1, "D8"), (-1, "D9")]),
    ];
    run_identities("3.7", &IDS, t)
}

pub fn check_lemma_3_8(t: u32) -> [LemmaReport; 2] {
    let step = |name: &str| fam(name, t + 1) - delta22(&fam(name, t));
    [
        LemmaReport::compare(
            "3.8/T9",
            t_param(t),
            step("T9"),
            combo(&[(1, "E1"), (1, "E2"), (1, "E3")], t),
        ),
        LemmaReport::compare(
            "3.8/T10",
            t_param(t),
            step("T10"),
            combo(&[(1, "E4"), (1, "E5"), (1, "E6"), (1, "E7"), (1, "E8"), (1, "E9")], t),
        ),
    ]
}

/// First and second differences of a sequence indexed by `r`, built from
/// `Δ^(1,1)` between consecutive `r` and `Δ^(2,2)` between consecutive `t`.
struct Differences<F: Fn(u32) -> SchurExpansion> {
    seq: F,
}

impl<F: Fn(u32) -> SchurExpansion> Differences<F> {
    fn odd1(&self, t: u32) -> SchurExpansion {
        (self.seq)(2 * t + 1) - delta11(&(self.seq)(2 * t))
    }

    fn even1(&self, t: u32) -> SchurExpansion {
        (self.seq)(2 * t + 2) - delta11(&(self.seq)(2 * t + 1))
    }

    fn odd2(&self, t: u32) -> SchurExpansion {
        self.odd1(t + 1) - delta22(&self.odd1(t))
    }

    fn even2(&self, t: u32) -> SchurExpansion {
        self.even1(t + 1) - delta22(&self.even1(t))
    }
}

/// Cached `L(0..=r_max)`, so the difference operators expand each `L(r)` once.
fn cached_l(r_max: u32) -> impl Fn(u32) -> SchurExpansion {
    let table: Vec<SchurExpansion> = (0..=r_max).map(lhs_l).collect();
    move |r| table[r as usize].clone()
}

/// The second differences of `L` and `R` against sums over parts in {3, 4}.
pub fn check_lemma_3_9(t: u32) -> [LemmaReport; 4] {
    let l = Differences { seq: cached_l(2 * t + 4) };
    let r = Differences { seq: rhs_r };
    let odd = par34_sum(4 * t + 4);
    let even = par34_sum(4 * t + 6);
    [
        LemmaReport::compare("3.9/L_o2", t_param(t), l.odd2(t), odd.clone()),
        LemmaReport::compare("3.9/R_o2", t_param(t), r.odd2(t), odd),
        LemmaReport::compare("3.9/L_e2", t_param(t), l.even2(t), even.clone()),
        LemmaReport::compare("3.9/R_e2", t_param(t), r.even2(t), even),
    ]
}

/// The first differences of `L` and `R` agree.
pub fn check_lemma_3_10(t: u32) -> [LemmaReport; 2] {
    let l = Differences { seq: cached_l(2 * t + 2) };
    let r = Differences { seq: rhs_r };
    [
        LemmaReport::compare("3.10/odd", t_param(t), l.odd1(t), r.odd1(t)),
        LemmaReport::compare("3.10/even", t_param(t), l.even1(t), r.even1(t)),
    ]
}

/// The ten pairwise differences whose closed forms finish the second-level
/// computation.
pub fn check_grouping_relations(t: u32) -> Vec<LemmaReport> {
    let ti = i64::from(t);
    let rel = |label: &str, lhs: &[(i8, &str)], rhs: SchurExpansion| {
        LemmaReport::compare(format!("grouping/{label}"), t_param(t), combo(lhs, t), rhs)
    };
    vec![
        rel(
            "C3-E9",
            &[(1, "C3"), (-1, "E9")],
            s_sum((0..=ti - 2).map(|a| (a, ti - a + 1, 1, ti - a - 1)))
                - pinned_sum(0..=ti - 2, |k| 3 * k - 2 * ti + 2, |k, a| (a, 2 * ti - k - a, 1, 0)),
        ),
        rel(
            "C5-D9",
            &[(1, "C5"), (-1, "D9")],
            pinned_sum(1..=ti - 1, |k| 3 * k - 2 * ti, |k, a| (a, 2 * ti - k - a, 2, 0))
                - pinned_sum(1..=ti - 1, |k| 5 * k - 4 * ti + 1, |k, a| (a, k + 1 - a, 4 * ti - 4 * k, 0)),
        ),
        rel(
            "C1-D3",
            &[(1, "C1"), (-1, "D3")],
            s_sum((0..=ti - 3).map(|a| (a, ti - a, 3, ti - a - 2))),
        ),
        rel(
            "D5-E8",
            &[(1, "D5"), (-1, "E8")],
            -pinned_sum(0..=ti - 1, |k| 3 * k - 2 * ti, |k, a| (a, 2 * ti - k - a, 2, 0)),
        ),
        rel("D6-D4", &[(1, "D6"), (-1, "D4")], SchurExpansion::zero()),
        rel(
            "D8-D7",
            &[(1, "D8"), (-1, "D7")],
            pinned_sum(1..=ti - 1, |k| 3 * k - 2 * ti - 2, |k, a| (a, 2 * ti - a - k, 3, 0)),
        ),
        rel(
            "D1-C2",
            &[(1, "D1"), (-1, "C2")],
            -pinned_sum(0..=ti - 2, |k| 3 * k - 2 * ti + 1, |k, a| (a, 2 * ti - a - k - 1, 3, 0)),
        ),
        rel("E1-E4", &[(1, "E1"), (-1, "E4")], s_sum([(ti + 1, 0, 0, 0)])),
        rel(
            "E2-E6",
            &[(1, "E2"), (-1, "E6")],
            pinned_sum(1..=ti, |k| 3 * k - 2 * ti - 1, |k, a| (a, 2 * ti - k - a + 1, 1, 0)),
        ),
        rel(
            "E3-E7",
            &[(1, "E3"), (-1, "E7")],
            pinned_sum(1..=ti, |k| 3 * k - 2 * ti - 2, |k, a| (a, 2 * ti - k - a + 2, 0, 0)),
        ),
    ]
}
