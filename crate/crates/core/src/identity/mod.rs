//! Both sides of the main Schur-positivity identity and the named families
//! used to prove it, with exact equality checks.

mod families;
mod lemmas;
mod report;

pub use families::{as_printed, family_sum, FamilyId, FamilyKind, FamilyName};
pub use lemmas::{
    check_grouping_relations, check_lemma_3_2, check_lemma_3_3, check_lemma_3_3_point,
    check_lemma_3_4, check_lemma_3_5, check_lemma_3_6, check_lemma_3_7, check_lemma_3_8,
    check_lemma_3_9, check_lemma_3_10, check_lemma, LemmaId,
};
pub use report::{LemmaReport, Parameters};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::partition::{partitions_34, r_shapes, Partition};
use crate::schur::{EProduct, SchurExpansion};

/// The three e-products contributing to the `k`-th summand of `L(r)`, with
/// their integer multipliers.
fn lhs_summands(r: i64, k: i64) -> [(i64, EProduct); 3] {
    [
        (1, EProduct::new([k - 1, k - 1, r - k, r - k])),
        (1, EProduct::new([k - 2, k, r - k, r - k])),
        (-2, EProduct::new([k - 1, k, r - k - 1, r - k])),
    ]
}

fn lhs_term(r: i64, k: i64) -> SchurExpansion {
    lhs_summands(r, k)
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(c, p)| p.expand().scale(&BigInt::from(*c)))
        .sum()
}

/// `L(r)`: the e-product side of the identity, expanded in the Schur basis.
///
/// Defined for every `r >= 0`; the defining sum collapses to zero at `r = 0`.
///
/// ```
/// use schurq::identity::lhs_l;
/// assert_eq!(lhs_l(3).to_string(), "s[4] + s[2,2] + s[1,1,1,1]");
/// ```
pub fn lhs_l(r: u32) -> SchurExpansion {
    let r = i64::from(r);
    (0..=r).map(|k| lhs_term(r, k)).sum()
}

/// Same value as [`lhs_l`], with the `k`-summands expanded on the rayon pool.
/// Partial sums are combined in `k` order, so the result is identical.
pub fn lhs_l_parallel(r: u32) -> SchurExpansion {
    let r = i64::from(r);
    let terms: Vec<SchurExpansion> = (0..=r).into_par_iter().map(|k| lhs_term(r, k)).collect();
    terms.into_iter().sum()
}

/// `R(r)`: one Schur function for every admissible shape of weight `2r - 2`.
/// `R(0)` is taken to be zero so the difference operators are defined at `t = 0`.
pub fn rhs_r(r: u32) -> SchurExpansion {
    if r == 0 {
        return SchurExpansion::zero();
    }
    r_shapes(r).into_iter().collect()
}

/// Sum of `s_λ` over partitions of `n` into parts 3 and 4.
pub fn par34_sum(n: u32) -> SchurExpansion {
    partitions_34(n).into_iter().collect()
}

pub fn verify_main_identity(r: u32) -> LemmaReport {
    LemmaReport::compare("main", Parameters::new().with("r", r.into()), lhs_l(r), rhs_r(r))
}

pub(crate) fn delta11(a: &SchurExpansion) -> SchurExpansion {
    a.delta(&Partition::from_parts_unsorted(vec![1, 1]))
}

pub(crate) fn delta22(a: &SchurExpansion) -> SchurExpansion {
    a.delta(&Partition::from_parts_unsorted(vec![2, 2]))
}

pub(crate) fn unit() -> BigInt {
    BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> SchurExpansion {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(lhs_l(0).is_zero());
        assert_eq!(lhs_l(1), SchurExpansion::one());
        assert_eq!(rhs_r(1), SchurExpansion::one());
        assert_eq!(rhs_r(2), parse("s[1,1]"));
        assert_eq!(
            rhs_r(4),
            parse("s[4,1,1] + s[3,3] + s[2,2,1,1] + s[1,1,1,1,1,1]")
        );
    }

    #[test]
    fn printed_examples() {
        assert_eq!(lhs_l(3), parse("s[1,1,1,1] + s[2,2] + s[4]"));
        assert_eq!(
            lhs_l(4),
            parse("s[1,1,1,1,1,1] + s[2,2,1,1] + s[4,1,1] + s[3,3]")
        );
        let l5 = lhs_l(5);
        assert_eq!(l5.len(), 7);
        for p in ["[4,2,2]", "[4,4]", "[1,1,1,1,1,1,1,1]"] {
            assert_eq!(l5.coeff(&p.parse().unwrap()), unit());
        }
    }

    #[test]
    fn identity_and_bookkeeping() {
        for r in 1..=8 {
            let l = lhs_l(r);
            assert!(verify_main_identity(r).passed, "r={r}");
            assert!(l.degrees().iter().all(|&d| d == 2 * u64::from(r) - 2));
            assert!(l.iter().all(|(_, c)| c.is_one()));
            assert_eq!(l, lhs_l_parallel(r));
        }
    }
}
