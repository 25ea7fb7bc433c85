//! Principal specialization, the `W_n(q)` polynomials and q-log-convexity.

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identity::lhs_l;
use crate::partition::Partition;
use crate::poly::Poly;
use crate::schur::{EProduct, SchurExpansion};
use crate::tableaux::SsytCounter;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binom(n: u64, k: i64) -> BigInt {
    match u64::try_from(k) {
        Ok(k) if k <= n => BigInt::from(binomial(BigUint::from(n), BigUint::from(k))),
        _ => BigInt::zero(),
    }
}

/// `ps_n(e_k)`: `e_k` evaluated at `n` ones.
pub fn ps_e(n: u32, k: i64) -> BigInt {
    binom(n.into(), k)
}

/// `ps_n(s_λ)`: the number of SSYT of shape `λ` with entries at most `n`.
///
/// ```
/// use schurq::specialization::ps_schur;
/// assert_eq!(ps_schur(&"[2,1]".parse().unwrap(), 2), 2u32.into());
/// ```
pub fn ps_schur(lambda: &Partition, n: u32) -> BigInt {
    SsytCounter::new().count(lambda, n).into()
}

pub fn ps_expansion(a: &SchurExpansion, n: u32) -> BigInt {
    ps_expansion_with(&mut SsytCounter::new(), a, n)
}

/// [`ps_expansion`] sharing a tableau-count cache across calls.
pub fn ps_expansion_with(counter: &mut SsytCounter, a: &SchurExpansion, n: u32) -> BigInt {
    a.iter()
        .filter(|(lambda, _)| lambda.len() <= n as usize)
        .map(|(lambda, c)| c * BigInt::from(counter.count(lambda, n)))
        .sum()
}

/// `ps_n(e_k) = ps_{n-1}(e_k) + ps_{n-1}(e_{k-1})`.
pub fn pascal_recurrence_check(n: u32, k: i64) -> bool {
    n >= 1 && ps_e(n, k) == ps_e(n - 1, k) + ps_e(n - 1, k - 1)
}

/// `W_n(q) = Σ_k C(n,k)² q^k`.
///
/// ```
/// use schurq::specialization::w;
/// assert_eq!(w(2).to_string(), "1 + 4*q + q^2");
/// ```
pub fn w(n: u32) -> Poly {
    power_poly(n, 2)
}

/// `Σ_k C(n,k)^m q^k`.
pub fn power_poly(n: u32, m: u32) -> Poly {
    Poly::from_coeffs((0..=i64::from(n)).map(|k| ps_e(n, k).pow(m)).collect())
}

/// Central binomial coefficient and central Delannoy number: `W_n` at 1 and 2.
pub fn central_values(n: u32) -> (BigInt, BigInt) {
    let p = w(n);
    (p.eval(&BigInt::one()), p.eval(&BigInt::from(2)))
}

/// `seq(n-1) · seq(n+1) - seq(n)²`.
pub fn qlc_defect<F: Fn(u32) -> Poly>(seq: F, n: u32) -> Poly {
    assert!(n >= 1, "the defect needs n >= 1");
    &(&seq(n - 1) * &seq(n + 1)) - &seq(n).pow(2)
}

/// A negative coefficient in a q-log-convexity defect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: u32,
    pub r: usize,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub coefficient: BigInt,
}

/// The first `(n, r)` with a negative coefficient in the defect at `n`, for
/// `1 <= n <= n_max`, or `None` if every defect is coefficientwise nonnegative.
pub fn first_qlc_violation<F: Fn(u32) -> Poly>(seq: F, n_max: u32) -> Option<Witness> {
    (1..=n_max).find_map(|n| {
        qlc_defect(&seq, n)
            .first_negative()
            .map(|(r, coefficient)| Witness { n, r, coefficient })
    })
}

/// Scans `Σ_k C(n,k)^m q^k` for a failure of q-log-convexity.
///
/// ```
/// use schurq::specialization::power_m_counterexample;
/// assert!(power_m_counterexample(2, 10).is_none());
/// let w = power_m_counterexample(3, 20).unwrap();
/// assert_eq!((w.n, w.r, w.coefficient), (2, 2, (-12).into()));
/// ```
pub fn power_m_counterexample(m: u32, n_max: u32) -> Option<Witness> {
    first_qlc_violation(|n| power_poly(n, m), n_max)
}

/// One coefficient of the `W` defect against twice the specialized `L(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeCheck {
    pub n: u32,
    pub r: u32,
    #[serde(serialize_with = "crate::serde_util::display")]
    pub defect_coefficient: BigInt,
    /// `2 · ps_{n-1}(L(r))`, or 0 for `r = 0`.
    #[serde(serialize_with = "crate::serde_util::display")]
    pub specialized: BigInt,
    pub holds: bool,
}

/// `[q^r](W_{n-1} W_{n+1} - W_n²) = 2 ps_{n-1}(L(r))`.
///
/// At `r = 0` the defect coefficient is compared with 0 directly.
pub fn coefficient_bridge(n: u32, r: u32) -> Result<bool> {
    let l = lhs_l(r);
    Ok(coefficient_bridge_with(n, r, &l, &mut SsytCounter::new())?.holds)
}

/// [`coefficient_bridge`] with a precomputed `L(r)` and a shared tableau cache.
pub fn coefficient_bridge_with(
    n: u32,
    r: u32,
    l: &SchurExpansion,
    counter: &mut SsytCounter,
) -> Result<BridgeCheck> {
    if n == 0 || r > 2 * n {
        return Err(Error::Precondition(format!(
            "coefficient bridge needs n >= 1 and 0 <= r <= 2n, got n={n}, r={r}"
        )));
    }
    let defect_coefficient = qlc_defect(w, n).coeff(r as usize);
    let specialized = if r == 0 {
        BigInt::zero()
    } else {
        BigInt::from(2) * ps_expansion_with(counter, l, n - 1)
    };
    Ok(BridgeCheck {
        n,
        r,
        holds: defect_coefficient == specialized,
        defect_coefficient,
        specialized,
    })
}

/// The sides of the five e-product relations used to simplify the defect;
/// each side is `Σ_{k=0}^{r}` of one e-product pattern.
pub fn shuffle_relation_sides(r: u32) -> [Vec<SchurExpansion>; 5] {
    let r = i64::from(r);
    let side = |f: &dyn Fn(i64) -> [i64; 4]| -> SchurExpansion {
        (0..=r).map(|k| EProduct::new(f(k)).expand()).sum()
    };
    [
        vec![
            side(&|k| [k, k, r - k - 2, r - k - 2]),
            side(&|k| [k - 1, k - 1, r - k - 1, r - k - 1]),
        ],
        vec![
            side(&|k| [k - 1, k - 1, r - k, r - k]),
            side(&|k| [k, k, r - k - 1, r - k - 1]),
        ],
        vec![
            side(&|k| [k, k, r - k, r - k - 1]),
            side(&|k| [r - k, r - k, k, k - 1]),
        ],
        vec![
            side(&|k| [k, k, r - k, r - k - 2]),
            side(&|k| [r - k, r - k, k, k - 2]),
        ],
        vec![
            side(&|k| [k - 1, k - 1, r - k, r - k - 1]),
            side(&|k| [r - k - 1, r - k - 1, k, k - 1]),
            side(&|k| [k, k, r - k - 1, r - k - 2]),
        ],
    ]
}

/// Whether each of the five relations holds at `r` (all sides equal).
pub fn shuffle_relations_check(r: u32) -> [bool; 5] {
    shuffle_relation_sides(r).map(|sides| sides.windows(2).all(|w| w[0] == w[1]))
}

/// Narayana polynomial `Σ_{k=0}^{n-1} C(n,k) C(n,k+1) / n · q^k`.
///
/// ```
/// use schurq::specialization::narayana;
/// assert_eq!(narayana(4).unwrap().to_string(), "1 + 6*q + 6*q^2 + q^3");
/// ```
pub fn narayana(n: u32) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Precondition("narayana needs n >= 1".into()));
    }
    let nn = BigInt::from(n);
    let coeffs = (0..i64::from(n))
        .map(|k| {
            let (q, rem) = (binom(n.into(), k) * binom(n.into(), k + 1)).div_rem(&nn);
            if rem.is_zero() {
                Ok(q)
            } else {
                Err(Error::NotIntegral {
                    what: format!("narayana({n})"),
                    index: k as usize,
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// True iff every defect for `1 <= n <= n_max` is coefficientwise nonnegative.
pub fn is_q_log_convex<F: Fn(u32) -> Poly>(seq: F, n_max: u32) -> bool {
    first_qlc_violation(seq, n_max).is_none()
}

/// Whether a defect polynomial is nonnegative and every coefficient is even.
pub fn defect_is_even_nonnegative(p: &Poly) -> bool {
    p.coeffs().iter().all(|c| !c.is_negative() && c.is_even())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::tableaux::count_ssyt_enumerated;

    #[test]
    fn elementary_values() {
        assert_eq!(ps_e(5, 2), BigInt::from(10));
        assert_eq!(ps_e(3, 0), BigInt::one());
        assert_eq!(ps_e(3, -1), BigInt::zero());
        assert_eq!(ps_e(3, 4), BigInt::zero());
        for n in 1..=12 {
            for k in -1..=i64::from(n) + 1 {
                assert!(pascal_recurrence_check(n, k));
            }
        }
    }

    #[test]
    fn columns_specialize_to_binomials() {
        for n in 1..=12 {
            for k in 0..=n {
                assert_eq!(ps_schur(&Partition::column(k), n), ps_e(n, k.into()));
            }
        }
        assert_eq!(ps_schur(&Partition::empty(), 7), BigInt::one());
        assert_eq!(ps_schur(&"[1,1]".parse().unwrap(), 3), BigInt::from(3));
    }

    #[test]
    fn specialization_matches_enumeration() {
        for n in 0..=4 {
            for weight in 0..=6 {
                for lambda in partitions_of(weight) {
                    assert_eq!(ps_schur(&lambda, n), BigInt::from(count_ssyt_enumerated(&lambda, n)));
                }
            }
        }
    }

    #[test]
    fn linear_on_expansions() {
        assert_eq!(ps_expansion(&SchurExpansion::zero(), 4), BigInt::zero());
        assert_eq!(ps_expansion(&SchurExpansion::one(), 7), BigInt::one());
        let a: SchurExpansion = "2*s[2] - s[1,1]".parse().unwrap();
        assert_eq!(ps_expansion(&a, 3), BigInt::from(2 * 6 - 3));
    }

    #[test]
    fn w_and_defects() {
        assert_eq!(w(0), Poly::one());
        assert_eq!(w(3).to_string(), "1 + 9*q + 9*q^2 + q^3");
        assert_eq!(qlc_defect(w, 1).to_string(), "2*q");
        assert_eq!(qlc_defect(w, 2).to_string(), "2*q + 2*q^3");
        assert!(qlc_defect(|_| Poly::one(), 3).is_zero());
        for n in 1..=30 {
            assert!(defect_is_even_nonnegative(&qlc_defect(w, n)), "n={n}");
        }
    }

    #[test]
    fn central() {
        assert_eq!(central_values(0), (1.into(), 1.into()));
        assert_eq!(central_values(2), (6.into(), 13.into()));
        assert_eq!(central_values(3), (20.into(), 63.into()));
    }

    #[test]
    fn bridge_small() {
        assert!(coefficient_bridge(2, 1).unwrap());
        assert!(coefficient_bridge(2, 3).unwrap());
        assert!(coefficient_bridge(1, 1).unwrap());
        assert!(coefficient_bridge(3, 0).unwrap());
        assert!(coefficient_bridge(0, 0).is_err());
        assert!(coefficient_bridge(2, 5).is_err());
    }

    #[test]
    fn shuffles() {
        for r in 1..=5 {
            assert_eq!(shuffle_relations_check(r), [true; 5], "r={r}");
        }
    }

    /// Expanding the squares before specializing gives exactly `2 L(r)`.
    #[test]
    fn simplified_bridge_expression() {
        for r in 1..=6i64 {
            let mut total = SchurExpansion::zero();
            for k in 0..=r {
                let plus = [(1, r - k), (2, r - k - 1), (1, r - k - 2)];
                for &(c1, a) in &plus {
                    for &(c2, b) in &plus {
                        total += EProduct::new([k, k, a, b]).expand().scale(&BigInt::from(c1 * c2));
                    }
                }
                let left = [k, k - 1];
                let right = [r - k, r - k - 1];
                for &a in &left {
                    for &b in &left {
                        for &c in &right {
                            for &d in &right {
                                total -= EProduct::new([a, b, c, d]).expand();
                            }
                        }
                    }
                }
            }
            assert_eq!(total, lhs_l(r as u32).scale(&BigInt::from(2)), "r={r}");
        }
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(1).unwrap(), Poly::one());
        assert_eq!(narayana(3).unwrap().to_string(), "1 + 3*q + q^2");
        assert!(narayana(0).is_err());
        for n in 1..=15 {
            let p = narayana(n).unwrap();
            // Catalan numbers.
            assert_eq!(p.eval(&BigInt::one()), binom(2 * u64::from(n), n.into()) / BigInt::from(n + 1));
        }
    }

    #[test]
    fn higher_powers() {
        assert_eq!(power_m_counterexample(2, 15), None);
        let w4 = power_m_counterexample(4, 20).unwrap();
        assert_eq!((w4.n, w4.r, w4.coefficient), (2, 2, BigInt::from(-96)));
    }
}
