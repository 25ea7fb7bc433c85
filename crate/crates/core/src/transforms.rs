//! Triangular transforms `y_n = Σ_k a(n,k) x_k` and the sign-change
//! criterion for preserving log-convexity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::specialization::{binom, central_values};

/// A triangular array `a(n,k)`, zero outside `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangularArray {
    /// `a(n,k) = C(n,k)²`.
    BinomialSquared,
    /// `a(n,k) = [k = n]`.
    Identity,
    /// Explicit rows; rows past the end are treated as zero.
    Table(Vec<Vec<BigInt>>),
}

impl TriangularArray {
    pub fn get(&self, n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::zero();
        }
        match self {
            TriangularArray::BinomialSquared => binom(n as u64, k).pow(2),
            TriangularArray::Identity => {
                if k == n {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            TriangularArray::Table(rows) => rows
                .get(n as usize)
                .and_then(|row| row.get(k as usize))
                .cloned()
                .unwrap_or_default(),
        }
    }

    /// Builds a table, checking that row `n` has exactly `n + 1` entries.
    pub fn table(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Input(format!(
                    "row {n} of a triangular array needs {} entries, found {}",
                    n + 1,
                    row.len()
                )));
            }
        }
        Ok(TriangularArray::Table(rows))
    }

    /// Rows `0..=n_max` materialized as a table.
    pub fn to_table(&self, n_max: u32) -> TriangularArray {
        let n_max = i64::from(n_max);
        TriangularArray::Table((0..=n_max).map(|n| (0..=n).map(|k| self.get(n, k)).collect()).collect())
    }

    /// Highest row index defined, or `None` for generator-backed arrays.
    pub fn last_row(&self) -> Option<usize> {
        match self {
            TriangularArray::Table(rows) => Some(rows.len().saturating_sub(1)),
            _ => None,
        }
    }

    /// `C(n,k)²` up to row `n_max` with the sign of entry `(n, k)` flipped.
    /// Used as a negative control: the result is not log-convexity preserving.
    pub fn corrupted_binomial_squared(n_max: u32, n: usize, k: usize) -> TriangularArray {
        let mut rows = match TriangularArray::BinomialSquared.to_table(n_max) {
            TriangularArray::Table(rows) => rows,
            _ => unreachable!(),
        };
        if let Some(v) = rows.get_mut(n).and_then(|row| row.get_mut(k)) {
            *v = -v.clone();
        }
        TriangularArray::Table(rows)
    }
}

impl fmt::Display for TriangularArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangularArray::BinomialSquared => f.write_str("binomial-squared"),
            TriangularArray::Identity => f.write_str("identity"),
            TriangularArray::Table(rows) => write!(f, "table({} rows)", rows.len()),
        }
    }
}

/// A finite sequence of exact rationals indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberSequence {
    pub values: Vec<BigRational>,
}

impl NumberSequence {
    pub fn new(values: Vec<BigRational>) -> Self {
        NumberSequence { values }
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(values: I) -> Self {
        NumberSequence::new(values.into_iter().map(BigRational::from_integer).collect())
    }

    /// `x_k = f(k)` for `0 <= k <= n_max`.
    pub fn generate(n_max: u32, f: impl Fn(u32) -> BigInt) -> Self {
        NumberSequence::from_integers((0..=n_max).map(f))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.values.get(k)
    }
}

/// The built-in log-convex inputs: `1`, `2^k`, `k!`, `C(2k,k)` and the
/// central Delannoy numbers, each on `0..=n_max`.
pub fn default_corpus(n_max: u32) -> Vec<(String, NumberSequence)> {
    let factorial = |k: u32| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    vec![
        ("ones".into(), NumberSequence::generate(n_max, |_| BigInt::one())),
        ("powers-of-two".into(), NumberSequence::generate(n_max, |k| BigInt::from(2).pow(k))),
        ("factorials".into(), NumberSequence::generate(n_max, factorial)),
        ("central-binomial".into(), NumberSequence::generate(n_max, |k| central_values(k).0)),
        ("central-delannoy".into(), NumberSequence::generate(n_max, |k| central_values(k).1)),
    ]
}

/// `α(n,r,k) = a(n+1,k)a(n-1,r-k) + a(n+1,r-k)a(n-1,k) - 2a(n,r-k)a(n,k)`.
///
/// ```
/// use schurq::transforms::{alpha, TriangularArray};
/// assert_eq!(alpha(&TriangularArray::BinomialSquared, 2, 2, 1), (-14).into());
/// ```
pub fn alpha(a: &TriangularArray, n: u32, r: u32, k: i64) -> BigInt {
    let (n, r) = (i64::from(n), i64::from(r));
    a.get(n + 1, k) * a.get(n - 1, r - k) + a.get(n + 1, r - k) * a.get(n - 1, k)
        - BigInt::from(2) * a.get(n, r - k) * a.get(n, k)
}

/// The quartics `f_1, f_2, f_3` in `x`, their combination
/// `f = f_1 + f_2 - 2 f_3`, and the quadratic `g` with `f' = 2(2x - r) g`,
/// for fixed `(n, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPolys {
    pub n: u32,
    pub r: u32,
    pub f1: Poly,
    pub f2: Poly,
    pub f3: Poly,
    pub f: Poly,
    pub g: Poly,
    /// `g'` in its factored form `2(2x - r)(1 + 2n)`.
    pub g_prime: Poly,
}

impl FPolys {
    pub fn new(n: u32, r: u32) -> Self {
        let (ni, ri) = (BigInt::from(n), BigInt::from(r));
        let c = |v: BigInt| Poly::constant(v);
        let x = Poly::x();
        // n - x + 1, n - x, n - (r - x) + 1, n - (r - x)
        let u1 = &c(&ni + 1) - &x;
        let u0 = &c(ni.clone()) - &x;
        let v1 = &c(&ni - &ri + 1) + &x;
        let v0 = &c(&ni - &ri) + &x;
        let np1_sq = c((&ni + 1u32).pow(2));
        let n_sq = c(ni.pow(2));
        let f1 = &np1_sq * &(&u1 * &u0).pow(2);
        let f2 = &np1_sq * &(&v1 * &v0).pow(2);
        let f3 = &n_sq * &(&u1 * &v1).pow(2);
        let f = &(&f1 + &f2) - &f3.scale(&BigInt::from(2));

        let (n, r) = (i64::from(n), i64::from(r));
        let g0 = 4 * n * r * r - 17 * n * n * r + 2 * n * n * r * r - 12 * n * r - 8 * n.pow(3) * r
            + 1
            + 8 * n
            + 21 * n * n
            + 8 * n.pow(4)
            + 22 * n.pow(3)
            + 2 * r * r
            - 3 * r;
        let g = Poly::from_i64s(&[g0, -4 * n * r - 2 * r, 2 + 4 * n]);
        let g_prime = Self::two_x_minus_r_times_two(r).scale(&BigInt::from(1 + 2 * n));
        FPolys {
            n: n as u32,
            r: r as u32,
            f1,
            f2,
            f3,
            f,
            g,
            g_prime,
        }
    }

    /// `2(2x - r)`.
    fn two_x_minus_r_times_two(r: i64) -> Poly {
        Poly::from_i64s(&[-2 * r, 4])
    }

    /// `f'` by differentiation agrees with `2(2x - r) g`, and `g'` by
    /// differentiation agrees with its factored form.
    pub fn derivative_identities_hold(&self) -> bool {
        let factor = Self::two_x_minus_r_times_two(i64::from(self.r));
        self.f.derivative() == &factor * &self.g && self.g.derivative() == self.g_prime
    }

    pub fn f_at(&self, x: &BigRational) -> BigRational {
        self.f.eval_rational(x)
    }

    pub fn f_at_half_r(&self) -> BigRational {
        self.f_at(&BigRational::new(self.r.into(), 2.into()))
    }

    /// `-r(2n(2n-r) + (2n-r) + 2n)(2 + 2n - r)² / 8`.
    pub fn f_at_half_r_closed_form(&self) -> BigRational {
        let (n, r) = (BigInt::from(self.n), BigInt::from(self.r));
        let two_n = &n * 2u32;
        let inner = &two_n * (&two_n - &r) + (&two_n - &r) + &two_n;
        let num = -(&r * inner * (BigInt::from(2) + &two_n - &r).pow(2));
        BigRational::new(num, 8.into())
    }
}

/// `f(x)` at rational `x`.
pub fn f_poly(n: u32, r: u32, x: &BigRational) -> BigRational {
    FPolys::new(n, r).f_at(x)
}

/// Whether `(n, r, k)` is in the range where the factorization of `α` has a
/// nonzero denominator: `r - n - 1 < k <= ⌊r/2⌋`, `k <= n`, `r - k <= n`.
pub fn factorization_applies(n: u32, r: u32, k: i64) -> bool {
    let (n, r) = (i64::from(n), i64::from(r));
    n >= 1 && r <= 2 * n && k >= 0 && r - n - 1 < k && k <= r / 2 && k <= n && r - k <= n
}

/// `α(n,r,k) · n²(n-k+1)²(n-r+k+1)² = C(n,k)² C(n,r-k)² f(k)` for the
/// binomial-squared array.
pub fn alpha_factorization_check(n: u32, r: u32, k: i64) -> Result<bool> {
    alpha_factorization_check_with(&FPolys::new(n, r), k)
}

/// [`alpha_factorization_check`] reusing the polynomials for one `(n, r)`.
pub fn alpha_factorization_check_with(fp: &FPolys, k: i64) -> Result<bool> {
    let (n, r) = (fp.n, fp.r);
    if !factorization_applies(n, r, k) {
        return Err(Error::Precondition(format!(
            "alpha factorization needs r-n-1 < k <= r/2, k <= n, r-k <= n; got n={n}, r={r}, k={k}"
        )));
    }
    let (ni, ri) = (i64::from(n), i64::from(r));
    let denom = BigInt::from(ni).pow(2) * BigInt::from(ni - k + 1).pow(2) * BigInt::from(ni - ri + k + 1).pow(2);
    let lhs = alpha(&TriangularArray::BinomialSquared, n, r, k) * denom;
    let rhs = binom(n.into(), k).pow(2) * binom(n.into(), ri - k).pow(2) * fp.f.eval(&BigInt::from(k));
    Ok(lhs == rhs)
}

/// The largest `k'` in `-1..=⌊r/2⌋` with `α >= 0` for `k <= k'` and
/// `α <= 0` for `k > k'`.
///
/// ```
/// use schurq::transforms::{sign_change_index, TriangularArray};
/// assert_eq!(sign_change_index(&TriangularArray::BinomialSquared, 2, 2).unwrap(), 0);
/// ```
pub fn sign_change_index(a: &TriangularArray, n: u32, r: u32) -> Result<i64> {
    if n == 0 || r > 2 * n {
        return Err(Error::Precondition(format!(
            "sign change needs n >= 1 and 0 <= r <= 2n, got n={n}, r={r}"
        )));
    }
    let values: Vec<BigInt> = (0..=i64::from(r / 2)).map(|k| alpha(a, n, r, k)).collect();
    let mut split = None;
    for cut in (0..=values.len()).rev() {
        let (head, tail) = values.split_at(cut);
        if head.iter().all(|v| !v.is_negative()) && tail.iter().all(|v| !v.is_positive()) {
            split = Some(cut as i64 - 1);
            break;
        }
    }
    split.ok_or(Error::NoSingleSignChange { n, r })
}

/// `y_n = Σ_{k=0}^{n} a(n,k) x_k` for `0 <= n <= n_max`.
pub fn apply_transform(a: &TriangularArray, x: &NumberSequence, n_max: u32) -> Result<NumberSequence> {
    if x.len() <= n_max as usize {
        return Err(Error::Precondition(format!(
            "transform to n={n_max} needs {} input values, got {}",
            n_max + 1,
            x.len()
        )));
    }
    if let Some(last) = a.last_row() {
        if last < n_max as usize {
            return Err(Error::Precondition(format!(
                "array has rows up to {last}, transform needs {n_max}"
            )));
        }
    }
    let values = (0..=i64::from(n_max))
        .map(|n| {
            (0..=n)
                .map(|k| BigRational::from_integer(a.get(n, k)) * &x.values[k as usize])
                .fold(BigRational::zero(), |acc, v| acc + v)
        })
        .collect();
    Ok(NumberSequence::new(values))
}

/// Outcome of a log-convexity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LogConvexity {
    pub convex: bool,
    /// The smallest index at which the sequence fails.
    pub first_violation: Option<usize>,
}

/// Checks `x_{k-1} x_{k+1} >= x_k²` for `1 <= k <= n_max - 1`. A negative
/// value at an index in `0..=n_max` counts as a violation at that index.
///
/// ```
/// use schurq::transforms::{is_log_convex, NumberSequence};
/// let x = NumberSequence::from_integers([1, 2, 3, 2].map(Into::into));
/// assert_eq!(is_log_convex(&x, 3).first_violation, Some(1));
/// ```
pub fn is_log_convex(x: &NumberSequence, n_max: u32) -> LogConvexity {
    let n_max = (n_max as usize).min(x.len().saturating_sub(1));
    let first_violation = (0..=n_max).find(|&k| {
        let v = &x.values[k];
        v.is_negative() || (k >= 1 && k < n_max && &x.values[k - 1] * &x.values[k + 1] < v * v)
    });
    LogConvexity {
        convex: first_violation.is_none(),
        first_violation,
    }
}

/// One corpus entry of a preservation run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreservationEntry {
    pub name: String,
    pub n_max: u32,
    pub passed: bool,
    pub first_violation: Option<usize>,
}

/// Applies `a` to every corpus sequence and checks the output on `0..=n_max`.
///
/// Inputs that are not themselves log-convex on `0..=n_max` are rejected.
pub fn preservation_suite(
    a: &TriangularArray,
    corpus: &[(String, NumberSequence)],
    n_max: u32,
) -> Result<Vec<PreservationEntry>> {
    corpus
        .iter()
        .map(|(name, x)| {
            if let Some(k) = is_log_convex(x, n_max).first_violation {
                return Err(Error::Precondition(format!(
                    "corpus sequence `{name}` is not log-convex (index {k})"
                )));
            }
            let y = apply_transform(a, x, n_max)?;
            let lc = is_log_convex(&y, n_max);
            Ok(PreservationEntry {
                name: name.clone(),
                n_max,
                passed: lc.convex,
                first_violation: lc.first_violation,
            })
        })
        .collect()
}
