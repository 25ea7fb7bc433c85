//! Brute-force cross-check for e-product expansions.
//!
//! The product is multiplied out as an honest polynomial in `m` variables,
//! then Schur polynomials (built from their tableaux) are peeled off,
//! always taking the lexicographically largest surviving monomial. Nothing
//! here touches the Pieri code path.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableaux::for_each_ssyt;

use super::{EProduct, SchurExpansion};

/// Sparse polynomial in `x_1..x_m`, keyed by exponent vectors of length `m`.
pub type MonomialPoly = HashMap<Vec<u32>, BigInt>;

fn elementary(k: u32, m: u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, left: u32, m: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            if m - v < left {
                break;
            }
            cur[v as usize] = 1;
            rec(v + 1, left - 1, m, cur, out);
            cur[v as usize] = 0;
        }
    }
    let mut out = Vec::new();
    rec(0, k, m, &mut vec![0; m as usize], &mut out);
    out
}

fn multiply_by_e(poly: &MonomialPoly, k: u32, m: u32) -> MonomialPoly {
    let monomials = elementary(k, m);
    let mut out = MonomialPoly::new();
    for (exp, c) in poly {
        for mono in &monomials {
            let key: Vec<u32> = exp.iter().zip(mono).map(|(a, b)| a + b).collect();
            *out.entry(key).or_default() += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `s_λ(x_1, ..., x_m)` as a monomial polynomial, one monomial per tableau.
pub fn schur_polynomial(shape: &Partition, m: u32) -> MonomialPoly {
    let mut out = MonomialPoly::new();
    for_each_ssyt(shape, m, |content| {
        *out.entry(content.to_vec()).or_insert_with(BigInt::zero) += 1;
    });
    out
}

pub fn monomial_oracle_expand(p: &EProduct, m: u32) -> Result<SchurExpansion> {
    if (m as u64) < p.degree() {
        return Err(Error::TooFewVariables { needed: p.degree(), given: m });
    }
    if p.is_zero() {
        return Ok(SchurExpansion::zero());
    }
    let mut poly = MonomialPoly::new();
    poly.insert(vec![0; m as usize], BigInt::one());
    for &k in p.indices() {
        poly = multiply_by_e(&poly, k, m);
    }

    let mut result = SchurExpansion::zero();
    while let Some(lead) = poly.keys().max().cloned() {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OraclePeel {
                shape: format!("{lead:?}"),
                reason: "leading monomial is not a partition; input was not symmetric".into(),
            });
        }
        let lambda = Partition::from_parts_unsorted(lead.clone());
        let c = poly[&lead].clone();
        let schur = schur_polynomial(&lambda, m);
        let lead_in_schur = schur.get(&lead).cloned().unwrap_or_default();
        if lead_in_schur.is_zero() || !c.is_multiple_of(&lead_in_schur) {
            return Err(Error::OraclePeel {
                shape: lambda.to_string(),
                reason: format!("coefficient {c} not divisible by {lead_in_schur}"),
            });
        }
        let factor = &c / &lead_in_schur;
        for (exp, v) in schur {
            let entry = poly.entry(exp).or_default();
            *entry -= &factor * v;
        }
        poly.retain(|_, v| !v.is_zero());
        result.add_term(lambda, factor);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn s(parts: &[u32]) -> SchurExpansion {
        SchurExpansion::term(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn small_examples() {
        assert_eq!(monomial_oracle_expand(&EProduct::new([2]), 2).unwrap(), s(&[1, 1]));
        assert_eq!(
            monomial_oracle_expand(&EProduct::new([1, 2]), 3).unwrap(),
            s(&[2, 1]) + s(&[1, 1, 1])
        );
        assert_eq!(
            monomial_oracle_expand(&EProduct::new([2, 0]), 2).unwrap(),
            monomial_oracle_expand(&EProduct::new([2]), 2).unwrap()
        );
    }

    #[test]
    fn rejects_too_few_variables() {
        assert!(matches!(
            monomial_oracle_expand(&EProduct::new([2, 2]), 3),
            Err(Error::TooFewVariables { needed: 4, given: 3 })
        ));
    }

    #[test]
    fn agrees_with_pieri_up_to_degree_6() {
        // Degrees 7 and 8 run in the acceptance suite.
        for d in 0..=6 {
            for shape in partitions_of(d) {
                let p = EProduct::new(shape.parts().iter().map(|&k| k as i64));
                assert_eq!(monomial_oracle_expand(&p, d.max(1)).unwrap(), p.expand(), "{p}");
            }
        }
    }
}
