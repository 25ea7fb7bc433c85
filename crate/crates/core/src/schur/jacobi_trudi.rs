use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::partition::Partition;

use super::{EProduct, SchurExpansion};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedEProduct {
    pub coeff: i64,
    pub product: EProduct,
}

/// Fully expanded `det(e_{λ'_i - i + j})` of size `λ_1`, like terms
/// collected, zero products and cancelled terms dropped.
///
/// The determinant is expanded over all permutations, so this is only
/// meant for partitions with a handful of columns.
pub fn jacobi_trudi_e(lambda: &Partition) -> Vec<SignedEProduct> {
    let n = lambda.largest() as usize;
    let conj = lambda.conjugate();
    let entry = |i: usize, j: usize| conj.part(i) as i64 - i as i64 + j as i64;

    let mut collected: BTreeMap<EProduct, i64> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, &mut |perm, sign| {
        let product = EProduct::new((0..n).map(|i| entry(i, perm[i])));
        if !product.is_zero() {
            *collected.entry(product).or_insert(0) += sign;
        }
    });
    let mut out: Vec<SignedEProduct> = collected
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(product, coeff)| SignedEProduct { coeff, product })
        .collect();
    out.reverse();
    out
}

/// Signed sum of the Schur expansions of [`jacobi_trudi_e`]; should be `s_λ`.
pub fn jacobi_trudi_expand(lambda: &Partition) -> SchurExpansion {
    let mut acc = SchurExpansion::zero();
    for term in jacobi_trudi_e(lambda) {
        acc += term.product.expand().scale(&BigInt::from(term.coeff));
    }
    acc
}

// Heap's algorithm; the sign flips on every swap.
fn for_each_permutation<F: FnMut(&[usize], i64)>(perm: &mut [usize], visit: &mut F) {
    let n = perm.len();
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    visit(perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
