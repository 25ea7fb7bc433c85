use num_bigint::BigInt;
use proptest::prelude::*;
use schurq::identity::{lhs_l, lhs_l_parallel, rhs_r};
use schurq::specialization::{coefficient_bridge, ps_schur, qlc_defect, w};
use schurq::tableaux::count_ssyt_enumerated;
use schurq::transforms::{alpha, TriangularArray};
use schurq::{EProduct, Partition, SchurExpansion};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eproduct_expansion_is_homogeneous(indices in prop::collection::vec(0i64..5, 0..4)) {
        let p = EProduct::new(indices.clone());
        let degree: i64 = indices.iter().sum();
        for d in p.expand().degrees() {
            prop_assert_eq!(d as i64, degree);
        }
    }

    #[test]
    fn eproduct_expansion_ignores_order(mut indices in prop::collection::vec(-1i64..5, 0..4)) {
        let a = EProduct::new(indices.clone()).expand();
        indices.reverse();
        let mut b = SchurExpansion::one();
        for &k in &indices {
            b = b.pieri_mul_e(k);
        }
        prop_assert_eq!(a, b);
    }

    #[test]
    fn specialization_counts_tableaux(parts in prop::collection::vec(1u32..4, 0..4), n in 0u32..4) {
        let lambda = Partition::from_parts_unsorted(parts);
        prop_assert_eq!(ps_schur(&lambda, n), BigInt::from(count_ssyt_enumerated(&lambda, n)));
    }

    #[test]
    fn bridge_holds(n in 1u32..7, r_seed in 0u32..100) {
        let r = r_seed % (2 * n + 1);
        prop_assert!(coefficient_bridge(n, r).unwrap());
    }

    #[test]
    fn defects_have_even_coefficients(n in 1u32..25) {
        let d = qlc_defect(w, n);
        for c in d.coeffs() {
            prop_assert!(c % 2 == BigInt::from(0));
        }
    }

    #[test]
    fn alpha_is_symmetric(n in 1u32..20, r_seed in 0u32..1000, k_seed in 0u32..1000) {
        let r = r_seed % (2 * n + 1);
        let k = i64::from(k_seed % (r + 1));
        let a = TriangularArray::BinomialSquared;
        prop_assert_eq!(alpha(&a, n, r, k), alpha(&a, n, r, i64::from(r) - k));
    }
}

#[test]
fn main_identity_is_schur_positive_with_unit_coefficients() {
    for r in 1..=10 {
        let l = lhs_l(r);
        assert!(l.is_schur_positive());
        assert_eq!(l, rhs_r(r));
        assert_eq!(l, lhs_l_parallel(r));
    }
}
