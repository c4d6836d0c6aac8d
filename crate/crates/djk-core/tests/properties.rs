//! Randomized property checks for the exact linear algebra layer.

use djk_core::linalg::{qr, rref, Matrix, Subspace, Q};
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qr(n, d))
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(small_q(), c), r)
            .prop_map(move |rows| Matrix::from_rows(rows, c))
    })
}

fn vectors(ambient: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Q>>> {
    proptest::collection::vec(proptest::collection::vec(small_q(), ambient), count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        let (r1, rank1, pivots1) = rref(&m);
        let (r2, rank2, pivots2) = rref(&r1);
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(rank1, rank2);
        prop_assert_eq!(pivots1, pivots2);
    }

    #[test]
    fn grassmann_dimension_identity(
        sv in vectors(4, 3),
        tv in vectors(4, 3),
    ) {
        let s = Subspace::span(&sv, 4).unwrap();
        let t = Subspace::span(&tv, 4).unwrap();
        let sum = s.sum(&t).unwrap();
        let meet = s.intersect(&t).unwrap();
        prop_assert_eq!(s.dim() + t.dim(), sum.dim() + meet.dim());
        prop_assert!(sum.contains_subspace(&s).unwrap());
        prop_assert!(sum.contains_subspace(&t).unwrap());
        prop_assert!(s.contains_subspace(&meet).unwrap());
        prop_assert!(t.contains_subspace(&meet).unwrap());
    }

    #[test]
    fn rational_field_axioms(a in small_q(), b in small_q(), c in small_q()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !num::Zero::is_zero(&a) {
            let inv = qr(1, 1) / a.clone();
            prop_assert_eq!(&a * &inv, qr(1, 1));
        }
    }
}
