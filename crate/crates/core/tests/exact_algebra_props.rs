use inertia_core::arith::Int;
use inertia_core::matrix::{
    cokernel_structure, det, lattice_coset_reps, smith_normal_form, IntMat,
};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMat> {
    proptest::collection::vec(-6i64..=6, rows * cols).prop_map(move |entries| {
        IntMat::from_rows(
            entries
                .chunks(cols)
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    })
}

/// Random unimodular matrix from a word of elementary row operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMat> {
    proptest::collection::vec((0..n, 0..n, -2i64..=2), 0..8).prop_map(move |ops| {
        let mut m = IntMat::identity(n);
        for (a, b, k) in ops {
            if a == b {
                continue;
            }
            let mut e = IntMat::identity(n);
            e[(a, b)] = Int::from(k);
            m = e.mul(&m);
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_reconstructs_exactly(m in small_matrix(3, 4)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(det(&s.u).abs(), Int::one());
        prop_assert_eq!(det(&s.v).abs(), Int::one());
        let diag = s.diagonal();
        for i in 0..diag.len().saturating_sub(1) {
            if !diag[i].is_zero() {
                prop_assert!((&diag[i + 1] % &diag[i]).is_zero());
            } else {
                prop_assert!(diag[i + 1].is_zero());
            }
            prop_assert!(!diag[i].is_negative());
        }
    }

    #[test]
    fn det_is_product_of_invariant_factors(m in small_matrix(3, 3)) {
        let s = smith_normal_form(&m);
        let mut prod = Int::one();
        for d in s.diagonal() {
            prod *= d;
        }
        prop_assert_eq!(det(&m).abs(), prod.clone());
        if !prod.is_zero() {
            let reps = lattice_coset_reps(&m).unwrap();
            prop_assert_eq!(Int::from(reps.len() as u64), prod);
            // representatives are canonical and distinct
            let mut sorted = reps.clone();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), reps.len());
        } else {
            prop_assert!(lattice_coset_reps(&m).is_err());
        }
    }

    #[test]
    fn cokernel_invariant_under_unimodular_transforms(
        m in small_matrix(3, 3),
        u in unimodular(3),
        v in unimodular(3),
    ) {
        let a = cokernel_structure(&m);
        let b = cokernel_structure(&u.mul(&m).mul(&v));
        prop_assert_eq!(a, b);
    }
}
