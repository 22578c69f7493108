//! Composer and baseline routines checked against brute-force dense oracles.

use num_complex::Complex64;
use pauli_composer::baselines::{kron_mixed, kron_naive, kron_tree};
use pauli_composer::{
    compose, compose_diagonal, compose_weighted, DenseMatrix, PauliAxis, PauliString,
};
use proptest::prelude::*;

fn all_strings(n: usize) -> impl Iterator<Item = PauliString> {
    (0..1usize << (2 * n)).map(move |i| PauliString::from_index(i, n).unwrap())
}

fn arb_string(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PauliString> {
    prop::collection::vec(0u8..4, n)
        .prop_map(|codes| {
            PauliString::new(codes.into_iter().map(|c| PauliAxis::from_code(c).unwrap()).collect())
                .unwrap()
        })
}

#[test]
fn compose_matches_naive_exhaustively() {
    for n in 1..=5 {
        for x in all_strings(n) {
            let dense = compose(&x).unwrap().to_dense().unwrap();
            assert_eq!(dense, kron_naive(&x).unwrap(), "{x}");
            let unit = [
                Complex64::new(1.0, 0.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, -1.0),
            ];
            let p = compose(&x).unwrap();
            assert!(p.iter().all(|(_, _, m)| unit.contains(&m)));
        }
    }
}

#[test]
fn baselines_agree_exhaustively() {
    for n in 1..=4 {
        for x in all_strings(n) {
            let naive = kron_naive(&x).unwrap();
            assert_eq!(kron_mixed(&x).unwrap(), naive, "mixed {x}");
            assert_eq!(kron_tree(&x).unwrap(), naive, "tree {x}");
            assert_eq!(compose(&x).unwrap().to_dense().unwrap(), naive, "pc {x}");
        }
    }
}

#[test]
fn diagonal_composer_agrees_with_general() {
    for n in 1..=10 {
        for bits in 0..1usize << n {
            let axes = (0..n)
                .map(|p| if bits >> p & 1 == 1 { PauliAxis::Z } else { PauliAxis::I })
                .collect();
            let x = PauliString::new(axes).unwrap();
            assert_eq!(compose_diagonal(&x, 1.0).unwrap(), compose(&x).unwrap(), "{x}");
        }
    }
}

#[test]
fn involution() {
    for n in 1..=4 {
        for x in all_strings(n) {
            let d = compose(&x).unwrap().to_dense().unwrap();
            assert_eq!(d.matmul(&d).unwrap(), DenseMatrix::identity(d.dim()).unwrap(), "{x}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn columns_form_a_permutation(x in arb_string(1..=20)) {
        let p = compose(&x).unwrap();
        let dim = 1usize << x.num_qubits();
        prop_assert_eq!(p.nnz(), dim);
        let mut seen = vec![false; dim];
        for k in p.column_indices() {
            prop_assert!(!seen[k]);
            seen[k] = true;
        }
        let m0 = p.entry(0).norm();
        prop_assert!(p.iter().all(|(_, _, m)| m.norm() == m0));
    }

    #[test]
    fn realness_follows_y_parity(x in arb_string(1..=12)) {
        let p = compose(&x).unwrap();
        let even = x.n_y() % 2 == 0;
        let consistent = p.iter().all(|(_, _, m)| if even { m.im == 0.0 } else { m.re == 0.0 });
        prop_assert!(consistent);
    }

    #[test]
    fn involution_up_to_six(x in arb_string(5..=6)) {
        let d = compose(&x).unwrap().to_dense().unwrap();
        prop_assert_eq!(d.matmul(&d).unwrap(), DenseMatrix::identity(d.dim()).unwrap());
    }

    #[test]
    fn weighted_linearity(
        x in arb_string(1..=10),
        re in -10.0f64..10.0,
        im in -10.0f64..10.0,
    ) {
        let w = Complex64::new(re, im);
        prop_assume!(w.norm() > 0.0);
        let unit = compose(&x).unwrap();
        let weighted = compose_weighted(&x, w).unwrap();
        prop_assert_eq!(unit.column_indices(), weighted.column_indices());
        for j in 0..unit.dim() {
            prop_assert!((weighted.entry(j) - w * unit.entry(j)).norm() <= 1e-12);
        }
    }

    #[test]
    fn baselines_agree_random(x in arb_string(5..=8)) {
        let naive = kron_naive(&x).unwrap();
        prop_assert_eq!(&kron_mixed(&x).unwrap(), &naive);
        prop_assert_eq!(&kron_tree(&x).unwrap(), &naive);
        prop_assert_eq!(&compose(&x).unwrap().to_dense().unwrap(), &naive);
    }
}
