//! Randomized invariants of the exact linear algebra against a dense oracle.

mod common;

use proptest::prelude::*;
use ydcoh::linalg::{inverse, quotient_dim, rank, solve, FieldSpec, SparseMatrix, SparseVec, Subspace};

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        Just(FieldSpec::Prime { p: 2 }),
        Just(FieldSpec::Prime { p: 3 }),
        Just(FieldSpec::Prime { p: 2147483647 }),
    ]
}

fn dense(field: FieldSpec, rows: &[Vec<i64>]) -> Vec<Vec<ydcoh::linalg::Scalar>> {
    rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
}

fn column_vectors(field: FieldSpec, rows: &[Vec<i64>]) -> Vec<SparseVec> {
    let m = SparseMatrix::from_dense(field, rows);
    m.columns()
}

proptest! {
    #[test]
    fn rank_nullity_and_dense_agreement(rows in small_matrix(), field in fields()) {
        let m = SparseMatrix::from_dense(field, &rows);
        let r = rank(&m).unwrap();
        let ker = Subspace::kernel_of(&m).unwrap();
        prop_assert_eq!(r + ker.dim(), m.cols());
        prop_assert_eq!(r, common::rank(dense(field, &rows)));
        for v in ker.basis() {
            prop_assert!(m.mul_vec(v).is_empty());
        }
        prop_assert_eq!(Subspace::image_of(&m).unwrap().dim(), r);
    }

    #[test]
    fn reduction_mod_p_never_raises_rank(rows in small_matrix(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let rq = rank(&SparseMatrix::from_dense(FieldSpec::Rational, &rows)).unwrap();
        let rp = rank(&SparseMatrix::from_dense(FieldSpec::Prime { p }, &rows)).unwrap();
        prop_assert!(rp <= rq);
    }

    #[test]
    fn intersection_dimension_formula(a in small_matrix(), b in small_matrix(), field in fields()) {
        // column spaces in a common ambient space of dimension = row count
        let n = a.len().min(b.len());
        let a: Vec<Vec<i64>> = a[..n].to_vec();
        let b: Vec<Vec<i64>> = b[..n].to_vec();
        let u = Subspace::span(n, field, &column_vectors(field, &a)).unwrap();
        let w = Subspace::span(n, field, &column_vectors(field, &b)).unwrap();
        let both: Vec<SparseVec> = u.basis().iter().chain(w.basis()).cloned().collect();
        let sum = Subspace::span(n, field, &both).unwrap();
        let cap = u.intersect(&w).unwrap();
        prop_assert_eq!(cap.dim() + sum.dim(), u.dim() + w.dim());
        prop_assert!(u.contains_subspace(&cap) && w.contains_subspace(&cap));
        prop_assert_eq!(quotient_dim(&u, &cap).unwrap(), u.dim() - cap.dim());
    }

    #[test]
    fn solve_and_inverse_are_exact(rows in small_matrix(), field in fields(), x in prop::collection::vec(-3i64..=3, 5)) {
        let m = SparseMatrix::from_dense(field, &rows);
        let c = m.cols();
        let x: SparseVec = x[..c]
            .iter()
            .enumerate()
            .map(|(i, v)| (i, field.from_i64(*v)))
            .filter(|(_, s)| !s.is_zero())
            .collect();
        let rhs = m.mul_vec(&x);
        let sol = solve(&m, &rhs).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&sol), rhs);
        if m.rows() == c {
            match inverse(&m).unwrap() {
                Some(inv) => prop_assert_eq!(m.mul(&inv).unwrap(), SparseMatrix::identity(c, field)),
                None => prop_assert!(rank(&m).unwrap() < c),
            }
        }
    }
}
