//! Exact linear algebra: field arithmetic, sparse matrices, rank, kernels,
//! quotients and Kronecker products.
//!
//! Tensor spaces are flattened with the leftmost factor most significant: the
//! multi-index `(i1, .., ik)` over factor dimensions `(d1, .., dk)` maps to
//! `((i1*d2 + i2)*d3 + ..)`. [`Matrix::kron`] follows the same convention, so
//! `kron(f, g)` is the matrix of `f ⊗ g`.

mod matrix;
mod quotient;
mod scalar;

pub use matrix::{is_zero_vector, sparse_row, Echelon, Matrix, Vector};
pub use quotient::{quotient_with_projection, Coordinates, Quotient};
pub use scalar::{FieldSpec, Rational, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch: expected {0}, found {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inconsistent quotient: {0}")]
    InconsistentQuotient(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Flattens a multi-index over `dims`, leftmost factor most significant.
pub fn flatten_index(index: &[usize], dims: &[usize]) -> usize {
    debug_assert_eq!(index.len(), dims.len());
    index.iter().zip(dims).fold(0, |acc, (i, d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

/// Inverse of [`flatten_index`].
pub fn unflatten_index(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    out
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    m.kernel_basis()
}

pub fn image_basis(m: &Matrix) -> Vec<Vector> {
    m.image_basis()
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
    m.solve(b)
}

pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    a.try_kron(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(Q, n)
    }

    fn qr(n: i64, d: i64) -> Scalar {
        Scalar::Q(Rational::new(n, d))
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(Q, 2)), 2);
        assert_eq!(rank(&Matrix::zeros(Q, 2, 2)), 0);
        assert_eq!(rank(&Matrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(Q, 3)).is_empty());
        let k = kernel_basis(&Matrix::zeros(Q, 2, 3));
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x, &q((i == j) as i64));
            }
        }
        let k = kernel_basis(&Matrix::from_i64_rows(Q, &[&[1, 1]]));
        assert_eq!(k, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn image_examples() {
        assert_eq!(image_basis(&Matrix::identity(Q, 2)).len(), 2);
        assert!(image_basis(&Matrix::zeros(Q, 3, 2)).is_empty());
        let im = image_basis(&Matrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]));
        assert_eq!(im, vec![vec![q(1), q(2)]]);
    }

    #[test]
    fn quotient_examples() {
        let e1 = vec![q(1), q(0)];
        let e2 = vec![q(0), q(1)];
        let same = quotient_with_projection(Q, 2, &[e1.clone(), e2.clone()], &[e1.clone(), e2.clone()]).unwrap();
        assert_eq!(same.dim(), 0);
        assert_eq!(same.reduce(&[q(4), q(9)]).unwrap(), Vec::<Scalar>::new());

        let full = quotient_with_projection(Q, 1, &[], &[vec![q(1)]]).unwrap();
        assert_eq!(full.reduce(&[q(1)]).unwrap(), vec![q(1)]);

        let qt = quotient_with_projection(Q, 2, &[e1.clone()], &[e1.clone(), e2.clone()]).unwrap();
        assert_eq!(qt.class_basis, vec![e2.clone()]);
        assert_eq!(qt.reduce(&[q(3), q(5)]).unwrap(), vec![q(5)]);

        let err = quotient_with_projection(Q, 2, &[e2], &[e1]);
        assert!(matches!(err, Err(LinalgError::InconsistentQuotient(_))));
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), q(-2)];
        assert_eq!(solve(&Matrix::identity(Q, 2), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve(&Matrix::zeros(Q, 2, 2), &b).unwrap(), None);
        let m = Matrix::from_i64_rows(Q, &[&[2]]);
        assert_eq!(solve(&m, &[q(1)]).unwrap(), Some(vec![qr(1, 2)]));
        assert!(matches!(solve(&m, &b), Err(LinalgError::DimensionMismatch(_))));
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&Matrix::identity(Q, 2), &Matrix::identity(Q, 2)).unwrap(), Matrix::identity(Q, 4));
        let a = Matrix::from_i64_rows(Q, &[&[1, 2, 3], &[4, 5, 6]]);
        let c = Matrix::from_i64_rows(Q, &[&[7]]);
        assert_eq!(kron(&a, &c).unwrap(), a.scale(&q(7)));
        let p = Matrix::identity(FieldSpec::Prime(5), 1);
        assert!(matches!(kron(&a, &p), Err(LinalgError::FieldMismatch(..))));
    }

    #[test]
    fn mixed_field_entries_rejected() {
        let err = Matrix::from_dense(Q, 1, 2, vec![q(1), Scalar::one(FieldSpec::Prime(3))]);
        assert!(matches!(err, Err(LinalgError::FieldMismatch(..))));
        let m = Matrix::identity(Q, 2);
        let bad = vec![q(1), Scalar::one(FieldSpec::Prime(3))];
        assert!(matches!(m.solve(&bad), Err(LinalgError::FieldMismatch(..))));
    }

    #[test]
    fn pad_matches_kron_with_identities() {
        let a = Matrix::from_i64_rows(Q, &[&[1, -2, 0], &[0, 3, 1]]);
        let expect = Matrix::identity(Q, 2).kron(&a).kron(&Matrix::identity(Q, 3));
        assert_eq!(a.pad(2, 3), expect);
    }

    #[test]
    fn index_flattening() {
        let dims = [2, 3, 4];
        assert_eq!(flatten_index(&[1, 2, 3], &dims), 23);
        assert_eq!(unflatten_index(23, &dims), vec![1, 2, 3]);
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
            Matrix::from_dense(Q, rows, cols, v.into_iter().map(q).collect()).unwrap()
        })
    }

    fn any_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| small_matrix(r, c))
    }

    proptest! {
        #[test]
        fn rank_nullity(m in any_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.len(), m.cols());
            for v in &k {
                prop_assert!(is_zero_vector(&m.mul_vec(v)));
            }
            prop_assert_eq!(image_basis(&m).len(), rank(&m));
        }

        #[test]
        fn kron_mixed_product(
            a in small_matrix(2, 2), b in small_matrix(2, 2),
            c in small_matrix(2, 2), d in small_matrix(2, 2),
        ) {
            let lhs = a.kron(&b).mul(&c.kron(&d));
            let rhs = a.mul(&c).kron(&b.mul(&d));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn solve_finds_preimages(m in any_matrix(), seed in proptest::collection::vec(-3i64..=3, 6)) {
            let x: Vec<Scalar> = seed.iter().take(m.cols()).cloned().map(q).collect();
            let b = m.mul_vec(&x);
            let sol = solve(&m, &b).unwrap().expect("consistent");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }

        #[test]
        fn prime_field_rank_nullity(v in proptest::collection::vec(0i64..7, 12)) {
            let f = FieldSpec::Prime(7);
            let m = Matrix::from_dense(f, 3, 4, v.into_iter().map(|x| Scalar::from_i64(f, x)).collect()).unwrap();
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.len(), 4);
            for v in &k {
                prop_assert!(is_zero_vector(&m.mul_vec(v)));
            }
        }
    }
}
