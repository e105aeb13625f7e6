use super::matrix::{is_zero_vector, sparse_row, Echelon, Vector};
use super::{FieldSpec, LinalgError, Scalar};

/// Coordinates with respect to a fixed list of linearly independent vectors.
///
/// Internally this row-reduces `[V | I]` where the rows of `V` are the basis
/// vectors; reducing `[x | 0]` against that leaves `[0 | -c]` exactly when
/// `x = Σ c_i v_i`.
#[derive(Clone, Debug)]
pub struct Coordinates {
    field: FieldSpec,
    dim: usize,
    count: usize,
    echelon: Echelon,
}

impl Coordinates {
    pub fn new(field: FieldSpec, dim: usize, basis: &[Vector]) -> Result<Self, LinalgError> {
        let count = basis.len();
        let mut echelon = Echelon::new(field, dim + count);
        for (i, v) in basis.iter().enumerate() {
            if v.len() != dim {
                return Err(LinalgError::DimensionMismatch(format!(
                    "basis vector of length {} in a {dim}-dimensional space",
                    v.len()
                )));
            }
            let mut row = sparse_row(v);
            row.push((dim + i, Scalar::one(field)));
            echelon.insert(row);
        }
        if echelon.pivots().iter().any(|&p| p >= dim) {
            return Err(LinalgError::InconsistentQuotient(
                "basis vectors are linearly dependent".into(),
            ));
        }
        echelon.reduce_fully();
        Ok(Coordinates { field, dim, count, echelon })
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Coefficients of `x` on the basis, or `None` when `x` is outside the span.
    pub fn coordinates(&self, x: &[Scalar]) -> Option<Vector> {
        assert_eq!(x.len(), self.dim, "vector length");
        let rem = self.echelon.reduce(sparse_row(x));
        let mut c = vec![Scalar::zero(self.field); self.count];
        for (col, v) in rem {
            if col < self.dim {
                return None;
            }
            c[col - self.dim] = -&v;
        }
        Some(c)
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.coordinates(x).is_some()
    }
}

/// A quotient `span(big) / span(sub)` with chosen class representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub sub_basis: Vec<Vector>,
    pub class_basis: Vec<Vector>,
    coords: Coordinates,
}

impl Quotient {
    /// Coordinates of `x ∈ span(big)` on the class representatives, modulo
    /// `span(sub)`. `None` if `x` is not in `span(big)`.
    pub fn reduce(&self, x: &[Scalar]) -> Option<Vector> {
        let full = self.coords.coordinates(x)?;
        Some(full[self.sub_basis.len()..].to_vec())
    }

    pub fn dim(&self) -> usize {
        self.class_basis.len()
    }

    /// Whether `x` lies in `span(sub)`.
    pub fn is_trivial(&self, x: &[Scalar]) -> Option<bool> {
        self.reduce(x).map(|c| is_zero_vector(&c))
    }
}

/// Completes a basis of `span(sub)` to a basis of `span(big)`.
///
/// Fails with [`LinalgError::InconsistentQuotient`] if some vector of `sub`
/// is not in `span(big)`.
pub fn quotient_with_projection(
    field: FieldSpec,
    dim: usize,
    sub: &[Vector],
    big: &[Vector],
) -> Result<Quotient, LinalgError> {
    for v in sub.iter().chain(big) {
        if v.len() != dim {
            return Err(LinalgError::DimensionMismatch(format!(
                "vector of length {} in a {dim}-dimensional space",
                v.len()
            )));
        }
    }
    let mut big_span = Echelon::new(field, dim);
    for v in big {
        big_span.insert(sparse_row(v));
    }
    let mut span = Echelon::new(field, dim);
    let mut sub_basis = Vec::new();
    for (i, v) in sub.iter().enumerate() {
        if !big_span.reduce(sparse_row(v)).is_empty() {
            return Err(LinalgError::InconsistentQuotient(format!(
                "subspace vector {i} is not contained in the ambient span"
            )));
        }
        if span.insert(sparse_row(v)) {
            sub_basis.push(v.clone());
        }
    }
    let mut class_basis = Vec::new();
    for v in big {
        if span.insert(sparse_row(v)) {
            class_basis.push(v.clone());
        }
    }
    let all: Vec<Vector> = sub_basis.iter().chain(&class_basis).cloned().collect();
    let coords = Coordinates::new(field, dim, &all)?;
    Ok(Quotient { sub_basis, class_basis, coords })
}
