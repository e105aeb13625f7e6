use crate::error::{Error, Result};
use crate::exactla::{unflatten_index, FieldSpec, Matrix, Scalar, Vector};

/// A linear map between tensor products of finite-dimensional spaces.
///
/// The shapes list the factor dimensions of domain and codomain; the empty
/// shape is the ground field. The matrix acts on column vectors, so it has
/// `product(codomain)` rows and `product(domain)` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: Vec<usize>,
    codomain: Vec<usize>,
    matrix: Matrix,
}

fn product(shape: &[usize]) -> usize {
    shape.iter().product()
}

impl LinearMap {
    pub fn new(domain: Vec<usize>, codomain: Vec<usize>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != product(&codomain) || matrix.cols() != product(&domain) {
            return Err(Error::Shape(format!(
                "{}x{} matrix cannot carry a map {:?} -> {:?}",
                matrix.rows(),
                matrix.cols(),
                domain,
                codomain
            )));
        }
        Ok(LinearMap { domain, codomain, matrix })
    }

    pub fn identity(field: FieldSpec, shape: &[usize]) -> Self {
        LinearMap {
            domain: shape.to_vec(),
            codomain: shape.to_vec(),
            matrix: Matrix::identity(field, product(shape)),
        }
    }

    pub fn zero(field: FieldSpec, domain: &[usize], codomain: &[usize]) -> Self {
        LinearMap {
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            matrix: Matrix::zeros(field, product(codomain), product(domain)),
        }
    }

    /// The flip `X ⊗ Y → Y ⊗ X`.
    pub fn flip(field: FieldSpec, x: &[usize], y: &[usize]) -> Self {
        let (dx, dy) = (product(x), product(y));
        let one = Scalar::one(field);
        let m = Matrix::from_triplets(
            field,
            dx * dy,
            dx * dy,
            (0..dx).flat_map(|i| {
                let one = one.clone();
                (0..dy).map(move |j| (j * dx + i, i * dy + j, one.clone()))
            }),
        );
        let domain = [x, y].concat();
        let codomain = [y, x].concat();
        LinearMap { domain, codomain, matrix: m }
    }

    /// A vector `v ∈ V` as the map `k → V`.
    pub fn from_vector(field: FieldSpec, shape: &[usize], v: &[Scalar]) -> Self {
        let m = Matrix::from_columns(field, product(shape), &[v.to_vec()]);
        LinearMap { domain: Vec::new(), codomain: shape.to_vec(), matrix: m }
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn codomain(&self) -> &[usize] {
        &self.codomain
    }

    pub fn dim_in(&self) -> usize {
        self.matrix.cols()
    }

    pub fn dim_out(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// Reinterprets the same matrix with different (equal-size) shapes.
    pub fn reshape(&self, domain: &[usize], codomain: &[usize]) -> Result<Self> {
        LinearMap::new(domain.to_vec(), codomain.to_vec(), self.matrix.clone())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<Self> {
        if self.dim_in() != inner.dim_out() {
            return Err(Error::Shape(format!(
                "cannot compose {:?}->{:?} after {:?}->{:?}",
                self.domain, self.codomain, inner.domain, inner.codomain
            )));
        }
        Ok(LinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.try_mul(&inner.matrix)?,
        })
    }

    /// `self ∘ inner`, panicking on mismatch. For internal pipelines whose
    /// shapes are fixed by construction.
    pub fn then_after(&self, inner: &LinearMap) -> Self {
        self.compose(inner).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn tensor(&self, other: &LinearMap) -> Result<Self> {
        Ok(LinearMap {
            domain: [self.domain.as_slice(), &other.domain].concat(),
            codomain: [self.codomain.as_slice(), &other.codomain].concat(),
            matrix: self.matrix.try_kron(&other.matrix)?,
        })
    }

    /// `id_left ⊗ self ⊗ id_right`.
    pub fn pad(&self, left: &[usize], right: &[usize]) -> Self {
        LinearMap {
            domain: [left, &self.domain, right].concat(),
            codomain: [left, &self.codomain, right].concat(),
            matrix: self.matrix.pad(product(left), product(right)),
        }
    }

    pub fn add(&self, other: &LinearMap) -> Result<Self> {
        self.same_dims(other)?;
        Ok(LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.try_add(&other.matrix)?,
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<Self> {
        self.same_dims(other)?;
        if self.field() != other.field() {
            return Err(crate::exactla::LinalgError::FieldMismatch(self.field(), other.field()).into());
        }
        Ok(LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.sub(&other.matrix),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.scale(s),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    fn same_dims(&self, other: &LinearMap) -> Result<()> {
        if self.dim_in() != other.dim_in() || self.dim_out() != other.dim_out() {
            return Err(Error::Shape(format!(
                "{:?}->{:?} vs {:?}->{:?}",
                self.domain, self.codomain, other.domain, other.codomain
            )));
        }
        Ok(())
    }

    /// The first domain basis element on which `self` and `other` disagree,
    /// as a multi-index over the domain shape.
    pub fn first_disagreement(&self, other: &LinearMap) -> Result<Option<Vec<usize>>> {
        self.same_dims(other)?;
        Ok(self
            .matrix
            .first_difference(&other.matrix)
            .map(|(_, c)| unflatten_index(c, &self.domain)))
    }
}

pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    f.compose(g)
}

pub fn tensor(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    f.tensor(g)
}

pub fn identity(field: FieldSpec, shape: &[usize]) -> LinearMap {
    LinearMap::identity(field, shape)
}

/// Composes right to left: `chain(&[f, g, h]) = f ∘ g ∘ h`.
pub fn chain(maps: &[&LinearMap]) -> LinearMap {
    let (last, rest) = maps.split_last().expect("at least one map");
    rest.iter().rev().fold((*last).clone(), |acc, f| f.then_after(&acc))
}

/// Tensor product of several maps, left to right.
pub fn tensor_all(maps: &[&LinearMap]) -> LinearMap {
    let (first, rest) = maps.split_first().expect("at least one map");
    rest.iter()
        .fold((*first).clone(), |acc, f| acc.tensor(f).unwrap_or_else(|e| panic!("{e}")))
}
