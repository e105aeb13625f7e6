use std::collections::BTreeMap;
use std::fmt;

use super::{FieldSpec, LinalgError, Scalar};

/// A column vector.
pub type Vector = Vec<Scalar>;

/// Exact matrix over one field.
///
/// Storage is row-wise sparse: each row keeps its nonzero entries sorted by
/// column. Differentials of the cochain complexes have a handful of nonzeros
/// per column, and at the larger degrees a dense layout would need gigabytes.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        if self.rows * self.cols <= 256 {
            for r in 0..self.rows {
                let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        Ok(())
    }
}

fn push_entry(row: &mut Vec<(usize, Scalar)>, c: usize, v: Scalar) {
    if !v.is_zero() {
        row.push((c, v));
    }
}

/// `a + factor * b` for sorted sparse rows.
fn axpy_rows(a: &[(usize, Scalar)], factor: &Scalar, b: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                push_entry(&mut out, *ca, va + &(factor * vb));
                i += 1;
                j += 1;
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (_, Some((cb, vb))) => {
                push_entry(&mut out, *cb, factor * vb);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let one = Scalar::one(field);
        Matrix {
            field,
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, one.clone())]).collect(),
        }
    }

    /// Builds a matrix from row-major dense entries, checking that every entry
    /// belongs to `field`.
    pub fn from_dense(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let mut data = vec![Vec::new(); rows];
        for (idx, v) in entries.into_iter().enumerate() {
            if v.field() != field {
                return Err(LinalgError::FieldMismatch(field, v.field()));
            }
            push_entry(&mut data[idx / cols.max(1)], idx % cols.max(1), v);
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Small integer matrices, mostly for tests and fixtures.
    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&v| Scalar::from_i64(field, v))
            })
            .collect();
        Self::from_dense(field, r, c, entries).expect("consistent by construction")
    }

    /// Sums duplicate `(row, col)` entries. Entries must belong to `field`.
    pub fn from_triplets(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r},{c}) outside {rows}x{cols}");
            if v.is_zero() {
                continue;
            }
            let slot = acc[r].entry(c).or_insert_with(|| Scalar::zero(field));
            *slot = &*slot + &v;
        }
        let data = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Matrix { field, rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Self {
        let trip = columns.iter().enumerate().flat_map(|(c, col)| {
            assert_eq!(col.len(), rows);
            col.iter().enumerate().map(move |(r, v)| (r, c, v.clone()))
        });
        Self::from_triplets(field, rows, columns.len(), trip)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.data[r].binary_search_by_key(&c, |(col, _)| *col) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => Scalar::zero(self.field),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); self.rows * self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out[r * self.cols + c] = v.clone();
            }
        }
        out
    }

    /// Row-major flattening, the coordinate vector of a cochain.
    pub fn flatten(&self) -> Vector {
        self.to_dense()
    }

    pub fn unflatten(field: FieldSpec, rows: usize, cols: usize, v: &[Scalar]) -> Self {
        Self::from_dense(field, rows, cols, v.to_vec()).expect("vector length and field checked by caller")
    }

    /// Iterates over `(row, col, value)` of the nonzero entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = Scalar::zero(self.field);
        let mut acc = vec![zero.clone(); other.cols];
        let mut touched = vec![false; other.cols];
        let mut cols_hit = Vec::new();
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (c, b) in &other.data[*k] {
                        if !touched[*c] {
                            touched[*c] = true;
                            cols_hit.push(*c);
                        }
                        acc[*c] = &acc[*c] + &(a * b);
                    }
                }
                cols_hit.sort_unstable();
                let mut out = Vec::with_capacity(cols_hit.len());
                for &c in &cols_hit {
                    let v = std::mem::replace(&mut acc[c], zero.clone());
                    touched[c] = false;
                    push_entry(&mut out, c, v);
                }
                cols_hit.clear();
                out
            })
            .collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: other.cols, data })
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Scalar::zero(self.field), |acc, (c, a)| &acc + &(a * &v[*c]))
            })
            .collect()
    }

    fn zip_rows(&self, other: &Matrix, factor: &Scalar) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| axpy_rows(a, factor, b))
            .collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_rows(other, &Scalar::one(self.field))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_rows(other, &Scalar::from_i64(self.field, -1))
            .unwrap_or_else(|e| panic!("{e}"))
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: &Scalar, other: &Matrix) -> Matrix {
        self.zip_rows(other, factor).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.field, self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product, leftmost factor most significant:
    /// entry `((i*rb + k), (j*cb + l)) = a[i][j] * b[k][l]`.
    pub fn try_kron(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        let (rb, cb) = (other.rows, other.cols);
        let mut data = Vec::with_capacity(self.rows * rb);
        for arow in &self.data {
            for brow in &other.data {
                let mut out = Vec::with_capacity(arow.len() * brow.len());
                for (j, a) in arow {
                    for (l, b) in brow {
                        push_entry(&mut out, j * cb + l, a * b);
                    }
                }
                data.push(out);
            }
        }
        Ok(Matrix { field: self.field, rows: self.rows * rb, cols: self.cols * cb, data })
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        self.try_kron(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `I_left ⊗ self ⊗ I_right` without materializing the identities.
    pub fn pad(&self, left: usize, right: usize) -> Matrix {
        let (r, c) = (self.rows, self.cols);
        let mut data = Vec::with_capacity(left * r * right);
        for u in 0..left {
            for row in &self.data {
                for v in 0..right {
                    data.push(
                        row.iter()
                            .map(|(j, a)| ((u * c + j) * right + v, a.clone()))
                            .collect(),
                    );
                }
            }
        }
        Matrix { field: self.field, rows: left * r * right, cols: left * c * right, data }
    }

    /// Stacks matrices with equal column counts.
    pub fn vstack(field: FieldSpec, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols);
            assert_eq!(b.field, field);
            data.extend(b.data.iter().cloned());
        }
        Matrix { field, rows: data.len(), cols, data }
    }

    /// First column (and a row in it) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        let diff = self.sub(other);
        diff.entries().map(|(r, c, _)| (c, r)).min().map(|(c, r)| (r, c))
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field, self.cols);
        for row in &self.data {
            e.insert(row.clone());
        }
        e.rank()
    }

    /// Basis of the null space from the reduced row echelon form: one vector
    /// per free column, with a 1 in that column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let mut e = Echelon::new(self.field, self.cols);
        for row in &self.data {
            e.insert(row.clone());
        }
        e.reduce_fully();
        e.null_space()
    }

    /// Basis of the column space: the original columns at the pivot positions.
    pub fn image_basis(&self) -> Vec<Vector> {
        let t = self.transpose();
        let mut e = Echelon::new(self.field, self.rows);
        let mut basis = Vec::new();
        for (c, row) in t.data.iter().enumerate() {
            if e.insert(row.clone()) {
                basis.push(self.column(c));
            }
        }
        basis
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "right-hand side has length {} but matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        if let Some(v) = b.iter().find(|v| v.field() != self.field) {
            return Err(LinalgError::FieldMismatch(self.field, v.field()));
        }
        let n = self.cols;
        let mut e = Echelon::new(self.field, n + 1);
        for (row, rhs) in self.data.iter().zip(b) {
            let mut r = row.clone();
            push_entry(&mut r, n, rhs.clone());
            e.insert(r);
        }
        if e.pivot_of(n).is_some() {
            return Ok(None);
        }
        e.reduce_fully();
        let mut x = vec![Scalar::zero(self.field); n];
        for row in e.rows() {
            let pivot = row[0].0;
            if let Some((c, v)) = row.last() {
                if *c == n {
                    x[pivot] = v.clone();
                }
            }
        }
        Ok(Some(x))
    }
}

/// Incrementally built row echelon form over sparse rows.
///
/// Rows are stored normalized (leading entry 1). `insert` performs forward
/// elimination only; call [`Echelon::reduce_fully`] for the reduced form.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    width: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: FieldSpec, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new(), pivot_row: vec![None; width] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<(usize, Scalar)>] {
        &self.rows
    }

    pub fn pivot_of(&self, col: usize) -> Option<usize> {
        self.pivot_row[col]
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Eliminates every pivot column from `row`, left to right.
    pub fn reduce(&self, row: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
        let mut work: BTreeMap<usize, Scalar> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let mut cursor = 0;
        loop {
            let next = work
                .range(cursor..)
                .map(|(c, _)| *c)
                .find(|c| self.pivot_row[*c].is_some());
            let Some(col) = next else { break };
            let factor = work.remove(&col).expect("present");
            let prow = &self.rows[self.pivot_row[col].expect("pivot")];
            for (c, v) in &prow[1..] {
                let slot = work.entry(*c).or_insert_with(|| Scalar::zero(self.field));
                *slot = &*slot - &(&factor * v);
                if slot.is_zero() {
                    work.remove(c);
                }
            }
            cursor = col + 1;
        }
        work.into_iter().collect()
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: Vec<(usize, Scalar)>) -> bool {
        let reduced = self.reduce(row);
        let Some((lead, lv)) = reduced.first() else { return false };
        let lead = *lead;
        let inv = lv.inv().expect("nonzero leading entry");
        let normalized: Vec<_> = reduced.iter().map(|(c, v)| (*c, v * &inv)).collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(normalized);
        true
    }

    /// Back-substitutes so each pivot column has a single nonzero.
    pub fn reduce_fully(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i][0].0));
        for i in order {
            let row = std::mem::take(&mut self.rows[i]);
            let lead = row[0].clone();
            let mut out = vec![lead.clone()];
            let mut tail: BTreeMap<usize, Scalar> = row[1..].iter().cloned().collect();
            let pivot_cols: Vec<usize> =
                tail.keys().copied().filter(|c| self.pivot_row[*c].is_some()).collect();
            for col in pivot_cols {
                let Some(factor) = tail.remove(&col) else { continue };
                let prow = &self.rows[self.pivot_row[col].expect("pivot")];
                for (c, v) in &prow[1..] {
                    let slot = tail.entry(*c).or_insert_with(|| Scalar::zero(self.field));
                    *slot = &*slot - &(&factor * v);
                    if slot.is_zero() {
                        tail.remove(c);
                    }
                }
            }
            out.extend(tail);
            self.rows[i] = out;
        }
    }

    /// Null space of the (fully reduced) row system.
    pub fn null_space(&self) -> Vec<Vector> {
        let mut by_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.width];
        for row in &self.rows {
            let pivot = row[0].0;
            for (c, v) in &row[1..] {
                by_col[*c].push((pivot, v.clone()));
            }
        }
        (0..self.width)
            .filter(|c| self.pivot_row[*c].is_none())
            .map(|free| {
                let mut v = vec![Scalar::zero(self.field); self.width];
                v[free] = Scalar::one(self.field);
                for (pivot, a) in &by_col[free] {
                    v[*pivot] = -a;
                }
                v
            })
            .collect()
    }
}

/// Dense vector to sorted sparse row.
pub fn sparse_row(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
