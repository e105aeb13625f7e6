use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar, Vector};
use crate::report::{Check, Report};

use super::LinearMap;

/// `(i, j, k, c)`: for an algebra `e_i e_j` has coefficient `c` on `e_k`; for
/// a coalgebra `Δ(e_i)` has coefficient `c` on `e_j ⊗ e_k`.
pub type Triple = (usize, usize, usize, Scalar);

fn check_field_of(field: FieldSpec, values: &[Scalar]) -> Result<()> {
    if let Some(v) = values.iter().find(|v| v.field() != field) {
        return Err(crate::exactla::LinalgError::FieldMismatch(field, v.field()).into());
    }
    Ok(())
}

pub fn default_labels(prefix: &str, dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("{prefix}{i}")).collect()
}

/// Labels of a tensor basis, `x⊗y⊗..`, leftmost factor most significant.
pub fn tensor_labels(factors: &[&[String]]) -> Vec<String> {
    factors.iter().fold(vec![String::new()], |acc, f| {
        acc.iter()
            .flat_map(|p| {
                f.iter().map(move |l| if p.is_empty() { l.clone() } else { format!("{p}⊗{l}") })
            })
            .collect()
    })
}

/// A finite-dimensional associative unital algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    labels: Vec<String>,
    mult: LinearMap,
    unit: LinearMap,
}

impl FiniteAlgebra {
    /// Builds the algebra without checking the axioms; see [`validate_algebra`].
    pub fn new(labels: Vec<String>, mult: Matrix, unit: Vector) -> Result<Self> {
        let dim = labels.len();
        let field = mult.field();
        check_field_of(field, &unit)?;
        if unit.len() != dim {
            return Err(Error::Shape(format!("unit of length {} in dimension {dim}", unit.len())));
        }
        let mult = LinearMap::new(vec![dim, dim], vec![dim], mult)?;
        let unit = LinearMap::from_vector(field, &[dim], &unit);
        Ok(FiniteAlgebra { labels, mult, unit })
    }

    pub fn from_structure_constants(
        field: FieldSpec,
        labels: Vec<String>,
        triples: &[Triple],
        unit: Vector,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut entries = Vec::with_capacity(triples.len());
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::IndexOutOfRange(format!("product triple ({i},{j},{k}) in dimension {dim}")));
            }
            check_field_of(field, std::slice::from_ref(c))?;
            entries.push((*k, i * dim + j, c.clone()));
        }
        Self::new(labels, Matrix::from_triplets(field, dim, dim * dim, entries), unit)
    }

    /// Builds and validates.
    pub fn validated(field: FieldSpec, labels: Vec<String>, triples: &[Triple], unit: Vector) -> Result<Self> {
        let a = Self::from_structure_constants(field, labels, triples, unit)?;
        let report = validate_algebra(&a);
        if !report.passed() {
            return Err(Error::Validation { what: "algebra".into(), failed: report.failure_summary() });
        }
        Ok(a)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: FieldSpec) -> Self {
        let one = Scalar::one(field);
        Self::from_structure_constants(field, vec!["1".into()], &[(0, 0, 0, one.clone())], vec![one])
            .expect("well-formed")
    }

    pub fn field(&self) -> FieldSpec {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `μ: A ⊗ A → A`.
    pub fn mult(&self) -> &LinearMap {
        &self.mult
    }

    /// `η: k → A`.
    pub fn unit_map(&self) -> &LinearMap {
        &self.unit
    }

    pub fn unit(&self) -> Vector {
        self.unit.matrix().column(0)
    }

    /// Coordinates of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> Vector {
        self.mult.matrix().column(i * self.dim() + j)
    }

    pub fn triples(&self) -> Vec<Triple> {
        let d = self.dim();
        let mut out: Vec<Triple> = self
            .mult
            .matrix()
            .entries()
            .map(|(k, col, c)| (col / d, col % d, k, c.clone()))
            .collect();
        out.sort_by_key(|t| (t.0, t.1, t.2));
        out
    }

    /// `A` as a bimodule over itself.
    pub fn regular_bimodule(&self) -> Bimodule {
        Bimodule::new(self.labels.clone(), self.mult.matrix().clone(), self.mult.matrix().clone())
            .expect("shapes agree")
    }
}

/// A finite-dimensional coassociative counital coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCoalgebra {
    labels: Vec<String>,
    comult: LinearMap,
    counit: LinearMap,
}

impl FiniteCoalgebra {
    /// Builds the coalgebra without checking the axioms; see [`validate_coalgebra`].
    pub fn new(labels: Vec<String>, comult: Matrix, counit: Vector) -> Result<Self> {
        let dim = labels.len();
        let field = comult.field();
        check_field_of(field, &counit)?;
        if counit.len() != dim {
            return Err(Error::Shape(format!("counit of length {} in dimension {dim}", counit.len())));
        }
        let comult = LinearMap::new(vec![dim], vec![dim, dim], comult)?;
        let counit = LinearMap::new(
            vec![dim],
            Vec::new(),
            Matrix::from_dense(field, 1, dim, counit).map_err(Error::from)?,
        )?;
        Ok(FiniteCoalgebra { labels, comult, counit })
    }

    pub fn from_structure_constants(
        field: FieldSpec,
        labels: Vec<String>,
        triples: &[Triple],
        counit: Vector,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut entries = Vec::with_capacity(triples.len());
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::IndexOutOfRange(format!("coproduct triple ({i},{j},{k}) in dimension {dim}")));
            }
            check_field_of(field, std::slice::from_ref(c))?;
            entries.push((j * dim + k, *i, c.clone()));
        }
        Self::new(labels, Matrix::from_triplets(field, dim * dim, dim, entries), counit)
    }

    pub fn validated(field: FieldSpec, labels: Vec<String>, triples: &[Triple], counit: Vector) -> Result<Self> {
        let c = Self::from_structure_constants(field, labels, triples, counit)?;
        let report = validate_coalgebra(&c);
        if !report.passed() {
            return Err(Error::Validation { what: "coalgebra".into(), failed: report.failure_summary() });
        }
        Ok(c)
    }

    pub fn ground(field: FieldSpec) -> Self {
        let one = Scalar::one(field);
        Self::from_structure_constants(field, vec!["1".into()], &[(0, 0, 0, one.clone())], vec![one])
            .expect("well-formed")
    }

    pub fn field(&self) -> FieldSpec {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `Δ: C → C ⊗ C`.
    pub fn comult(&self) -> &LinearMap {
        &self.comult
    }

    /// `ε: C → k`.
    pub fn counit_map(&self) -> &LinearMap {
        &self.counit
    }

    pub fn counit(&self) -> Vector {
        (0..self.dim()).map(|i| self.counit.matrix().get(0, i)).collect()
    }

    /// Coordinates of `Δ(e_i)` on `C ⊗ C`.
    pub fn coproduct(&self, i: usize) -> Vector {
        self.comult.matrix().column(i)
    }

    pub fn triples(&self) -> Vec<Triple> {
        let d = self.dim();
        let mut out: Vec<Triple> = self
            .comult
            .matrix()
            .entries()
            .map(|(row, i, c)| (i, row / d, row % d, c.clone()))
            .collect();
        out.sort_by_key(|t| (t.0, t.1, t.2));
        out
    }

    /// `C` as a bicomodule over itself.
    pub fn regular_bicomodule(&self) -> Bicomodule {
        Bicomodule::new(self.labels.clone(), self.comult.matrix().clone(), self.comult.matrix().clone())
            .expect("shapes agree")
    }
}

/// An `A`-bimodule `M`, given by its left action `A ⊗ M → M` and right
/// action `M ⊗ A → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    labels: Vec<String>,
    algebra_dim: usize,
    left: LinearMap,
    right: LinearMap,
}

impl Bimodule {
    pub fn new(labels: Vec<String>, left: Matrix, right: Matrix) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 || left.cols() % dim != 0 {
            return Err(Error::Shape(format!("left action with {} columns on dimension {dim}", left.cols())));
        }
        let a = left.cols() / dim;
        let left = LinearMap::new(vec![a, dim], vec![dim], left)?;
        let right = LinearMap::new(vec![dim, a], vec![dim], right)?;
        Ok(Bimodule { labels, algebra_dim: a, left, right })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> FieldSpec {
        self.left.field()
    }

    pub fn left(&self) -> &LinearMap {
        &self.left
    }

    pub fn right(&self) -> &LinearMap {
        &self.right
    }
}

/// A `C`-bicomodule `V`, given by its left coaction `V → C ⊗ V` and right
/// coaction `V → V ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    labels: Vec<String>,
    coalgebra_dim: usize,
    left: LinearMap,
    right: LinearMap,
}

impl Bicomodule {
    pub fn new(labels: Vec<String>, left: Matrix, right: Matrix) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 || left.rows() % dim != 0 {
            return Err(Error::Shape(format!("left coaction with {} rows on dimension {dim}", left.rows())));
        }
        let c = left.rows() / dim;
        let left = LinearMap::new(vec![dim], vec![c, dim], left)?;
        let right = LinearMap::new(vec![dim], vec![dim, c], right)?;
        Ok(Bicomodule { labels, coalgebra_dim: c, left, right })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coalgebra_dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> FieldSpec {
        self.left.field()
    }

    pub fn left(&self) -> &LinearMap {
        &self.left
    }

    pub fn right(&self) -> &LinearMap {
        &self.right
    }
}

/// Compares two maps with the same domain; on failure the witness names the
/// first domain basis element where they differ.
pub fn compare_maps(name: &str, lhs: &LinearMap, rhs: &LinearMap, factor_labels: &[&[String]]) -> Check {
    match lhs.first_disagreement(rhs) {
        Ok(None) => Check::pass(name),
        Ok(Some(index)) => Check::fail(name, format_witness(&index, factor_labels)),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

pub fn format_witness(index: &[usize], factor_labels: &[&[String]]) -> String {
    let parts: Vec<String> = index
        .iter()
        .enumerate()
        .map(|(k, &i)| match factor_labels.get(k).and_then(|l| l.get(i)) {
            Some(s) => s.clone(),
            None => i.to_string(),
        })
        .collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(", "))
    }
}

pub fn validate_algebra(a: &FiniteAlgebra) -> Report {
    let d = a.dim();
    let f = a.field();
    let mu = a.mult();
    let id = LinearMap::identity(f, &[d]);
    let l = a.labels();
    let mut r = Report::new();
    r.push(compare_maps(
        "associativity",
        &mu.then_after(&mu.tensor(&id).unwrap()),
        &mu.then_after(&id.tensor(mu).unwrap()),
        &[l, l, l],
    ));
    let left_unit = mu.then_after(&a.unit_map().tensor(&id).unwrap()).reshape(&[d], &[d]).unwrap();
    r.push(compare_maps("left unit", &left_unit, &id, &[l]));
    let right_unit = mu.then_after(&id.tensor(a.unit_map()).unwrap()).reshape(&[d], &[d]).unwrap();
    r.push(compare_maps("right unit", &right_unit, &id, &[l]));
    r
}

pub fn validate_coalgebra(c: &FiniteCoalgebra) -> Report {
    let d = c.dim();
    let f = c.field();
    let delta = c.comult();
    let id = LinearMap::identity(f, &[d]);
    let l = c.labels();
    let mut r = Report::new();
    r.push(compare_maps(
        "coassociativity",
        &delta.tensor(&id).unwrap().then_after(delta),
        &id.tensor(delta).unwrap().then_after(delta),
        &[l],
    ));
    let left = c.counit_map().tensor(&id).unwrap().then_after(delta).reshape(&[d], &[d]).unwrap();
    r.push(compare_maps("left counit", &left, &id, &[l]));
    let right = id.tensor(c.counit_map()).unwrap().then_after(delta).reshape(&[d], &[d]).unwrap();
    r.push(compare_maps("right counit", &right, &id, &[l]));
    r
}

pub fn validate_bimodule(a: &FiniteAlgebra, m: &Bimodule) -> Report {
    let mut r = Report::new();
    if m.algebra_dim() != a.dim() || m.field() != a.field() {
        r.push(Check::fail("shape", format!("bimodule over a {}-dimensional algebra", m.algebra_dim())));
        return r;
    }
    let (da, dm) = (a.dim(), m.dim());
    let f = a.field();
    let ia = LinearMap::identity(f, &[da]);
    let im = LinearMap::identity(f, &[dm]);
    let (la, lm) = (a.labels(), m.labels());
    let (left, right, mu) = (m.left(), m.right(), a.mult());
    r.push(compare_maps(
        "left associativity",
        &left.then_after(&mu.tensor(&im).unwrap()),
        &left.then_after(&ia.tensor(left).unwrap()),
        &[la, la, lm],
    ));
    let lu = left.then_after(&a.unit_map().tensor(&im).unwrap()).reshape(&[dm], &[dm]).unwrap();
    r.push(compare_maps("left unit", &lu, &im, &[lm]));
    r.push(compare_maps(
        "right associativity",
        &right.then_after(&im.tensor(mu).unwrap()),
        &right.then_after(&right.tensor(&ia).unwrap()),
        &[lm, la, la],
    ));
    let ru = right.then_after(&im.tensor(a.unit_map()).unwrap()).reshape(&[dm], &[dm]).unwrap();
    r.push(compare_maps("right unit", &ru, &im, &[lm]));
    r.push(compare_maps(
        "actions commute",
        &right.then_after(&left.tensor(&ia).unwrap()),
        &left.then_after(&ia.tensor(right).unwrap()),
        &[la, lm, la],
    ));
    r
}

pub fn validate_bicomodule(c: &FiniteCoalgebra, v: &Bicomodule) -> Report {
    let mut r = Report::new();
    if v.coalgebra_dim() != c.dim() || v.field() != c.field() {
        r.push(Check::fail("shape", format!("bicomodule over a {}-dimensional coalgebra", v.coalgebra_dim())));
        return r;
    }
    let (dc, dv) = (c.dim(), v.dim());
    let f = c.field();
    let ic = LinearMap::identity(f, &[dc]);
    let iv = LinearMap::identity(f, &[dv]);
    let lv = v.labels();
    let (left, right, delta) = (v.left(), v.right(), c.comult());
    r.push(compare_maps(
        "left coassociativity",
        &delta.tensor(&iv).unwrap().then_after(left),
        &ic.tensor(left).unwrap().then_after(left),
        &[lv],
    ));
    let lu = c.counit_map().tensor(&iv).unwrap().then_after(left).reshape(&[dv], &[dv]).unwrap();
    r.push(compare_maps("left counit", &lu, &iv, &[lv]));
    r.push(compare_maps(
        "right coassociativity",
        &iv.tensor(delta).unwrap().then_after(right),
        &right.tensor(&ic).unwrap().then_after(right),
        &[lv],
    ));
    let ru = iv.tensor(c.counit_map()).unwrap().then_after(right).reshape(&[dv], &[dv]).unwrap();
    r.push(compare_maps("right counit", &ru, &iv, &[lv]));
    r.push(compare_maps(
        "coactions commute",
        &left.tensor(&ic).unwrap().then_after(right),
        &ic.tensor(right).unwrap().then_after(left),
        &[lv],
    ));
    r
}
