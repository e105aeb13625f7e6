//! Entwining structures `(A, C, ψ)`: bow-tie verification, the iterated maps
//! `ψⁿ: C⊗Aⁿ → Aⁿ⊗C` and `ψₙ: Cⁿ⊗A → A⊗Cⁿ`, the induced bimodule and
//! bicomodule structures, and the twisted convolution product.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algcoalg::{
    compare_maps, tensor_labels, validate_algebra, validate_bicomodule, validate_bimodule, validate_coalgebra,
    Bicomodule, Bimodule, FiniteAlgebra, FiniteCoalgebra, LinearMap,
};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::report::{Check, Report};

/// Data attached to a Galois object (the Hopf case): the translation map
/// `τ: C → A ⊗ A` and the coaction `ρ^A: A → A ⊗ C`. For a Hopf algebra
/// entwined with itself the antipode is kept so the structure can be saved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisData {
    pub translation: LinearMap,
    pub coaction: LinearMap,
    pub antipode: Option<LinearMap>,
}

#[derive(Default)]
struct Cache {
    up: Mutex<BTreeMap<usize, Arc<LinearMap>>>,
    down: Mutex<BTreeMap<usize, Arc<LinearMap>>>,
}

impl Clone for Cache {
    fn clone(&self) -> Self {
        Cache::default()
    }
}

pub struct EntwiningStructure {
    algebra: FiniteAlgebra,
    coalgebra: FiniteCoalgebra,
    psi: LinearMap,
    galois: Option<GaloisData>,
    cache: Cache,
}

impl Clone for EntwiningStructure {
    fn clone(&self) -> Self {
        EntwiningStructure {
            algebra: self.algebra.clone(),
            coalgebra: self.coalgebra.clone(),
            psi: self.psi.clone(),
            galois: self.galois.clone(),
            cache: Cache::default(),
        }
    }
}

impl fmt::Debug for EntwiningStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EntwiningStructure")
            .field("field", &self.field())
            .field("dim_a", &self.dim_a())
            .field("dim_c", &self.dim_c())
            .field("psi", &self.psi)
            .finish()
    }
}

impl PartialEq for EntwiningStructure {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coalgebra == other.coalgebra && self.psi == other.psi
    }
}

impl EntwiningStructure {
    /// Validates the algebra, the coalgebra and the bow-tie relations.
    pub fn new(algebra: FiniteAlgebra, coalgebra: FiniteCoalgebra, psi: LinearMap) -> Result<Self> {
        let mut report = validate_algebra(&algebra);
        report.extend(validate_coalgebra(&coalgebra));
        report.extend(check_bowtie(&algebra, &coalgebra, &psi)?);
        if !report.passed() {
            return Err(Error::Validation { what: "entwining structure".into(), failed: report.failure_summary() });
        }
        Ok(Self::new_unchecked(algebra, coalgebra, psi))
    }

    /// Skips validation. Shapes must still be right.
    pub fn new_unchecked(algebra: FiniteAlgebra, coalgebra: FiniteCoalgebra, psi: LinearMap) -> Self {
        let (a, c) = (algebra.dim(), coalgebra.dim());
        let psi = psi.reshape(&[c, a], &[a, c]).expect("psi has shape C⊗A → A⊗C");
        EntwiningStructure { algebra, coalgebra, psi, galois: None, cache: Cache::default() }
    }

    pub fn with_galois(mut self, galois: GaloisData) -> Self {
        self.galois = Some(galois);
        self
    }

    pub fn galois(&self) -> Option<&GaloisData> {
        self.galois.as_ref()
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &FiniteCoalgebra {
        &self.coalgebra
    }

    pub fn psi(&self) -> &LinearMap {
        &self.psi
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim_a(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_c(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn id_a(&self, n: usize) -> LinearMap {
        LinearMap::identity(self.field(), &vec![self.dim_a(); n])
    }

    pub fn id_c(&self, n: usize) -> LinearMap {
        LinearMap::identity(self.field(), &vec![self.dim_c(); n])
    }

    /// `ψⁿ`, with `ψ⁰ = id_C`.
    pub(crate) fn up(&self, n: usize) -> Arc<LinearMap> {
        if let Some(m) = self.cache.up.lock().unwrap().get(&n) {
            return m.clone();
        }
        let (a, c) = (self.dim_a(), self.dim_c());
        let m = if n == 0 {
            self.id_c(1)
        } else {
            let prev = self.up(n - 1);
            self.psi
                .pad(&vec![a; n - 1], &[])
                .then_after(&prev.pad(&[], &[a]))
                .reshape(&[&[c][..], &vec![a; n]].concat(), &[vec![a; n], vec![c]].concat())
                .unwrap()
        };
        let m = Arc::new(m);
        self.cache.up.lock().unwrap().entry(n).or_insert(m).clone()
    }

    /// `ψₙ`, with `ψ₀ = id_A`.
    pub(crate) fn down(&self, n: usize) -> Arc<LinearMap> {
        if let Some(m) = self.cache.down.lock().unwrap().get(&n) {
            return m.clone();
        }
        let (a, c) = (self.dim_a(), self.dim_c());
        let m = if n == 0 {
            self.id_a(1)
        } else {
            let prev = self.down(n - 1);
            self.psi
                .pad(&[], &vec![c; n - 1])
                .then_after(&prev.pad(&[c], &[]))
                .reshape(&[vec![c; n], vec![a]].concat(), &[&[a][..], &vec![c; n]].concat())
                .unwrap()
        };
        let m = Arc::new(m);
        self.cache.down.lock().unwrap().entry(n).or_insert(m).clone()
    }

    /// Right action `(μ⊗Cⁿ)∘(A⊗ψₙ): A⊗Cⁿ⊗A → A⊗Cⁿ`.
    pub(crate) fn right_action_a_cn(&self, n: usize) -> LinearMap {
        let c = self.dim_c();
        self.algebra.mult().pad(&[], &vec![c; n]).then_after(&self.down(n).pad(&[self.dim_a()], &[]))
    }

    /// Right coaction `(C⊗ψⁿ)∘(Δ⊗Aⁿ): C⊗Aⁿ → C⊗Aⁿ⊗C`.
    pub(crate) fn right_coaction_c_an(&self, n: usize) -> LinearMap {
        let a = self.dim_a();
        self.up(n).pad(&[self.dim_c()], &[]).then_after(&self.coalgebra.comult().pad(&[], &vec![a; n]))
    }
}

/// The four relations equivalent to the bow-tie diagram.
pub fn check_bowtie(a: &FiniteAlgebra, c: &FiniteCoalgebra, psi: &LinearMap) -> Result<Report> {
    let (da, dc) = (a.dim(), c.dim());
    if psi.dim_in() != da * dc || psi.dim_out() != da * dc || a.field() != c.field() || psi.field() != a.field() {
        return Err(Error::Shape(format!(
            "psi must map C⊗A → A⊗C ({dc}·{da}), got {}x{}",
            psi.dim_out(),
            psi.dim_in()
        )));
    }
    let psi = psi.reshape(&[dc, da], &[da, dc])?;
    let mu = a.mult();
    let delta = c.comult();
    let (la, lc) = (a.labels(), c.labels());
    let mut r = Report::new();

    let lhs = psi.then_after(&mu.pad(&[dc], &[]));
    let rhs = mu.pad(&[], &[dc]).then_after(&psi.pad(&[da], &[])).then_after(&psi.pad(&[], &[da]));
    r.push(compare_maps("left pentagon", &lhs, &rhs, &[lc, la, la]));

    let lhs = psi.then_after(&a.unit_map().pad(&[dc], &[])).reshape(&[dc], &[da, dc])?;
    let rhs = a.unit_map().pad(&[], &[dc]).reshape(&[dc], &[da, dc])?;
    r.push(compare_maps("left triangle", &lhs, &rhs, &[lc]));

    let lhs = delta.pad(&[da], &[]).then_after(&psi);
    let rhs = psi.pad(&[], &[dc]).then_after(&psi.pad(&[dc], &[])).then_after(&delta.pad(&[], &[da]));
    r.push(compare_maps("right pentagon", &lhs, &rhs, &[lc, la]));

    let lhs = c.counit_map().pad(&[da], &[]).then_after(&psi).reshape(&[dc, da], &[da])?;
    let rhs = c.counit_map().pad(&[], &[da]).reshape(&[dc, da], &[da])?;
    r.push(compare_maps("right triangle", &lhs, &rhs, &[lc, la]));
    Ok(r)
}

/// `ψⁿ: C⊗Aⁿ → Aⁿ⊗C` for `n ≥ 1`.
pub fn psi_up(e: &EntwiningStructure, n: usize) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::Precondition("psi_up needs n ≥ 1".into()));
    }
    Ok((*e.up(n)).clone())
}

/// `ψₙ: Cⁿ⊗A → A⊗Cⁿ` for `n ≥ 1`.
pub fn psi_down(e: &EntwiningStructure, n: usize) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::Precondition("psi_down needs n ≥ 1".into()));
    }
    Ok((*e.down(n)).clone())
}

/// `A⊗Cⁿ` with left action `μ⊗Cⁿ` and right action `(μ⊗Cⁿ)∘(A⊗ψₙ)`.
/// `n = 0` gives the regular bimodule.
pub fn bimodule_on_a_cn(e: &EntwiningStructure, n: usize) -> Result<Bimodule> {
    let c = e.dim_c();
    let mut factors: Vec<&[String]> = vec![e.algebra().labels()];
    factors.extend(std::iter::repeat(e.coalgebra().labels()).take(n));
    let left = e.algebra().mult().pad(&[], &vec![c; n]);
    let right = e.right_action_a_cn(n);
    let m = Bimodule::new(tensor_labels(&factors), left.into_matrix(), right.into_matrix())?;
    let report = validate_bimodule(e.algebra(), &m);
    if !report.passed() {
        return Err(Error::Validation { what: format!("bimodule A⊗C^{n}"), failed: report.failure_summary() });
    }
    Ok(m)
}

/// `C⊗Aⁿ` with left coaction `Δ⊗Aⁿ` and right coaction `(C⊗ψⁿ)∘(Δ⊗Aⁿ)`.
/// `n = 0` gives the regular bicomodule.
pub fn bicomodule_on_c_an(e: &EntwiningStructure, n: usize) -> Result<Bicomodule> {
    let a = e.dim_a();
    let mut factors: Vec<&[String]> = vec![e.coalgebra().labels()];
    factors.extend(std::iter::repeat(e.algebra().labels()).take(n));
    let left = e.coalgebra().comult().pad(&[], &vec![a; n]);
    let right = e.right_coaction_c_an(n);
    let v = Bicomodule::new(tensor_labels(&factors), left.into_matrix(), right.into_matrix())?;
    let report = validate_bicomodule(e.coalgebra(), &v);
    if !report.passed() {
        return Err(Error::Validation { what: format!("bicomodule C⊗A^{n}"), failed: report.failure_summary() });
    }
    Ok(v)
}

/// The two commuting squares: multiplying inside `C⊗A^{n+1}` commutes with
/// the right coaction, and comultiplying inside `A⊗Cⁿ` commutes with the
/// right action.
pub fn check_commuting_squares(e: &EntwiningStructure, n: usize, j: usize) -> Result<Report> {
    if n == 0 || j >= n {
        return Err(Error::IndexOutOfRange(format!("need n ≥ 1 and 0 ≤ j < n, got n={n}, j={j}")));
    }
    let (a, c) = (e.dim_a(), e.dim_c());
    let (la, lc) = (e.algebra().labels(), e.coalgebra().labels());
    let mut r = Report::new();

    let mult_in = e.algebra().mult().pad(&[&[c][..], &vec![a; j]].concat(), &vec![a; n - j - 1]);
    let lhs = e.right_coaction_c_an(n).then_after(&mult_in);
    let rhs = mult_in.pad(&[], &[c]).then_after(&e.right_coaction_c_an(n + 1));
    let labels: Vec<&[String]> = std::iter::once(lc).chain(std::iter::repeat(la).take(n + 1)).collect();
    r.push(compare_maps("multiplication square", &lhs, &rhs, &labels));

    let comult_in = e.coalgebra().comult().pad(&[&[a][..], &vec![c; j]].concat(), &vec![c; n - j - 1]);
    let lhs = e.right_action_a_cn(n + 1).then_after(&comult_in.pad(&[], &[a]));
    let rhs = comult_in.then_after(&e.right_action_a_cn(n));
    let mut labels: Vec<&[String]> = vec![la];
    labels.extend(std::iter::repeat(lc).take(n));
    labels.push(la);
    r.push(compare_maps("comultiplication square", &lhs, &rhs, &labels));
    Ok(r)
}

/// `(f *_ψ g)(c) = f(c₂)_α g(c₁^α)`, i.e. `μ∘(A⊗g)∘ψ∘(C⊗f)∘Δ`.
pub fn convolution_psi(e: &EntwiningStructure, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    let (a, c) = (e.dim_a(), e.dim_c());
    for h in [f, g] {
        if h.dim_in() != c || h.dim_out() != a {
            return Err(Error::Shape(format!("expected a map C → A, got {}x{}", h.dim_out(), h.dim_in())));
        }
    }
    let f = f.reshape(&[c], &[a])?;
    let g = g.reshape(&[c], &[a])?;
    Ok(e.algebra()
        .mult()
        .then_after(&g.pad(&[a], &[]))
        .then_after(e.psi())
        .then_after(&f.pad(&[c], &[]))
        .then_after(e.coalgebra().comult()))
}

/// The unit `1∘ε` of the convolution algebra.
pub fn convolution_unit(e: &EntwiningStructure) -> LinearMap {
    let (a, c) = (e.dim_a(), e.dim_c());
    e.algebra()
        .unit_map()
        .then_after(e.coalgebra().counit_map())
        .reshape(&[c], &[a])
        .unwrap()
}

/// Both bow-tie and validator reports for a structure, plus the derived
/// bimodule/bicomodule validations up to `n_max`.
pub fn full_report(e: &EntwiningStructure, n_max: usize) -> Report {
    let mut r = validate_algebra(e.algebra());
    r.extend(validate_coalgebra(e.coalgebra()));
    match check_bowtie(e.algebra(), e.coalgebra(), e.psi()) {
        Ok(b) => r.extend(b),
        Err(err) => r.push(Check::fail("bow-tie shape", err.to_string())),
    }
    if !r.passed() {
        return r;
    }
    for n in 1..=n_max {
        r.push(match bimodule_on_a_cn(e, n) {
            Ok(_) => Check::pass(format!("bimodule A⊗C^{n}")),
            Err(err) => Check::fail(format!("bimodule A⊗C^{n}"), err.to_string()),
        });
        r.push(match bicomodule_on_c_an(e, n) {
            Ok(_) => Check::pass(format!("bicomodule C⊗A^{n}")),
            Err(err) => Check::fail(format!("bicomodule C⊗A^{n}"), err.to_string()),
        });
    }
    r
}
