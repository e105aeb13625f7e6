use crate::algcoalg::{compare_maps, LinearMap};
use crate::entwine::EntwiningStructure;
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, Matrix, Scalar, Vector};
use crate::report::{Check, Report};

use super::total::TotalComplex;

/// First-order parts of `μ_t = μ + tμ¹`, `Δ_t = Δ + tΔ¹`, `ψ_t = ψ + tψ¹`.
///
/// A total 2-cochain `(z₂₀, z₁₁, z₀₂)` corresponds to `μ¹ = z₂₀`,
/// `ψ¹ = −z₁₁`, `Δ¹ = −z₀₂`; with these signs the cocycle condition is
/// exactly the set of first-order axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinitesimalDeformation {
    pub mu1: LinearMap,
    pub delta1: LinearMap,
    pub psi1: LinearMap,
}

fn block_map(tc: &TotalComplex, z: &[Scalar], k: usize, m: usize, n: usize, domain: Vec<usize>, codomain: Vec<usize>, negate: bool) -> Result<LinearMap> {
    let b = tc.block(k, m, n).ok_or_else(|| Error::IndexOutOfRange(format!("no block ({m},{n}) in degree {k}")))?;
    let field = z.first().map(Scalar::field).unwrap_or_else(|| tc.complex().field());
    let rows: usize = codomain.iter().product();
    let cols: usize = domain.iter().product();
    let mut mat = Matrix::unflatten(field, rows, cols, tc.slice(&b, z));
    if negate {
        mat = mat.scale(&Scalar::sign(field, 1));
    }
    LinearMap::new(domain, codomain, mat)
}

impl InfinitesimalDeformation {
    /// Splits a total 2-cochain. No cocycle condition is assumed.
    pub fn from_cochain(e: &EntwiningStructure, tc: &TotalComplex, z: &[Scalar]) -> Result<Self> {
        if tc.max_degree() < 2 || z.len() != tc.space_dim(2) {
            return Err(Error::Shape(format!("expected a total 2-cochain of length {}", tc.space_dim(2))));
        }
        let (a, c) = (e.dim_a(), e.dim_c());
        Ok(InfinitesimalDeformation {
            mu1: block_map(tc, z, 2, 2, 0, vec![a, a], vec![a], false)?,
            psi1: block_map(tc, z, 2, 1, 1, vec![c, a], vec![a, c], true)?,
            delta1: block_map(tc, z, 2, 0, 2, vec![c], vec![c, c], true)?,
        })
    }

    /// The total 2-cochain this deformation comes from.
    pub fn to_cochain(&self) -> Vector {
        let neg = Scalar::sign(self.mu1.field(), 1);
        [self.mu1.matrix().flatten(), self.psi1.matrix().scale(&neg).flatten(), self.delta1.matrix().scale(&neg).flatten()]
            .concat()
    }

    /// First-order correction of the unit, `u¹ = −μ¹(1⊗1)`.
    pub fn unit_correction(&self, e: &EntwiningStructure) -> LinearMap {
        let eta = e.algebra().unit_map();
        self.mu1.then_after(&eta.tensor(eta).unwrap()).scale(&Scalar::sign(e.field(), 1))
    }

    /// First-order correction of the counit, `ε¹ = −(ε⊗ε)Δ¹`.
    pub fn counit_correction(&self, e: &EntwiningStructure) -> LinearMap {
        let eps = e.coalgebra().counit_map();
        eps.tensor(eps).unwrap().then_after(&self.delta1).scale(&Scalar::sign(e.field(), 1))
    }
}

fn same(name: &str, lhs: &LinearMap, rhs: &LinearMap, labels: &[&[String]]) -> Check {
    match rhs.reshape(lhs.domain(), lhs.codomain()) {
        Ok(rhs) => compare_maps(name, lhs, &rhs, labels),
        Err(err) => Check::fail(name, err.to_string()),
    }
}

fn sum(maps: &[LinearMap]) -> LinearMap {
    let mut it = maps.iter();
    let first = it.next().expect("nonempty").clone();
    it.fold(first, |acc, m| acc.add(&m.reshape(acc.domain(), acc.codomain()).unwrap()).unwrap())
}

/// The `t¹` coefficients of the algebra, coalgebra and bow-tie axioms for
/// `(μ + tμ¹, Δ + tΔ¹, ψ + tψ¹)` with unit `1 + tu¹` and counit `ε + tε¹`.
pub fn first_order_checks(e: &EntwiningStructure, def: &InfinitesimalDeformation) -> Report {
    let (a, c) = (e.dim_a(), e.dim_c());
    let (la, lc) = (e.algebra().labels(), e.coalgebra().labels());
    let mu = e.algebra().mult();
    let eta = e.algebra().unit_map();
    let delta = e.coalgebra().comult();
    let eps = e.coalgebra().counit_map();
    let psi = e.psi();
    let (mu1, delta1, psi1) = (&def.mu1, &def.delta1, &def.psi1);
    let u1 = def.unit_correction(e);
    let eps1 = def.counit_correction(e);
    let mut r = Report::new();

    let lhs = sum(&[mu1.then_after(&mu.pad(&[], &[a])), mu.then_after(&mu1.pad(&[], &[a]))]);
    let rhs = sum(&[mu1.then_after(&mu.pad(&[a], &[])), mu.then_after(&mu1.pad(&[a], &[]))]);
    r.push(same("associativity", &lhs, &rhs, &[la, la, la]));

    let zero = LinearMap::zero(e.field(), &[a], &[a]);
    let left = sum(&[mu1.then_after(&eta.pad(&[], &[a])), mu.then_after(&u1.pad(&[], &[a]))]);
    let right = sum(&[mu1.then_after(&eta.pad(&[a], &[])), mu.then_after(&u1.pad(&[a], &[]))]);
    let unit = same("unit law", &left, &zero, &[la]);
    r.push(if unit.passed { same("unit law", &right, &zero, &[la]) } else { unit });

    let lhs = sum(&[delta1.pad(&[], &[c]).then_after(delta), delta.pad(&[], &[c]).then_after(delta1)]);
    let rhs = sum(&[delta1.pad(&[c], &[]).then_after(delta), delta.pad(&[c], &[]).then_after(delta1)]);
    r.push(same("coassociativity", &lhs, &rhs, &[lc]));

    let zero = LinearMap::zero(e.field(), &[c], &[c]);
    let left = sum(&[eps1.pad(&[], &[c]).then_after(delta), eps.pad(&[], &[c]).then_after(delta1)]);
    let right = sum(&[eps1.pad(&[c], &[]).then_after(delta), eps.pad(&[c], &[]).then_after(delta1)]);
    let counit = same("counit law", &left, &zero, &[lc]);
    r.push(if counit.passed { same("counit law", &right, &zero, &[lc]) } else { counit });

    // ψ(C⊗μ) = (μ⊗C)(A⊗ψ)(ψ⊗A)
    let lhs = sum(&[psi1.then_after(&mu.pad(&[c], &[])), psi.then_after(&mu1.pad(&[c], &[]))]);
    let rhs = sum(&[
        mu1.pad(&[], &[c]).then_after(&psi.pad(&[a], &[])).then_after(&psi.pad(&[], &[a])),
        mu.pad(&[], &[c]).then_after(&psi1.pad(&[a], &[])).then_after(&psi.pad(&[], &[a])),
        mu.pad(&[], &[c]).then_after(&psi.pad(&[a], &[])).then_after(&psi1.pad(&[], &[a])),
    ]);
    r.push(same("left pentagon", &lhs, &rhs, &[lc, la, la]));

    // ψ(C⊗1) = 1⊗C
    let lhs = sum(&[psi1.then_after(&eta.pad(&[c], &[])), psi.then_after(&u1.pad(&[c], &[]))]);
    let rhs = u1.pad(&[], &[c]);
    r.push(same("left triangle", &lhs, &rhs, &[lc]));

    // (A⊗Δ)ψ = (ψ⊗C)(C⊗ψ)(Δ⊗A)
    let lhs = sum(&[delta1.pad(&[a], &[]).then_after(psi), delta.pad(&[a], &[]).then_after(psi1)]);
    let rhs = sum(&[
        psi1.pad(&[], &[c]).then_after(&psi.pad(&[c], &[])).then_after(&delta.pad(&[], &[a])),
        psi.pad(&[], &[c]).then_after(&psi1.pad(&[c], &[])).then_after(&delta.pad(&[], &[a])),
        psi.pad(&[], &[c]).then_after(&psi.pad(&[c], &[])).then_after(&delta1.pad(&[], &[a])),
    ]);
    r.push(same("right pentagon", &lhs, &rhs, &[lc, la]));

    // (A⊗ε)ψ = ε⊗A
    let lhs = sum(&[eps1.pad(&[a], &[]).then_after(psi), eps.pad(&[a], &[]).then_after(psi1)]);
    let rhs = eps1.pad(&[], &[a]);
    r.push(same("right triangle", &lhs, &rhs, &[lc, la]));
    r
}

/// Reads the deformation off a total 2-cochain and checks every first-order
/// axiom. A failure means `z` is not a cocycle.
pub fn deformation_from_cocycle(e: &EntwiningStructure, tc: &TotalComplex, z: &[Scalar]) -> Result<InfinitesimalDeformation> {
    let (def, report) = deformation_report(e, tc, z)?;
    if !report.passed() {
        return Err(Error::CocycleCondition(report.failure_summary()));
    }
    Ok(def)
}

/// Like [`deformation_from_cocycle`] but returns the individual checks, and
/// cross-checks them against the total differential.
pub fn deformation_report(e: &EntwiningStructure, tc: &TotalComplex, z: &[Scalar]) -> Result<(InfinitesimalDeformation, Report)> {
    let def = InfinitesimalDeformation::from_cochain(e, tc, z)?;
    let report = first_order_checks(e, &def);
    let cocycle = is_zero_vector(&tc.differential(2)?.mul_vec(z));
    if cocycle != report.passed() {
        return Err(Error::InternalConsistency(format!(
            "first-order axioms ({}) disagree with the cocycle condition ({})",
            if report.passed() { "hold" } else { "fail" },
            if cocycle { "holds" } else { "fails" }
        )));
    }
    Ok((def, report))
}

/// First-order parts `α¹: A → A`, `γ¹: C → C` of an equivalence
/// `α_t = id + tα¹`, `γ_t = id + tγ¹` onto the undeformed structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub alpha1: LinearMap,
    pub gamma1: LinearMap,
}

impl Equivalence {
    pub fn from_cochain(e: &EntwiningStructure, tc: &TotalComplex, w: &[Scalar]) -> Result<Self> {
        if w.len() != tc.space_dim(1) {
            return Err(Error::Shape(format!("expected a total 1-cochain of length {}", tc.space_dim(1))));
        }
        let (a, c) = (e.dim_a(), e.dim_c());
        Ok(Equivalence {
            alpha1: block_map(tc, w, 1, 1, 0, vec![a], vec![a], false)?,
            gamma1: block_map(tc, w, 1, 0, 1, vec![c], vec![c], false)?,
        })
    }
}

/// First-order coefficients of `α_t∘μ_t = μ∘(α_t⊗α_t)`, `α_t(1_t) = 1`,
/// `(γ_t⊗γ_t)∘Δ_t = Δ∘γ_t`, `ε∘γ_t = ε_t` and `ψ∘(γ_t⊗α_t) = (α_t⊗γ_t)∘ψ_t`.
pub fn equivalence_checks(e: &EntwiningStructure, def: &InfinitesimalDeformation, eq: &Equivalence) -> Report {
    let (a, c) = (e.dim_a(), e.dim_c());
    let (la, lc) = (e.algebra().labels(), e.coalgebra().labels());
    let mu = e.algebra().mult();
    let eta = e.algebra().unit_map();
    let delta = e.coalgebra().comult();
    let eps = e.coalgebra().counit_map();
    let psi = e.psi();
    let (alpha, gamma) = (&eq.alpha1, &eq.gamma1);
    let mut r = Report::new();

    let lhs = sum(&[alpha.then_after(mu), def.mu1.clone()]);
    let rhs = sum(&[mu.then_after(&alpha.pad(&[], &[a])), mu.then_after(&alpha.pad(&[a], &[]))]);
    r.push(same("algebra map", &lhs, &rhs, &[la, la]));

    let lhs = alpha.then_after(eta);
    let rhs = def.unit_correction(e).scale(&Scalar::sign(e.field(), 1));
    r.push(same("unit preserved", &lhs, &rhs, &[]));

    let lhs = sum(&[gamma.pad(&[], &[c]).then_after(delta), gamma.pad(&[c], &[]).then_after(delta), def.delta1.clone()]);
    let rhs = delta.then_after(gamma);
    r.push(same("coalgebra map", &lhs, &rhs, &[lc]));

    let lhs = eps.then_after(gamma);
    let rhs = def.counit_correction(e);
    r.push(same("counit preserved", &lhs, &rhs, &[lc]));

    let lhs = sum(&[psi.then_after(&gamma.pad(&[], &[a])), psi.then_after(&alpha.pad(&[c], &[]))]);
    let rhs = sum(&[alpha.pad(&[], &[c]).then_after(psi), gamma.pad(&[a], &[]).then_after(psi), def.psi1.clone()]);
    r.push(same("intertwines ψ", &lhs, &rhs, &[lc, la]));
    r
}

/// Given `z = D(w)`, reads `(α¹, γ¹)` off `w` and verifies that they carry the
/// deformation of `z` onto the undeformed structure.
pub fn coboundary_equivalence(e: &EntwiningStructure, tc: &TotalComplex, z: &[Scalar], w: &[Scalar]) -> Result<Equivalence> {
    if w.len() != tc.space_dim(1) || tc.differential(1)?.mul_vec(w) != z {
        return Err(Error::Precondition("z is not D of the given witness".into()));
    }
    let def = InfinitesimalDeformation::from_cochain(e, tc, z)?;
    let eq = Equivalence::from_cochain(e, tc, w)?;
    let report = equivalence_checks(e, &def, &eq);
    if !report.passed() {
        return Err(Error::InternalConsistency(format!("equivalence to the trivial deformation: {}", report.failure_summary())));
    }
    Ok(eq)
}

/// Solves `D(w) = z`; `None` when `z` is not a coboundary.
pub fn solve_witness(tc: &TotalComplex, z: &[Scalar]) -> Result<Option<Vector>> {
    Ok(tc.differential(1)?.solve(z)?)
}
