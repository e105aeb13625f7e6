use crate::algcoalg::{
    hom_operator, validate_bicomodule, validate_bimodule, Bicomodule, Bimodule, FiniteAlgebra, FiniteCoalgebra,
    LinearMap,
};
use crate::entwine::EntwiningStructure;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::zoo::trivial_entwining;

use super::CochainComplex;

pub(crate) fn pow(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

/// Operator `f ↦ q ∘ f` on `Hom(X, ·)` with `dim X = dom`.
pub(crate) fn postcompose(q: &Matrix, dom: usize) -> Matrix {
    q.kron(&Matrix::identity(q.field(), dom))
}

/// Operator `f ↦ f ∘ p` on `Hom(·, Y)` with `dim Y = cod`.
pub(crate) fn precompose(p: &Matrix, cod: usize) -> Matrix {
    Matrix::identity(p.field(), cod).kron(&p.transpose())
}

pub(crate) fn require_bimodule(e: &EntwiningStructure, m: &Bimodule) -> Result<()> {
    if m.algebra_dim() != e.dim_a() || m.field() != e.field() {
        return Err(Error::Shape(format!(
            "bimodule over a {}-dimensional algebra, expected {}",
            m.algebra_dim(),
            e.dim_a()
        )));
    }
    let r = validate_bimodule(e.algebra(), m);
    if !r.passed() {
        return Err(Error::Validation { what: "bimodule".into(), failed: r.failure_summary() });
    }
    Ok(())
}

fn require_bicomodule(e: &EntwiningStructure, v: &Bicomodule) -> Result<()> {
    if v.coalgebra_dim() != e.dim_c() || v.field() != e.field() {
        return Err(Error::Shape(format!(
            "bicomodule over a {}-dimensional coalgebra, expected {}",
            v.coalgebra_dim(),
            e.dim_c()
        )));
    }
    let r = validate_bicomodule(e.coalgebra(), v);
    if !r.passed() {
        return Err(Error::Validation { what: "bicomodule".into(), failed: r.failure_summary() });
    }
    Ok(())
}

/// `dⁿ: Hom(C⊗Aⁿ, M) → Hom(C⊗Aⁿ⁺¹, M)`,
/// `dⁿf = λ_M(A⊗f)(ψ⊗Aⁿ) + Σₖ (-1)ᵏ f(C⊗Aᵏ⁻¹⊗μ⊗Aⁿ⁻ᵏ) + (-1)ⁿ⁺¹ ρ_M(f⊗A)`.
pub fn cpsi_differential(e: &EntwiningStructure, m: &Bimodule, n: usize) -> Matrix {
    let field = e.field();
    let (a, c, dm) = (e.dim_a(), e.dim_c(), m.dim());
    let f_dom = c * pow(a, n);
    let psi = e.psi().matrix().pad(1, pow(a, n));
    let mut d = hom_operator(m.left().matrix(), &psi, a, 1, f_dom, dm);
    let mu = e.algebra().mult().matrix();
    for k in 1..=n {
        let insert = mu.pad(c * pow(a, k - 1), pow(a, n - k));
        d = d.add_scaled(&Scalar::sign(field, k), &precompose(&insert, dm));
    }
    let last = hom_operator(m.right().matrix(), &Matrix::identity(field, f_dom * a), 1, a, f_dom, dm);
    d.add_scaled(&Scalar::sign(field, n + 1), &last)
}

/// `C_ψ(A, M)` in degrees `0..=n_max`.
pub fn build_cpsi_am(e: &EntwiningStructure, m: &Bimodule, n_max: usize) -> Result<CochainComplex> {
    require_bimodule(e, m)?;
    let (a, c, dm) = (e.dim_a(), e.dim_c(), m.dim());
    let dims = (0..=n_max).map(|n| dm * c * pow(a, n)).collect();
    let ds = (0..n_max).map(|n| cpsi_differential(e, m, n)).collect();
    CochainComplex::new(e.field(), dims, ds)
}

/// `d̄ⁿ: Hom(V, A⊗Cⁿ) → Hom(V, A⊗Cⁿ⁺¹)`,
/// `d̄ⁿf = (ψ⊗Cⁿ)(C⊗f)λ_V + Σₖ (-1)ᵏ (A⊗Cᵏ⁻¹⊗Δ⊗Cⁿ⁻ᵏ)f + (-1)ⁿ⁺¹ (f⊗C)ρ_V`.
pub fn apsi_differential(e: &EntwiningStructure, v: &Bicomodule, n: usize) -> Matrix {
    let field = e.field();
    let (a, c, dv) = (e.dim_a(), e.dim_c(), v.dim());
    let f_cod = a * pow(c, n);
    let psi = e.psi().matrix().pad(1, pow(c, n));
    let mut d = hom_operator(&psi, v.left().matrix(), c, 1, dv, f_cod);
    let delta = e.coalgebra().comult().matrix();
    for k in 1..=n {
        let insert = delta.pad(a * pow(c, k - 1), pow(c, n - k));
        d = d.add_scaled(&Scalar::sign(field, k), &postcompose(&insert, dv));
    }
    let last = hom_operator(&Matrix::identity(field, f_cod * c), v.right().matrix(), 1, c, dv, f_cod);
    d.add_scaled(&Scalar::sign(field, n + 1), &last)
}

/// `A_ψ(C, V)` in degrees `0..=n_max`.
pub fn build_apsi_cv(e: &EntwiningStructure, v: &Bicomodule, n_max: usize) -> Result<CochainComplex> {
    require_bicomodule(e, v)?;
    let (a, c, dv) = (e.dim_a(), e.dim_c(), v.dim());
    let dims = (0..=n_max).map(|n| a * pow(c, n) * dv).collect();
    let ds = (0..n_max).map(|n| apsi_differential(e, v, n)).collect();
    CochainComplex::new(e.field(), dims, ds)
}

/// The Hochschild complex of `A` with values in `M` (the case `C = k`).
pub fn hochschild_complex(a: &FiniteAlgebra, m: &Bimodule, n_max: usize) -> Result<CochainComplex> {
    let e = trivial_entwining(a.clone(), FiniteCoalgebra::ground(a.field()))?;
    build_cpsi_am(&e, m, n_max)
}

/// The Cartier complex of `C` with values in `V` (the case `A = k`).
pub fn cartier_complex(c: &FiniteCoalgebra, v: &Bicomodule, n_max: usize) -> Result<CochainComplex> {
    let e = trivial_entwining(FiniteAlgebra::ground(c.field()), c.clone())?;
    build_apsi_cv(&e, v, n_max)
}

/// Matrix of `jⁿ: Hom(Aⁿ, M) → Hom(C⊗Aⁿ, M)`, `f ↦ ε⊗f`.
pub fn hochschild_inclusion_operator(e: &EntwiningStructure, m: &Bimodule, n: usize) -> Matrix {
    let eps = e.coalgebra().counit_map().matrix().pad(1, pow(e.dim_a(), n));
    precompose(&eps, m.dim())
}

/// Matrix of `j̄ⁿ: Hom(V, Cⁿ) → Hom(V, A⊗Cⁿ)`, `f ↦ 1⊗f`.
pub fn cartier_inclusion_operator(e: &EntwiningStructure, v: &Bicomodule, n: usize) -> Matrix {
    let unit = e.algebra().unit_map().matrix().pad(1, pow(e.dim_c(), n));
    postcompose(&unit, v.dim())
}

fn degree_of(shape: &[usize], d: usize) -> Option<usize> {
    match shape {
        [] | [1] => Some(0),
        s if s.iter().all(|&x| x == d) => Some(s.len()),
        _ => None,
    }
}

/// `ε⊗f` for `f: Aⁿ → M`.
pub fn hochschild_inclusion(e: &EntwiningStructure, m: &Bimodule, f: &LinearMap) -> Result<LinearMap> {
    let a = e.dim_a();
    let n = degree_of(f.domain(), a)
        .filter(|_| f.dim_out() == m.dim())
        .ok_or_else(|| Error::Shape(format!("{:?} -> {:?} is not a map A^n -> M", f.domain(), f.codomain())))?;
    let eps = e.coalgebra().counit_map().matrix().pad(1, pow(a, n));
    let domain = [vec![e.dim_c()], vec![a; n]].concat();
    LinearMap::new(domain, vec![m.dim()], f.matrix().mul(&eps))
}

/// `1⊗f` for `f: V → Cⁿ`.
pub fn cartier_inclusion(e: &EntwiningStructure, v: &Bicomodule, f: &LinearMap) -> Result<LinearMap> {
    let c = e.dim_c();
    let n = degree_of(f.codomain(), c)
        .filter(|_| f.dim_in() == v.dim())
        .ok_or_else(|| Error::Shape(format!("{:?} -> {:?} is not a map V -> C^n", f.domain(), f.codomain())))?;
    let unit = e.algebra().unit_map().matrix().pad(1, pow(c, n));
    let codomain = [vec![e.dim_a()], vec![c; n]].concat();
    LinearMap::new(vec![v.dim()], codomain, unit.mul(f.matrix()))
}
