use crate::algcoalg::{hom_operator, tensor_labels, validate_bimodule, Bimodule, LinearMap};
use crate::entwine::EntwiningStructure;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Vector};
use crate::report::Check;

use super::build::{cpsi_differential, postcompose, pow, require_bimodule};

/// `Hom(C, M)` as an `A`-bimodule: `(f·a)(c) = f(c)·a`, `(a·f)(c) = a_α·f(c^α)`.
///
/// The basis element `[c→m]` sends `c` to `m` and the other basis vectors of
/// `C` to zero; its index is `m * dim C + c`, matching the cochain flattening.
pub fn hom_cm_bimodule(e: &EntwiningStructure, m: &Bimodule) -> Result<Bimodule> {
    require_bimodule(e, m)?;
    let (a, c, dm) = (e.dim_a(), e.dim_c(), m.dim());
    let dim = dm * c;
    let left_t = m.left().matrix().transpose();
    let mut left = Vec::new();
    for (row, col, v) in e.psi().matrix().entries() {
        let (j, c_out) = (row / c, row % c);
        let (c_in, i) = (col / a, col % a);
        for mi in 0..dm {
            for (mo, w) in left_t.row(j * dm + mi) {
                left.push((mo * c + c_in, i * dim + mi * c + c_out, v * w));
            }
        }
    }
    let mut right = Vec::new();
    for (mo, col, v) in m.right().matrix().entries() {
        let (mi, i) = (col / a, col % a);
        for ci in 0..c {
            right.push((mo * c + ci, (mi * c + ci) * a + i, v.clone()));
        }
    }
    let labels = (0..dm)
        .flat_map(|mi| (0..c).map(move |ci| (mi, ci)))
        .map(|(mi, ci)| format!("[{}→{}]", e.coalgebra().labels()[ci], m.labels()[mi]))
        .collect();
    let field = e.field();
    let out = Bimodule::new(
        labels,
        Matrix::from_triplets(field, dim, a * dim, left),
        Matrix::from_triplets(field, dim, dim * a, right),
    )?;
    let r = validate_bimodule(e.algebra(), &out);
    if !r.passed() {
        return Err(Error::InternalConsistency(format!("Hom(C, M) is not a bimodule: {}", r.failure_summary())));
    }
    Ok(out)
}

/// `A ⊗ A` with the outer actions `a·(x⊗y)·b = ax⊗yb`.
fn outer_bimodule(e: &EntwiningStructure) -> Result<Bimodule> {
    let alg = e.algebra();
    let mu = alg.mult().matrix();
    let labels = tensor_labels(&[alg.labels(), alg.labels()]);
    Bimodule::new(labels, mu.pad(1, alg.dim()), mu.pad(alg.dim(), 1))
}

/// A 0-cocycle `χ ∈ C⁰_ψ(A, A⊗A)` with `μ∘χ = 1∘ε`, if one exists.
/// Its existence is equivalent to `A⊗C` being a projective `A`-bimodule.
pub fn projectivity_witness(e: &EntwiningStructure) -> Result<Option<LinearMap>> {
    let field = e.field();
    let (a, c) = (e.dim_a(), e.dim_c());
    let m = outer_bimodule(e)?;
    let d0 = cpsi_differential(e, &m, 0);
    let norm = postcompose(e.algebra().mult().matrix(), c);
    let system = Matrix::vstack(field, a * a * c, &[&d0, &norm]);
    let target = e.algebra().unit_map().matrix().mul(e.coalgebra().counit_map().matrix());
    let mut rhs = vec![Scalar::zero(field); d0.rows()];
    rhs.extend(target.flatten());
    match system.solve(&rhs)? {
        None => Ok(None),
        Some(x) => Ok(Some(LinearMap::new(vec![c], vec![a, a], Matrix::unflatten(field, a * a, c, &x))?)),
    }
}

/// `hⁿ: Cⁿ_ψ(A, M) → Cⁿ⁻¹_ψ(A, M)` for a Galois object with translation map
/// `τ(c) = c⁽¹⁾⊗c⁽²⁾`: `hⁿ(f)(c, a¹, …) = c⁽¹⁾ 1₍₀₎ · f(1₍₁₎, c⁽²⁾, a¹, …)`.
pub fn hopf_contracting_homotopy(e: &EntwiningStructure, m: &Bimodule, n: usize) -> Result<Matrix> {
    let galois = e.galois().ok_or(Error::MissingTranslationMap)?;
    if n == 0 {
        return Err(Error::Precondition("the contracting homotopy starts in degree 1".into()));
    }
    require_bimodule(e, m)?;
    let field = e.field();
    let (a, c) = (e.dim_a(), e.dim_c());
    let tau = galois.translation.matrix();
    let coaction = galois.coaction.matrix();
    if tau.rows() != a * a || tau.cols() != c || coaction.rows() != a * c || coaction.cols() != a {
        return Err(Error::Shape("translation map or coaction does not match the entwining structure".into()));
    }
    let u = coaction.mul(e.algebra().unit_map().matrix());
    let insert = Matrix::identity(field, a).kron(&u.kron(&Matrix::identity(field, pow(a, n))));
    let p = e
        .algebra()
        .mult()
        .matrix()
        .pad(1, c * pow(a, n))
        .mul(&insert)
        .mul(&tau.pad(1, pow(a, n - 1)));
    Ok(hom_operator(m.left().matrix(), &p, a, 1, c * pow(a, n), m.dim()))
}

/// Checks `hⁿ⁺¹dⁿ + dⁿ⁻¹hⁿ = id` on `Cⁿ_ψ(A, M)`, `n ≥ 1`.
pub fn check_contracting_homotopy(e: &EntwiningStructure, m: &Bimodule, n: usize) -> Result<Check> {
    let h_n = hopf_contracting_homotopy(e, m, n)?;
    let h_next = hopf_contracting_homotopy(e, m, n + 1)?;
    let lhs = h_next.mul(&cpsi_differential(e, m, n)).add(&cpsi_differential(e, m, n - 1).mul(&h_n));
    let id = Matrix::identity(e.field(), lhs.rows());
    let name = format!("contracting homotopy in degree {n}");
    Ok(match lhs.first_difference(&id) {
        None => Check::pass(name),
        Some((r, c)) => Check::fail(name, format!("entry ({r}, {c})")),
    })
}

/// Basis of `{φ ∈ Hom(C, A) : a_α φ(c^α) = φ(c) a for all a, c}`, built directly
/// from the structure constants; flattened like 0-cochains of `C_ψ(A, A)`.
pub fn h0_characterization(e: &EntwiningStructure) -> Vec<Vector> {
    let (a, c) = (e.dim_a(), e.dim_c());
    let mu = e.algebra().mult().matrix();
    let mu_t = mu.transpose();
    let mut eqs = Vec::new();
    let row = |ci: usize, i: usize, k: usize| (ci * a + i) * a + k;
    for (r, col, v) in e.psi().matrix().entries() {
        let (j, c_out) = (r / c, r % c);
        let (c_in, i) = (col / a, col % a);
        for l in 0..a {
            for (k, w) in mu_t.row(j * a + l) {
                eqs.push((row(c_in, i, *k), l * c + c_out, v * w));
            }
        }
    }
    for ci in 0..c {
        for i in 0..a {
            for l in 0..a {
                for (k, w) in mu_t.row(l * a + i) {
                    eqs.push((row(ci, i, *k), l * c + ci, -w));
                }
            }
        }
    }
    Matrix::from_triplets(e.field(), c * a * a, a * c, eqs).kernel_basis()
}
