//! The twisted bar resolution `Bar_n = A⊗C⊗Aⁿ⁺¹` and cobar resolution
//! `Cobⁿ = C⊗A⊗Cⁿ⁺¹` as explicit matrices, with their augmentations and
//! contracting homotopies. The cochain complexes are their Hom-images; these
//! are kept for checking.

use crate::entwine::EntwiningStructure;
use crate::exactla::{Matrix, Scalar};
use crate::report::{Check, Report};

use super::build::pow;

fn compare(name: String, lhs: &Matrix, rhs: &Matrix) -> Check {
    match lhs.first_difference(rhs) {
        None => Check::pass(name),
        Some((r, c)) => Check::fail(name, format!("entry ({r}, {c})")),
    }
}

pub fn bar_dim(e: &EntwiningStructure, n: usize) -> usize {
    e.dim_a() * e.dim_c() * pow(e.dim_a(), n + 1)
}

pub fn cobar_dim(e: &EntwiningStructure, n: usize) -> usize {
    e.dim_c() * e.dim_a() * pow(e.dim_c(), n + 1)
}

/// `δₙ: Bar_n → Bar_{n-1}`; `δ₀` is the augmentation `(μ⊗C)(A⊗ψ)` onto `A⊗C`.
pub fn bar_differential(e: &EntwiningStructure, n: usize) -> Matrix {
    let field = e.field();
    let (a, c) = (e.dim_a(), e.dim_c());
    let mu = e.algebra().mult().matrix();
    let mut d = mu.pad(1, c * pow(a, n)).mul(&e.psi().matrix().pad(a, pow(a, n)));
    for k in 1..=n {
        let term = mu.pad(a * c * pow(a, k - 1), pow(a, n - k));
        d = d.add_scaled(&Scalar::sign(field, k), &term);
    }
    d
}

/// The second augmentation `μ(A⊗ε⊗A): Bar_0 → A`.
pub fn bar_augmentation_to_algebra(e: &EntwiningStructure) -> Matrix {
    let a = e.dim_a();
    e.algebra().mult().matrix().mul(&e.coalgebra().counit_map().matrix().pad(a, a))
}

/// `hₙ = (-1)ⁿ (· ⊗ 1): Bar_n → Bar_{n+1}`; `degree = None` gives `h₋₁` on `A⊗C`.
pub fn bar_homotopy(e: &EntwiningStructure, degree: Option<usize>) -> Matrix {
    let field = e.field();
    let (src, sign) = match degree {
        None => (e.dim_a() * e.dim_c(), -Scalar::one(field)),
        Some(n) => (bar_dim(e, n), Scalar::sign(field, n)),
    };
    Matrix::identity(field, src).kron(e.algebra().unit_map().matrix()).scale(&sign)
}

/// `δ̄ⁿ: Cobⁿ → Cobⁿ⁺¹`, `(C⊗ψ⊗Cⁿ⁺¹)(Δ⊗A⊗Cⁿ⁺¹) + Σ_{k=1}^{n+1} (-1)ᵏ C⊗A⊗Cᵏ⁻¹⊗Δ⊗Cⁿ⁺¹⁻ᵏ`.
/// `degree = None` gives the coaugmentation `(C⊗ψ)(Δ⊗A)` out of `C⊗A`.
pub fn cobar_differential(e: &EntwiningStructure, degree: Option<usize>) -> Matrix {
    let field = e.field();
    let (a, c) = (e.dim_a(), e.dim_c());
    let tail = degree.map_or(0, |n| n + 1);
    let delta = e.coalgebra().comult().matrix();
    let mut d = e.psi().matrix().pad(c, pow(c, tail)).mul(&delta.pad(1, a * pow(c, tail)));
    for k in 1..=tail {
        let term = delta.pad(c * a * pow(c, k - 1), pow(c, tail - k));
        d = d.add_scaled(&Scalar::sign(field, k), &term);
    }
    d
}

/// The second coaugmentation `(C⊗1⊗C)Δ: C → Cob⁰`.
pub fn cobar_coaugmentation_from_coalgebra(e: &EntwiningStructure) -> Matrix {
    let c = e.dim_c();
    e.algebra().unit_map().matrix().pad(c, c).mul(e.coalgebra().comult().matrix())
}

/// `hⁿ = (-1)ⁿ⁺¹ (· ⊗ ε): Cobⁿ → Cobⁿ⁻¹` (with `Cob⁻¹ = C⊗A`).
pub fn cobar_homotopy(e: &EntwiningStructure, n: usize) -> Matrix {
    let field = e.field();
    let target = e.dim_c() * e.dim_a() * pow(e.dim_c(), n);
    Matrix::identity(field, target)
        .kron(e.coalgebra().counit_map().matrix())
        .scale(&Scalar::sign(field, n + 1))
}

/// `δ² = 0`, both augmentations, and `δh + hδ = -id` for `Bar^ψ` up to `n_max`.
pub fn check_bar_resolution(e: &EntwiningStructure, n_max: usize) -> Report {
    let field = e.field();
    let mut r = Report::new();
    for n in 0..n_max {
        let dd = bar_differential(e, n).mul(&bar_differential(e, n + 1));
        r.push(compare(format!("bar δ{n}∘δ{}", n + 1), &dd, &Matrix::zeros(field, dd.rows(), dd.cols())));
    }
    let aug = bar_augmentation_to_algebra(e).mul(&bar_differential(e, 1));
    r.push(compare("bar augmentation onto A".into(), &aug, &Matrix::zeros(field, aug.rows(), aug.cols())));
    let minus_id = |d: usize| Matrix::identity(field, d).scale(&-Scalar::one(field));
    let bottom = bar_differential(e, 0).mul(&bar_homotopy(e, None));
    r.push(compare("bar homotopy on A⊗C".into(), &bottom, &minus_id(e.dim_a() * e.dim_c())));
    for n in 0..=n_max {
        let below = bar_homotopy(e, n.checked_sub(1)).mul(&bar_differential(e, n));
        let above = bar_differential(e, n + 1).mul(&bar_homotopy(e, Some(n)));
        r.push(compare(format!("bar homotopy in degree {n}"), &above.add(&below), &minus_id(bar_dim(e, n))));
    }
    r
}

/// The dual checks for `Cob_ψ`.
pub fn check_cobar_resolution(e: &EntwiningStructure, n_max: usize) -> Report {
    let field = e.field();
    let mut r = Report::new();
    let coaug = cobar_differential(e, None);
    let first = cobar_differential(e, Some(0)).mul(&coaug);
    r.push(compare("cobar δ̄0∘coaugmentation".into(), &first, &Matrix::zeros(field, first.rows(), first.cols())));
    for n in 0..n_max {
        let dd = cobar_differential(e, Some(n + 1)).mul(&cobar_differential(e, Some(n)));
        r.push(compare(format!("cobar δ̄{}∘δ̄{n}", n + 1), &dd, &Matrix::zeros(field, dd.rows(), dd.cols())));
    }
    let co = cobar_differential(e, Some(0)).mul(&cobar_coaugmentation_from_coalgebra(e));
    r.push(compare("cobar coaugmentation from C".into(), &co, &Matrix::zeros(field, co.rows(), co.cols())));
    let minus_id = |d: usize| Matrix::identity(field, d).scale(&-Scalar::one(field));
    let bottom = cobar_homotopy(e, 0).mul(&coaug);
    r.push(compare("cobar homotopy on C⊗A".into(), &bottom, &minus_id(e.dim_a() * e.dim_c())));
    for n in 0..=n_max {
        let below = cobar_differential(e, n.checked_sub(1)).mul(&cobar_homotopy(e, n));
        let above = cobar_homotopy(e, n + 1).mul(&cobar_differential(e, Some(n)));
        r.push(compare(format!("cobar homotopy in degree {n}"), &above.add(&below), &minus_id(cobar_dim(e, n))));
    }
    r
}
