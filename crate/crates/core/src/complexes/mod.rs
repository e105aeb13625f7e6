//! Cochain complexes of an entwining structure: `C_ψ(A, M)` with values in an
//! `A`-bimodule and `A_ψ(C, V)` with values in a `C`-bicomodule, their
//! cohomology, and the special maps around them.
//!
//! A cochain `f: X → Y` is stored as the row-major flattening of its matrix,
//! so the coordinate of `e_y ⊗ e_x^*` is `y * dim X + x`. Differentials are
//! matrices acting on these coordinates.

mod build;
mod special;
pub mod resolution;

pub use build::{
    apsi_differential, build_apsi_cv, build_cpsi_am, cartier_complex, cartier_inclusion, cartier_inclusion_operator,
    cpsi_differential, hochschild_complex, hochschild_inclusion, hochschild_inclusion_operator,
};
pub use special::{
    check_contracting_homotopy, h0_characterization, hom_cm_bimodule, hopf_contracting_homotopy, projectivity_witness,
};

use crate::error::{Error, Result};
use crate::exactla::{quotient_with_projection, FieldSpec, Matrix, Quotient, Vector};

/// A finite truncation of a cochain complex: spaces in degrees `0..=max_degree`
/// and differentials `dⁿ` for `n < max_degree`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    field: FieldSpec,
    space_dims: Vec<usize>,
    differentials: Vec<Matrix>,
}

impl CochainComplex {
    /// Checks shapes and `dⁿ⁺¹ ∘ dⁿ = 0`.
    pub fn new(field: FieldSpec, space_dims: Vec<usize>, differentials: Vec<Matrix>) -> Result<Self> {
        if space_dims.is_empty() || differentials.len() + 1 != space_dims.len() {
            return Err(Error::Shape(format!(
                "{} spaces need {} differentials, found {}",
                space_dims.len(),
                space_dims.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (n, d) in differentials.iter().enumerate() {
            if d.field() != field {
                return Err(Error::Shape(format!("d^{n} is over {}, complex over {field}", d.field())));
            }
            if d.cols() != space_dims[n] || d.rows() != space_dims[n + 1] {
                return Err(Error::Shape(format!(
                    "d^{n} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    space_dims[n + 1],
                    space_dims[n]
                )));
            }
        }
        for n in 1..differentials.len() {
            let dd = differentials[n].mul(&differentials[n - 1]);
            if !dd.is_zero() {
                let (r, c) = dd.entries().next().map(|(r, c, _)| (r, c)).unwrap();
                return Err(Error::InternalConsistency(format!(
                    "d^{n} ∘ d^{} ≠ 0 (entry {r},{c}); the input structures are not valid",
                    n - 1
                )));
            }
        }
        Ok(CochainComplex { field, space_dims, differentials })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn max_degree(&self) -> usize {
        self.space_dims.len() - 1
    }

    pub fn space_dims(&self) -> &[usize] {
        &self.space_dims
    }

    pub fn space_dim(&self, n: usize) -> usize {
        self.space_dims[n]
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// `dⁿ`.
    pub fn differential(&self, n: usize) -> Result<&Matrix> {
        self.differentials
            .get(n)
            .ok_or_else(|| Error::IndexOutOfRange(format!("d^{n} (complex stops at degree {})", self.max_degree())))
    }

    pub fn apply(&self, n: usize, cochain: &[crate::exactla::Scalar]) -> Result<Vector> {
        let d = self.differential(n)?;
        if cochain.len() != d.cols() {
            return Err(Error::Shape(format!("cochain of length {} in degree {n} (dim {})", cochain.len(), d.cols())));
        }
        Ok(d.mul_vec(cochain))
    }

    pub fn is_cocycle(&self, n: usize, cochain: &[crate::exactla::Scalar]) -> Result<bool> {
        Ok(crate::exactla::is_zero_vector(&self.apply(n, cochain)?))
    }
}

/// `Hⁿ = ker dⁿ / im dⁿ⁻¹` with explicit bases.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub degree: usize,
    pub betti: usize,
    pub cocycle_basis: Vec<Vector>,
    pub coboundary_basis: Vec<Vector>,
    pub class_reps: Vec<Vector>,
    quotient: Quotient,
}

impl CohomologyResult {
    /// Class coordinates of a cocycle on `class_reps`.
    pub fn reduce(&self, cocycle: &[crate::exactla::Scalar]) -> Result<Vector> {
        self.quotient
            .reduce(cocycle)
            .ok_or_else(|| Error::Precondition(format!("vector is not a {}-cocycle", self.degree)))
    }

    /// Whether a cocycle is a coboundary.
    pub fn is_coboundary(&self, cocycle: &[crate::exactla::Scalar]) -> Result<bool> {
        Ok(crate::exactla::is_zero_vector(&self.reduce(cocycle)?))
    }
}

/// Cohomology in degree `n`; needs `dⁿ`, so `n < max_degree`.
pub fn cohomology(cx: &CochainComplex, n: usize) -> Result<CohomologyResult> {
    if n >= cx.max_degree() {
        return Err(Error::IndexOutOfRange(format!(
            "H^{n} needs d^{n}, but the complex is truncated at degree {}",
            cx.max_degree()
        )));
    }
    let cocycles = cx.differentials[n].kernel_basis();
    let coboundaries = if n == 0 { Vec::new() } else { cx.differentials[n - 1].image_basis() };
    let quotient = quotient_with_projection(cx.field, cx.space_dims[n], &coboundaries, &cocycles)
        .map_err(|e| Error::InternalConsistency(format!("im d^{} ⊄ ker d^{n}: {e}", n.wrapping_sub(1))))?;
    Ok(CohomologyResult {
        degree: n,
        betti: quotient.dim(),
        cocycle_basis: cocycles,
        coboundary_basis: quotient.sub_basis.clone(),
        class_reps: quotient.class_basis.clone(),
        quotient,
    })
}

/// Betti numbers `dim Hⁿ` for `n < max_degree`.
pub fn betti_numbers(cx: &CochainComplex) -> Result<Vec<usize>> {
    (0..cx.max_degree()).map(|n| cohomology(cx, n).map(|h| h.betti)).collect()
}
