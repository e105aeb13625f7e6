//! The double complex `Hom(C⊗Aᵐ, A⊗Cⁿ)` of an entwining structure, the
//! variant whose edges are the Hochschild complex of `A` and the Cartier
//! complex of `C`, its total cohomology, and first-order deformations.
//!
//! Total 2-cocycles are exactly the first-order deformations of
//! `(μ, Δ, ψ)`; total 2-coboundaries are the ones equivalent to the trivial
//! deformation.

mod grid;
mod infinitesimal;
mod total;

pub use grid::{build_double_complex, DoubleComplexGrid, MAX_GRID_DEGREE};
pub use infinitesimal::{
    coboundary_equivalence, deformation_from_cocycle, deformation_report, equivalence_checks, first_order_checks,
    solve_witness, Equivalence, InfinitesimalDeformation,
};
pub use total::{assemble, build_ch, total_cohomology, total_dim, Block, TotalComplex};

#[cfg(test)]
mod tests;
