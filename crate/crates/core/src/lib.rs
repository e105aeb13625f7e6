//! Exact computations with entwining structures: an algebra `A`, a coalgebra
//! `C` and a map `ψ: C ⊗ A → A ⊗ C`, their cohomology theories, cup products,
//! comp-algebra operations and first-order deformations.

pub mod algcoalg;
pub mod compalg;
pub mod complexes;
pub mod deform;
pub mod entwine;
pub mod error;
pub mod exactla;
pub mod report;
pub mod zoo;

pub use error::{Error, Result};
