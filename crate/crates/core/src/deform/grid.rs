use crate::algcoalg::{Bicomodule, Bimodule};
use crate::complexes::{apsi_differential, cpsi_differential};
use crate::entwine::{bicomodule_on_c_an, bimodule_on_a_cn, EntwiningStructure};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix};

/// Largest degree accepted in either direction of the grid.
pub const MAX_GRID_DEGREE: usize = 3;

/// The modules `A⊗Cⁿ` and `C⊗Aᵐ` that the two differentials take values in.
pub(crate) struct Coefficients {
    pub bimodules: Vec<Bimodule>,
    pub bicomodules: Vec<Bicomodule>,
}

impl Coefficients {
    pub fn new(e: &EntwiningStructure, m_max: usize, n_max: usize) -> Result<Self> {
        Ok(Coefficients {
            bimodules: (0..=n_max).map(|n| bimodule_on_a_cn(e, n)).collect::<Result<_>>()?,
            bicomodules: (0..=m_max).map(|m| bicomodule_on_c_an(e, m)).collect::<Result<_>>()?,
        })
    }

    /// `d: C^{m,n} → C^{m+1,n}`.
    pub fn horizontal(&self, e: &EntwiningStructure, m: usize, n: usize) -> Matrix {
        cpsi_differential(e, &self.bimodules[n], m)
    }

    /// `d̄: C^{m,n} → C^{m,n+1}`.
    pub fn vertical(&self, e: &EntwiningStructure, m: usize, n: usize) -> Matrix {
        apsi_differential(e, &self.bicomodules[m], n)
    }
}

/// `Hom(C⊗Aᵐ, A⊗Cⁿ)` for `0 ≤ m ≤ m_max`, `0 ≤ n ≤ n_max`, with the
/// algebra-side differential `d` along rows and the coalgebra-side `d̄` along
/// columns.
#[derive(Clone, Debug)]
pub struct DoubleComplexGrid {
    field: FieldSpec,
    dim_a: usize,
    dim_c: usize,
    m_max: usize,
    n_max: usize,
    // horizontal[n][m]: C^{m,n} → C^{m+1,n}
    horizontal: Vec<Vec<Matrix>>,
    // vertical[m][n]: C^{m,n} → C^{m,n+1}
    vertical: Vec<Vec<Matrix>>,
}

impl DoubleComplexGrid {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn space_dim(&self, m: usize, n: usize) -> usize {
        cell_dim(self.dim_a, self.dim_c, m, n)
    }

    pub fn d(&self, m: usize, n: usize) -> Result<&Matrix> {
        self.horizontal
            .get(n)
            .and_then(|row| row.get(m))
            .ok_or_else(|| Error::IndexOutOfRange(format!("no horizontal map out of ({m},{n})")))
    }

    pub fn dbar(&self, m: usize, n: usize) -> Result<&Matrix> {
        self.vertical
            .get(m)
            .and_then(|col| col.get(n))
            .ok_or_else(|| Error::IndexOutOfRange(format!("no vertical map out of ({m},{n})")))
    }
}

pub(crate) fn cell_dim(a: usize, c: usize, m: usize, n: usize) -> usize {
    c * a.pow(m as u32) * a * c.pow(n as u32)
}

/// Builds the grid and checks `dd = 0`, `d̄d̄ = 0` and `dd̄ = d̄d` everywhere
/// they can be composed inside it.
pub fn build_double_complex(e: &EntwiningStructure, m_max: usize, n_max: usize) -> Result<DoubleComplexGrid> {
    if m_max > MAX_GRID_DEGREE || n_max > MAX_GRID_DEGREE {
        return Err(Error::Precondition(format!("grid caps are at most {MAX_GRID_DEGREE}, got {m_max}x{n_max}")));
    }
    let coeffs = Coefficients::new(e, m_max, n_max)?;
    let horizontal: Vec<Vec<Matrix>> =
        (0..=n_max).map(|n| (0..m_max).map(|m| coeffs.horizontal(e, m, n)).collect()).collect();
    let vertical: Vec<Vec<Matrix>> =
        (0..=m_max).map(|m| (0..n_max).map(|n| coeffs.vertical(e, m, n)).collect()).collect();
    let grid = DoubleComplexGrid { field: e.field(), dim_a: e.dim_a(), dim_c: e.dim_c(), m_max, n_max, horizontal, vertical };

    for n in 0..=n_max {
        for m in 1..m_max {
            if !grid.horizontal[n][m].mul(&grid.horizontal[n][m - 1]).is_zero() {
                return Err(Error::InternalConsistency(format!("d∘d ≠ 0 out of ({},{n})", m - 1)));
            }
        }
    }
    for m in 0..=m_max {
        for n in 1..n_max {
            if !grid.vertical[m][n].mul(&grid.vertical[m][n - 1]).is_zero() {
                return Err(Error::InternalConsistency(format!("d̄∘d̄ ≠ 0 out of ({m},{})", n - 1)));
            }
        }
    }
    for m in 0..m_max {
        for n in 0..n_max {
            let dd = grid.horizontal[n + 1][m].mul(&grid.vertical[m][n]);
            let dd_bar = grid.vertical[m + 1][n].mul(&grid.horizontal[n][m]);
            if dd != dd_bar {
                return Err(Error::InternalConsistency(format!("d∘d̄ ≠ d̄∘d out of ({m},{n})")));
            }
        }
    }
    Ok(grid)
}
