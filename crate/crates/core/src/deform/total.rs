use serde::Serialize;

use crate::algcoalg::{FiniteAlgebra, FiniteCoalgebra};
use crate::complexes::{
    apsi_differential, cartier_inclusion_operator, cohomology, cpsi_differential, hochschild_inclusion_operator,
    CochainComplex, CohomologyResult,
};
use crate::entwine::EntwiningStructure;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Vector};
use crate::zoo::trivial_entwining;

use super::grid::{cell_dim, Coefficients, MAX_GRID_DEGREE};

/// One summand of a total degree: `Hom(Aᵐ, A)` when `c_degree = 0`,
/// `Hom(C, Cⁿ)` when `a_degree = 0`, `Hom(C⊗Aᵐ, A⊗Cⁿ)` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub a_degree: usize,
    pub c_degree: usize,
    pub offset: usize,
    pub dim: usize,
}

/// The total complex of the modified double complex, with the block layout of
/// each degree. Degree `k` lists its blocks by increasing coalgebra degree.
#[derive(Clone, Debug)]
pub struct TotalComplex {
    complex: CochainComplex,
    blocks: Vec<Vec<Block>>,
}

impl TotalComplex {
    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn max_degree(&self) -> usize {
        self.complex.max_degree()
    }

    pub fn blocks(&self, k: usize) -> &[Block] {
        &self.blocks[k]
    }

    pub fn block(&self, k: usize, a_degree: usize, c_degree: usize) -> Option<Block> {
        self.blocks.get(k)?.iter().copied().find(|b| b.a_degree == a_degree && b.c_degree == c_degree)
    }

    pub fn space_dim(&self, k: usize) -> usize {
        self.complex.space_dim(k)
    }

    /// `D: C_H^k → C_H^{k+1}`.
    pub fn differential(&self, k: usize) -> Result<&Matrix> {
        self.complex.differential(k)
    }

    /// The coordinates of `v` belonging to `block`.
    pub fn slice<'a>(&self, block: &Block, v: &'a [Scalar]) -> &'a [Scalar] {
        &v[block.offset..block.offset + block.dim]
    }
}

/// Dimension of `C_H^k` from the direct-sum description.
pub fn total_dim(a: usize, c: usize, k: usize) -> usize {
    if k == 0 {
        return 0;
    }
    a.pow(k as u32) * a + (1..k).map(|j| cell_dim(a, c, k - j, j)).sum::<usize>() + c * c.pow(k as u32)
}

fn layout(a: usize, c: usize, k: usize) -> Vec<Block> {
    if k == 0 {
        return Vec::new();
    }
    let mut offset = 0;
    (0..=k)
        .map(|n| {
            let m = k - n;
            let dim = match (m, n) {
                (_, 0) => a.pow(m as u32) * a,
                (0, _) => c * c.pow(n as u32),
                _ => cell_dim(a, c, m, n),
            };
            let b = Block { a_degree: m, c_degree: n, offset, dim };
            offset += dim;
            b
        })
        .collect()
}

fn place(triplets: &mut Vec<(usize, usize, Scalar)>, m: &Matrix, row: usize, col: usize, sign: &Scalar) {
    triplets.extend(m.entries().map(|(r, c, v)| (row + r, col + c, v * sign)));
}

/// The total complex `D = d + (−1)ᵐ d̄` of the grid whose bottom row is replaced
/// by the Hochschild complex of `A` and whose first column by the Cartier
/// complex of `C`, glued through `d̄∘j` and `d∘j̄`. `C_H^0 = 0`.
pub fn build_ch(e: &EntwiningStructure, n_max: usize) -> Result<TotalComplex> {
    if n_max > MAX_GRID_DEGREE {
        return Err(Error::Precondition(format!("total degree cap is at most {MAX_GRID_DEGREE}, got {n_max}")));
    }
    let field = e.field();
    let (a, c) = (e.dim_a(), e.dim_c());
    let coeffs = Coefficients::new(e, n_max, n_max)?;
    let hochschild = trivial_entwining(e.algebra().clone(), FiniteCoalgebra::ground(field))?;
    let cartier = trivial_entwining(FiniteAlgebra::ground(field), e.coalgebra().clone())?;
    let regular_a = e.algebra().regular_bimodule();
    let regular_c = e.coalgebra().regular_bicomodule();

    let blocks: Vec<Vec<Block>> = (0..=n_max).map(|k| layout(a, c, k)).collect();
    let mut ds = Vec::new();
    for k in 0..n_max {
        let target = &blocks[k + 1];
        let find = |m: usize, n: usize| target.iter().find(|b| b.a_degree == m && b.c_degree == n).unwrap().offset;
        let mut trip = Vec::new();
        for b in &blocks[k] {
            let (m, n) = (b.a_degree, b.c_degree);
            let sign = Scalar::sign(field, m);
            let (right, down) = match (m, n) {
                (_, 0) => {
                    let j = hochschild_inclusion_operator(e, &regular_a, m);
                    (cpsi_differential(&hochschild, &regular_a, m), coeffs.vertical(e, m, 0).mul(&j))
                }
                (0, _) => {
                    let j = cartier_inclusion_operator(e, &regular_c, n);
                    (coeffs.horizontal(e, 0, n).mul(&j), apsi_differential(&cartier, &regular_c, n))
                }
                _ => (coeffs.horizontal(e, m, n), coeffs.vertical(e, m, n)),
            };
            place(&mut trip, &right, find(m + 1, n), b.offset, &Scalar::one(field));
            place(&mut trip, &down, find(m, n + 1), b.offset, &sign);
        }
        ds.push(Matrix::from_triplets(field, total_dim(a, c, k + 1), total_dim(a, c, k), trip));
    }
    let dims = (0..=n_max).map(|k| total_dim(a, c, k)).collect();
    let complex = CochainComplex::new(field, dims, ds).map_err(|err| match err {
        Error::InternalConsistency(msg) => Error::InternalConsistency(format!("total differential: {msg}")),
        other => other,
    })?;
    Ok(TotalComplex { complex, blocks })
}

/// `H^n` of the total complex.
pub fn total_cohomology(tc: &TotalComplex, n: usize) -> Result<CohomologyResult> {
    cohomology(&tc.complex, n)
}

/// Assembles a total cochain of degree `k` from per-block vectors, given in
/// the order of `tc.blocks(k)`.
pub fn assemble(tc: &TotalComplex, k: usize, parts: &[&[Scalar]]) -> Result<Vector> {
    let blocks = tc.blocks(k);
    if parts.len() != blocks.len() || parts.iter().zip(blocks).any(|(p, b)| p.len() != b.dim) {
        return Err(Error::Shape(format!("block sizes do not match degree {k}")));
    }
    Ok(parts.concat())
}
