use crate::algcoalg::hom_operator;
use crate::complexes::{cohomology, CochainComplex};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, Coordinates, Matrix, Scalar, Vector};
use crate::report::{Check, Report};

use super::{coboundary, comp_i, cup, sqcup, Cochain, CompContext, Side};

fn require_algebra_side(ctx: &CompContext) -> Result<()> {
    if ctx.side() != Side::Algebra {
        return Err(Error::Precondition("the equivariant subcomplex lives on the algebra side".into()));
    }
    Ok(())
}

/// Matrix of `f ↦ (f⊗C)∘ρⁿ_R − ψ∘(C⊗f)∘ρⁿ_L` on `Hom(C⊗Aⁿ, A)`; its kernel
/// is the degree-`n` part of the equivariant subcomplex.
pub fn equivariant_operator(ctx: &CompContext, n: usize) -> Result<std::sync::Arc<Matrix>> {
    require_algebra_side(ctx)?;
    ctx.equivariance.get_or(n, || {
        let e = ctx.entwining();
        let (a, c) = (e.dim_a(), e.dim_c());
        let field = e.field();
        let f_dom = c * a.pow(n as u32);
        let right = ctx.twist(n);
        let left = e.coalgebra().comult().matrix().pad(1, a.pow(n as u32));
        let lhs = hom_operator(&Matrix::identity(field, a * c), &right, 1, c, f_dom, a);
        let rhs = hom_operator(e.psi().matrix(), &left, c, 1, f_dom, a);
        Ok(lhs.sub(&rhs))
    })
}

fn is_equivariant(ctx: &CompContext, f: &Cochain) -> Result<bool> {
    Ok(is_zero_vector(&equivariant_operator(ctx, f.degree())?.mul_vec(&f.flatten())))
}

/// Basis of the degree-`n` equivariant cochains.
pub fn equivariant_basis(ctx: &CompContext, n: usize) -> Result<Vec<Cochain>> {
    equivariant_operator(ctx, n)?
        .kernel_basis()
        .iter()
        .map(|v| ctx.cochain_from_vector(n, v))
        .collect()
}

/// The equivariant subcomplex in coordinates of the equivariant bases, together
/// with those bases (as flattened cochains) in each degree.
pub fn equivariant_complex(ctx: &CompContext, n_max: usize) -> Result<(CochainComplex, Vec<Vec<Vector>>)> {
    let field = ctx.field();
    let bases: Vec<Vec<Vector>> = (0..=n_max)
        .map(|n| Ok(equivariant_operator(ctx, n)?.kernel_basis()))
        .collect::<Result<_>>()?;
    let mut ds = Vec::new();
    for n in 0..n_max {
        let coords = Coordinates::new(field, ctx.cochain_dim(n + 1), &bases[n + 1])?;
        let d = ctx.differential(n);
        let mut cols = Vec::new();
        for b in &bases[n] {
            let img = d.mul_vec(b);
            cols.push(coords.coordinates(&img).ok_or_else(|| {
                Error::InternalConsistency(format!("d^{n} leaves the equivariant subcomplex"))
            })?);
        }
        ds.push(Matrix::from_columns(field, bases[n + 1].len(), &cols));
    }
    let dims = bases.iter().map(Vec::len).collect();
    Ok((CochainComplex::new(field, dims, ds)?, bases))
}

fn first_failure(name: &str, witness: Option<String>) -> Check {
    Check::from_witness(name, witness)
}

/// Closure under `◇ᵢ` and `d`, `∪ = ⊔` on equivariant cochains, and graded
/// commutativity of `∪` on equivariant cohomology, for degrees `≤ degree_cap`.
pub fn equivariant_checks(ctx: &CompContext, degree_cap: usize) -> Result<Report> {
    require_algebra_side(ctx)?;
    let bases: Vec<Vec<Cochain>> = (0..=degree_cap).map(|n| equivariant_basis(ctx, n)).collect::<Result<_>>()?;
    let mut r = Report::new();

    let mut witness = None;
    'closure: for (m, fs) in bases.iter().enumerate().skip(1) {
        for (n, gs) in bases.iter().enumerate() {
            for (fi, f) in fs.iter().enumerate() {
                for (gi, g) in gs.iter().enumerate() {
                    for i in 0..m {
                        if !is_equivariant(ctx, &comp_i(ctx, f, i, g)?)? {
                            witness = Some(format!("f = E{m}[{fi}], g = E{n}[{gi}], i = {i}"));
                            break 'closure;
                        }
                    }
                }
            }
        }
    }
    r.push(first_failure("closed under ◇ᵢ", witness));

    let mut witness = None;
    'cups: for (m, fs) in bases.iter().enumerate() {
        for (n, gs) in bases.iter().enumerate().take(degree_cap + 1 - m) {
            for (fi, f) in fs.iter().enumerate() {
                for (gi, g) in gs.iter().enumerate() {
                    if cup(ctx, f, g)? != sqcup(ctx, f, g)? {
                        witness = Some(format!("f = E{m}[{fi}], g = E{n}[{gi}]"));
                        break 'cups;
                    }
                }
            }
        }
    }
    r.push(first_failure("∪ = ⊔ on equivariant cochains", witness));

    let mut witness = None;
    'd: for (m, fs) in bases.iter().enumerate() {
        for (fi, f) in fs.iter().enumerate() {
            if !is_equivariant(ctx, &coboundary(ctx, f)?)? {
                witness = Some(format!("f = E{m}[{fi}]"));
                break 'd;
            }
        }
    }
    r.push(first_failure("d preserves equivariance", witness));

    let (cx, coords) = equivariant_complex(ctx, degree_cap + 1)?;
    let field = ctx.field();
    let mut witness = None;
    'classes: for m in 0..=degree_cap {
        for n in 0..=degree_cap - m {
            let hm = cohomology(&cx, m)?;
            let hn = cohomology(&cx, n)?;
            let hmn = cohomology(&cx, m + n)?;
            let to_cochain = |deg: usize, v: &[Scalar]| -> Result<Cochain> {
                let full = Matrix::from_columns(field, ctx.cochain_dim(deg), &coords[deg]).mul_vec(v);
                ctx.cochain_from_vector(deg, &full)
            };
            let target = Coordinates::new(field, ctx.cochain_dim(m + n), &coords[m + n])?;
            let s = Scalar::sign(field, m * n);
            for (i, x) in hm.class_reps.iter().enumerate() {
                for (j, y) in hn.class_reps.iter().enumerate() {
                    let (xi, eta) = (to_cochain(m, x)?, to_cochain(n, y)?);
                    let diff = cup(ctx, &xi, &eta)?.sub(&cup(ctx, &eta, &xi)?.scale(&s))?;
                    let local = target.coordinates(&diff.flatten()).ok_or_else(|| {
                        Error::InternalConsistency("cup of equivariant cochains is not equivariant".into())
                    })?;
                    if !hmn.is_coboundary(&local)? {
                        witness = Some(format!("classes H{m}[{i}], H{n}[{j}]"));
                        break 'classes;
                    }
                }
            }
        }
    }
    r.push(first_failure("equivariant cohomology is graded-commutative", witness));
    Ok(r)
}

/// For a Galois object with translation map `τ`: compares the equivariant
/// cochains of degree `n` with the solutions of `f∪τ = τ*f`, where
/// `f∪τ = λ(f⊗τ)ρⁿ_R` and `τ*f = ρ(τ⊗f)ρⁿ_L` take values in `A⊗A`.
pub fn translation_criterion(ctx: &CompContext, n: usize) -> Result<Check> {
    require_algebra_side(ctx)?;
    let e = ctx.entwining();
    let tau = e.galois().ok_or(Error::MissingTranslationMap)?.translation.matrix().clone();
    let (a, c) = (e.dim_a(), e.dim_c());
    let field = e.field();
    let an = a.pow(n as u32);
    let f_dom = c * an;
    let mu = e.algebra().mult().matrix();
    let left_outer = mu.pad(1, a).mul(&Matrix::identity(field, a).kron(&tau));
    let f_cup_tau = hom_operator(&left_outer, &ctx.twist(n), 1, c, f_dom, a);
    let inner = tau.pad(1, f_dom).mul(&e.coalgebra().comult().matrix().pad(1, an));
    let tau_star_f = hom_operator(&mu.pad(a, 1), &inner, a * a, 1, f_dom, a);
    let solutions = f_cup_tau.sub(&tau_star_f).kernel_basis();
    let equivariant = equivariant_operator(ctx, n)?;
    let name = format!("translation criterion in degree {n}");
    let all_equivariant = solutions.iter().all(|v| is_zero_vector(&equivariant.mul_vec(v)));
    let same_dim = solutions.len() == equivariant.cols() - equivariant.rank();
    Ok(if all_equivariant && same_dim {
        Check::pass(name)
    } else {
        Check::fail(
            name,
            format!("{} solutions of f∪τ = τ*f, {} equivariant cochains", solutions.len(), equivariant.cols() - equivariant.rank()),
        )
    })
}
