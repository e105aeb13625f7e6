use super::*;
use crate::complexes::{build_cpsi_am, cohomology};
use crate::entwine::{bimodule_on_a_cn, EntwiningStructure};
use crate::error::Error;
use crate::exactla::{FieldSpec, Scalar};
use crate::zoo::{example, valid_examples};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;

fn ex(name: &str) -> EntwiningStructure {
    example(name, Q).unwrap()
}

#[test]
fn ground_field_grid() {
    let e = ex("k");
    let g = build_double_complex(&e, 3, 3).unwrap();
    for m in 0..=3 {
        for n in 0..=3 {
            assert_eq!(g.space_dim(m, n), 1);
        }
    }
    assert!(build_double_complex(&e, 4, 1).is_err());
}

#[test]
fn grids_commute_on_examples() {
    for (name, e) in valid_examples(Q) {
        let cap = if e.dim_a() * e.dim_c() > 4 { 1 } else { 2 };
        build_double_complex(&e, cap, cap).unwrap_or_else(|err| panic!("{name}: {err}"));
    }
}

#[test]
fn rows_are_entwined_complexes() {
    let e = ex("z2");
    let g = build_double_complex(&e, 2, 2).unwrap();
    let cx = build_cpsi_am(&e, &bimodule_on_a_cn(&e, 1).unwrap(), 2).unwrap();
    for m in 0..2 {
        assert_eq!(g.d(m, 1).unwrap(), cx.differential(m).unwrap());
    }
    assert!(g.d(2, 0).is_err());
}

#[test]
fn total_dimensions() {
    assert_eq!(total_dim(1, 1, 0), 0);
    for n in 1..=4 {
        assert_eq!(total_dim(1, 1, n), 1 + (n - 1) + 1);
    }
    let e = ex("z2");
    let tc = build_ch(&e, 3).unwrap();
    for k in 1..=3 {
        let blocks = tc.blocks(k);
        assert_eq!(blocks.len(), k + 1);
        assert_eq!(blocks.iter().map(|b| b.dim).sum::<usize>(), tc.space_dim(k));
        assert_eq!(tc.space_dim(k), total_dim(2, 2, k));
    }
    // Hom(A²,A) ⊕ Hom(C⊗A, A⊗C) ⊕ Hom(C,C²)
    assert_eq!(tc.space_dim(2), 8 + 16 + 8);
}

#[test]
fn total_complexes_square_to_zero() {
    for (name, e) in valid_examples(Q) {
        let n_max = if e.dim_a() * e.dim_c() > 4 { 2 } else { 3 };
        build_ch(&e, n_max).unwrap_or_else(|err| panic!("{name}: {err}"));
    }
}

#[test]
fn small_total_cohomology() {
    let e = ex("k");
    let tc = build_ch(&e, 3).unwrap();
    assert_eq!(total_cohomology(&tc, 0).unwrap().betti, 0);
    // D(α, γ) = (α, 0, γ) on scalars
    assert_eq!(tc.differential(1).unwrap().rank(), 2);
    assert_eq!(total_cohomology(&tc, 1).unwrap().betti, 0);
    assert_eq!(total_cohomology(&tc, 2).unwrap().betti, 0);
}

fn random_cochain(n: usize, seed: u64) -> Vec<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Scalar::from_i64(Q, rng.gen_range(-3..=3))).collect()
}

#[test]
fn cocycles_are_deformations() {
    let e = ex("z2");
    let tc = build_ch(&e, 3).unwrap();
    let h = total_cohomology(&tc, 2).unwrap();
    assert!(!h.cocycle_basis.is_empty());
    for z in &h.cocycle_basis {
        let def = deformation_from_cocycle(&e, &tc, z).unwrap();
        assert_eq!(&def.to_cochain(), z);
    }
    let zero = vec![Scalar::zero(Q); tc.space_dim(2)];
    let def = deformation_from_cocycle(&e, &tc, &zero).unwrap();
    assert!(def.mu1.is_zero() && def.psi1.is_zero() && def.delta1.is_zero());
}

#[test]
fn non_cocycles_fail_a_first_order_axiom() {
    let e = ex("z2");
    let tc = build_ch(&e, 3).unwrap();
    for seed in 0..5 {
        let z = random_cochain(tc.space_dim(2), seed);
        let (_, report) = deformation_report(&e, &tc, &z).unwrap();
        let cocycle = tc.complex().is_cocycle(2, &z).unwrap();
        assert_eq!(report.passed(), cocycle);
        if !cocycle {
            assert!(matches!(deformation_from_cocycle(&e, &tc, &z), Err(Error::CocycleCondition(_))));
        }
    }
}

#[test]
fn individual_axioms_detect_each_block() {
    let e = ex("z2");
    let tc = build_ch(&e, 3).unwrap();
    let h = cohomology(tc.complex(), 2).unwrap();
    let z = h.cocycle_basis[0].clone();
    for (k, b) in tc.blocks(2).iter().enumerate() {
        let mut bad = z.clone();
        for v in &mut bad[b.offset..b.offset + b.dim] {
            *v = v.clone() + Scalar::one(Q);
        }
        let (_, report) = deformation_report(&e, &tc, &bad).unwrap();
        assert!(!report.passed(), "block {k}");
    }
}

#[test]
fn coboundaries_are_trivial_deformations() {
    for name in ["z2", "trivial-z2", "graded-z2"] {
        let e = ex(name);
        let tc = build_ch(&e, 3).unwrap();
        let h = total_cohomology(&tc, 2).unwrap();
        for z in &h.coboundary_basis {
            let w = solve_witness(&tc, z).unwrap().expect("coboundary has a witness");
            coboundary_equivalence(&e, &tc, z, &w).unwrap_or_else(|err| panic!("{name}: {err}"));
        }
        for z in &h.class_reps {
            assert!(solve_witness(&tc, z).unwrap().is_none(), "{name}");
        }
        let zero1 = vec![Scalar::zero(Q); tc.space_dim(1)];
        let zero2 = vec![Scalar::zero(Q); tc.space_dim(2)];
        let eq = coboundary_equivalence(&e, &tc, &zero2, &zero1).unwrap();
        assert!(eq.alpha1.is_zero() && eq.gamma1.is_zero());
        assert!(coboundary_equivalence(&e, &tc, &h.cocycle_basis[0], &zero1).is_err() || h.cocycle_basis[0].iter().all(Scalar::is_zero));
    }
}

#[test]
fn wrong_witness_breaks_equivalence() {
    let e = ex("z2");
    let tc = build_ch(&e, 3).unwrap();
    let w = random_cochain(tc.space_dim(1), 9);
    let z = tc.differential(1).unwrap().mul_vec(&w);
    let def = InfinitesimalDeformation::from_cochain(&e, &tc, &z).unwrap();
    let good = Equivalence::from_cochain(&e, &tc, &w).unwrap();
    assert!(equivalence_checks(&e, &def, &good).passed());
    let mut shifted = w.clone();
    shifted[0] = shifted[0].clone() + Scalar::one(Q);
    let bad = Equivalence::from_cochain(&e, &tc, &shifted).unwrap();
    assert!(!equivalence_checks(&e, &def, &bad).passed());
}
