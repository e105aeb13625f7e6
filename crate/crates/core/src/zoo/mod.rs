//! Worked examples (group algebras, Sweedler's four-dimensional Hopf
//! algebra, trivial and comodule-algebra entwinings) and the structure file
//! format.

mod format;

pub use format::{from_json, from_json_unvalidated, load, load_unvalidated, save, to_json, FORMAT_TAG};

use crate::algcoalg::{
    compare_maps, validate_algebra, validate_coalgebra, FiniteAlgebra, FiniteCoalgebra, LinearMap, Triple,
};
use crate::entwine::{EntwiningStructure, GaloisData};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::report::{Check, Report};

/// An algebra and a coalgebra on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub algebra: FiniteAlgebra,
    pub coalgebra: FiniteCoalgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub bialgebra: Bialgebra,
    pub antipode: LinearMap,
}

impl Bialgebra {
    pub fn new(algebra: FiniteAlgebra, coalgebra: FiniteCoalgebra) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() || algebra.field() != coalgebra.field() {
            return Err(Error::Shape("algebra and coalgebra must live on the same space".into()));
        }
        Ok(Bialgebra { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }
}

impl HopfAlgebra {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.bialgebra.algebra
    }

    pub fn coalgebra(&self) -> &FiniteCoalgebra {
        &self.bialgebra.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.bialgebra.field()
    }
}

/// Algebra and coalgebra axioms plus multiplicativity of `Δ` and `ε`.
pub fn validate_bialgebra(b: &Bialgebra) -> Report {
    let mut r = validate_algebra(&b.algebra);
    r.extend(validate_coalgebra(&b.coalgebra));
    let d = b.dim();
    let f = b.field();
    let l = b.algebra.labels();
    let mu = b.algebra.mult();
    let delta = b.coalgebra.comult();
    let eps = b.coalgebra.counit_map();
    let eta = b.algebra.unit_map();
    let swap = LinearMap::flip(f, &[d], &[d]).pad(&[d], &[d]);
    let mu2 = mu.tensor(mu).unwrap();
    r.push(compare_maps(
        "comultiplication multiplicative",
        &delta.then_after(mu),
        &mu2.then_after(&swap).then_after(&delta.tensor(delta).unwrap()),
        &[l, l],
    ));
    r.push(compare_maps(
        "comultiplication unital",
        &delta.then_after(eta),
        &eta.tensor(eta).unwrap().reshape(&[], &[d, d]).unwrap(),
        &[],
    ));
    r.push(compare_maps(
        "counit multiplicative",
        &eps.then_after(mu),
        &eps.tensor(eps).unwrap().reshape(&[d, d], &[]).unwrap(),
        &[l, l],
    ));
    r.push(compare_maps("counit unital", &eps.then_after(eta), &LinearMap::identity(f, &[]), &[]));
    r
}

pub fn validate_hopf(h: &HopfAlgebra) -> Report {
    let mut r = validate_bialgebra(&h.bialgebra);
    let d = h.dim();
    let l = h.algebra().labels();
    let mu = h.algebra().mult();
    let delta = h.coalgebra().comult();
    let unit_counit = h.algebra().unit_map().then_after(h.coalgebra().counit_map());
    let s = &h.antipode;
    r.push(compare_maps(
        "left antipode",
        &mu.then_after(&s.pad(&[], &[d])).then_after(delta),
        &unit_counit,
        &[l],
    ));
    r.push(compare_maps(
        "right antipode",
        &mu.then_after(&s.pad(&[d], &[])).then_after(delta),
        &unit_counit,
        &[l],
    ));
    r
}

fn ensure(report: Report, what: &str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Validation { what: what.into(), failed: report.failure_summary() })
    }
}

/// `ψ` = the flip `C⊗A → A⊗C`.
pub fn trivial_entwining(a: FiniteAlgebra, c: FiniteCoalgebra) -> Result<EntwiningStructure> {
    let psi = LinearMap::flip(a.field(), &[c.dim()], &[a.dim()]);
    EntwiningStructure::new(a, c, psi)
}

/// `ψ(a⊗a') = a'₁ ⊗ a a'₂`, which entwines `A` with itself exactly when `A`
/// is a bialgebra.
pub fn self_entwining_map(b: &Bialgebra) -> LinearMap {
    let d = b.dim();
    let f = b.field();
    b.algebra
        .mult()
        .pad(&[d], &[])
        .then_after(&LinearMap::flip(f, &[d], &[d]).pad(&[], &[d]))
        .then_after(&b.coalgebra.comult().pad(&[d], &[]))
}

pub fn bialgebra_self_entwining(b: &Bialgebra) -> Result<EntwiningStructure> {
    EntwiningStructure::new(b.algebra.clone(), b.coalgebra.clone(), self_entwining_map(b))
}

/// The canonical self-entwining of a Hopf algebra, with the translation map
/// and coaction attached.
pub fn hopf_self_entwining(h: &HopfAlgebra) -> Result<EntwiningStructure> {
    ensure(validate_hopf(h), "Hopf algebra")?;
    let tau = translation_map(h)?;
    let e = bialgebra_self_entwining(&h.bialgebra)?;
    let coaction = h.coalgebra().comult().clone();
    Ok(e.with_galois(GaloisData { translation: tau, coaction, antipode: Some(h.antipode.clone()) }))
}

/// Checks that `ρ: A → A⊗C` makes `A` a right comodule algebra over `c`.
pub fn validate_comodule_algebra(c: &Bialgebra, a: &FiniteAlgebra, coaction: &LinearMap) -> Report {
    let (da, dc) = (a.dim(), c.dim());
    let f = a.field();
    let la = a.labels();
    let mut r = Report::new();
    if coaction.dim_in() != da || coaction.dim_out() != da * dc {
        r.push(Check::fail("coaction shape", format!("{}x{}", coaction.dim_out(), coaction.dim_in())));
        return r;
    }
    let rho = coaction.reshape(&[da], &[da, dc]).unwrap();
    r.push(compare_maps(
        "coaction coassociative",
        &rho.pad(&[], &[dc]).then_after(&rho),
        &c.coalgebra.comult().pad(&[da], &[]).then_after(&rho),
        &[la],
    ));
    r.push(compare_maps(
        "coaction counital",
        &c.coalgebra.counit_map().pad(&[da], &[]).then_after(&rho).reshape(&[da], &[da]).unwrap(),
        &LinearMap::identity(f, &[da]),
        &[la],
    ));
    let swap = LinearMap::flip(f, &[dc], &[da]).pad(&[da], &[dc]);
    let rhs = a
        .mult()
        .tensor(c.algebra.mult())
        .unwrap()
        .then_after(&swap)
        .then_after(&rho.tensor(&rho).unwrap());
    r.push(compare_maps("coaction multiplicative", &rho.then_after(a.mult()), &rhs, &[la, la]));
    r.push(compare_maps(
        "coaction unital",
        &rho.then_after(a.unit_map()),
        &a.unit_map().tensor(c.algebra.unit_map()).unwrap().reshape(&[], &[da, dc]).unwrap(),
        &[],
    ));
    r
}

/// `ψ(c⊗a) = a₀ ⊗ c a₁` for a right `C`-comodule algebra `A`.
pub fn comodule_algebra_entwining(c: &Bialgebra, a: &FiniteAlgebra, coaction: &LinearMap) -> Result<EntwiningStructure> {
    ensure(validate_bialgebra(c), "bialgebra")?;
    ensure(validate_comodule_algebra(c, a, coaction), "comodule algebra")?;
    let (da, dc) = (a.dim(), c.dim());
    let f = a.field();
    let rho = coaction.reshape(&[da], &[da, dc])?;
    let psi = c
        .algebra
        .mult()
        .pad(&[da], &[])
        .then_after(&LinearMap::flip(f, &[dc], &[da]).pad(&[], &[dc]))
        .then_after(&rho.pad(&[dc], &[]));
    EntwiningStructure::new(a.clone(), c.coalgebra.clone(), psi)
}

/// `τ(c) = S(c₁) ⊗ c₂`, checked against both translation-map identities.
pub fn translation_map(h: &HopfAlgebra) -> Result<LinearMap> {
    let d = h.dim();
    let l = h.algebra().labels();
    let delta = h.coalgebra().comult();
    let mu = h.algebra().mult();
    let tau = h.antipode.pad(&[], &[d]).then_after(delta);
    let mut r = Report::new();
    // c⁽¹⁾ c⁽²⁾₀ ⊗ c⁽²⁾₁ = 1 ⊗ c
    let lhs = mu.pad(&[], &[d]).then_after(&delta.pad(&[d], &[])).then_after(&tau);
    let rhs = h.algebra().unit_map().pad(&[], &[d]).reshape(&[d], &[d, d]).unwrap();
    r.push(compare_maps("translation identity (c)", &lhs, &rhs, &[l]));
    // a₀ a₁⁽¹⁾ ⊗ a₁⁽²⁾ = 1 ⊗ a
    let lhs = mu.pad(&[], &[d]).then_after(&tau.pad(&[d], &[])).then_after(delta);
    r.push(compare_maps("translation identity (a)", &lhs, &rhs, &[l]));
    ensure(r, "translation map")?;
    Ok(tau)
}

fn q(field: FieldSpec, n: i64) -> Scalar {
    Scalar::from_i64(field, n)
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The group algebra of the cyclic group of order `n` with `Δg = g⊗g`.
pub fn group_algebra_hopf(field: FieldSpec, n: usize) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::Precondition("cyclic group order must be at least 1".into()));
    }
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let one = q(field, 1);
    let mult: Vec<Triple> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n)))
        .map(|(i, j, k)| (i, j, k, one.clone()))
        .collect();
    let comult: Vec<Triple> = (0..n).map(|i| (i, i, i, one.clone())).collect();
    let mut unit = vec![q(field, 0); n];
    unit[0] = one.clone();
    let algebra = FiniteAlgebra::validated(field, labels.clone(), &mult, unit)?;
    let coalgebra = FiniteCoalgebra::validated(field, labels, &comult, vec![one.clone(); n])?;
    let antipode = Matrix::from_triplets(field, n, n, (0..n).map(|i| ((n - i) % n, i, one.clone())));
    let h = HopfAlgebra {
        bialgebra: Bialgebra::new(algebra, coalgebra)?,
        antipode: LinearMap::new(vec![n], vec![n], antipode)?,
    };
    ensure(validate_hopf(&h), "group algebra")?;
    Ok(h)
}

/// Sweedler's Hopf algebra on `{1, g, x, gx}`: `g² = 1`, `x² = 0`,
/// `xg = −gx`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler_h4(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition("Sweedler's algebra needs characteristic ≠ 2".into()));
    }
    // basis index = a + 2b for g^a x^b
    let mut mult = Vec::new();
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, d) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if b + d >= 2 {
                continue;
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            mult.push((a + 2 * b, c + 2 * d, (a + c) % 2 + 2 * (b + d), q(field, sign)));
        }
    }
    let comult = vec![
        (0, 0, 0, q(field, 1)),
        (1, 1, 1, q(field, 1)),
        (2, 2, 0, q(field, 1)),
        (2, 1, 2, q(field, 1)),
        (3, 3, 1, q(field, 1)),
        (3, 0, 3, q(field, 1)),
    ];
    let labels = names(&["1", "g", "x", "gx"]);
    let (o, z) = (q(field, 1), q(field, 0));
    let algebra = FiniteAlgebra::validated(field, labels.clone(), &mult, vec![o.clone(), z.clone(), z.clone(), z.clone()])?;
    let coalgebra = FiniteCoalgebra::validated(field, labels, &comult, vec![o.clone(), o.clone(), z.clone(), z])?;
    let antipode = Matrix::from_triplets(field, 4, 4, [(0, 0, o.clone()), (1, 1, o.clone()), (3, 2, q(field, -1)), (2, 3, o)]);
    let h = HopfAlgebra {
        bialgebra: Bialgebra::new(algebra, coalgebra)?,
        antipode: LinearMap::new(vec![4], vec![4], antipode)?,
    };
    ensure(validate_hopf(&h), "Sweedler algebra")?;
    Ok(h)
}

/// `k[u]/(u²)` graded by `ℤ₂` with `u` odd, as a comodule algebra over `kℤ₂`.
pub fn graded_dual_numbers(field: FieldSpec) -> Result<(FiniteAlgebra, LinearMap)> {
    let (o, z) = (q(field, 1), q(field, 0));
    let a = FiniteAlgebra::validated(
        field,
        names(&["1", "u"]),
        &[(0, 0, 0, o.clone()), (0, 1, 1, o.clone()), (1, 0, 1, o.clone())],
        vec![o.clone(), z],
    )?;
    // ρ(1) = 1⊗1, ρ(u) = u⊗g; rows index A⊗C
    let rho = Matrix::from_triplets(field, 4, 2, [(0, 0, o.clone()), (3, 1, o)]);
    Ok((a, LinearMap::new(vec![2], vec![2, 2], rho)?))
}

/// Names accepted by [`example`].
pub const EXAMPLE_NAMES: &[&str] = &["k", "z2", "z3", "sweedler", "trivial-z2", "graded-z2", "corrupted-z2"];

/// Named example structures. `corrupted-z2` is returned unvalidated: its `ψ`
/// breaks the left pentagon on purpose.
pub fn example(name: &str, field: FieldSpec) -> Result<EntwiningStructure> {
    match name {
        "k" => trivial_entwining(FiniteAlgebra::ground(field), FiniteCoalgebra::ground(field)),
        "z2" => hopf_self_entwining(&group_algebra_hopf(field, 2)?),
        "z3" => hopf_self_entwining(&group_algebra_hopf(field, 3)?),
        "sweedler" => hopf_self_entwining(&sweedler_h4(field)?),
        "trivial-z2" => {
            let h = group_algebra_hopf(field, 2)?;
            trivial_entwining(h.algebra().clone(), h.coalgebra().clone())
        }
        "graded-z2" => {
            let h = group_algebra_hopf(field, 2)?;
            let (a, rho) = graded_dual_numbers(field)?;
            comodule_algebra_entwining(&h.bialgebra, &a, &rho)
        }
        "corrupted-z2" => {
            let h = group_algebra_hopf(field, 2)?;
            let psi = self_entwining_map(&h.bialgebra);
            // negate ψ(g⊗g) = g⊗1
            let flipped = Matrix::from_triplets(
                field,
                4,
                4,
                psi.matrix().entries().map(|(r, c, v)| (r, c, if c == 3 { -v } else { v.clone() })),
            );
            let psi = LinearMap::new(vec![2, 2], vec![2, 2], flipped)?;
            Ok(EntwiningStructure::new_unchecked(h.algebra().clone(), h.coalgebra().clone(), psi))
        }
        other => Err(Error::Precondition(format!(
            "unknown example '{other}', expected one of {}",
            EXAMPLE_NAMES.join(", ")
        ))),
    }
}

/// The valid examples, in a fixed order.
pub fn valid_examples(field: FieldSpec) -> Vec<(&'static str, EntwiningStructure)> {
    EXAMPLE_NAMES
        .iter()
        .filter(|n| **n != "corrupted-z2")
        .map(|n| (*n, example(n, field).expect("built-in example")))
        .collect()
}
