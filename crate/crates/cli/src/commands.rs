//! One function per subcommand. Each returns a [`CliReport`]; errors that
//! prevent a report from being produced come back as [`CliError`].

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use entwine::compalg::{
    cup, equivariant_checks, equivariant_complex, graded_commutativity, sqcup, translation_criterion, CompContext, Side,
};
use entwine::complexes::{betti_numbers, build_apsi_cv, build_cpsi_am, cohomology, hom_cm_bimodule, CochainComplex};
use entwine::deform::{
    build_ch, coboundary_equivalence, deformation_report, solve_witness, total_cohomology, InfinitesimalDeformation,
};
use entwine::entwine::{full_report, EntwiningStructure};
use entwine::exactla::{Scalar, Vector};
use entwine::report::Check;
use entwine::zoo::{example, load, load_unvalidated, to_json, EXAMPLE_NAMES};
use entwine::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::modules::{parse_module, Coefficients};
use crate::report::{CliReport, StructureSummary};

pub const DEFAULT_DEGREE: usize = 3;
pub const HARD_DEGREE_CAP: usize = 4;

/// Exit code 1: a mathematical check failed. Exit code 2: input could not be
/// read, parsed or used.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Validation { .. } | Error::InternalConsistency(_) | Error::CocycleCondition(_) => 1,
            _ => 2,
        };
        CliError { code, message: err.to_string() }
    }
}

pub fn usage(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

pub fn check_degree(n: usize, unsafe_degree: bool) -> Result<usize, CliError> {
    if n > HARD_DEGREE_CAP && !unsafe_degree {
        return Err(usage(format!(
            "degree {n} exceeds the cap {HARD_DEGREE_CAP}; pass --unsafe-degree to override (spaces grow like dim C·(dim A)^n)"
        )));
    }
    Ok(n)
}

fn open(path: &Path, report: &mut CliReport) -> Result<EntwiningStructure, CliError> {
    let e = load(path)?;
    report.structure = Some(StructureSummary::of(&e));
    Ok(e)
}

fn fmt_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn timed(mut report: CliReport, start: Instant) -> CliReport {
    report.elapsed = start.elapsed();
    report
}

/// All validators and the four bow-tie relations.
pub fn verify(command: Vec<String>, path: &Path) -> Result<CliReport, CliError> {
    let start = Instant::now();
    let mut r = CliReport::new(command);
    let e = load_unvalidated(path)?;
    r.structure = Some(StructureSummary::of(&e));
    r.extend(full_report(&e, 2));
    Ok(timed(r, start))
}

/// Where cohomology takes its values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Values {
    /// `A` (algebra side) or `C` (coalgebra side) over itself.
    Regular,
    /// `Hom(C, A)` with the ψ-twisted bimodule structure (algebra side).
    HomCa,
    File(PathBuf),
}

impl std::str::FromStr for Values {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "self" | "regular" => Values::Regular,
            "hom" => Values::HomCa,
            path => Values::File(PathBuf::from(path)),
        })
    }
}

#[derive(Serialize)]
struct DegreeRow {
    degree: usize,
    dim: usize,
    betti: Option<usize>,
}

fn degree_table(cx: &CochainComplex) -> Result<Vec<DegreeRow>, CliError> {
    let betti = betti_numbers(cx)?;
    Ok((0..=cx.max_degree()).map(|n| DegreeRow { degree: n, dim: cx.space_dim(n), betti: betti.get(n).copied() }).collect())
}

/// Betti numbers of `C_ψ(A, M)` or `A_ψ(C, V)` in degrees below `max_degree`.
pub fn cohom(command: Vec<String>, path: &Path, side: Side, values: &Values, max_degree: usize) -> Result<CliReport, CliError> {
    let start = Instant::now();
    let mut r = CliReport::new(command);
    let e = open(path, &mut r)?;
    if max_degree == 0 {
        return Err(usage("--max-degree must be at least 1"));
    }
    let coeffs = match (values, side) {
        (Values::Regular, Side::Algebra) => Coefficients::Bimodule(e.algebra().regular_bimodule()),
        (Values::Regular, Side::Coalgebra) => Coefficients::Bicomodule(e.coalgebra().regular_bicomodule()),
        (Values::HomCa, Side::Algebra) => Coefficients::Bimodule(hom_cm_bimodule(&e, &e.algebra().regular_bimodule())?),
        (Values::HomCa, Side::Coalgebra) => return Err(usage("--values hom is only defined on the algebra side")),
        (Values::File(p), _) => {
            let text = std::fs::read_to_string(p).map_err(|err| usage(format!("{}: {err}", p.display())))?;
            parse_module(&e, &text).map_err(|err| usage(format!("{}: {err}", p.display())))?
        }
    };
    let cx = match (&coeffs, side) {
        (Coefficients::Bimodule(m), Side::Algebra) => build_cpsi_am(&e, m, max_degree)?,
        (Coefficients::Bicomodule(v), Side::Coalgebra) => build_apsi_cv(&e, v, max_degree)?,
        _ => return Err(usage("the values file does not match --side")),
    };
    r.push(Check::pass(format!("d∘d = 0 through degree {max_degree}")));
    let table = degree_table(&cx)?;
    let betti: Vec<usize> = table.iter().filter_map(|row| row.betti).collect();
    r.line(format!("side {side}, values {}", describe(values)));
    r.line(format!("betti: {}", betti.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")));
    r.table("degrees", table);
    r.table("betti", betti);
    Ok(timed(r, start))
}

fn describe(v: &Values) -> String {
    match v {
        Values::Regular => "regular".into(),
        Values::HomCa => "hom".into(),
        Values::File(p) => p.display().to_string(),
    }
}

#[derive(Serialize)]
struct ProductRow {
    left: usize,
    right: usize,
    cup: Vec<String>,
    sqcup: Vec<String>,
}

/// `∪` and `⊔` on class representatives of `H^m × H^n`, as classes in
/// `H^{m+n}`, and the residual `ξ∪η − (−1)^{mn} η⊔ξ`.
pub fn cup_table(command: Vec<String>, path: &Path, side: Side, m: usize, n: usize) -> Result<CliReport, CliError> {
    let start = Instant::now();
    let mut r = CliReport::new(command);
    let e = open(path, &mut r)?;
    let ctx = CompContext::new(e, side)?;
    let cx = ctx.complex(m + n + 1)?;
    let (hm, hn, hmn) = (cohomology(&cx, m)?, cohomology(&cx, n)?, cohomology(&cx, m + n)?);
    r.line(format!("side {side}: dim H^{m} = {}, dim H^{n} = {}, dim H^{} = {}", hm.betti, hn.betti, m + n, hmn.betti));
    let mut rows = Vec::new();
    for (i, x) in hm.class_reps.iter().enumerate() {
        for (j, y) in hn.class_reps.iter().enumerate() {
            let xi = ctx.cochain_from_vector(m, x)?;
            let eta = ctx.cochain_from_vector(n, y)?;
            let c = hmn.reduce(&cup(&ctx, &xi, &eta)?.flatten())?;
            let s = hmn.reduce(&sqcup(&ctx, &xi, &eta)?.flatten())?;
            r.line(format!("[{i}] ∪ [{j}] = ({})   [{i}] ⊔ [{j}] = ({})", fmt_vec(&c).join(", "), fmt_vec(&s).join(", ")));
            rows.push(ProductRow { left: i, right: j, cup: fmt_vec(&c), sqcup: fmt_vec(&s) });
        }
    }
    r.table("products", rows);
    r.table("dims", [hm.betti, hn.betti, hmn.betti]);
    r.extend(graded_commutativity(&ctx, m, n)?);
    Ok(timed(r, start))
}

/// The ψ-equivariant subcomplex: dimensions, cohomology, the structural
/// checks and, with a translation map, the characterization by `f∪τ = τ*f`.
pub fn equivariant(command: Vec<String>, path: &Path, max_degree: usize) -> Result<CliReport, CliError> {
    let start = Instant::now();
    let mut r = CliReport::new(command);
    let e = open(path, &mut r)?;
    if max_degree == 0 {
        return Err(usage("--max-degree must be at least 1"));
    }
    let has_translation = e.galois().is_some();
    let ctx = CompContext::new(e, Side::Algebra)?;
    let (cx, _) = equivariant_complex(&ctx, max_degree)?;
    let table = degree_table(&cx)?;
    r.line(format!(
        "equivariant dims: {}",
        table.iter().map(|row| row.dim.to_string()).collect::<Vec<_>>().join(" ")
    ));
    r.table("degrees", table);
    r.extend(equivariant_checks(&ctx, max_degree - 1)?);
    if has_translation {
        for n in 0..max_degree {
            r.push(translation_criterion(&ctx, n)?);
        }
    } else {
        r.line("no translation map: skipping the f∪τ = τ*f criterion");
    }
    Ok(timed(r, start))
}

#[derive(Serialize)]
struct BlockParts {
    mu1: Vec<String>,
    psi1: Vec<String>,
    delta1: Vec<String>,
}

impl BlockParts {
    fn of(d: &InfinitesimalDeformation) -> Self {
        BlockParts {
            mu1: fmt_vec(&d.mu1.matrix().flatten()),
            psi1: fmt_vec(&d.psi1.matrix().flatten()),
            delta1: fmt_vec(&d.delta1.matrix().flatten()),
        }
    }
}

fn random_non_cocycle(tc: &entwine::deform::TotalComplex, seed: u64) -> Result<Vector, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = tc.complex().field();
    for _ in 0..64 {
        let z: Vector = (0..tc.space_dim(2)).map(|_| Scalar::from_i64(field, rng.gen_range(-2..=2))).collect();
        if !tc.complex().is_cocycle(2, &z)? {
            return Ok(z);
        }
    }
    Err(CliError { code: 1, message: "every sampled 2-cochain was a cocycle".into() })
}

/// `H²` of the total complex as infinitesimal deformations: every cocycle
/// basis element is checked against the first-order axioms, every coboundary
/// basis element is carried to the trivial deformation, and a seeded random
/// non-cocycle must be rejected.
pub fn deform(command: Vec<String>, path: &Path, max_degree: usize, seed: u64) -> Result<CliReport, CliError> {
    let start = Instant::now();
    let mut r = CliReport::new(command);
    let e = open(path, &mut r)?;
    if max_degree < 3 {
        return Err(usage("deform needs --max-degree ≥ 3 to reach H²"));
    }
    let tc = build_ch(&e, max_degree)?;
    let dims: Vec<usize> = (0..=max_degree).map(|k| tc.space_dim(k)).collect();
    let betti = betti_numbers(tc.complex())?;
    r.line(format!("total dims: {}", dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")));
    r.line(format!("total betti: {}", betti.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")));
    r.table("total_dims", &dims);
    r.table("betti", &betti);
    r.push(Check::pass(format!("D∘D = 0 through degree {max_degree}")));

    let h2 = total_cohomology(&tc, 2)?;
    let mut classes = Vec::new();
    for z in &h2.class_reps {
        classes.push(BlockParts::of(&InfinitesimalDeformation::from_cochain(&e, &tc, z)?));
    }
    r.table("h2_classes", classes);

    for (i, z) in h2.cocycle_basis.iter().enumerate() {
        let (_, report) = deformation_report(&e, &tc, z)?;
        let name = format!("cocycle Z²[{i}] is a first-order deformation");
        r.push(if report.passed() { Check::pass(name) } else { Check::fail(name, report.failure_summary()) });
    }
    for (i, z) in h2.coboundary_basis.iter().enumerate() {
        let name = format!("coboundary B²[{i}] is equivalent to the trivial deformation");
        let check = match solve_witness(&tc, z)? {
            None => Check::fail(name, "no 1-cochain w with Dw = z"),
            Some(w) => match coboundary_equivalence(&e, &tc, z, &w) {
                Ok(_) => Check::pass(name),
                Err(err) => Check::fail(name, err.to_string()),
            },
        };
        r.push(check);
    }
    for (i, z) in h2.class_reps.iter().enumerate() {
        let name = format!("class H²[{i}] is not equivalent to the trivial deformation");
        r.push(match solve_witness(&tc, z)? {
            None => Check::pass(name),
            Some(_) => Check::fail(name, "found w with Dw = z"),
        });
    }

    let zero = vec![Scalar::zero(e.field()); tc.space_dim(2)];
    let (d0, report) = deformation_report(&e, &tc, &zero)?;
    let trivial = report.passed() && d0.mu1.is_zero() && d0.psi1.is_zero() && d0.delta1.is_zero();
    r.push(Check::from_witness("zero cocycle gives the undeformed structure", (!trivial).then(|| report.failure_summary())));

    let z = random_non_cocycle(&tc, seed)?;
    let (_, report) = deformation_report(&e, &tc, &z)?;
    let failed: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
    r.line(format!("random non-cocycle (seed {seed}) breaks: {}", failed.join(", ")));
    r.table("non_cocycle_failures", &failed);
    r.push(Check::from_witness(
        format!("random non-cocycle (seed {seed}) is rejected"),
        failed.is_empty().then(|| "all first-order axioms held".to_string()),
    ));
    Ok(timed(r, start))
}

/// Writes a built-in example as a structure file, or to standard output.
pub fn write_example(command: Vec<String>, name: &str, out: Option<&Path>) -> Result<(CliReport, String), CliError> {
    let start = Instant::now();
    let mut r = CliReport::new(command);
    let e = example(name, entwine::exactla::FieldSpec::Rationals)
        .map_err(|_| usage(format!("unknown example '{name}', expected one of {}", EXAMPLE_NAMES.join(", "))))?;
    r.structure = Some(StructureSummary::of(&e));
    let text = to_json(&e);
    if let Some(p) = out {
        std::fs::write(p, &text).map_err(|err| usage(format!("{}: {err}", p.display())))?;
        r.line(format!("wrote {}", p.display()));
    }
    r.table("example", name);
    Ok((timed(r, start), text))
}
