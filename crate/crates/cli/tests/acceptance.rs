//! Acceptance criteria, one line each. Exits non-zero if any fails.

#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use entwine::algcoalg::{FiniteAlgebra, FiniteCoalgebra};
use entwine::compalg::{
    check_derivation, check_prelie_identities, coboundary, diamond, equivariant_checks, graded_commutativity,
    translation_criterion, verify_weak_comp, CompContext, Side,
};
use entwine::complexes::{
    betti_numbers, build_apsi_cv, build_cpsi_am, check_contracting_homotopy, cohomology, hom_cm_bimodule,
    projectivity_witness,
};
use entwine::deform::{build_ch, build_double_complex, total_dim};
use entwine::entwine::{check_bowtie, EntwiningStructure};
use entwine::exactla::FieldSpec;
use entwine::zoo::{group_algebra_hopf, load, load_unvalidated, trivial_entwining};
use entwine_cli::commands;

const Q: FieldSpec = FieldSpec::Rationals;
const FIXTURES: [&str; 6] = ["k", "z2", "z3", "sweedler", "trivial-z2", "graded-z2"];

type Outcome = Result<(), String>;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

fn fixture(name: &str) -> EntwiningStructure {
    load(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(ctx: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{ctx}: {e}")
}

fn bowtie() -> Outcome {
    let ground = trivial_entwining(FiniteAlgebra::ground(Q), FiniteCoalgebra::ground(Q)).map_err(err("(k,k)"))?;
    let z2 = group_algebra_hopf(Q, 2).map_err(err("kZ2"))?;
    let trivial = trivial_entwining(z2.algebra().clone(), z2.coalgebra().clone()).map_err(err("(kZ2,kZ2)"))?;
    let mut cases = vec![("(k,k)", ground), ("(kZ2,kZ2) trivial", trivial)];
    for name in ["z2", "z3", "sweedler"] {
        cases.push((name, fixture(name)));
    }
    for (name, e) in &cases {
        let r = check_bowtie(e.algebra(), e.coalgebra(), e.psi()).map_err(err(name))?;
        ensure(r.passed(), || format!("{name}: {}", r.failure_summary()))?;
    }
    let bad = load_unvalidated(fixture_path("corrupted-z2")).map_err(err("corrupted"))?;
    let r = check_bowtie(bad.algebra(), bad.coalgebra(), bad.psi()).map_err(err("corrupted"))?;
    let named = r.get("left pentagon").is_some_and(|c| !c.passed && c.witness.is_some());
    ensure(named, || format!("corrupted fixture: expected a named left pentagon failure, got [{}]", r.failure_summary()))
}

fn squares_vanish() -> Outcome {
    for name in FIXTURES {
        let e = fixture(name);
        let regular = e.algebra().regular_bimodule();
        let hom = hom_cm_bimodule(&e, &regular).map_err(err(name))?;
        build_cpsi_am(&e, &regular, 3).map_err(err(&format!("{name}, M = A")))?;
        build_cpsi_am(&e, &hom, 3).map_err(err(&format!("{name}, M = Hom(C,A)")))?;
        build_apsi_cv(&e, &e.coalgebra().regular_bicomodule(), 3).map_err(err(&format!("{name}, V = C")))?;
    }
    Ok(())
}

fn hochschild_cartier_oracle() -> Outcome {
    let mut algebras = vec![("k", FiniteAlgebra::ground(Q), FiniteCoalgebra::ground(Q))];
    for n in [2, 3] {
        let h = group_algebra_hopf(Q, n).map_err(err("group algebra"))?;
        algebras.push((if n == 2 { "kZ2" } else { "kZ3" }, h.algebra().clone(), h.coalgebra().clone()));
    }
    for (name, a, c) in algebras {
        let e = trivial_entwining(a.clone(), FiniteCoalgebra::ground(Q)).map_err(err(name))?;
        let cx = build_cpsi_am(&e, &a.regular_bimodule(), 5).map_err(err(name))?;
        for n in 0..=4 {
            ensure(cx.differential(n).unwrap() == &oracle::hochschild(&a, n), || format!("{name}: Hochschild d^{n}"))?;
        }
        let e = trivial_entwining(FiniteAlgebra::ground(Q), c.clone()).map_err(err(name))?;
        let cx = build_apsi_cv(&e, &c.regular_bicomodule(), 5).map_err(err(name))?;
        for n in 0..=4 {
            ensure(cx.differential(n).unwrap() == &oracle::cartier(&c, n), || format!("{name}: Cartier d^{n}"))?;
        }
    }
    Ok(())
}

fn hopf_acyclicity() -> Outcome {
    let e = fixture("z2");
    let cx = build_cpsi_am(&e, &e.algebra().regular_bimodule(), 3).map_err(err("z2"))?;
    let b = betti_numbers(&cx).map_err(err("z2"))?;
    ensure(b == [2, 0, 0], || format!("kZ2 betti {b:?}, expected [2, 0, 0]"))?;
    let e = fixture("sweedler");
    let cx = build_cpsi_am(&e, &e.algebra().regular_bimodule(), 3).map_err(err("H4"))?;
    let b = betti_numbers(&cx).map_err(err("H4"))?;
    ensure(b == [4, 0, 0], || format!("H4 betti over Q {b:?}, expected [4, 0, 0]"))?;
    let field = FieldSpec::prime(10007).map_err(err("F_p"))?;
    let ep = entwine::zoo::example("sweedler", field).map_err(err("H4 over F_p"))?;
    let cx = build_cpsi_am(&ep, &ep.algebra().regular_bimodule(), 3).map_err(err("H4 over F_p"))?;
    let bp = betti_numbers(&cx).map_err(err("H4 over F_p"))?;
    ensure(bp == b, || format!("H4 betti over F_10007 {bp:?} differs from Q {b:?}"))
}

fn contracting_homotopy() -> Outcome {
    let e = fixture("z2");
    for n in 1..=2 {
        let c = check_contracting_homotopy(&e, &e.algebra().regular_bimodule(), n).map_err(err("kZ2"))?;
        ensure(c.passed, || format!("kZ2, n = {n}: {:?}", c.witness))?;
    }
    let e = fixture("sweedler");
    let c = check_contracting_homotopy(&e, &e.algebra().regular_bimodule(), 1).map_err(err("H4"))?;
    ensure(c.passed, || format!("H4, n = 1: {:?}", c.witness))
}

fn projectivity() -> Outcome {
    for name in ["z2", "sweedler"] {
        let e = fixture(name);
        let chi = projectivity_witness(&e).map_err(err(name))?;
        ensure(chi.is_some(), || format!("{name}: no projectivity witness"))?;
        let regular = e.algebra().regular_bimodule();
        for (label, m) in [("A", regular.clone()), ("Hom(C,A)", hom_cm_bimodule(&e, &regular).map_err(err(name))?)] {
            let cx = build_cpsi_am(&e, &m, 2).map_err(err(name))?;
            let b = cohomology(&cx, 1).map_err(err(name))?.betti;
            ensure(b == 0, || format!("{name}, M = {label}: betti(1) = {b}"))?;
        }
    }
    Ok(())
}

fn contexts(names: &[&str]) -> Result<Vec<(String, CompContext)>, String> {
    let mut out = Vec::new();
    for name in names {
        for side in [Side::Algebra, Side::Coalgebra] {
            out.push((format!("{name} {side}"), CompContext::new(fixture(name), side).map_err(err(name))?));
        }
    }
    Ok(out)
}

fn weak_comp() -> Outcome {
    for (label, ctx) in contexts(&FIXTURES)? {
        let r = verify_weak_comp(&ctx, 2).map_err(err(&label))?;
        ensure(r.passed(), || format!("{label}: {}", r.failure_summary()))?;
    }
    Ok(())
}

fn pi_identities() -> Outcome {
    for (label, ctx) in contexts(&FIXTURES)? {
        let e = ctx.entwining();
        let one_cochain = match ctx.side() {
            Side::Algebra => e.coalgebra().counit_map().tensor(&e.id_a(1)),
            Side::Coalgebra => e.algebra().unit_map().tensor(&e.id_c(1)),
        }
        .map_err(err(&label))?;
        let f = ctx.cochain(1, &one_cochain).map_err(err(&label))?;
        ensure(&coboundary(&ctx, &f).map_err(err(&label))? == ctx.pi(), || format!("{label}: π ≠ d(1-cochain)"))?;
        ensure(diamond(&ctx, ctx.pi(), ctx.pi()).map_err(err(&label))?.is_zero(), || format!("{label}: π◇π ≠ 0"))?;
    }
    Ok(())
}

fn derivation_and_identity() -> Outcome {
    for (label, ctx) in contexts(&["z2"])? {
        for m in 0..=3 {
            for n in 0..=(3 - m) {
                for f in ctx.basis(m) {
                    for g in ctx.basis(n) {
                        let r = check_derivation(&ctx, &f, &g).map_err(err(&label))?;
                        ensure(r.passed(), || format!("{label} ({m},{n}): {}", r.failure_summary()))?;
                        let r = check_prelie_identities(&ctx, &f, &g, &g).map_err(err(&label))?;
                        let ok = r.get("◇/cup identity").is_some_and(|c| c.passed);
                        ensure(ok, || format!("{label} ({m},{n}): ◇/cup identity"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn residual() -> Outcome {
    for (label, ctx) in contexts(&FIXTURES)? {
        for m in 0..=3 {
            for n in 0..=(3 - m) {
                let r = graded_commutativity(&ctx, m, n).map_err(err(&label))?;
                ensure(r.passed(), || format!("{label} ({m},{n}): {}", r.failure_summary()))?;
            }
        }
    }
    Ok(())
}

fn equivariant_suite() -> Outcome {
    let ctx = CompContext::new(fixture("z2"), Side::Algebra).map_err(err("z2"))?;
    let r = equivariant_checks(&ctx, 2).map_err(err("z2"))?;
    ensure(r.passed(), || r.failure_summary())?;
    for n in 0..=2 {
        let c = translation_criterion(&ctx, n).map_err(err("z2"))?;
        ensure(c.passed, || format!("degree {n}: {:?}", c.witness))?;
    }
    Ok(())
}

fn double_complex() -> Outcome {
    for name in FIXTURES {
        let e = fixture(name);
        build_double_complex(&e, 2, 2).map_err(err(name))?;
        let tc = build_ch(&e, 3).map_err(err(name))?;
        let (a, c) = (e.dim_a(), e.dim_c());
        for n in 1..=3u32 {
            let formula = a.pow(n) * a
                + (1..n).map(|k| c * a.pow(n - k) * a * c.pow(k)).sum::<usize>()
                + c * c.pow(n);
            let got = tc.space_dim(n as usize);
            ensure(got == formula && total_dim(a, c, n as usize) == formula, || {
                format!("{name}: dim C_H^{n} = {got}, formula {formula}")
            })?;
        }
    }
    Ok(())
}

fn deformation_round_trip() -> Outcome {
    let path = fixture_path("z2");
    let r = commands::deform(vec!["deform".into()], &path, 3, 0).map_err(|e| e.message)?;
    let failed: Vec<String> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    ensure(failed.is_empty(), || failed.join(", "))?;
    let count = |prefix: &str| r.checks.iter().filter(|c| c.name.starts_with(prefix)).count();
    ensure(count("cocycle Z²") > 0 && count("coboundary B²") > 0, || "empty Z² or B² basis".into())?;
    ensure(r.checks.iter().any(|c| c.name.starts_with("random non-cocycle (seed 0)") && c.passed), || {
        "seed-0 non-cocycle was not rejected".into()
    })
}

fn run_cli(args: &[&str], json: &Path) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_entwine"))
        .args(args)
        .arg("--json")
        .arg(json)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code().is_some_and(|c| c <= 1), || {
        format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr))
    })?;
    std::fs::read(json).map_err(|e| e.to_string())
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("entwine-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut suite: Vec<Vec<String>> = Vec::new();
    for name in FIXTURES.iter().chain(["corrupted-z2"].iter()) {
        let p = fixture_path(name).display().to_string();
        suite.push(vec!["verify".into(), p.clone()]);
        if *name == "corrupted-z2" {
            continue;
        }
        suite.push(vec!["cohom".into(), p.clone()]);
        suite.push(vec!["cohom".into(), p.clone(), "--side".into(), "C".into()]);
        suite.push(vec!["cup".into(), p.clone(), "--deg".into(), "1".into(), "1".into()]);
        suite.push(vec!["equivariant".into(), p.clone(), "--max-degree".into(), "2".into()]);
        suite.push(vec!["deform".into(), p.clone()]);
    }
    let run_all = |tag: &str| -> Result<Vec<Vec<u8>>, String> {
        suite
            .iter()
            .enumerate()
            .map(|(i, args)| {
                let args: Vec<&str> = args.iter().map(String::as_str).collect();
                run_cli(&args, &dir.join(format!("{tag}-{i}.json")))
            })
            .collect()
    };
    let (first, second) = (run_all("a")?, run_all("b")?);
    for (i, (x, y)) in first.iter().zip(&second).enumerate() {
        ensure(x == y, || format!("{:?} differs between runs", suite[i]))?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 14] = [
        ("bow-tie suite", Duration::from_secs(1), bowtie),
        ("d∘d = 0 on all complexes, degrees ≤ 3", Duration::from_secs(30), squares_vanish),
        ("Hochschild/Cartier oracle, degrees ≤ 4", Duration::from_secs(60), hochschild_cartier_oracle),
        ("Hopf acyclicity (kZ2, H4)", Duration::from_secs(300), hopf_acyclicity),
        ("contracting homotopy", Duration::from_secs(60), contracting_homotopy),
        ("projectivity witness", Duration::from_secs(60), projectivity),
        ("weak comp axioms, degrees ≤ 2, both sides", Duration::from_secs(120), weak_comp),
        ("π = d(1-cochain) and π◇π = 0", Duration::from_secs(60), pi_identities),
        ("derivation and ◇/cup identity on kZ2", Duration::from_secs(120), derivation_and_identity),
        ("graded commutativity residual", Duration::from_secs(300), residual),
        ("equivariant suite on kZ2", Duration::from_secs(60), equivariant_suite),
        ("double complex and C_H dimensions", Duration::from_secs(60), double_complex),
        ("deformation round trip on kZ2", Duration::from_secs(300), deformation_round_trip),
        ("determinism of structured reports", Duration::from_secs(300), determinism),
    ];
    let mut failures = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *budget, || format!("took {:.1} s, budget {} s", elapsed.as_secs_f64(), budget.as_secs()))
        });
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({:.2} s)", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name} ({:.2} s): {why}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
