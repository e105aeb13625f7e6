use std::path::PathBuf;
use std::process::Command;

use entwine::exactla::FieldSpec;
use entwine::zoo::example;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_entwine"))
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("entwine-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str], name: &str) -> serde_json::Value {
    let path = tmp(name);
    let mut full: Vec<&str> = args.to_vec();
    let p = path.display().to_string();
    full.extend(["--json", &p]);
    let (code, _, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", &fixture("z2")]).0, 0);
    assert_eq!(run(&["verify", &fixture("k")]).0, 0);
    let (code, out, _) = run(&["verify", &fixture("corrupted-z2")]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL left pentagon"), "{out}");
    assert_eq!(run(&["verify", "does-not-exist.json"]).0, 2);
}

#[test]
fn malformed_input_exits_with_two() {
    let path = tmp("bad.json");
    std::fs::write(&path, "{ \"format\": \"entwine-structure/1\" ").unwrap();
    assert_eq!(run(&["cohom", &path.display().to_string()]).0, 2);
    assert_eq!(run(&["cohom", &fixture("z2"), "--max-degree", "7"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
}

#[test]
fn cohom_tables() {
    let v = json(&["cohom", &fixture("z2"), "--side", "A", "--values", "self", "--max-degree", "3"], "c1.json");
    assert_eq!(v["schema"], "entwine-report/1");
    assert_eq!(v["tables"]["betti"], serde_json::json!([2, 0, 0]));
    let v = json(&["cohom", &fixture("k"), "--max-degree", "3"], "c2.json");
    assert_eq!(v["tables"]["betti"], serde_json::json!([1, 0, 0]));
    let v = json(&["cohom", &fixture("trivial-z2"), "--max-degree", "1"], "c3.json");
    assert_eq!(v["tables"]["betti"][0], 4);
}

#[test]
fn cohom_with_a_module_file() {
    let e = example("z2", FieldSpec::Rationals).unwrap();
    let mult: Vec<_> = e.algebra().mult().matrix().entries().map(|(r, c, x)| serde_json::json!([r, c, x.to_string()])).collect();
    let file = serde_json::json!({ "format": "entwine-module/1", "kind": "bimodule", "dim": 2, "left": mult, "right": mult });
    let path = tmp("module.json");
    std::fs::write(&path, file.to_string()).unwrap();
    let p = path.display().to_string();
    let v = json(&["cohom", &fixture("z2"), "--values", &p, "--max-degree", "2"], "c4.json");
    assert_eq!(v["tables"]["betti"], serde_json::json!([2, 0]));
    assert_eq!(run(&["cohom", &fixture("z2"), "--side", "C", "--values", &p]).0, 2);
}

#[test]
fn cup_reports_products() {
    let v = json(&["cup", &fixture("z2"), "--deg", "0", "0"], "u1.json");
    assert_eq!(v["tables"]["products"].as_array().unwrap().len(), 4);
    assert_eq!(v["passed"], true);
    let v = json(&["cup", &fixture("graded-z2"), "--deg", "1", "1", "--side", "coalgebra"], "u2.json");
    assert_eq!(v["passed"], true);
}

#[test]
fn deform_report() {
    let v = json(&["deform", &fixture("z2")], "d.json");
    assert_eq!(v["tables"]["betti"], serde_json::json!([0, 0, 1]));
    assert!(!v["tables"]["non_cocycle_failures"].as_array().unwrap().is_empty());
    assert_eq!(run(&["deform", &fixture("z2"), "--max-degree", "2"]).0, 2);
}

#[test]
fn equivariant_report() {
    let v = json(&["equivariant", &fixture("z2"), "--max-degree", "2"], "e.json");
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"translation criterion in degree 1"));
}

#[test]
fn example_round_trip() {
    for name in ["sweedler", "z2", "trivial-z2"] {
        let path = tmp(&format!("{name}.json"));
        let p = path.display().to_string();
        assert_eq!(run(&["example", name, "--out", &p]).0, 0);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), std::fs::read_to_string(fixture(name)).unwrap());
        assert_eq!(run(&["verify", &p]).0, 0);
    }
    let (code, out, _) = run(&["example", "k"]);
    assert_eq!(code, 0);
    assert_eq!(out, std::fs::read_to_string(fixture("k")).unwrap());
}

#[test]
fn reports_are_byte_identical() {
    for args in [vec!["deform", &fixture("z2")[..]], vec!["cup", &fixture("z3")[..], "--deg", "1", "1"]] {
        let (a, b) = (tmp("r1.json"), tmp("r2.json"));
        for p in [&a, &b] {
            let mut full = args.clone();
            let s = p.display().to_string();
            full.extend(["--json", &s, "--seed", "3"]);
            assert_eq!(run(&full).0, 0);
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
}
