//! The shipped structure files agree with the built-in examples.
//! Run with `ENTWINE_BLESS=1` to regenerate them.

use std::path::PathBuf;

use entwine::exactla::FieldSpec;
use entwine::zoo::{example, load, load_unvalidated, to_json, EXAMPLE_NAMES};
use entwine::Error;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

#[test]
fn fixtures_match_generated_output() {
    let bless = std::env::var_os("ENTWINE_BLESS").is_some();
    for name in EXAMPLE_NAMES {
        let text = to_json(&example(name, FieldSpec::Rationals).unwrap());
        let path = fixture(name);
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(on_disk, text, "{name}");
    }
}

#[test]
fn valid_fixtures_load_and_round_trip() {
    for name in EXAMPLE_NAMES.iter().filter(|n| **n != "corrupted-z2") {
        let e = load(fixture(name)).unwrap();
        assert_eq!(e, example(name, FieldSpec::Rationals).unwrap(), "{name}");
        assert_eq!(e.galois().is_some(), ["z2", "z3", "sweedler"].contains(name), "{name}");
    }
}

#[test]
fn corrupted_fixture_names_the_relation() {
    match load(fixture("corrupted-z2")) {
        Err(Error::Validation { failed, .. }) => assert!(failed.contains("left pentagon"), "{failed}"),
        other => panic!("expected a validation error, got {other:?}"),
    }
    assert!(load_unvalidated(fixture("corrupted-z2")).is_ok());
}

#[test]
fn handwritten_fixture_loads() {
    let e = load(fixture("handwritten-trivial")).unwrap();
    assert_eq!((e.dim_a(), e.dim_c()), (2, 2));
    let flip = entwine::algcoalg::LinearMap::flip(FieldSpec::Rationals, &[2], &[2]);
    assert_eq!(e.psi().matrix(), flip.matrix());
}
