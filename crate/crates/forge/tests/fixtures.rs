use forge_cli::builtin::{builtin_fixture, construct, shipped, NAMES};
use forge_cli::run::validate;
use forge_cli::Document;

#[test]
fn shipped_files_match_the_core_constructions() {
    for name in NAMES {
        assert_eq!(builtin_fixture(name).unwrap(), construct(name).unwrap(), "{name}");
    }
}

#[test]
fn shipped_files_are_canonical_and_round_trip() {
    for name in NAMES {
        let text = shipped(name).unwrap();
        let doc = Document::parse(text).unwrap();
        assert_eq!(doc.to_json(), text, "{name} is not in canonical form");
        assert_eq!(Document::parse(&doc.to_json()).unwrap(), doc);
        validate(&doc).unwrap();
    }
}

#[test]
fn unknown_fixture_is_an_error() {
    assert!(builtin_fixture("no-such-fixture").is_err());
}

/// Rewrites the shipped files from the core constructions.
#[test]
#[ignore]
fn regenerate_fixture_files() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    for name in NAMES {
        std::fs::write(format!("{dir}/{name}.json"), construct(name).unwrap().to_json()).unwrap();
    }
}
