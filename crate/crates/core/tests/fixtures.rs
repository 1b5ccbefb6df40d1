//! Committed scripts must match what the generators produce today.
//! Set TWISTLAB_REGEN_FIXTURES=1 to rewrite them.

use std::path::PathBuf;

use twistlab::families::{family_script, FamilyId};
use twistlab::fixtures::{fixture_plan, BAD_BOUND_NAME};
use twistlab::moves::MoveScript;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn bad_bound() -> MoveScript {
    let mut s = family_script(FamilyId::T3_7, 0).unwrap();
    s.claim.cost_bound = 4;
    s
}

#[test]
fn fixtures_match_generators() {
    let regen = std::env::var_os("TWISTLAB_REGEN_FIXTURES").is_some();
    let mut expected: Vec<(String, String)> = fixture_plan()
        .into_iter()
        .map(|(name, fam, param)| (name, family_script(fam, param).unwrap().to_json() + "\n"))
        .collect();
    expected.push((BAD_BOUND_NAME.to_string(), bad_bound().to_json() + "\n"));
    let mut drifted = Vec::new();
    for (name, json) in &expected {
        let path = dir().join(format!("{name}.json"));
        if regen {
            std::fs::write(&path, json).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(on_disk) if on_disk == *json => {}
            _ => drifted.push(name.clone()),
        }
    }
    assert!(drifted.is_empty(), "fixtures out of date: {drifted:?}");
}
