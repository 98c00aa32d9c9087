//! Workspace file handling: canonical round-trips over the shipped
//! fixtures, reserved names, diagnostics for malformed documents, and the
//! automatic naming used when computed families are written back out.

use soft_topology::{Context, SoftSet, SoftTopology, Workspace, WorkspaceError, ABS_NAME, NULL_NAME};
use std::path::PathBuf;

const FIXTURES: [&str; 6] = [
    "chain_pair.json",
    "diagnostic_pair.json",
    "house_restriction.json",
    "quad_space.json",
    "subspace_pair.json",
    "union_gap.json",
];

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

#[test]
fn every_fixture_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    for name in FIXTURES {
        let ws = Workspace::load(fixture_path(name)).unwrap();
        let copy = dir.path().join(name);
        ws.save(&copy).unwrap();
        let reloaded = Workspace::load(&copy).unwrap();
        assert_eq!(reloaded, ws, "{name} reload");
        assert_eq!(reloaded.to_json(), ws.to_json(), "{name} serialisation");
        // Saving what was just loaded is idempotent on the bytes.
        let saved = std::fs::read_to_string(&copy).unwrap();
        assert_eq!(saved, ws.to_json(), "{name} file contents");
    }
}

#[test]
fn declaration_order_survives_the_round_trip() {
    let ws = Workspace::load(fixture_path("quad_space.json")).unwrap();
    let set_names: Vec<&str> = ws.sets().keys().map(String::as_str).collect();
    assert_eq!(set_names, ["F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8"]);
    let topology_names: Vec<&String> = ws.topologies().keys().collect();
    assert_eq!(topology_names.len(), 4);
    assert_eq!(topology_names[0], "tau1");
    assert_eq!(topology_names[3], "tau4");

    let reparsed = Workspace::from_json(&ws.to_json()).unwrap();
    assert_eq!(
        reparsed.sets().keys().collect::<Vec<_>>(),
        ws.sets().keys().collect::<Vec<_>>()
    );
}

#[test]
fn omitted_rows_and_sections_default_to_empty() {
    let ws = Workspace::from_json(
        r#"{
            "universe": ["a", "b"],
            "parameters": ["p", "q"],
            "sets": { "F": { "q": ["b"] } }
        }"#,
    )
    .unwrap();
    assert!(ws.topologies().is_empty());
    let f = ws.resolve_set("F").unwrap();
    let p = ws.context().parameter_index("p").unwrap();
    let q = ws.context().parameter_index("q").unwrap();
    assert!(f.row(p).is_empty());
    assert_eq!(f.row(q), vec![ws.context().point_index("b").unwrap()]);
}

#[test]
fn reserved_names_resolve_but_cannot_be_declared() {
    let ws = Workspace::load(fixture_path("chain_pair.json")).unwrap();
    assert!(ws.resolve_set(NULL_NAME).unwrap().is_null());
    assert!(ws.resolve_set(ABS_NAME).unwrap().is_absolute());
    assert_eq!(ws.name_of(&SoftSet::null(ws.context())), Some(NULL_NAME));
    assert_eq!(ws.name_of(&SoftSet::absolute(ws.context())), Some(ABS_NAME));

    let err = Workspace::from_json(
        r#"{
            "universe": ["a"],
            "parameters": ["p"],
            "sets": { "NULL": {} }
        }"#,
    )
    .unwrap_err();
    assert!(matches!(err, WorkspaceError::ReservedName(ref n) if n == "NULL"));

    let err = Workspace::from_json(
        r#"{
            "universe": ["a"],
            "parameters": ["p"],
            "topologies": { "ABS": [] }
        }"#,
    )
    .unwrap_err();
    assert!(matches!(err, WorkspaceError::ReservedName(ref n) if n == "ABS"));
}

#[test]
fn unknown_labels_carry_their_location() {
    let err = Workspace::from_json(
        r#"{
            "universe": ["a", "b"],
            "parameters": ["p"],
            "sets": { "F": { "p": ["a", "z"] } }
        }"#,
    )
    .unwrap_err();
    assert_eq!(err.to_string(), "unknown point `z` in set `F`, row `p`");

    let err = Workspace::from_json(
        r#"{
            "universe": ["a"],
            "parameters": ["p"],
            "sets": { "F": { "r": [] } }
        }"#,
    )
    .unwrap_err();
    assert_eq!(err.to_string(), "unknown parameter `r` in set `F`");

    let err = Workspace::from_json(
        r#"{
            "universe": ["a"],
            "parameters": ["p"],
            "topologies": { "tau": ["NULL", "G", "ABS"] }
        }"#,
    )
    .unwrap_err();
    assert_eq!(err.to_string(), "unknown set `G` in topology `tau`");
}

#[test]
fn duplicate_declarations_are_rejected_not_collapsed() {
    // serde_json maps would keep the last duplicate silently; the workspace
    // parser must reject all three kinds of repetition instead.
    let err = Workspace::from_json(
        r#"{
            "universe": ["a"],
            "parameters": ["p"],
            "sets": { "F": {}, "F": { "p": ["a"] } }
        }"#,
    )
    .unwrap_err();
    assert_eq!(err.to_string(), "duplicate set `F`");

    let err = Workspace::from_json(
        r#"{
            "universe": ["a"],
            "parameters": ["p", "q"],
            "sets": { "F": { "p": [], "p": ["a"] } }
        }"#,
    )
    .unwrap_err();
    assert_eq!(err.to_string(), "duplicate row `p` in set `F`");

    let err = Workspace::from_json(
        r#"{
            "universe": ["a"],
            "parameters": ["p"],
            "topologies": { "tau": [], "tau": ["NULL"] }
        }"#,
    )
    .unwrap_err();
    assert_eq!(err.to_string(), "duplicate topology `tau`");
}

#[test]
fn malformed_documents_report_parse_positions() {
    let err = Workspace::from_json("{ \"universe\": [\"a\"],\n  \"parameters\": [}").unwrap_err();
    let message = err.to_string();
    assert!(message.starts_with("parse error:"), "{message}");
    assert!(message.contains("line 2"), "{message}");

    let err = Workspace::from_json(
        r#"{ "universe": ["a"], "parameters": ["p"], "extra": 1 }"#,
    )
    .unwrap_err();
    assert!(err.to_string().contains("unknown field `extra`"));

    let missing = Workspace::load(fixture_path("no_such_file.json")).unwrap_err();
    assert!(missing.to_string().contains("no_such_file.json"));
}

#[test]
fn duplicate_labels_in_the_context_are_rejected() {
    let err = Workspace::from_json(
        r#"{ "universe": ["a", "a"], "parameters": ["p"] }"#,
    )
    .unwrap_err();
    assert!(err.to_string().contains('a'));

    let err = Workspace::from_json(
        r#"{ "universe": ["a"], "parameters": ["p", "p"] }"#,
    )
    .unwrap_err();
    assert!(err.to_string().contains('p'));
}

#[test]
fn computed_families_are_written_back_with_fresh_names() {
    let ws = Workspace::load(fixture_path("chain_pair.json")).unwrap();
    let tau1 = SoftTopology::new(ws.context(), &ws.family("tau1").unwrap()).unwrap();
    let tau2 = SoftTopology::new(ws.context(), &ws.family("tau2").unwrap()).unwrap();
    let join = SoftTopology::join(&[tau1, tau2]).unwrap();

    let out = Workspace::from_named_families(
        ws.context(),
        "H",
        &[("sup".to_string(), join.opens().to_vec())],
    )
    .unwrap();

    // Every distinct non-trivial open gets a fresh H-name, in order of
    // first appearance, and the family entry references them.
    assert_eq!(out.sets().len(), join.opens().len() - 2);
    for (position, name) in out.sets().keys().enumerate() {
        assert_eq!(name, &format!("H{}", position + 1));
    }
    let members = out.topology_members("sup").unwrap();
    assert_eq!(members.len(), join.opens().len());
    assert_eq!(members[0], NULL_NAME);
    assert_eq!(members.last().unwrap(), ABS_NAME);

    // The written-back workspace replays to the same family.
    let replay = Workspace::from_json(&out.to_json()).unwrap();
    let family = replay.family("sup").unwrap();
    assert_eq!(family, join.opens());
}

#[test]
fn set_and_family_lookups_report_unknown_names() {
    let ctx = Context::new(
        vec!["a".to_string()],
        vec!["p".to_string()],
    )
    .unwrap();
    let ws = Workspace::new(&ctx);
    assert!(matches!(
        ws.resolve_set("F"),
        Err(WorkspaceError::UnknownLabel { kind: "set", .. })
    ));
    assert!(matches!(
        ws.family("tau"),
        Err(WorkspaceError::UnknownLabel { kind: "topology", .. })
    ));
}
