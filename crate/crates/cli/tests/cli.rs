mod common;

use common::*;
use fintop_cli::{EXIT_INVALID, EXIT_OK, EXIT_REFUTED, EXIT_USAGE};
use serde_json::{json, Value};

fn verdict(report: &Value, axiom: &str, mode: &str) -> bool {
    report["axioms"][axiom][mode]["verdict"].as_bool().unwrap_or_else(|| panic!("no {axiom}/{mode}"))
}

#[test]
fn sierpinski_report() {
    let out = run_on(&["classify"], SIERPINSKI);
    assert_eq!(out.code, EXIT_OK);
    let r = json(&out);
    assert_valid("classify", &r);
    for a in ["T0", "TD", "T1/2", "lambda-space", "nested", "SY"] {
        assert!(verdict(&r, a, "def") && verdict(&r, a, "char"), "{a}");
    }
    for a in ["T1", "CR", "recurrent"] {
        assert!(!verdict(&r, a, "def"), "{a}");
    }
    assert!(r["axioms"].as_object().unwrap().values().all(|e| e["agree"] == json!(true)));
    assert_eq!(r["height"]["space_height"], json!(1));
    assert_eq!(r["class_space"]["covers"], json!([[0, 1]]));
}

#[test]
fn four_point_report() {
    let out = run_on(&["classify"], FOUR_POINT);
    assert_eq!(out.code, EXIT_OK);
    let r = json(&out);
    assert_valid("classify", &r);
    assert!(!verdict(&r, "T0", "def"));
    assert_eq!(r["axioms"]["T0"]["def"]["witness"], json!({"kind": "pair", "x": 0, "y": 1}));
    assert_eq!(r["dynamics"]["recurrent"], json!(false));
    assert_eq!(r["dynamics"]["recurrent_points"], json!([0, 1, 3]));
    assert_eq!(r["dynamics"]["hyperbolic_like"], json!([]));
    assert_eq!(r["labels"], json!(["a", "b", "c", "d"]));
    assert_eq!(r["per_point"][0]["class"], json!([0, 1]));
    assert_eq!(r["per_point"][3]["label"], json!("d"));
}

#[test]
fn min_s1_report() {
    let r = json(&run_on(&["classify", "--mode", "def", "--axioms", "SY,S1/4,T0"], MIN_S1));
    assert_valid("classify", &r);
    assert_eq!(r["modes"], json!(["def"]));
    assert_eq!(r["axioms"].as_object().unwrap().len(), 3);
    assert!(!verdict(&r, "SY", "def"));
    assert!(verdict(&r, "S1/4", "def") && verdict(&r, "T0", "def"));
    assert!(r["axioms"]["T0"].get("char").is_none());
    let r = json(&run_on(&["classify", "--mode", "char", "--axioms", "SY"], MIN_S1));
    assert_eq!(r["axioms"]["SY"]["char"]["witness"], json!({"kind": "quad", "a": 0, "b": 1, "c": 2, "d": 3}));
}

#[test]
fn decomposition_report() {
    let r = json(&run_on(&["classify", "--axioms", "T0"], FIVE_POINT));
    assert_valid("classify", &r);
    let d = &r["decomposition"];
    assert_eq!(d["tau_f"]["is_topology"], json!(false));
    assert_eq!(d["tau_f"]["family"], json!([[], [0, 2, 3], [0, 1, 2, 4], [0, 1, 2, 3, 4]]));
    assert_eq!(d["lemma001"]["holds"], json!(true));
    assert_eq!(d["quotient"]["points"], json!(3));
}

#[test]
fn invalid_inputs() {
    let cases = [
        (r#"{"points": 2, "opens": [[], [1]]}"#, EXIT_INVALID, "missing_empty_or_full"),
        (r#"{"points": 3, "opens": [[], [0], [1], [0, 1, 2]]}"#, EXIT_INVALID, "not_closed_under_union"),
        (r#"{"points": 2, "opens": [[], [5], [0, 1]]}"#, EXIT_USAGE, "usage"),
        (r#"{"points": 2, "leq": [[0, 1]]}"#, EXIT_USAGE, "usage"),
        (r#"{"points": 2, "opens": [[], [0, 1]], "leq": []}"#, EXIT_USAGE, "usage"),
        (r#"{"points": 2, "opens": [[], [0, 1]], "extra": 1}"#, EXIT_USAGE, "usage"),
        (r#"{"points": 2, "opens": [[], [0, 1]], "blocks": [[0]]}"#, EXIT_INVALID, "uncovered_point"),
        ("not json", EXIT_USAGE, "usage"),
    ];
    for (input, code, error) in cases {
        let out = run_on(&["classify"], input);
        assert_eq!(out.code, code, "{input}");
        let doc = json(&out);
        assert_valid("error", &doc);
        assert_eq!(doc["error"], json!(error), "{input}");
        assert!(out.stderr.starts_with("fintop: "));
    }
    let doc = json(&run_on(&["classify"], r#"{"points": 3, "opens": [[], [0], [1], [0, 1, 2]]}"#));
    assert_eq!(doc["witness"], json!([[0], [1]]));
}

#[test]
fn space_schema_accepts_examples_and_rejects_malformed() {
    let v = schema("space");
    for text in [SIERPINSKI, FOUR_POINT, MIN_S1, FIVE_POINT] {
        assert!(v.is_valid(&serde_json::from_str(text).unwrap()), "{text}");
    }
    for text in [r#"{"points": 2}"#, r#"{"points": 2, "leq": []}"#, r#"{"points": 2, "opens": [], "leq": []}"#] {
        assert!(!v.is_valid(&serde_json::from_str(text).unwrap()), "{text}");
    }
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
    assert_eq!(run(&["verify", "no_such_theorem"]).code, EXIT_USAGE);
    assert_eq!(run(&["verify", "round_trip", "--n-max", "8"]).code, EXIT_USAGE);
    assert_eq!(run(&["enumerate", "8"]).code, EXIT_USAGE);
    assert_eq!(run_on(&["classify", "--axioms", "T9"], SIERPINSKI).code, EXIT_USAGE);
    assert_eq!(run(&["classify", "/nonexistent/space.json"]).code, EXIT_USAGE);
}

#[test]
fn hasse_diagrams() {
    let out = run_on(&["hasse"], MIN_S1);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("digraph hasse {"));
    assert_eq!(out.stdout.matches(" -> ").count(), 4);
    assert_eq!(out.stdout.matches("label=").count(), 4);

    let out = run_on(&["hasse"], FOUR_POINT);
    assert!(out.stdout.contains(r#"label="{a,b}""#));
    assert!(out.stdout.contains(r#"label="{d}""#));
    // {d} < {a,b} and {a,b} < {c}
    assert_eq!(out.stdout.matches(" -> ").count(), 2);
}

#[test]
fn enumerate_counts() {
    for (n, count) in [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355), (5, 6942)] {
        let n = n.to_string();
        let out = run(&["enumerate", &n, "--count-only"]);
        assert_eq!(out.code, EXIT_OK);
        let doc = json(&out);
        assert_valid("enumerate", &doc);
        assert_eq!(doc["count"], json!(count));
    }
}

#[test]
fn enumerate_emit_lines_are_space_documents() {
    let out = run(&["enumerate", "3", "--emit"]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 29);
    let v = schema("space");
    for line in lines {
        let doc: Value = serde_json::from_str(line).unwrap();
        assert!(v.is_valid(&doc), "{line}");
        assert_eq!(run_on(&["classify", "--axioms", "T0"], line).code, EXIT_OK);
    }
}

#[test]
fn verify_exit_codes_and_schema() {
    let out = run(&["verify", "round_trip", "--n-max", "3"]);
    assert_eq!(out.code, EXIT_OK);
    let doc = json(&out);
    assert_valid("verify", &doc);
    assert_eq!(doc["findings"][0]["status"], json!("verified"));
    assert_eq!(doc["findings"][0]["spaces_checked"], json!(1 + 1 + 4 + 29));
    assert!(doc["findings"][0].get("elapsed_ms").is_none());

    let out = run(&["verify", "probes", "--n-max", "3"]);
    assert_eq!(out.code, EXIT_REFUTED);
    let doc = json(&out);
    assert_valid("verify", &doc);
    assert!(doc["refuted"].as_u64().unwrap() >= 1);

    let doc = json(&run(&["verify", "proper_literal", "--n-max", "2", "--timings"]));
    assert_valid("verify", &doc);
    assert!(doc["findings"][0]["elapsed_ms"].is_u64());
    assert_eq!(doc["findings"][0]["counterexample"]["point"], json!(0));
}

#[test]
fn implications_and_theorems_schemas() {
    let out = run(&["implications", "--n-max", "3", "--axioms", "T0,T1,CR"]);
    assert_eq!(out.code, EXIT_OK);
    let doc = json(&out);
    assert_valid("implications", &doc);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 6);
    let theorems = json(&run(&["theorems"]));
    assert_valid("theorems", &theorems);
    assert!(theorems.as_array().unwrap().iter().any(|t| t["id"] == json!("flow_converse")));
}

#[test]
fn output_is_stable_across_runs_and_threads() {
    let a = run_on(&["classify"], FOUR_POINT);
    let b = run_on(&["classify"], FOUR_POINT);
    assert_eq!(a, b);
    let v1 = run(&["verify", "all", "--n-max", "3", "--jobs", "1"]);
    let v4 = run(&["verify", "all", "--n-max", "3", "--jobs", "4"]);
    assert_eq!(v1, v4);
    let i1 = run(&["implications", "--n-max", "4", "--jobs", "1"]);
    let i3 = run(&["implications", "--n-max", "4", "--jobs", "3"]);
    assert_eq!(i1, i3);
}

#[test]
fn binary_matches_library() {
    let path = temp_input(FOUR_POINT);
    let (code, stdout) = binary(&["classify", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(stdout, run(&["classify", path.to_str().unwrap()]).stdout);
    let (code, _) = binary(&["verify", "probes", "--n-max", "3"]);
    assert_eq!(code, EXIT_REFUTED);
    let _ = std::fs::remove_file(path);
}
