#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};

use fintop_cli::Outcome;
use jsonschema::{Retrieve, Uri, Validator};
use serde_json::Value;

pub const FOUR_POINT: &str =
    r#"{"points": 4, "opens": [[], [2], [0, 1], [0, 1, 2], [0, 1, 2, 3]], "labels": ["a", "b", "c", "d"]}"#;
pub const SIERPINSKI: &str = r#"{"points": 2, "opens": [[], [1], [0, 1]]}"#;
pub const MIN_S1: &str = r#"{"points": 4, "leq": [[0, 2], [0, 3], [1, 2], [1, 3]], "closure": "reflexive-transitive"}"#;
pub const FIVE_POINT: &str =
    r#"{"points": 5, "opens": [[], [0, 1], [2, 3], [0, 1, 2, 3], [0, 1, 2, 3, 4]], "blocks": [[0, 2], [1, 4], [3]]}"#;

static COUNTER: AtomicUsize = AtomicUsize::new(0);

/// Writes `text` to a fresh file under the target temp dir.
pub fn temp_input(text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let k = COUNTER.fetch_add(1, Ordering::Relaxed);
    let path = dir.join(format!("input-{}-{k}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

pub fn run(args: &[&str]) -> Outcome {
    fintop_cli::run(std::iter::once("fintop").chain(args.iter().copied()))
}

pub fn run_on(args: &[&str], input: &str) -> Outcome {
    let path = temp_input(input);
    let mut all: Vec<&str> = args.to_vec();
    all.push(path.to_str().unwrap());
    let out = run(&all);
    let _ = std::fs::remove_file(path);
    out
}

pub fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", out.stdout))
}

/// Runs the compiled binary.
pub fn binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fintop")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

struct LocalSchemas;

impl Retrieve for LocalSchemas {
    fn retrieve(&self, uri: &Uri<String>) -> Result<Value, Box<dyn std::error::Error + Send + Sync>> {
        let name = uri.as_str().rsplit('/').next().unwrap_or_default();
        let text = std::fs::read_to_string(schema_dir().join(name))?;
        Ok(serde_json::from_str(&text)?)
    }
}

pub fn schema(name: &str) -> Validator {
    let text = std::fs::read_to_string(schema_dir().join(format!("{name}.schema.json"))).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::options().with_retriever(LocalSchemas).build(&value).unwrap()
}

pub fn assert_valid(name: &str, doc: &Value) {
    let v = schema(name);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{name} schema violations: {errors:#?}");
}
