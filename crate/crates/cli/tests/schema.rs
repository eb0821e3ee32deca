use std::process::Command;

use jsonschema::JSONSchema;
use serde_json::Value;

const DESCRIBE_SCHEMA: &str = include_str!("../schema/describe.v1.schema.json");
const REPORT_SCHEMA: &str = include_str!("../schema/ktheory-report.v1.schema.json");

fn compile(text: &str) -> JSONSchema {
    let schema: Value = serde_json::from_str(text).unwrap();
    JSONSchema::compile(&schema).unwrap()
}

fn run(args: &[&str]) -> Value {
    let o = Command::new(env!("CARGO_BIN_EXE_koszulkt")).args(args).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{args:?}");
    serde_json::from_slice(&o.stdout).unwrap()
}

fn assert_valid(schema: &JSONSchema, v: &Value, what: &str) {
    if let Err(errors) = schema.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{}: {e}", e.instance_path)).collect();
        panic!("{what} violates the schema: {msgs:?}");
    }
}

#[test]
fn schema_versions_match_the_library() {
    for text in [DESCRIBE_SCHEMA, REPORT_SCHEMA] {
        let schema: Value = serde_json::from_str(text).unwrap();
        assert_eq!(schema["properties"]["schema_version"]["const"], koszulkt::SCHEMA_VERSION);
    }
}

#[test]
fn describe_output_matches_schema() {
    let schema = compile(DESCRIBE_SCHEMA);
    for t in ["A1", "B3", "G2", "E8", "A1xC3"] {
        assert_valid(&schema, &run(&["describe", t, "--format", "json"]), t);
    }
}

#[test]
fn report_output_matches_schema() {
    let schema = compile(REPORT_SCHEMA);
    for t in ["A1", "D4", "F4", "A2xG2"] {
        assert_valid(&schema, &run(&["ktheory", t, "--format", "json"]), t);
    }
    for t in ["A1", "B2", "A3"] {
        let v = run(&["verify", t, "--format", "json", "--injectivity-degree", "1"]);
        assert_valid(&schema, &v, t);
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let schema = compile(REPORT_SCHEMA);
    let mut v = run(&["ktheory", "A2", "--format", "json"]);
    v["checks"]["window"]["status"] = "maybe".into();
    assert!(!schema.is_valid(&v));
    let mut v = run(&["ktheory", "A2", "--format", "json"]);
    v["schema_version"] = "0".into();
    assert!(!schema.is_valid(&v));
}
