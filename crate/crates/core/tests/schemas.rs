//! The JSON documents emitted by the CLI validate against the schemas shipped
//! in `docs/schemas`.

use std::path::PathBuf;
use std::process::Command;

use jsonschema::{Retrieve, Uri};
use serde_json::Value;

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

fn load(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(name)).expect("schema file");
    serde_json::from_str(&text).expect("schema is JSON")
}

struct SchemaDir;

impl Retrieve for SchemaDir {
    fn retrieve(&self, uri: &Uri<String>) -> Result<Value, Box<dyn std::error::Error + Send + Sync>> {
        let name = uri.path().as_str().rsplit('/').next().unwrap_or_default().to_string();
        Ok(load(&name))
    }
}

fn nodalgen_json(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_nodalgen"))
        .args(args)
        .args(["--format", "json"])
        .env_remove("NODALGEN_CACHE")
        .output()
        .expect("run nodalgen");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn assert_valid(schema: &str, instance: &Value) {
    let validator = jsonschema::options()
        .with_base_uri("file:///nodalgen/schemas/")
        .with_retriever(SchemaDir)
        .build(&load(schema))
        .expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}");
}

#[test]
fn fit_output_matches_schema() {
    assert_valid("fit.schema.json", &nodalgen_json(&["fit", "--max-delta", "6"]));
    let checked = nodalgen_json(&["fit", "--max-delta", "4", "--degrees", "3,4,5", "--three-degree-check"]);
    assert!(checked.get("c1_checks").is_some());
    assert_valid("fit.schema.json", &checked);
}

#[test]
fn series_outputs_match_schema() {
    let fit = nodalgen_json(&["fit", "--max-delta", "3"]);
    assert_valid("series.schema.json", &fit["b1"]);
    let k3 = nodalgen_json(&["surface", "--kind", "k3", "--order", "5"]);
    assert_valid("series.schema.json", &k3["series"]);
    let form = nodalgen_json(&["form", "--name", "delta", "--order", "6"]);
    assert_valid("series.schema.json", &form["series"]);
}

#[test]
fn polynomial_outputs_match_schema() {
    let universal = nodalgen_json(&["universal", "--max-delta", "3"]);
    for p in universal["polynomials"].as_array().expect("array") {
        assert_valid("polynomial.schema.json", p);
    }
    let node = nodalgen_json(&["nodepoly", "--delta", "3"]);
    assert_valid("polynomial.schema.json", &node["polynomial"]);
    let q = nodalgen_json(&["qmu", "--mu", "5"]);
    assert_valid("polynomial.schema.json", &q["polynomial"]);
    assert_valid("polynomial.schema.json", &q["primitive"]);
}

#[test]
fn verify_report_matches_schema() {
    assert_valid("verify.schema.json", &nodalgen_json(&["verify"]));
}

#[test]
fn schemas_reject_malformed_documents() {
    let mut fit = nodalgen_json(&["fit", "--max-delta", "2"]);
    fit["b1"]["coefficients"][1] = Value::from(1.5);
    let validator = jsonschema::options()
        .with_base_uri("file:///nodalgen/schemas/")
        .with_retriever(SchemaDir)
        .build(&load("fit.schema.json"))
        .expect("schema compiles");
    assert!(!validator.is_valid(&fit));
}
