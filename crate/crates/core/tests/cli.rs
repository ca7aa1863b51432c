use std::fs;
use std::path::Path;

use nodalgen::cli::{run, FitDocument, QmuDocument, SeveriValueDocument, VerifyReport};

fn run_to_file(args: &[&str], dir: &Path, name: &str) -> (i32, String) {
    let out = dir.join(name);
    let mut argv = vec!["nodalgen"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--out", out.to_str().unwrap()]);
    let code = run(argv);
    (code, fs::read_to_string(&out).unwrap_or_default())
}

#[test]
fn severi_value() {
    let dir = tempfile::tempdir().unwrap();
    let (code, text) = run_to_file(&["severi", "--d", "3", "--delta", "1"], dir.path(), "a");
    assert_eq!(code, 0);
    assert_eq!(text, "12\n");
    let (_, json) = run_to_file(&["severi", "--d", "4", "--delta", "3", "--format", "json"], dir.path(), "b");
    let doc: SeveriValueDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(doc.value, "675");
    let (_, csv) = run_to_file(&["severi", "--d-max", "3", "--delta-max", "2", "--format", "csv"], dir.path(), "c");
    assert!(csv.starts_with("d,delta,value\n1,0,1\n"));
    assert!(csv.contains("3,2,21\n"));
}

#[test]
fn fit_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["fit", "--max-delta", "8", "--degrees", "5,6,7,8,9", "--format", "json"];
    let (code, json) = run_to_file(&args, dir.path(), "fit.json");
    assert_eq!(code, 0);
    let doc: FitDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(doc.b1.coefficients.last().unwrap(), "-1737670");
    assert_eq!(doc.b2.coefficients.last().unwrap(), "-362700");
    assert!(doc.consistent);
    assert_eq!(doc.pairs.len(), 90);
    let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(again, json);
}

#[test]
fn fit_with_three_degree_check() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["fit", "--max-delta", "6", "--degrees", "4,5,6", "--three-degree-check", "--format", "json"];
    let (code, json) = run_to_file(&args, dir.path(), "fit.json");
    assert_eq!(code, 0);
    let doc: FitDocument = serde_json::from_str(&json).unwrap();
    let checks = doc.c1_checks.unwrap();
    assert!(!checks.is_empty() && checks.iter().all(|c| c.matches));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["universal", "--max-delta", "4", "--format", "json"];
    let (_, a) = run_to_file(&args, dir.path(), "a");
    let (_, b) = run_to_file(&args, dir.path(), "b");
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn surface_commands() {
    let dir = tempfile::tempdir().unwrap();
    let (code, text) =
        run_to_file(&["surface", "--kind", "abelian", "--r", "0", "--order", "7", "--coeff", "6"], dir.path(), "a");
    assert_eq!((code, text.as_str()), (0, "432\n"));
    let (_, text) = run_to_file(&["surface", "--kind", "k3", "--order", "3"], dir.path(), "b");
    assert_eq!(text, "q^-1 + 24 + 324*q + 3200*q^2 + O(q^3)\n");
    let (_, text) = run_to_file(&["surface", "--kind", "ruled", "--params", "0,1,1", "--order", "1"], dir.path(), "c");
    assert_eq!(text, "t_0 = 1\nt_1 = 2\n");
    let (_, text) = run_to_file(&["surface", "--kind", "p2", "--params", "4", "--order", "3", "--coeff", "3"], dir.path(), "d");
    assert_eq!(text, "675\n");
}

#[test]
fn nodepoly_and_qmu() {
    let dir = tempfile::tempdir().unwrap();
    let (_, text) = run_to_file(&["nodepoly", "--delta", "1"], dir.path(), "a");
    assert_eq!(text, "P_1(d) = 3*d^2 + -6*d + 3\n");
    let (code, json) = run_to_file(&["qmu", "--mu", "8", "--format", "json"], dir.path(), "b");
    assert_eq!(code, 0);
    let doc: QmuDocument = serde_json::from_str(&json).unwrap();
    assert_eq!((doc.sign, doc.power_of_two, doc.power_of_three), (-1, 4, 0));
    assert_eq!(doc.primitive.coefficients, ["1141616", "425202", "417490", "-931146", "282855"]);
}

#[test]
fn form_command() {
    let dir = tempfile::tempdir().unwrap();
    let (_, text) = run_to_file(&["form", "--name", "delta", "--order", "4"], dir.path(), "a");
    assert_eq!(text, "Delta = q + -24*q^2 + 252*q^3 + O(q^4)\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(["nodalgen", "severi", "--d", "3"]), 2);
    assert_eq!(run(["nodalgen", "frobnicate"]), 2);
    assert_eq!(run(["nodalgen", "fit", "--max-delta", "8", "--degrees", "4,5"]), 2);
    assert_eq!(run(["nodalgen", "surface", "--kind", "torus", "--order", "3"]), 2);
    assert_eq!(run(["nodalgen", "severi", "--d", "3", "--delta", "1", "--format", "xml"]), 2);
}

#[test]
fn computation_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cache");
    fs::write(&bad, "not a cache\n").unwrap();
    assert_eq!(run(["nodalgen", "severi", "--d", "3", "--delta", "1", "--cache", bad.to_str().unwrap()]), 1);
    let (code, _) = run_to_file(&["surface", "--kind", "k3", "--order", "3", "--coeff", "5"], dir.path(), "a");
    assert_eq!(code, 1);
}

#[test]
fn cache_file_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("severi.cache");
    let c = cache.to_str().unwrap();
    let (code, text) = run_to_file(&["cache", "warm", "--d-max", "6", "--delta-max", "6", "--cache", c], dir.path(), "a");
    assert_eq!(code, 0);
    assert!(text.contains("entries"));
    let saved = fs::read_to_string(&cache).unwrap();
    assert!(saved.lines().count() > 10);
    let (_, text) = run_to_file(&["severi", "--d", "6", "--delta", "5", "--cache", c], dir.path(), "b");
    assert_eq!(text, "2931831\n");
    let (_, text) = run_to_file(&["cache", "clear", "--cache", c], dir.path(), "c");
    assert!(text.ends_with(": 0 entries\n"));
    assert_eq!(fs::read_to_string(&cache).unwrap().lines().count(), 1);
    if std::env::var_os("NODALGEN_CACHE").is_none() {
        assert_eq!(run(["nodalgen", "cache", "info"]), 2);
    }
}

#[test]
fn tampered_cache_fails_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("severi.cache");
    let c = cache.to_str().unwrap();
    assert_eq!(run(["nodalgen", "cache", "warm", "--d-max", "9", "--delta-max", "8", "--cache", c]), 0);
    let text = fs::read_to_string(&cache).unwrap();
    let tampered: String = text
        .lines()
        .map(|l| if l.starts_with("7:5:|7=") { "7:5:|7=1".to_string() } else { l.to_string() })
        .collect::<Vec<_>>()
        .join("\n");
    assert_ne!(tampered.trim_end(), text.trim_end());
    fs::write(&cache, tampered).unwrap();

    let (code, json) = run_to_file(&["verify", "--format", "json", "--cache", c], dir.path(), "report.json");
    assert_eq!(code, 1);
    let report: VerifyReport = serde_json::from_str(&json).unwrap();
    assert!(!report.passed);
    let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    assert!(failed.contains(&"fit_idempotence"), "{failed:?}");
    assert!(failed.contains(&"overdetermination"));
}
