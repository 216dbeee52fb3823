use std::path::{Path, PathBuf};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, Value, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["pointbasis"];
    argv.extend_from_slice(args);
    let code = pointbasis::cli::run(argv, &mut out, &mut err);
    let json = serde_json::from_slice(&out).unwrap_or(Value::Null);
    (code, json, String::from_utf8_lossy(&err).into_owned())
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn preprocess_reports_witness_list() {
    let (code, json, _) = run(&["preprocess", &data("example1.csv")]);
    assert_eq!(code, 0);
    assert_eq!(json["witness_list"], serde_json::json!([1, 2, 4]));
}

#[test]
fn preprocess_accepts_duplicate_rows() {
    let dir = TempDir::new().unwrap();
    let csv = write(&dir, "dup.csv", "1,2\n1,2\n0,1\n");
    let (code, _, err) = run(&["preprocess", csv.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
}

#[test]
fn empty_file_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let csv = write(&dir, "empty.csv", "");
    let (code, _, err) = run(&["basis", csv.to_str().unwrap(), "--prime", "5"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn malformed_polynomial_is_an_input_error() {
    let (code, _, _) = run(&[
        "nf",
        &data("example1.csv"),
        "--prime",
        "43",
        "--poly",
        "x1+*x2",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn small_field_is_a_precondition_error() {
    let (code, _, err) = run(&[
        "basis",
        &data("example1.csv"),
        "--prime",
        "5",
        "--construction",
        "linear",
    ]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn contradictory_series_is_a_precondition_error() {
    let dir = TempDir::new().unwrap();
    let csv = write(&dir, "series.csv", "0,1\n1,1\n0,1\n0,0\n");
    let (code, _, err) = run(&[
        "reveng",
        csv.to_str().unwrap(),
        "--prime",
        "3",
        "--no-discretize",
    ]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn basis_file_round_trips_through_nf() {
    let dir = TempDir::new().unwrap();
    let poly = "x1^3*x2+x4*x8+5";
    for construction in ["sep", "linear", "lex", "elim"] {
        let mut flags = vec!["--construction", construction];
        if construction == "elim" {
            flags.extend(["--tau", "8,2,3,4,6,5,7,1", "--order2", "degrevlex:x5>x7>x1"]);
        }
        let points = data("example1.csv");
        let mut args = vec!["basis", points.as_str(), "--prime", "43"];
        args.extend(&flags);
        let (code, basis, err) = run(&args);
        assert_eq!(code, 0, "{construction}: {err}");
        let file = write(&dir, &format!("{construction}.json"), &basis.to_string());
        let (code, from_file, err) = run(&[
            "nf",
            &data("example1.csv"),
            "--prime",
            "43",
            "--basis",
            file.to_str().unwrap(),
            "--poly",
            poly,
        ]);
        assert_eq!(code, 0, "{construction}: {err}");
        let mut args = vec!["nf", points.as_str(), "--prime", "43", "--poly", poly];
        args.extend(&flags);
        let (_, direct, _) = run(&args);
        assert_eq!(
            from_file["coefficients"], direct["coefficients"],
            "{construction}"
        );
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "basis",
        &data("example1.csv"),
        "--prime",
        "43",
        "--construction",
        "linear",
        "--randomized",
        "--seed",
        "7",
    ];
    let args: Vec<&str> = args.iter().map(|s| s.as_ref()).collect();
    let (code, first, err) = run(&args);
    assert_eq!(code, 0, "{err}");
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn reveng_series_matches_known_model() {
    let (code, json, err) = run(&[
        "reveng",
        &data("series.csv"),
        "--prime",
        "3",
        "--no-discretize",
    ]);
    assert_eq!(code, 0, "{err}");
    let h: Vec<&str> = json["h"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(h.len(), 3);
}

#[test]
fn groebner_lists_standard_monomials() {
    let (code, json, err) = run(&["groebner", &data("points6.csv"), "--prime", "3"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(
        json["standard"],
        serde_json::json!(["1", "x3", "x3^2", "x2"])
    );
}
