use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (Value, Output) {
    let out = run(args);
    let text = String::from_utf8(out.stdout.clone()).expect("utf-8 stdout");
    let value = serde_json::from_str(&text)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {text} stderr: {:?}", out.stderr));
    (value, out)
}

#[test]
fn hecke_mul_quadratic_golden() {
    let (v, out) = run_json(&[
        "hecke-mul",
        "--type",
        "A1",
        "--algebra",
        "finite",
        "T[1]*T[1]",
    ]);
    assert!(out.status.success());
    assert_eq!(v["result"], "T[1]*(q - 1) + T[]*q");
    assert_eq!(v["type"], "A1");
    assert_eq!(v["algebra"], "finite");
}

#[test]
fn hecke_mul_accepts_coefficient_first_and_round_trips() {
    let canonical = "T[1]*(q - 1) + T[]*q";
    for input in ["(q-1)*T[1] + q*T[]", canonical] {
        let (v, out) = run_json(&["hecke-mul", "--type", "A1", "--algebra", "finite", input]);
        assert!(out.status.success());
        assert_eq!(v["result"], canonical, "input {input:?}");
    }
}

#[test]
fn hecke_check_passes_everywhere() {
    for algebra in ["finite", "affine", "degenerate", "nil"] {
        let (v, out) = run_json(&["hecke-check", "--type", "A2", "--algebra", algebra]);
        assert!(out.status.success(), "{algebra}");
        assert_eq!(v["pass"], true, "{algebra}");
    }
}

#[test]
fn ops_verify_reports_all_relations_passing() {
    let (v, out) = run_json(&[
        "ops-verify",
        "--type",
        "B2",
        "--algebra",
        "affine",
        "--degree-bound",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(v["pass"], true);
    let relations = v["relations"].as_array().unwrap();
    assert!(!relations.is_empty());
    assert!(relations.iter().all(|r| r["pass"] == true));
}

#[test]
fn degenerate_recovers_graded_relations() {
    let (v, out) = run_json(&["degenerate", "--type", "A2", "--order", "3"]);
    assert!(out.status.success());
    assert_eq!(v["pass"], true);
}

#[test]
fn schur_weyl_golden() {
    let (v, out) = run_json(&["schur-weyl", "--n", "2", "--d", "3"]);
    assert!(out.status.success());
    assert_eq!(v["commutant_dim"], 20);
    assert_eq!(v["image_dim"], 20);
    assert_eq!(v["theoretical_dim"], 20);
    assert_eq!(v["pass"], true);
}

#[test]
fn schur_weyl_csv_golden() {
    let out = run(&["schur-weyl", "--n", "2", "--d", "2", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "n,d,commutant_dim,image_dim,theoretical_dim,pass\n2,2,10,10,10,true\n"
    );
}

#[test]
fn springer_weight_golden() {
    let (v, out) = run_json(&["springer-weight", "--jordan", "1,1", "--steps", "2"]);
    assert!(out.status.success());
    assert_eq!(v["rendered"], "(2,0)");
    assert_eq!(v["weight"], serde_json::json!([2, 0]));
}

#[test]
fn springer_components_totals_and_kostka_entry() {
    let (v, out) = run_json(&[
        "springer-components",
        "--jordan",
        "2,2",
        "--steps",
        "4",
        "--max-q",
        "9",
    ]);
    assert!(out.status.success());
    assert_eq!(v["total"], 20);
    let types = v["types"].as_array().unwrap();
    let full = types
        .iter()
        .find(|t| t["dims"] == serde_json::json!([1, 1, 1, 1]))
        .expect("complete flag type present");
    assert_eq!(full["count"], 2);
    assert_eq!(full["poly"], serde_json::json!(["1", "3", "2"]));
}

#[test]
fn springer_components_respects_max_q() {
    let out = run(&[
        "springer-components",
        "--jordan",
        "1,1,1,1",
        "--steps",
        "4",
        "--flag-type",
        "1,1,1,1",
        "--max-q",
        "3",
    ]);
    // The full flag variety over four letters needs nodes past q=3.
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn springer_drinfeld_numeric_and_symbolic() {
    let (v, out) = run_json(&[
        "springer-drinfeld",
        "--jordan",
        "2",
        "--steps",
        "2",
        "--q",
        "3",
        "--s",
        "3a,a",
    ]);
    assert!(out.status.success());
    assert_eq!(v["polynomials"], serde_json::json!(["1", "1"]));

    let (v, out) = run_json(&[
        "springer-drinfeld",
        "--jordan",
        "2",
        "--steps",
        "3",
        "--q",
        "q",
        "--s",
        "qa,a",
    ]);
    assert!(out.status.success());
    assert_eq!(v["polynomials"], serde_json::json!(["u - q*a", "u - a", "1"]));
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 0]));
}

#[test]
fn springer_drinfeld_rejects_broken_scaling() {
    let out = run(&[
        "springer-drinfeld",
        "--jordan",
        "2",
        "--steps",
        "2",
        "--q",
        "3",
        "--s",
        "a,a",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn convolution_demo_golden() {
    let (v, out) = run_json(&[
        "convolution-demo",
        "--target-size",
        "2",
        "--assignment",
        "1,1,2",
    ]);
    assert!(out.status.success());
    assert_eq!(v["dimension"], 5);
    assert_eq!(v["pass"], true);
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0]["fiber"], serde_json::json!(["1", "2"]));
}

#[test]
fn cartan_file_matches_builtin_type() {
    let dir = std::env::temp_dir();
    let path = dir.join("weylkit-test-a1-cartan.txt");
    std::fs::write(&path, "1\n2\n").unwrap();
    let (v, out) = run_json(&[
        "hecke-mul",
        "--cartan-file",
        path.to_str().unwrap(),
        "--algebra",
        "finite",
        "T[1]*T[1]",
    ]);
    std::fs::remove_file(&path).ok();
    assert!(out.status.success());
    assert_eq!(v["result"], "T[1]*(q - 1) + T[]*q");
}

#[test]
fn output_file_is_written() {
    let dir = std::env::temp_dir();
    let path = dir.join("weylkit-test-output.json");
    std::fs::remove_file(&path).ok();
    let out = run(&[
        "schur-weyl",
        "--n",
        "2",
        "--d",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["commutant_dim"], 10);
}

#[test]
fn usage_errors_exit_2() {
    // Unknown verb (argument-parser level).
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    // Missing Cartan source.
    assert_eq!(
        run(&["hecke-mul", "--algebra", "finite", "T[1]"]).status.code(),
        Some(2)
    );
    // Semantic flag error: steps below the largest block.
    assert_eq!(
        run(&["springer-weight", "--jordan", "3", "--steps", "2"]).status.code(),
        Some(2)
    );
    // Size guard.
    assert_eq!(
        run(&["schur-weyl", "--n", "4", "--d", "4"]).status.code(),
        Some(2)
    );
    // Bad element expression.
    assert_eq!(
        run(&["hecke-mul", "--type", "A1", "--algebra", "finite", "T[1"]).status.code(),
        Some(2)
    );
}
