use std::process::{Command, Output};

use serde_json::Value;

fn springer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_springer")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = springer(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn pinball_matches_golden_tables() {
    for (shape, file) in [("2,2", "pinball_2_2.txt"), ("3,2", "pinball_3_2.txt")] {
        let o = springer(&["pinball", shape]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(file), "pinball {shape}");
    }
}

#[test]
fn pinball_single_row() {
    let o = springer(&["pinball", "5"]);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let cells: Vec<_> = lines[1].split("  ").map(str::trim).filter(|c| !c.is_empty()).collect();
    assert_eq!(cells, ["12345", "12345", "[1 2 3 4 5]", "{}", "0", "12345", "12345"]);
}

#[test]
fn pinball_json_schema() {
    let v = json(&["pinball", "3,2"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    for r in rows {
        for key in ["w", "filling", "dim_pairs", "deg", "omega", "roll"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["deg"].as_u64().unwrap() as usize, r["dim_pairs"].as_array().unwrap().len());
    }
    assert_eq!(rows[9]["w"], serde_json::json!([2, 4, 5, 1, 3]));
    assert_eq!(rows[9]["roll"], serde_json::json!([1, 2, 5, 3, 4]));
}

#[test]
fn pinball_rejects_non_springer_h() {
    let o = springer(&["--h", "2,3,4,4", "pinball", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["pinball", "x"],
        vec!["betti", "2,3"],
        vec!["highest-forms", "0"],
        vec!["--sigma", "1,1,2,3", "fixed-points", "2,2"],
        vec!["--h", "1,1,3,4", "fixed-points", "2,2"],
        vec!["restrict", "2,2", "1234", "123"],
        vec!["--format", "latex", "betti", "2,2"],
    ] {
        let o = springer(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn highest_forms_counts() {
    let v = json(&["highest-forms", "3,2,1"]);
    assert_eq!(v["fillings"].as_array().unwrap().len(), 6);
    assert_eq!(v["distinct_matrices"], 6);
    assert_eq!(v["formula"], 6);

    let v = json(&["highest-forms", "2,2"]);
    assert_eq!(v["fillings"].as_array().unwrap().len(), 2);
    assert_eq!(v["distinct_matrices"], 1);

    let v = json(&["highest-forms", "4"]);
    assert_eq!(v["fillings"].as_array().unwrap().len(), 1);

    let o = springer(&["highest-forms", "3,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("formula: 6"));
}

#[test]
fn betti_vectors() {
    assert_eq!(json(&["betti", "2,2"])["betti"], serde_json::json!([1, 3, 2]));
    assert_eq!(json(&["betti", "3,2"])["betti"], serde_json::json!([1, 4, 5]));
    assert_eq!(json(&["betti", "6"])["betti"], serde_json::json!([1]));
    let o = springer(&["betti", "2,2"]);
    assert!(stdout(&o).starts_with("betti: (1,3,2)"));
}

#[test]
fn fixed_points_springer_case() {
    let v = json(&["fixed-points", "2,2", "--brute-force"]);
    assert_eq!(v["brute_force_agrees"], true);
    let ws: Vec<_> = v["fixed_points"].as_array().unwrap().iter().map(|p| p["w"].clone()).collect();
    assert_eq!(ws.len(), 6);
    for w in [[1, 2, 3, 4], [2, 1, 3, 4], [1, 3, 2, 4], [1, 2, 4, 3], [2, 1, 4, 3], [2, 4, 1, 3]] {
        assert!(ws.contains(&serde_json::json!(w)));
    }
    assert_eq!(json(&["fixed-points", "3"])["fixed_points"].as_array().unwrap().len(), 1);
}

#[test]
fn fixed_points_larger_h_is_superset() {
    let id = json(&["fixed-points", "2,2"]);
    let big = json(&["--h", "2,3,4,4", "fixed-points", "2,2", "--brute-force"]);
    assert_eq!(big["brute_force_agrees"], true);
    let ws = big["fixed_points"].as_array().unwrap();
    assert!(ws.len() > 6);
    for p in id["fixed_points"].as_array().unwrap() {
        assert!(ws.iter().any(|q| q["w"] == p["w"]));
    }
    let o = springer(&["--h", "2,3,4,4", "fixed-points", "2,2", "--brute-force"]);
    assert!(stdout(&o).contains("brute force agrees: yes"));
}

#[test]
fn fixed_points_explicit_sigma() {
    let v = json(&["--sigma", "identity", "fixed-points", "2,2", "--brute-force"]);
    assert_eq!(v["sigma"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(v["brute_force_agrees"], true);
    let v = json(&["--sigma", "3,1,4,2", "fixed-points", "2,2", "--brute-force"]);
    assert_eq!(v["brute_force_agrees"], true);
}

#[test]
fn restrict_queries() {
    let o = springer(&["restrict", "4,2", "123465", "245613"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-2t");
    assert_eq!(json(&["restrict", "4,2", "123465", "245613"]), serde_json::json!(["0", "-2"]));
    // v not below u restricts to zero
    let o = springer(&["restrict", "2,2", "4321", "1234"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn verify_basis_small_cases() {
    let o = springer(&["verify-basis", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("poset-upper-triangular: yes"));
    assert!(text.contains("rank: 6/6"));
    assert!(text.contains("verified: yes"));

    let o = springer(&["verify-basis", "3,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("poset-upper-triangular: yes"));
}

#[test]
fn verify_basis_block_checks() {
    let o = springer(&["verify-basis", "4,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "rank: 15/15",
        "B block zero: yes",
        "D matches closed form: yes",
        "change of basis lower-triangular: yes",
        "poset-upper-triangular: no",
    ] {
        assert!(text.contains(line), "missing {line:?}");
    }
    let o = springer(&["verify-basis", "5,2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_basis_json_schema() {
    let v = json(&["verify-basis", "4,2"]);
    assert_eq!(v["matrix"]["order"].as_array().unwrap().len(), 15);
    assert_eq!(v["matrix"]["entries"].as_array().unwrap().len(), 15);
    assert_eq!(v["rank"]["certificate"]["kind"], "full_rank");
    assert_eq!(v["blocks"]["d_block_matches_closed_form"], true);
    assert!(!v["upper_triangular"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn d_block_emitters() {
    let o = springer(&["--format", "csv", "verify-basis", "4,2"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    let rows: Vec<_> = csv.lines().collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0].split(',').next(), Some("-2t"));
    assert!(rows[4].ends_with("2t^2"));

    let o = springer(&["--format", "latex", "verify-basis", "4,2"]);
    let tex = stdout(&o);
    assert!(tex.contains("\\begin{bmatrix}"));
    assert!(tex.contains("\\end{bmatrix}"));
}
