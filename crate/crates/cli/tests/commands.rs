use std::process::Command;

use mvlab_cli::{csv_rows_symmetric, read_surface_csv, run_from, EXIT_FAILS, EXIT_OK, EXIT_USAGE};

fn code(args: &[&str]) -> i32 {
    run_from(std::iter::once("mvlab").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mvlab")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let out = out.to_str().unwrap();
    assert_eq!(code(&["check", "interval-i0", "--grid", "8", "--out", out]), EXIT_OK);
    assert_eq!(code(&["check", "interval-i1", "--grid", "8", "--out", out]), EXIT_FAILS);
    assert_eq!(code(&["check", "chang", "--variant", "as-printed", "--max-index", "3", "--out", out]), EXIT_FAILS);
    assert_eq!(code(&["check", "nonsense"]), EXIT_USAGE);
    assert_eq!(code(&["check", "square-hole"]), EXIT_USAGE);
    assert_eq!(code(&["check", "square-hole", "--k", "1.5"]), EXIT_USAGE);
    assert_eq!(code(&["check", "disk-hole", "--r", "0.5"]), EXIT_USAGE);
    assert_eq!(code(&["check", "chang", "--variant", "odd"]), EXIT_USAGE);
    assert_eq!(code(&["check", "lukasiewicz", "--exhaustive"]), EXIT_USAGE);
    assert_eq!(code(&["check", "powerset", "--n", "7"]), EXIT_USAGE);
    assert_eq!(code(&["check", "lukasiewicz", "--variant", "standard"]), EXIT_USAGE);
    assert_eq!(code(&["star-probe", "--grid", "1"]), EXIT_USAGE);
    assert_eq!(code(&["deviation", "--hole", "square", "--sizes", "1.2"]), EXIT_USAGE);
    assert_eq!(code(&["--help"]), EXIT_OK);
}

#[test]
fn printed_axiom_form_is_selectable() {
    let (c, text) = stdout(&["check", "lukasiewicz", "--grid", "6", "--axiom4", "both"]);
    assert_eq!(c, EXIT_FAILS);
    assert!(text.contains("Lukasiewicz4Printed"));
    let (c, _) = stdout(&["check", "lukasiewicz", "--grid", "6"]);
    assert_eq!(c, EXIT_OK);
}

#[test]
fn lukasiewicz_surface() {
    let (c, csv) = stdout(&["surface", "lukasiewicz", "--grid", "2"]);
    assert_eq!(c, EXIT_OK);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "a,b,value");
    assert_eq!(lines.len(), 10);
    assert!(lines.contains(&"0.5,0.5,1"));
}

#[test]
fn square_hole_surface() {
    let (_, csv) = stdout(&["surface", "square-hole", "--k", "0.5", "--grid", "4"]);
    assert!(csv.lines().any(|l| l == "0.25,0.25,0.75"));

    let (_, csv) = stdout(&["surface", "square-hole", "--k", "0.0001", "--grid", "10"]);
    let worst = csv
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (f[2] - (f[0] + f[1]).min(1.0)).abs()
        })
        .fold(0.0, f64::max);
    assert!(worst < 0.01, "{worst}");
}

#[test]
fn surface_files_are_symmetric_with_identity_row() {
    let dir = tempfile::tempdir().unwrap();
    for (model, extra) in [("square-hole", vec!["--k", "0.3"]), ("disk-hole", vec!["--r", "0.2"]), ("lukasiewicz", vec![])] {
        let path = dir.path().join(format!("{model}.csv"));
        let p = path.to_str().unwrap();
        let mut args = vec!["surface", model, "--grid", "8", "--out", p];
        args.extend(extra);
        assert_eq!(code(&args), EXIT_OK);
        let rows = read_surface_csv(&path).unwrap();
        assert_eq!(rows.len(), 81);
        assert!(csv_rows_symmetric(&rows));
        for (a, b, v) in rows.iter().take(9) {
            assert_eq!(*a, 0.0);
            assert!((v - b).abs() < 1e-9, "0 ⊕ {b} = {v}");
        }
    }
}

#[test]
fn json_surface_keeps_fractions() {
    let (_, text) = stdout(&["surface", "square-hole", "--k", "1/2", "--grid", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["exact"][1][1], "3/4");
    let (_, text) = stdout(&["surface", "disk-hole", "--r", "0.25", "--grid", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(doc.get("exact").is_none());
    assert_eq!(doc["values"].as_array().unwrap().len(), 5);
}

#[test]
fn unwritable_output_is_a_usage_error() {
    assert_eq!(
        code(&["surface", "lukasiewicz", "--grid", "2", "--out", "/nonexistent/dir/s.csv"]),
        EXIT_USAGE
    );
}

#[test]
fn deviation_compares_disk_and_square() {
    for hole in ["square", "disk"] {
        let (c, text) = stdout(&["deviation", "--hole", hole, "--sizes", "0.25", "--grid", "20", "--format", "json"]);
        assert_eq!(c, EXIT_OK);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        let d: f64 = doc["rows"][0]["deviation"].as_str().unwrap().parse().unwrap();
        assert!(d > 0.0, "{hole}");
    }
}

#[test]
fn truncated_mass_from_side() {
    let (c, text) = stdout(&["check", "truncated", "--k", "1/2", "--grid", "6", "--format", "json"]);
    assert_eq!(c, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["algebra"]["params"]["mass"], "3/4");
}
