use std::process::{Command, Output};

use farey_axis::{ExtRational, MatrixPSL2Z};
use serde_json::Value;

fn farey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_farey-axis")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn length_reports_the_pipeline() {
    let out = farey(&["length", "--matrix", "65,-56,101,-87"]);
    assert!(out.status.success());
    let v = json(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "matrix",
            "trace",
            "standard",
            "midpoint",
            "ancestor_path",
            "rung",
            "window_types",
            "calibrated_types",
            "length",
            "axis",
            "moves"
        ]
    );
    assert_eq!(v["rung"], serde_json::json!(["3/4", "1/1"]));
    assert_eq!(v["length"], 2);
    assert_eq!(v["trace"], 22);
    assert_eq!(v["moves"], "tt");
}

#[test]
fn exit_codes() {
    assert_eq!(farey(&["length", "--matrix", "1,1,0,1"]).status.code(), Some(2));
    assert_eq!(farey(&["length", "--matrix", "0,1,-1,0"]).status.code(), Some(2));
    assert_eq!(farey(&["length", "--matrix", "2,1,1,2"]).status.code(), Some(3));
    assert_eq!(farey(&["length", "--matrix", "2,1,1"]).status.code(), Some(4));
    assert_eq!(farey(&["length"]).status.code(), Some(4));
    assert_eq!(farey(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(farey(&["spectrum", "--max-trace", "2"]).status.code(), Some(4));
    assert_eq!(farey(&["spectrum", "--max-trace", "2001"]).status.code(), Some(4));
    assert_eq!(farey(&["spectrum", "--max-trace", "5", "--census-r", "abc"]).status.code(), Some(4));
    assert_eq!(farey(&["verify", "--seed", "7", "--cases", "0"]).status.code(), Some(4));
    assert_eq!(farey(&["verify", "--only", "nothing"]).status.code(), Some(4));
    assert_eq!(farey(&["--help"]).status.code(), Some(0));
    let err = farey(&["length", "--matrix", "1,1,0,1"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("not hyperbolic: |trace| <= 2"));
}

#[test]
fn spectrum_table_and_census() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t7.csv");
    let out = farey(&["spectrum", "--max-trace", "7", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    let forms: Vec<&str> = rows.iter().map(|r| r.split(',').nth(1).unwrap()).collect();
    assert_eq!(forms, ["1-1", "1-2", "1-3", "1-4", "2-2", "1-1-1-1", "1-5"]);
    assert_eq!(rows[4], "6,2-2,2,5.8284271247461900976,0.8813735870195430252");

    let out = farey(&["spectrum", "--max-trace", "6", "--census-r", "6.5", "--k", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "6.5,2,4,5,0.8"), "{text}");

    let bad = dir.path().join("missing").join("x.csv");
    assert_eq!(
        farey(&["spectrum", "--max-trace", "5", "--out", bad.to_str().unwrap()]).status.code(),
        Some(5)
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["spectrum", "--max-trace", "40", "--census-r", "20,30"][..],
        &["verify", "--seed", "3", "--cases", "20"][..],
        &["length", "--matrix", "277,60,337,73"][..],
    ] {
        assert_eq!(farey(args).stdout, farey(args).stdout);
    }
}

#[test]
fn emitted_values_parse_back() {
    let v = json(&farey(&["length", "--matrix", "277,60,337,73"]));
    let m: MatrixPSL2Z = v["matrix"].as_str().unwrap().parse().unwrap();
    assert_eq!(m, MatrixPSL2Z::from_entries(277, 60, 337, 73).unwrap());
    let axis: Vec<ExtRational> =
        v["axis"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect();
    assert_eq!(axis.len(), 5);
    for w in axis.windows(2) {
        assert!(w[0].is_neighbor(&w[1]));
    }
    for x in &axis {
        assert_eq!(x.to_string().parse::<ExtRational>().unwrap(), *x);
    }
}

#[test]
fn other_subcommands() {
    let v = json(&farey(&["ratio", "--matrix", "3,1,2,1"]));
    assert_eq!(v["ratio"], "1.3169578969248167086");
    let v = json(&farey(&["word", "--word", "TUTUTU"]));
    assert_eq!(v["length"], 3);
    let v = json(&farey(&["word", "--m", "2", "--n", "2"]));
    assert_eq!(v["block_length"], 2);
    assert_eq!(v["minimum"], 2);
    let v = json(&farey(&["cf", "--surd", "1,5,2"]));
    assert_eq!(v["expansion"], "[(1)]");
    let v = json(&farey(&["cf", "--rational", "-7/3"]));
    assert_eq!(v["expansion"], "[-3; 1, 2]");
    let out = farey(&["verify", "--seed", "7", "--cases", "30", "--only", "oracle"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}

#[test]
fn axis_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("axis.svg");
    let out = farey(&["axis", "--matrix", "65,-56,101,-87", "--svg", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["length"], 2);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("<svg"));
    assert_eq!(farey(&["axis", "--matrix", "65,-56,101,-87", "--periods", "4"]).status.code(), Some(4));
}
