use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invkostka"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

#[test]
fn entry_value() {
    assert_eq!(stdout(&["entry", "--lambda", "1^1,2^1", "--mu", "[1,1,1]"]), "-2\n");
    for engine in ["duan", "er", "brute"] {
        assert_eq!(stdout(&["entry", "--lambda", "[1,2]", "--mu", "1^3", "--engine", engine]), "-2\n");
    }
    let v = json(&["entry", "--lambda", "[1,4]", "--mu", "[1,2,2]", "--engine", "all"]);
    assert_eq!(v["query"]["lambda"], serde_json::json!([1, 4]));
    assert_eq!(v["result"]["duan"], "1");
    assert_eq!(v["result"]["er"], "1");
    assert_eq!(v["result"]["brute"], "1");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["entry", "--lambda", "[1,2]", "--mu", "[1,1]"]).status.code(), Some(2));
    assert_eq!(run(&["entry", "--lambda", "[1,x]", "--mu", "[1,1]"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["hpoly"]).status.code(), Some(1));
    assert_eq!(run(&["steenrod", "--op", "P", "--k", "1", "--m", "2", "--p", "9"]).status.code(), Some(2));
    assert_eq!(run(&["steenrod", "--op", "Sq", "--k", "3", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--max-weight", "0"]).status.code(), Some(0));
}

#[test]
fn hpoly_formats() {
    let v = json(&["hpoly", "30"]);
    let coeffs: Vec<&str> = v["result"]["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    let mut expected = vec!["0"; 16];
    for (i, c) in [(0, "1"), (3, "-165"), (6, "924"), (9, "-715"), (12, "91"), (15, "-1")] {
        expected[i] = c;
    }
    assert_eq!(coeffs, expected);
    assert_eq!(stdout(&["hpoly", "30", "--mod", "3"]), "1 + 2t^9 + t^12 + 2t^15\n");
    let v = json(&["hpoly", "30", "--mod", "3"]);
    assert_eq!(v["query"]["mod"], 3);
    let csv = stdout(&["hpoly", "25", "--format", "csv"]);
    let mut rdr = csv::Reader::from_reader(csv.as_bytes());
    let rows: Vec<(usize, String)> = rdr.deserialize().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[2], (2, "36".to_string()));
    assert_eq!(rows[11], (11, "-12".to_string()));
}

#[test]
fn row_and_matrix() {
    assert_eq!(stdout(&["row", "--lambda", "[3]"]), "s[3] - s[1,2] + s[1,1,1]\n");
    let v = json(&["row", "--lambda", "[1,2]"]);
    let terms = v["result"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[1]["partition"], serde_json::json!([1, 1, 1]));
    assert_eq!(terms[1]["coeff"], "-2");

    let v = json(&["matrix", "--weight", "3", "--inverse"]);
    assert_eq!(v["result"]["labels"], serde_json::json!([[3], [1, 2], [1, 1, 1]]));
    assert_eq!(v["result"]["rows"][1], serde_json::json!(["0", "1", "-2"]));
    let csv = stdout(&["matrix", "--weight", "2", "--format", "csv"]);
    assert_eq!(csv, "row,[2],\"[1,1]\"\n[2],1,1\n\"[1,1]\",0,1\n");
}

#[test]
fn chains_and_polynomials() {
    let v = json(&["chains", "--lambda", "[3]", "--mu", "[1,2]", "--family", "T"]);
    assert_eq!(v["result"]["signed_count"], "-1");
    let v = json(&["chains", "--lambda", "[1,2]", "--mu", "[1,1,1]", "--family", "S"]);
    assert_eq!(v["result"]["signed_count"], "-2");
    assert!(v["result"]["chains"].as_array().unwrap().iter().all(|c| c["sign"] == -1));

    assert_eq!(stdout(&["fpoly", "--lambda", "[1,2]", "--mu", "[1,1,1]"]), "-2t\n");
    assert_eq!(stdout(&["gpoly", "1", "1"]), "2 - t - t^2\n");
}

#[test]
fn steenrod_output() {
    let v = json(&["steenrod", "--op", "P", "--k", "1", "--m", "1", "--p", "3"]);
    let coeffs: Vec<(&Value, &str)> = v["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (&t["partition"], t["coeff"].as_str().unwrap()))
        .collect();
    assert_eq!(coeffs.len(), 3);
    assert_eq!(coeffs[1], (&serde_json::json!([1, 2]), "2"));
    assert_eq!(stdout(&["steenrod", "--op", "Sq", "--k", "1", "--m", "2"]), "s[1,2]\n");
}

#[test]
fn verify_report() {
    let v = json(&["verify", "--max-weight", "5"]);
    assert_eq!(v["result"]["total_failures"], 0);
    assert_eq!(v["result"]["suites"].as_array().unwrap().len(), 7);
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["matrix", "--weight", "8", "--inverse", "--format", "json"];
    let one = Command::new(env!("CARGO_BIN_EXE_invkostka"))
        .args(args)
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_invkostka"))
        .args(args)
        .env("RAYON_NUM_THREADS", "8")
        .output()
        .unwrap();
    assert!(one.status.success() && many.status.success());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(stdout(&args), stdout(&args));
}
