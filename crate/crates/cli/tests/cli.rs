use std::process::{Command, Output};

fn addseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_addseq")).args(args).env_remove("ADDSEQ_OUT_DIR").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn terms(o: &Output) -> Vec<u64> {
    stdout(o).lines().map(|l| l.parse().unwrap()).collect()
}

#[test]
fn gen_csv() {
    let o = addseq(&["gen", "--rule", "v", "--init", "2,3", "--limit", "45"]);
    assert!(o.status.success());
    let t = terms(&o);
    assert_eq!(t.len(), 15);
    assert_eq!(t.last(), Some(&42));
    let o = addseq(&["gen", "--rule", "ulam", "--init", "5", "--limit", "100"]);
    assert_eq!(terms(&o), [5]);
}

#[test]
fn gen_json() {
    let o = addseq(&["gen", "--rule", "z:2,1", "--init", "1,3", "--limit", "25", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 8);
    assert_eq!(v["rule"], "z:2,1");
    assert_eq!(v["value_limit"], 25);
}

#[test]
fn exit_codes() {
    assert_eq!(addseq(&["gen", "--rule", "w", "--init", "1,2", "--limit", "9"]).status.code(), Some(2));
    assert_eq!(addseq(&["gen", "--rule", "v", "--limit", "9"]).status.code(), Some(2));
    assert_eq!(addseq(&["verify", "nosuch"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let bad = blocker.join("out.csv");
    let o = addseq(&["gen", "--rule", "v", "--init", "1,2", "--limit", "9", "-o", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = addseq(&["export", "--input", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::write(dir.path().join("bad.json"), "{not json").unwrap();
    let o = addseq(&["export", "--input", dir.path().join("bad.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_addseq"))
        .args(["gen", "--rule", "v", "--init", "2,3", "--limit", "45"])
        .env("ADDSEQ_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let written = std::fs::read_to_string(dir.path().join("v_2-3_45.csv")).unwrap();
    assert_eq!(written.lines().count(), 15);
}

#[test]
fn json_to_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("run.json");
    let csv = dir.path().join("run.csv");
    let o = addseq(&["gen", "--rule", "ulam", "--init", "1,2", "--limit", "500", "--format", "json", "-o", json.to_str().unwrap()]);
    assert!(o.status.success());
    let o = addseq(&["export", "--input", json.to_str().unwrap(), "--to", "terms", "-o", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let original: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let parsed: Vec<u64> = std::fs::read_to_string(&csv).unwrap().lines().map(|l| l.parse().unwrap()).collect();
    let expected: Vec<u64> = original["terms"].as_array().unwrap().iter().map(|t| t.as_u64().unwrap()).collect();
    assert_eq!(parsed, expected);

    let o = addseq(&["export", "--input", json.to_str().unwrap(), "--to", "density", "-o", "-"]);
    let text = stdout(&o);
    assert!(text.starts_with("index,ratio\n1,1\n"));
    assert_eq!(text.lines().count(), expected.len() + 1);
    let o = addseq(&["export", "--input", json.to_str().unwrap(), "--to", "histogram"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_reports() {
    let o = addseq(&["analyze", "--rule", "z:1,1,1", "--init", "1,2,3", "--limit", "100000", "--regularity"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("N=3 fundamental difference D=25"));

    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("q.json");
    let o = addseq(&[
        "analyze", "--rule", "z:1,1,1", "--init", "1,2,6", "--limit", "150000", "--quasiperiod", "20:25", "--density", "-o",
        json.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let record: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let lambda = record["report"]["quasiperiod"]["lambda"].as_f64().unwrap();
    assert!((lambda - 22.9).abs() < 0.2, "{lambda}");
    let o = addseq(&["export", "--input", json.to_str().unwrap(), "--to", "histogram"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("bin_center,count\n"));
    assert_eq!(text.lines().count(), 65);

    let o = addseq(&["analyze", "--rule", "v", "--init", "1,2", "--limit", "300", "--jumps"]);
    assert!(stdout(&o).contains("jumps: none"));
    let o = addseq(&["analyze", "--rule", "v", "--init", "1,2", "--limit", "300", "--quasiperiod", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = addseq(&["verify", "even-theorem", "--n-max", "41"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = addseq(&["verify", "gf2", "--n", "17"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("10000000000000000\n11000000000000000\n"));
    let o = addseq(&["verify", "box", "--family", "v", "--a", "4", "--b-max", "51"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = addseq(&["verify", "box", "--family", "ulam", "--b-max", "9"]);
    assert!(o.status.success());
    let o = addseq(&["verify", "ap", "--b-max", "7"]);
    assert!(o.status.success());
    let o = addseq(&["verify", "conjectures", "--n-max", "17", "--b-span", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("no counterexample") && !text.contains("proved"));
}

#[test]
fn box_suite_rejects_empty_ranges() {
    let o = addseq(&["verify", "box", "--family", "v", "--a", "4", "--b-max", "8"]);
    assert_eq!(o.status.code(), Some(2));
}
