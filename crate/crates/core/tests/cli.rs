use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hyperspec::canon::canonical_form;
use hyperspec::families::{FamilyKind, FamilySpec};
use hyperspec::uhg::read_uhg;
use serde_json::Value;

fn hyperspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperspec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn family_then_rho_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.uhg");
    let o = hyperspec(&["family", "--kind", "loose-path", "--n", "7", "--k", "3", "--out", path(&file)]);
    assert!(o.status.success());
    let o = hyperspec(&["rho", path(&file), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert!(v["rho"].as_f64().unwrap() > 0.0);
    assert!(v["residual"].as_f64().unwrap() <= 1e-10);
    assert_eq!(v["perron"].as_array().unwrap().len(), 7);
    // 17 significant digits.
    let text = stdout(&o);
    let token = text.split("\"rho\":").nth(1).unwrap().split(',').next().unwrap();
    let mantissa = token.split('e').next().unwrap();
    assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17, "{token}");
}

#[test]
fn rho_of_a_single_four_edge() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("e.uhg");
    fs::write(&file, "# one edge\n4 4 1\n0 1 2 3\n").unwrap();
    let o = hyperspec(&["rho", path(&file), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["rho"].as_f64().unwrap() - 3.0).abs() < 1e-9);
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.uhg");
    fs::write(&file, "3 7 2\n0 1 2\n2 3 9\n").unwrap();
    let o = hyperspec(&["rho", path(&file)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn verify_max_names_the_path() {
    let o = hyperspec(&["verify", "--k", "3", "--m", "3", "--theorem", "max", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let claim = &v["ordering"]["claims"][0];
    assert_eq!(claim["theorem"], "max");
    assert_eq!(claim["verdict"], "StrictPass");
    let p = hyperspec::families::loose_path(7, 3).unwrap();
    assert_eq!(claim["witness"], canonical_form(&p).to_string());
}

#[test]
fn verify_everything_small() {
    for (k, m) in [("2", "5"), ("3", "4"), ("4", "3")] {
        let o = hyperspec(&["verify", "--k", k, "--m", m]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("ok"));
    }
}

#[test]
fn usage_errors() {
    let o = hyperspec(&["verify", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hyperspec(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hyperspec(&["--max-iter", "0", "verify", "--k", "3", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-iter"));
}

#[test]
fn enumerate_writes_classes_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("classes");
    let o = hyperspec(&["enumerate", "--k", "2", "--m", "5", "--out", path(&out)]);
    assert!(o.status.success());
    let manifest: Value = serde_json::from_str(&fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["count"], 6);
    for entry in manifest["classes"].as_array().unwrap() {
        let g = read_uhg(out.join(entry["file"].as_str().unwrap())).unwrap();
        assert_eq!(canonical_form(&g).to_string(), entry["code"].as_str().unwrap());
    }
}

#[test]
fn family_round_trip_across_the_grid() {
    let dir = tempfile::tempdir().unwrap();
    let mut cases: Vec<Vec<(&str, usize)>> = Vec::new();
    for (n, k) in [(7, 3), (9, 3), (13, 3), (6, 2), (13, 2), (10, 4), (16, 4)] {
        cases.push(vec![("n", n), ("k", k)]);
    }
    for case in &cases {
        let (n, k) = (case[0].1, case[1].1);
        let m = (n - 1) / (k - 1);
        let mut specs = vec![
            FamilySpec::new(FamilyKind::LoosePath, case),
            FamilySpec::new(FamilyKind::HyperStar, case),
            FamilySpec::new(FamilyKind::Broom, &[("n", n), ("k", k), ("delta", m.min(3))]),
        ];
        if m >= 3 {
            specs.push(FamilySpec::new(FamilyKind::FGraph, case));
            specs.push(FamilySpec::new(FamilyKind::DoubleBroom, &[("n", n), ("k", k), ("a", 1)]));
        }
        for spec in specs {
            let spec_file = dir.path().join("spec.json");
            let out = dir.path().join("g.uhg");
            fs::write(&spec_file, serde_json::to_string(&spec).unwrap()).unwrap();
            let o = hyperspec(&["family", "--spec", path(&spec_file), "--out", path(&out)]);
            assert!(o.status.success(), "{spec:?}");
            let read = read_uhg(&out).unwrap();
            assert_eq!(canonical_form(&read), canonical_form(&spec.materialize().unwrap()));
        }
    }
}

#[test]
fn graft_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.uhg");
    fs::write(&p, "3 7 3\n0 1 2\n2 3 4\n4 5 6\n").unwrap();
    let o = hyperspec(&["graft", "--type", "1", "--input", path(&p), "--u", "3", "--p", "2", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("StrictPass"));
    let o = hyperspec(&["graft", "--type", "2", "--input", path(&p), "--u", "3", "--v", "2", "--e", "1", "--p", "1", "--q", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["verdict"], "StrictPass");
    let o = hyperspec(&["graft", "--type", "3", "--input", path(&p), "--e", "0", "--s", "2", "--stars", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hyperspec(&["graft", "--type", "1", "--input", path(&p), "--u", "0", "--p", "1", "--q", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn campaign_output_is_reproducible() {
    let args = ["--seed", "11", "graft", "--type", "3", "--campaign", "20", "--json"];
    let (a, b) = (hyperspec(&args), hyperspec(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["violation"], 0);
    assert_eq!(v["results"][0]["seed"], 11);
}

#[test]
fn distance_csv() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p3.uhg");
    fs::write(&file, "2 3 2\n0 1\n1 2\n").unwrap();
    let o = hyperspec(&["distance", path(&file), "--format", "csv"]);
    assert_eq!(stdout(&o), "0,1,2\n1,0,1\n2,1,0\n");
}

#[test]
fn thread_cap_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_hyperspec"))
            .args(["verify", "--k", "2", "--m", "6", "--json"])
            .env("HYPERSPEC_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
