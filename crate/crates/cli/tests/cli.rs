use std::process::{Command, Output};

use solweights::catalog::System;
use solweights::poly::{Family, GoldenTable};

fn owc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_owc")).arg("--quiet").args(args).env_remove("OWC_CACHE_DIR").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn weights_example() {
    let o = owc(&["weights", "--spec", "CS_U", "--d-offset", "3l+6", "--l", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "spec,system,l,d,w\nCS_U,F,1,9,-11\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["weights", "--spec", "CS_U", "--l", "9"],
        &["weights", "--spec", "nope", "--l", "1"],
        &["weights", "--spec", "CS_U", "--system", "H", "--l", "1"],
        &["weights", "--l", "1", "--format", "xml"],
        &["owc", "--branch", "2"],
    ] {
        assert_eq!(owc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_at_one_level() {
    let o = owc(&["verify", "--system", "F", "--l", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("table,label,system,family,expected,got,status\n"));
    assert!(text.contains("3,CS_U,F,9,-11,-11,ok\n"));
    assert!(!text.contains("mismatch"));
}

#[test]
fn owc_branch_three() {
    let o = owc(&["owc", "--branch", "3", "--l", "0..2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains("mismatch"));
    assert!(text.contains("spin7 = m(H),H,3,x,l+6,2*x + 7,2*x + 7,ok\n"));
    assert!(text.contains("spets = m(F),F,3,x,3l+7,4*x^2 - 6*x + 4,4*x^2 - 6*x + 4,ok\n"));
    assert!(text.contains("spets residual,F,3,x,0,6,6,ok\n"));
    assert_eq!(text.matches("conjecture,").count(), 36);
}

#[test]
fn interpolate_json_round_trips() {
    let o = owc(&["interpolate", "--system", "F", "--spec", "QQRt,QQpRtp", "--format", "json"]);
    assert!(o.status.success());
    let t: GoldenTable = serde_json::from_slice(&o.stdout).unwrap();
    let golden = GoldenTable::table3();
    assert_eq!(t.entries.len(), 8);
    for e in &t.entries {
        assert_eq!(e.systems, vec![System::F]);
        assert_eq!(golden.get(&e.label, System::F, e.family), Some(&e.poly), "{} {}", e.label, e.family);
    }
    assert_eq!(serde_json::to_string_pretty(&t).unwrap() + "\n", stdout(&o));
    assert!(t.entries.iter().all(|e| e.family != Family::Total));
}

#[test]
fn lie_tables_and_formats() {
    let o = owc(&["lie", "--series", "--group", "spets", "--branch", "1"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 22 + 12 + 6 + 5 + 3 + 2 + 4 + 1 + 2 + 2 + 1);
    assert_eq!(text.matches(",3l+10,0\n").count(), 6);
    let md = stdout(&owc(&["lie", "--group", "spin7", "--branch", "3", "--format", "markdown"]));
    assert!(md.starts_with("| group | branch | d | k |\n| --- | --- | --- | --- |\n"));
    assert!(md.contains("| spin7 | 3 | 3l+10 | 16 |\n"));
    let js: serde_json::Value = serde_json::from_slice(&owc(&["lie", "--l", "0", "--format", "json"]).stdout).unwrap();
    assert_eq!(js.as_array().unwrap().iter().filter(|r| r["group"] == "spets" && r["d"] == 0).count(), 2);
}

#[test]
fn cache_dir_from_environment_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_owc"))
        .args(["--quiet", "weights", "--spec", "S", "--l", "0", "--system", "H", "--out"])
        .arg(&out)
        .env("OWC_CACHE_DIR", dir.path().join("cache"))
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(dir.path().join("cache/w_S_H_l0.txt").exists());
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(written, stdout(&owc(&["weights", "--spec", "S", "--l", "0", "--system", "H"])));
    assert_eq!(written, stdout(&owc(&["weights", "--spec", "S", "--l", "0", "--system", "H", "--sequential", "--workers", "1"])));
}
