//! Black-box tests of the `gtrig` binary: outputs and the exit-code matrix.

use std::process::{Command, Output};

fn gtrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtrig")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn pi_prints_seventeen_digits() {
    let o = gtrig(&["pi", "--p", "2", "--q", "2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "3.1415926535897931\n"));

    let o = gtrig(&["pi", "--p", "2", "--q", "4"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 2.622_057_554_292_119_8).abs() <= 1e-12);

    let o = gtrig(&["pi", "--p", "1", "--q", "2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("p must exceed 1"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn eval_values_and_domain_errors() {
    let o = gtrig(&["eval", "--p", "2", "--q", "2", "--fn", "sin", "--x", "0.5235987755982988"]);
    assert_eq!(code(&o), 0);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 0.5).abs() <= f64::EPSILON / 2.0, "{v}");

    let o = gtrig(&["eval", "--p", "2", "--q", "3", "--fn", "sin", "--x", "1.0"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 0.883_401_047_341_795_8).abs() <= 2e-16);

    let o = gtrig(&["eval", "--p", "2", "--q", "3", "--fn", "cos", "--x", "-0.5"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 0.938_465_764_685_617_8).abs() <= 2e-16);

    let o = gtrig(&["eval", "--p", "2", "--q", "3", "--fn", "arcsin", "--x", "1.5"]);
    assert_eq!(code(&o), 2);
    assert!(!stderr(&o).is_empty());
}

#[test]
fn table_csv_and_json() {
    let o = gtrig(&["table", "--p", "2", "--q", "2", "--fn", "sin", "--from", "0", "--to", "1", "--step", "0.5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "x,value\n0,0\n0.5,0.479425538604203\n1,0.8414709848078965\n");

    let o = gtrig(&[
        "table", "--p", "2", "--q", "3", "--fn", "cos", "--from", "-1", "--to", "1", "--step", "0.25", "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[0]["x"].as_f64(), Some(-1.0));
    assert!(rows.iter().all(|r| r["value"].is_f64()));
}

#[test]
fn csv_rows_reproduce_bit_identically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = gtrig(&[
        "table", "--p", "3", "--q", "1.5", "--fn", "sin", "--from", "-4", "--to", "4", "--step", "0.37", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let text = std::fs::read(&path).unwrap();
    assert!(!text.contains(&b'\r'));
    let mut rdr = csv::Reader::from_reader(text.as_slice());
    assert_eq!(rdr.headers().unwrap(), vec!["x", "value"]);
    let pp = gtrig_core::ParamPair::new(3.0, 1.5).unwrap();
    let mut n = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let x: f64 = rec[0].parse().unwrap();
        let v: f64 = rec[1].parse().unwrap();
        assert_eq!(gtrig::sin_pq(pp, x).unwrap().value.to_bits(), v.to_bits());
        n += 1;
    }
    assert_eq!(n, 22);
}

#[test]
fn table_errors() {
    let base = ["table", "--p", "2", "--q", "2", "--fn", "sin", "--from", "0", "--to", "1"];
    let with = |extra: &[&str]| gtrig(&[&base[..], extra].concat());
    assert_eq!(code(&with(&["--step", "2"])), 2);
    assert_eq!(code(&with(&["--step", "0"])), 2);
    assert_eq!(code(&with(&["--step", "-0.1"])), 2);
    assert_eq!(code(&gtrig(&["table", "--p", "2", "--q", "2", "--fn", "sin", "--from", "1", "--to", "0", "--step", "0.1"])), 2);
    assert_eq!(
        code(&gtrig(&["table", "--p", "2", "--q", "2", "--fn", "arcsin", "--from", "0", "--to", "2", "--step", "0.5"])),
        2
    );
    let o = with(&["--step", "0.5", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("nonexistent-dir"));
}

#[test]
fn verify_single_identity_and_unknown_id() {
    let o = gtrig(&["verify", "--identity", "dbl-2-3", "--samples", "1000", "--tol", "1e-9", "--seed", "42"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("dbl-2-3") && stdout(&o).contains("PASS"));

    let o = gtrig(&["verify", "--identity", "no-such-id"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("no-such-id"));

    let o = gtrig(&["verify", "--identity", "dbl-2-2", "--samples", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_formats() {
    let o = gtrig(&["verify", "--identity", "maf-sin", "--samples", "50", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(&headers[0], "id");
    let rec = rdr.records().next().unwrap().unwrap();
    assert_eq!(&rec[0], "maf-sin");

    let o = gtrig(&["verify", "--identity", "duality-pi", "--p", "3", "--q", "1.5", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["param"], "(p,q)=(3,1.5)");
    assert_eq!(v[0]["samples"], 1);
}

#[test]
fn verify_all_passes_and_a_perturbation_fails() {
    let o = gtrig(&["verify", "--all", "--samples", "200", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    let all: Vec<&str> = gtrig_core::IdentityId::ALL.iter().map(|i| i.as_str()).collect();
    assert_eq!(ids, all);

    let o = gtrig(&["verify", "--all", "--samples", "200", "--perturb", "proof-gx=1e-6"]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("proof-gx")).unwrap();
    assert!(line.contains("FAIL"));
    assert_eq!(text.matches("FAIL").count(), 1);
}

#[test]
fn list_identities_prints_the_vocabulary() {
    let o = gtrig(&["verify", "--list-identities"]);
    assert_eq!(code(&o), 0);
    let names: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    assert_eq!(names.len(), 19);
    assert!(names.iter().any(|n| n == "dbl-4:3-2"));
}

#[test]
fn malformed_input_never_panics() {
    let cases: &[&[&str]] = &[
        &[],
        &["nope"],
        &["pi"],
        &["pi", "--p", "nan", "--q", "2"],
        &["pi", "--p", "inf", "--q", "2"],
        &["pi", "--p", "2", "--q", "1e309"],
        &["pi", "--p", "2", "--q", "2000"],
        &["eval", "--p", "2", "--q", "2", "--fn", "tan", "--x", "1"],
        &["eval", "--p", "2", "--q", "2", "--fn", "sin", "--x", "inf"],
        &["eval", "--p", "2", "--q", "2", "--fn", "sin", "--x", "nan"],
        &["table", "--p", "2", "--q", "2", "--fn", "sin", "--from", "0", "--to", "inf", "--step", "1"],
        &["table", "--p", "2", "--q", "2", "--fn", "sin", "--from", "0", "--to", "1e300", "--step", "1"],
        &["verify", "--all", "--tol", "-1"],
        &["verify", "--all", "--samples", "-5"],
        &["verify", "--identity", "pythagorean", "--q", "2"],
        &["verify", "--identity", "pythagorean", "--p", "0.5"],
        &["verify", "--identity", "dbl-2-2", "--perturb", "x=1"],
        &["verify", "--identity", "dbl-2-2", "--perturb", "dbl-2-2=abc"],
    ];
    for args in cases {
        let o = gtrig(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).contains("panicked"), "{args:?}");
    }
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(code(&gtrig(&["--help"])), 0);
    assert_eq!(code(&gtrig(&["--version"])), 0);
    assert!(!stdout(&gtrig(&["verify", "--help"])).contains("perturb"));
}
