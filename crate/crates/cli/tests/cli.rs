use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn algebra_file(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn rational(q: &str, f: &[&str], g: &[&str]) -> NamedTempFile {
    let list = |c: &[&str]| c.iter().map(|s| format!("\"{s}\"")).collect::<Vec<_>>().join(",");
    algebra_file(&format!(
        r#"{{"field":{{"type":"Q"}},"q":"{q}","f":[{}],"g":[{}]}}"#,
        list(f),
        list(g)
    ))
}

fn qgha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgha"))
        .args(args)
        .env_remove("QGHA_CAPACITY")
        .output()
        .unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_reports_flags() {
    let a = rational("1", &["0", "0", "1"], &["0", "1"]);
    let out = qgha(&["analyze", path(&a)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("domain: true"));
    assert!(text.contains("noetherian: false"));
    assert!(text.contains("gdua: false"));
    assert!(text.contains("noetherian-witness: depth 5 verified"));
}

#[test]
fn mul_fast_path_and_oracle_agree() {
    let a = rational("2", &["0", "0", "1"], &["0", "1"]);
    let fast = qgha(&["mul", path(&a), "y", "x"]);
    assert_eq!(stdout(&fast), "2*x*y + h\n");
    let slow = qgha(&["mul", path(&a), "y^2", "x*h - 1", "--oracle"]);
    let fast = qgha(&["mul", path(&a), "y^2", "x*h - 1"]);
    assert_eq!(slow.stdout, fast.stdout);
}

#[test]
fn deg_and_iota() {
    let a = rational("2", &["0", "0", "1"], &["0", "1"]);
    assert_eq!(stdout(&qgha(&["deg", path(&a), "3*x^2*h*y + (1/2)*h^3"])), "(2, 1)\n");
    assert_eq!(stdout(&qgha(&["deg", path(&a), "0"])), "(-inf, -inf)\n");
    assert_eq!(stdout(&qgha(&["iota", path(&a), "x*h"])), "h*y\n");
}

#[test]
fn iso_round_trip() {
    let a = rational("2", &["0", "0", "1"], &["0", "1"]);
    let b = rational("2", &["2", "-2", "1"], &["-1", "1"]);
    let out = qgha(&["iso", path(&a), path(&b)]);
    assert_eq!(out.status.code(), Some(0));
    let w: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (w["u"].as_str(), w["v"].as_str(), w["c"].as_str()),
        (Some("1"), Some("1"), Some("1"))
    );
    assert_eq!(w["decomposition"]["alpha"], "1");

    let c = rational("3", &["0", "0", "1"], &["0", "1"]);
    assert_eq!(stdout(&qgha(&["iso", path(&a), path(&c)])), "not isomorphic\n");
}

#[test]
fn iso_rejects_down_up_regime() {
    let a = rational("2", &["0", "1"], &["0", "1"]);
    let out = qgha(&["iso", path(&a), path(&a)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported regime"));
}

#[test]
fn aut_json() {
    let a = rational("2", &["0", "0", "0", "1"], &["0", "1"]);
    let out = qgha(&["aut", path(&a)]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["torus_rank"], 1);
    assert_eq!(v["abelian"], true);
    assert_eq!(v["finite_part"].as_array().unwrap().len(), 2);

    let f3 = algebra_file(r#"{"field":{"type":"Fp","p":3},"q":"2","f":["0","0","0","1"],"g":["0","-1","0","1"]}"#);
    let v: serde_json::Value = serde_json::from_slice(&qgha(&["aut", path(&f3)]).stdout).unwrap();
    assert_eq!(v["abelian"], false);
    assert_eq!(v["char_caveat"], true);
}

#[test]
fn center_and_gk() {
    let a = rational("-1", &["0", "0", "1"], &["0", "1", "1"]);
    let out = stdout(&qgha(&["center", path(&a)]));
    assert!(out.starts_with("polynomial ring in Z^2, Z = -1*x*y + h"));

    let lin = rational("1", &["0", "1"], &["0", "1"]);
    let csv = stdout(&qgha(&["gk", path(&lin), "--max-n", "3"]));
    let dims: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(dims, ["1", "4", "10", "20"]);
    assert!(csv.starts_with("n,dim,slope\n0,1,\n"));
}

#[test]
fn noeth_witness_errors() {
    let a = rational("1", &["1", "0", "1"], &["0", "1"]);
    assert_eq!(qgha(&["noeth-witness", path(&a)]).status.code(), Some(3));
    let b = rational("1", &["0", "0", "1"], &["0", "1"]);
    let out = stdout(&qgha(&["noeth-witness", path(&b), "--depth", "5"]));
    assert!(out.ends_with("verified: true\n"));
}

#[test]
fn conversions() {
    assert_eq!(
        stdout(&qgha(&["convert", "--from-downup", "2", "-1", "0"])),
        "{\"field\":{\"type\":\"Q\"},\"q\":\"1\",\"f\":[\"0\",\"1\"],\"g\":[\"0\",\"1\"]}\n"
    );
    assert_eq!(
        stdout(&qgha(&["convert", "--from-gdua", "h^2", "1", "1", "0"])),
        "{\"field\":{\"type\":\"Q\"},\"q\":\"1\",\"f\":[\"0\",\"1\"],\"g\":[\"0\",\"0\",\"-1\"]}\n"
    );
    let a = rational("2", &["1", "3"], &["0", "1"]);
    assert_eq!(
        stdout(&qgha(&["convert", "--to-gdua", path(&a)])),
        "L(-1*h, 3, 2, -1)\n"
    );
    let b = rational("1", &["0", "0", "1"], &["0", "1"]);
    assert_eq!(qgha(&["convert", "--to-gdua", path(&b)]).status.code(), Some(3));
    assert_eq!(
        qgha(&["convert", "--from-downup", "0", "-1", "0"]).status.code(),
        Some(3)
    );
    let f5 = qgha(&["convert", "--from-downup", "0", "-1", "0", "--p", "5"]);
    assert_eq!(f5.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    let a = rational("2", &["0", "0", "1"], &["0", "1"]);
    let parse = qgha(&["mul", path(&a), "x**2", "y"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("offset 2"));
    assert_eq!(qgha(&["bogus"]).status.code(), Some(1));
    let bad = algebra_file(r#"{"field":{"type":"Q"},"q":"1","g":[]}"#);
    assert_eq!(qgha(&["analyze", path(&bad)]).status.code(), Some(2));
    let np = algebra_file(r#"{"field":{"type":"Fp","p":9},"q":"1","f":["1"],"g":[]}"#);
    assert_eq!(qgha(&["analyze", path(&np)]).status.code(), Some(2));

    let b = rational("1", &["0", "0", "1"], &["0", "1"]);
    let capped = Command::new(env!("CARGO_BIN_EXE_qgha"))
        .args(["gk", path(&b), "--max-n", "5"])
        .env("QGHA_CAPACITY", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(4));
}

#[test]
fn output_is_deterministic() {
    let a = rational("-1", &["0", "0", "1"], &["0", "1", "1"]);
    let first = qgha(&["analyze", path(&a)]);
    let second = qgha(&["analyze", path(&a)]);
    assert_eq!(first.stdout, second.stdout);
}
