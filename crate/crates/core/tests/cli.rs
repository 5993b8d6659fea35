use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn monrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monrad"))
        .args(args)
        .env_remove("MONRAD_JOBS")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn asr_of_the_triangle_cover_ideal() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "tri.json", r#"{"n": 3, "edges": [[1,2],[2,3],[1,3]]}"#);
    let o = monrad(&["asr", "--hypergraph", s(&g), "--kind", "symbolic", "--power", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("asr(I^(2)) [bruteforce]: 7 members"), "{out}");
    assert!(out.contains("(x1,x2)∩(x1,x3)\twitness x2*x3"), "{out}");
}

#[test]
fn polyhedral_and_brute_force_print_the_same_members() {
    let dir = TempDir::new().unwrap();
    let i = write(dir.path(), "i.txt", "(x1*x2, x2*x3, x3*x4, x1*x4)\n");
    let members = |method: &str| -> Vec<String> {
        let o = monrad(&["asr", "--ideal", s(&i), "--kind", "symbolic", "--method", method, "--power", "1..3"]);
        assert!(o.status.success());
        stdout(&o).lines().filter(|l| l.starts_with("  ")).map(|l| l.split('\t').next().unwrap().to_string()).collect()
    };
    assert_eq!(members("bruteforce"), members("polyhedral"));
}

#[test]
fn depth_table_writes_csv_to_out() {
    let dir = TempDir::new().unwrap();
    let d = write(
        dir.path(),
        "d.json",
        r#"{"n": 3, "components": [{"gens": ["x1", "x2^2"]}, {"gens": ["x2", "x3^3"]}, {"gens": ["x1", "x3"]}]}"#,
    );
    let out = dir.path().join("depth.csv");
    let o = monrad(&["depth-table", "--decomposition", s(&d), "--kind", "symbolic", "--power", "1..2", "--out", s(&out)]);
    assert!(o.status.success());
    let csv = fs::read_to_string(out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("s,kind,depth,argmin"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn monotone_scan_writes_a_sidecar() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c4.json", r#"{"n": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]}"#);
    let out = dir.path().join("scan.csv");
    let o = monrad(&["scan", "--hypergraph", s(&g), "--power", "1..3", "--out", s(&out)]);
    assert!(o.status.success());
    let csv = fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("s,kind,member-count,depth,comparison-to-previous\n1,ordinary,"));
    assert!(!csv.contains("incomparable"));
    let side = fs::read_to_string(dir.path().join("scan.csv.radicals.txt")).unwrap();
    assert!(side.lines().all(|l| l.split('\t').count() == 3));
}

#[test]
fn stability_scan_reports_stable() {
    let dir = TempDir::new().unwrap();
    let i = write(dir.path(), "i.txt", "(x1*x2, x2*x3, x1*x3)");
    let o = monrad(&["scan", "--ideal", s(&i), "--mode", "stability"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("s0 = 17"), "{out}");
    assert!(out.trim_end().ends_with("STABLE"), "{out}");
}

#[test]
fn check_balanced_prints_a_certificate() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "tri.json", r#"{"n": 3, "edges": [[1,2],[2,3],[1,3]]}"#);
    let out = stdout(&monrad(&["check-balanced", "--hypergraph", s(&tri)]));
    assert!(out.starts_with("NOT BALANCED: odd cycle of length 3"));
    assert_eq!(out.lines().filter(|l| l.starts_with('E')).count(), 3);
    let path = write(dir.path(), "p.json", r#"{"n": 3, "edges": [[1,2],[2,3]]}"#);
    assert_eq!(stdout(&monrad(&["check-balanced", "--hypergraph", s(&path)])), "BALANCED\n");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let i = write(dir.path(), "i.txt", "(x1*x2, x2^2)");
    let bad = write(dir.path(), "bad.json", r#"{"n": 2, "gens": ["x1*"]}"#);
    let iso = write(dir.path(), "iso.json", r#"{"n": 3, "edges": [[1,2]]}"#);
    let code = |args: &[&str]| monrad(args).status.code();
    assert_eq!(code(&["asr", "--ideal", s(&bad)]), Some(2));
    assert_eq!(code(&["asr", "--ideal", s(&i), "--power", "0..2"]), Some(2));
    assert_eq!(code(&["asr", "--ideal", s(&i), "--power", ""]), Some(2));
    assert_eq!(code(&["asr", "--ideal", s(&i), "--kind", "symbolic", "--method", "polyhedral"]), Some(3));
    assert_eq!(code(&["asr", "--hypergraph", s(&iso)]), Some(3));
    assert_eq!(code(&["asr", "--ideal", s(&dir.path().join("missing.txt"))]), Some(1));
    assert_eq!(code(&["verify", "nope"]), Some(3));
}

#[test]
fn parse_errors_carry_a_location() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"n\": 2,\n \"gens\": [\"x1\", \"x2^\"]}");
    let o = monrad(&["asr", "--input", s(&bad)]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn verify_exit_status_follows_the_verdict() {
    let o = monrad(&["verify", "oracle"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("oracle: PASS\n"));
    let o = monrad(&["verify", "example1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("example1: FAIL\n"));
}

#[test]
fn jobs_flag_does_not_change_output() {
    let dir = TempDir::new().unwrap();
    let i = write(dir.path(), "i.txt", "(x1^2*x2, x2^3*x3, x1*x3^2)");
    let one = monrad(&["--jobs", "1", "asr", "--ideal", s(&i), "--power", "1..2"]);
    let many = monrad(&["--jobs", "4", "asr", "--ideal", s(&i), "--power", "1..2"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}
