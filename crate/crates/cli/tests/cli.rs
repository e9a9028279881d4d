use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const C4_MINUS: &str = "4\n0 1 +\n1 2 +\n2 3 +\n0 3 -\n";
const K2_POS: &str = "2\n0 1 +\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sncorona")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn spectrum_of_c4_minus() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4_MINUS);
    let o = run(&["spectrum", s(&g), "--kind", "adj"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "-1.41421 x2, 1.41421 x2");
}

#[test]
fn verify_passes_and_reports_count() {
    let o = run(&["verify", "--theorem", "2.3", "--trials", "100", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("PASS 100/100"), "{}", stdout(&o));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--theorem", "4.2", "--trials", "30", "--seed", "11", "--json"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_file_exits_2_with_line_number() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.txt", "# header\n3\n0 1 +\n1 2 x\n");
    let o = run(&["spectrum", s(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn unknown_theorem_is_a_usage_error() {
    let o = run(&["verify", "--theorem", "9.9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corona_round_trip() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (write(&dir, "a.txt", C4_MINUS), write(&dir, "b.txt", K2_POS));
    let out = dir.path().join("out.txt");
    let o = run(&["corona", s(&a), s(&b), "-o", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().find(|l| !l.starts_with('#')), Some("12"));
    assert_eq!(text.lines().filter(|l| l.split_whitespace().count() == 3).count(), 24);

    // spectrum of the written file equals spectrum of the two factors
    let from_file = run(&["spectrum", s(&out)]);
    let from_factors = run(&["spectrum", s(&a), s(&b)]);
    assert_eq!(stdout(&from_file), stdout(&from_factors));
}

#[test]
fn charpoly_of_c4_minus() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4_MINUS);
    let o = run(&["charpoly", s(&g), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = run(&["charpoly", s(&g)]);
    assert!(stdout(&text).contains("t^4"));
    assert!(v.get("char_poly").is_some(), "{v}");
}

#[test]
fn closed_form_agrees_and_json_parses() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (write(&dir, "a.txt", C4_MINUS), write(&dir, "b.txt", K2_POS));
    for kind in ["adj", "lap", "netlap"] {
        let o = run(&["--json", "spectrum", s(&a), s(&b), "--kind", kind, "--closed-form"]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        if v["closed_form"].is_null() {
            assert!(v["reason"].is_string());
        } else {
            assert_eq!(v["agrees"], serde_json::Value::Bool(true), "{kind}");
            assert!(o.status.success());
        }
    }
}

#[test]
fn paper_example_runs() {
    let o = run(&["paper-example"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("12 vertices"));
    assert!(out.contains("closed form vs numeric: agree"));
    let j = run(&["paper-example", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["closed_form"]["theorem"], "2.3");
}

#[test]
fn cospectral_demo_by_kind() {
    let o = run(&["cospectral-demo", "--kind", "adj", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["first_char_poly"], v["second_char_poly"]);

    // the default inputs are not net-Laplacian cospectral
    let o = run(&["cospectral-demo", "--kind", "netlap"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn distinct_count_of_corona() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (write(&dir, "a.txt", C4_MINUS), write(&dir, "k1.txt", "1\n"));
    let out = dir.path().join("c.txt");
    assert!(run(&["corona", s(&a), s(&b), "-o", s(&out)]).status.success());
    let o = run(&["--json", "distinct", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["distinct_count"], 4);
}
