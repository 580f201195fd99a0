use std::path::Path;
use std::process::{Command, Output};

use vpro_verify::report::{read_json, read_orbit_csv};
use vpro_verify::{OrbitReport, VerificationReport};

const FIGURE_WORD: &str = "A|CA|BBAA|BCCA|C|BA|B|CC|B";

fn vpro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vpro")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    assert_eq!(vpro(&["verify", "--suite", "figures"]).status.code(), Some(0));
    assert_eq!(vpro(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(vpro(&["verify", "--suite", "main", "--ceiling", "3"]).status.code(), Some(2));
    assert_eq!(vpro(&["orbits", "--action", "row", "--ell", "1", "--q", "2"]).status.code(), Some(2));
    assert_eq!(vpro(&["enumerate", "--object", "labelings", "--ell", "1"]).status.code(), Some(2));
}

#[test]
fn orbits_json() {
    let o = vpro(&["orbits", "--action", "pro-pstrict", "--ell", "1", "--q", "3"]);
    let r: OrbitReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.orbit_sizes, vec![3, 2]);
    assert_eq!(r.order, 6);
    assert_eq!(r.count, 5);
    let o = vpro(&["orbits", "--action", "togpro", "--ell", "1", "--q", "3"]);
    let t: OrbitReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(t.sorted_sizes(), r.sorted_sizes());
}

#[test]
fn enumerate_counts() {
    let count = |args: &[&str]| stdout(&vpro(args)).lines().count();
    assert_eq!(count(&["enumerate", "--object", "linext", "--ell", "2"]), 16);
    assert_eq!(count(&["enumerate", "--object", "labelings", "--ell", "2", "--q", "3"]), 14);
    assert_eq!(count(&["enumerate", "--object", "words", "--ell", "1", "--q", "4"]), 14);
    assert_eq!(count(&["enumerate", "--object", "ppartitions", "--ell", "1", "--q", "3"]), 5);
    assert_eq!(count(&["enumerate", "--object", "ppartitions", "--ell", "2", "--k", "1"]), 14);
}

#[test]
fn svg_of_figure_word() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.txt", FIGURE_WORD);
    let first = stdout(&vpro(&["render", "--input", &input, "--format", "svg"]));
    let second = stdout(&vpro(&["render", "--input", &input, "--format", "svg"]));
    assert_eq!(first, second);
    let doc = roxmltree::Document::parse(&first).expect("well-formed XML");
    let class = |c: &str| {
        doc.descendants()
            .filter(|n| n.attribute("class") == Some(c))
            .collect::<Vec<_>>()
    };
    let b = class("arc-b");
    let c = class("arc-c");
    assert_eq!((b.len(), c.len()), (6, 6));
    assert!(b.iter().all(|n| n.attribute("stroke") == Some("blue") && n.attribute("stroke-dasharray").is_none()));
    assert!(c.iter().all(|n| n.attribute("stroke") == Some("red") && n.attribute("stroke-dasharray").is_some()));
    assert_eq!(class("double-arc").len(), 1);
    assert_eq!(class("block-index").len(), 9);
}

#[test]
fn ascii_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.txt", "A|B|C\n");
    let text = stdout(&vpro(&["render", "--input", &input]));
    assert_eq!(text, "   1   2   3\n   A | B | C\nB  +===+\nC  +- - - -+\n");
    let json = write(dir.path(), "w.json", r#"{"ell":1,"q":3,"blocks":[[1,0,0],[0,1,0],[0,0,1]]}"#);
    assert_eq!(stdout(&vpro(&["render", "--input", &json])), text);
    let bad = write(dir.path(), "bad.txt", "B|A|C");
    assert_eq!(vpro(&["render", "--input", &bad]).status.code(), Some(2));
}

#[test]
fn export_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let o = vpro(&["export", "--out", json.to_str().unwrap(), "--suite", "figures"]);
    assert_eq!(o.status.code(), Some(0));
    let r: VerificationReport = read_json(&json).unwrap();
    assert_eq!(r.suite, "figures");
    assert!(r.passed());
    assert_eq!(r.claims.len(), 9);

    let csv = dir.path().join("o.csv");
    let args = ["export", "--out", csv.to_str().unwrap(), "--format", "csv", "--action", "row", "--ell", "1", "--q", "3"];
    assert_eq!(vpro(&args).status.code(), Some(0));
    let rows = read_orbit_csv(&csv).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].sorted_sizes(), vec![2, 3]);
    assert!(std::fs::read_to_string(&csv).unwrap().contains(";"));

    let suite_csv = dir.path().join("s.csv");
    let args = ["export", "--out", suite_csv.to_str().unwrap(), "--format", "csv", "--suite", "figures"];
    assert_eq!(vpro(&args).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&suite_csv).unwrap().lines().count(), 10);
}
