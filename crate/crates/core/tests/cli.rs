use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn revlex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revlex"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn gb_reports_worked_leading_monomials() {
    let worked = fixture("worked.ideal");
    let o = revlex(&["--format", "json", "gb", worked.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(
        v["leading_monomials"],
        serde_json::json!(["x^2", "x*y^2", "y^4"])
    );
    assert_eq!(
        v["initial_ideal"]["generators"],
        serde_json::json!([[0, 4], [1, 2], [2, 0]])
    );
    assert_eq!(v["basis"][2], "y^4");

    let text = revlex(&["gb", worked.to_str().unwrap()]);
    let out = stdout(&text);
    assert!(out.starts_with("ring 2 vars over rational\nx^2 + 3*x*y + 5*y^2\n"));
    assert!(out.ends_with("initial ideal: {\"nvars\":2,\"generators\":[[0,4],[1,2],[2,0]]}\n"));
}

#[test]
fn gb_output_parses_back_to_the_same_basis() {
    let worked = fixture("worked.ideal");
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("basis.txt");
    let o = revlex(&[
        "gb",
        worked.to_str().unwrap(),
        "--out",
        first.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let body: String = fs::read_to_string(&first)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with("initial ideal"))
        .map(|l| format!("{l}\n"))
        .collect();
    let again = dir.path().join("again.ideal");
    fs::write(&again, &body).unwrap();
    let o = revlex(&["gb", again.to_str().unwrap()]);
    assert!(stdout(&o).starts_with(&body));
}

#[test]
fn gb_inline_and_field_override() {
    let o = revlex(&["gb", "--gen", "x"]);
    assert_eq!(
        stdout(&o),
        "ring 2 vars over rational\nx\ninitial ideal: {\"nvars\":2,\"generators\":[[1,0]]}\n"
    );

    let o = revlex(&[
        "gb",
        "--nvars",
        "3",
        "--gen",
        "x1^2 - x2",
        "--gen",
        "x2^2 - x3",
        "--field",
        "prime:101",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("ring 3 vars over prime:101\n"));

    let o = revlex(&[
        "gb",
        fixture("worked.ideal").to_str().unwrap(),
        "--field",
        "prime:7",
    ]);
    assert!(
        stdout(&o).starts_with("ring 2 vars over prime:7\n"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = revlex(&["gb", fixture("bad_vars.ideal").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("3:"), "{}", stderr(&o));

    let o = revlex(&["gb", "--gen", "x^"]);
    assert_eq!(o.status.code(), Some(2));

    let o = revlex(&["check-ideal", fixture("worked.ideal").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = revlex(&["gb", "/nonexistent/file.ideal"]);
    assert_eq!(o.status.code(), Some(2));

    let o = revlex(&["closed-form", "3", "2"]);
    assert_eq!(o.status.code(), Some(2));

    let o = revlex(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn closed_form_reports() {
    let o = revlex(&["--format", "json", "--seed", "4", "closed-form", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["agreement"], true);
    assert_eq!(v["spec"], serde_json::json!({"n": 2, "m": 3, "mu": 1}));
    assert_eq!(
        v["initial_ideal"]["generators"],
        serde_json::json!([[0, 4], [1, 2], [2, 0]])
    );
    assert!(v["resamples"].is_u64() && v["elapsed_ms"].is_u64());

    let v = json(&revlex(&["--format", "json", "closed-form", "1", "1"]));
    assert_eq!(
        v["initial_ideal"]["generators"],
        serde_json::json!([[1, 0], [0, 1]])
    );

    let v = json(&revlex(&["--format", "json", "closed-form", "5", "9"]));
    assert_eq!(v["agreement"], true);
    assert_eq!(
        v["initial_ideal"]["generators"].as_array().unwrap().len(),
        6
    );

    let o = revlex(&["--field", "rational", "closed-form", "2", "3"]);
    assert!(stdout(&o).contains("agreement: true"));
}

#[test]
fn closed_form_degeneracy_exits_3() {
    let o = revlex(&[
        "--field",
        "prime:7",
        "--seed",
        "2",
        "closed-form",
        "2",
        "2",
        "--max-resamples",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("degenerate"));
}

#[test]
fn check_ideal_exit_codes() {
    let o = revlex(&["check-ideal", fixture("worked.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "weakly revlex: true\nrevlex: true (exact)\nstandard monomials: 6\n"
    );

    let o = revlex(&[
        "--format",
        "json",
        "check-ideal",
        fixture("not_wrl.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["weakly_revlex"]["holds"], false);
    assert_eq!(
        v["weakly_revlex"]["witness"]["member"],
        serde_json::json!([0, 2])
    );
    assert_eq!(
        v["weakly_revlex"]["witness"]["predecessor"],
        serde_json::json!([1, 1])
    );
    assert_eq!(v["revlex"]["holds"], false);

    let o = revlex(&["check-ideal", "--closed-form", "4", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("standard monomials: 36"));
}

#[test]
fn staircase_golden_files() {
    let o = revlex(&["staircase", "--closed-form", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        fs::read_to_string(fixture("worked.ascii")).unwrap()
    );

    let o = revlex(&[
        "staircase",
        fixture("worked.json").to_str().unwrap(),
        "--render",
        "ascii",
    ]);
    assert_eq!(
        stdout(&o),
        fs::read_to_string(fixture("worked.ascii")).unwrap()
    );

    let o = revlex(&["staircase", fixture("x.json").to_str().unwrap()]);
    assert_eq!(stdout(&o), fs::read_to_string(fixture("x.ascii")).unwrap());

    let three = tempfile::NamedTempFile::new().unwrap();
    fs::write(three.path(), r#"{"nvars":3,"generators":[[1,0,0]]}"#).unwrap();
    let o = revlex(&["staircase", three.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn staircase_svg_is_well_formed_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for p in [&a, &b] {
        let o = revlex(&[
            "staircase",
            "--closed-form",
            "3",
            "5",
            "--render",
            "svg",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let svg = fs::read_to_string(&a).unwrap();
    assert_eq!(svg, fs::read_to_string(&b).unwrap());

    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    let rects: Vec<_> = doc
        .descendants()
        .filter(|n| n.has_tag_name("rect"))
        .collect();
    // corners x^3, x^2 y^3, x y^5, y^7: box is 5 by 9
    assert_eq!(rects.len(), 5 * 9);
    let standard = rects
        .iter()
        .filter(|r| r.attribute("class") == Some("std"))
        .count();
    assert_eq!(standard, 15);
    let mut cells: Vec<(u32, u32)> = rects
        .iter()
        .map(|r| {
            (
                r.attribute("data-x").unwrap().parse().unwrap(),
                r.attribute("data-y").unwrap().parse().unwrap(),
            )
        })
        .collect();
    cells.sort();
    cells.dedup();
    assert_eq!(cells.len(), 45);
}

#[test]
fn verify_log_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("log.jsonl");
    let o = revlex(&[
        "verify",
        "--nvars",
        "2",
        "--degrees",
        "4,7",
        "--trials",
        "8",
        "--out",
        log.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("8/8 weakly revlex"));
    let lines: Vec<Value> = fs::read_to_string(&log)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0]["degrees"], serde_json::json!([4, 7]));

    let o = revlex(&[
        "--format",
        "json",
        "verify",
        "--nvars",
        "3",
        "--degrees",
        "2,2,2",
        "--trials",
        "5",
        "--out",
        log.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(2),
        "a log from another campaign must be refused"
    );

    let o = revlex(&["verify", "--replay", log.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "8/8 records reproduced\n");

    let o = revlex(&[
        "--format",
        "json",
        "verify",
        "--nvars",
        "3",
        "--degrees",
        "2,2,2",
        "--trials",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["wrl_pass"], 5);

    let o = revlex(&[
        "verify",
        "--nvars",
        "3",
        "--degrees",
        "2,2",
        "--trials",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
