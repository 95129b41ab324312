use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn ncforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncforge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_names_every_check() {
    let o = ncforge(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for id in ncforge::verify::check_ids() {
        assert!(text.contains(id), "{id} missing from list");
    }
}

#[test]
fn check_writes_json_report() {
    let o = ncforge(&["check", "e3-basis", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["check_id"], "e3-basis");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["field"], "fp:10009");
}

#[test]
fn json_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.json");
    let o = ncforge(&[
        "scan",
        "d3-semisimple",
        "--grid",
        "1,3;1,-1;2,5",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 3);
    assert_eq!(points[0]["params"], "(1, 3)");
    assert_eq!(points[0]["details"]["semisimple"], false);
    assert_eq!(points[2]["details"]["center_dim"], 3);
}

#[test]
fn seeds_reproduce() {
    let a = ncforge(&["--seed", "7", "check", "d3-hall", "--trials", "5", "--json", "-"]);
    let b = ncforge(&["--seed", "7", "check", "d3-hall", "--trials", "5", "--json", "-"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert!(v["error_bound"].as_str().unwrap().starts_with("3125/"));
}

#[test]
fn basis_of_presentation_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# E3\ngenerators: a b c\na^2\nb^2\nc^2\nab + bc + ca\nba + cb + ac").unwrap();
    let o = ncforge(&["basis", file.path().to_str().unwrap(), "--json", "-"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["finite_dimensional"], true);
    assert_eq!(v["dimension"], 12);
    assert_eq!(v["normal_words"].as_array().unwrap().len(), 12);
}

#[test]
fn exit_codes() {
    assert_eq!(ncforge(&["check", "no-such-check"]).status.code(), Some(2));
    assert_eq!(ncforge(&["scan", "d3-flatness", "--grid", "1"]).status.code(), Some(2));
    assert_eq!(ncforge(&["--field", "fp:12", "list"]).status.code(), Some(2));
    assert_eq!(ncforge(&["--max-rules", "2", "check", "e3-basis"]).status.code(), Some(2));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "generators: a b\na + q").unwrap();
    let o = ncforge(&["basis", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains('2') && err.contains('5'), "{err}");
}

#[test]
fn small_characteristic_is_an_error() {
    let o = ncforge(&["--field", "fp:5", "scan", "d3-semisimple", "--grid", "1,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("ERROR"));
}

#[test]
fn rationals_are_supported() {
    let o = ncforge(&["--field", "qq", "scan", "d3-flatness", "--grid", "1,3;1/2,-1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}
