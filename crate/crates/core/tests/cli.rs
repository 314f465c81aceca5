use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frieze")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn octagon_ascii_golden() {
    let o = run(&["frieze", "8: 0-3, 3-7"]);
    assert!(o.status.success());
    let golden = include_str!("golden/octagon.txt");
    assert_eq!(stdout(&o), golden);
}

#[test]
fn octagon_json() {
    let o = run(&["frieze", "8: 0-3, 3-7", "--format", "json", "--check"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 8);
    assert_eq!(v["conductor"], 60);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 8));
    let row3: Vec<&str> = rows[4].as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect();
    assert!(row3.contains(&"t+2st") && row3.contains(&"1+t+st"));
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 9);
    assert_eq!(coeffs[4][2].as_array().unwrap().len(), 16);
}

#[test]
fn stdin_input_and_check() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_frieze"))
        .args(["frieze", "-", "--check"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"{\"m\": 5, \"diagonals\": [[0, 2]]}").unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("1+s"));
}

#[test]
fn triangle_has_width_zero() {
    let o = run(&["frieze", "3:"]);
    assert!(o.status.success());
    let lines: Vec<_> = stdout(&o).lines().filter(|l| !l.trim().is_empty()).map(String::from).collect();
    assert_eq!(lines.len(), 4);
}

#[test]
fn crossing_diagonals_are_input_errors() {
    let o = run(&["frieze", "6: 0-3, 1-4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--json", "frieze", "6: 0-3, 1-4"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["error"].is_string());
}

#[test]
fn quiddity_rejects_non_quiddity() {
    assert_ne!(run(&["quiddity", "2,2,2,2"]).status.code(), Some(0));
    let o = run(&["quiddity", "1,3,2,1,3,2"]);
    assert!(o.status.success());
}

#[test]
fn census_small() {
    let o = run(&["census", "--max-m", "7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("197 dissections"));
    assert!(!text.contains("903 dissections"));
}

#[test]
fn altroot_reports_negatives() {
    let o = run(&["--json", "altroot", "7", "3"]);
    assert!(o.status.success());
    assert!(run(&["altroot", "6", "3"]).status.code() != Some(0));
}

#[test]
fn identities_pass() {
    assert!(run(&["identities", "--max-n", "12", "--max-closed-form", "20"]).status.success());
}
