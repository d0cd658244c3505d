use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bisolve(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bisolve"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn bisolve");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn solves_from_stdin() {
    let out = bisolve(&["solve", "-"], "x^2 + y^2 - 1\nx - y\n");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 2);
    assert_eq!(v["diagnostics"]["candidates"], 4);
    assert!(v["diagnostics"].get("timings_ms").is_none());
}

#[test]
fn solves_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hyperbola.txt");
    std::fs::write(&path, "# hyperbola and diagonal\nf = x*y - 1\ng = x - y\n").unwrap();
    let out = bisolve(&["solve", path.to_str().unwrap(), "--format", "text"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("2 real solutions"), "{text}");
    assert!(text.contains("x = -1 ± 0, y = -1 ± 0"));
    assert!(text.contains("x = 1 ± 0, y = 1 ± 0"));
}

#[test]
fn json_input_and_box() {
    let sys = r#"{"f": [[2,0,"1"],[0,2,"1"],[0,0,"-2"]], "g": [[0,2,"1"],[0,0,"-1"]]}"#;
    let out = bisolve(&["solve", "-", "--box", "0", "2", "0", "2", "--diagnostics"], sys);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 1);
    assert_eq!(v["diagnostics"]["candidates"], 1);
    assert!(v["diagnostics"]["timings_ms"].is_object());
    let out = bisolve(&["solve", "-", "--box", "-2", "-1/2", "-3/2", "0"], sys);
    let v = json(&out);
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0]["x"]["lo"]["mantissa"], "-1");
}

#[test]
fn width_is_honoured() {
    let out = bisolve(&["solve", "-", "--width", "2^-40"], "x^2 - 2\ny - x\n");
    let v = json(&out);
    for s in v["solutions"].as_array().unwrap() {
        for end in ["lo", "hi"] {
            assert!(s["x"][end]["exponent"].as_i64().unwrap() <= -40);
        }
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let sys = "x^3 - 3*x*y^2 - 1\n3*x^2*y - y^3 + y - 1\n";
    let a = bisolve(&["solve", "-", "--threads", "1"], sys);
    let b = bisolve(&["solve", "-", "--threads", "4"], sys);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parse_errors_exit_2() {
    for input in ["x^(-1)\ny\n", "x + 1.5\ny\n", "x\n", "{\"f\": ["] {
        let out = bisolve(&["solve", "-"], input);
        assert_eq!(out.status.code(), Some(2), "{input}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    }
    let out = bisolve(&["solve", "-", "--width", "wide"], "x\ny\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degenerate_systems_exit_3() {
    let out = bisolve(&["solve", "-"], "(x - y)*(x + 1)\n(x - y)*(y - 2)\n");
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("total degree 1"));
    let out = bisolve(&["solve", "-"], "x - 1\nx - 2\n");
    assert_eq!(out.status.code(), Some(3));
    let out = bisolve(&["solve", "-"], "0\nx\n");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn missing_file() {
    let out = bisolve(&["solve", "/nonexistent/system.txt"], "");
    assert_eq!(out.status.code(), Some(1));
}
