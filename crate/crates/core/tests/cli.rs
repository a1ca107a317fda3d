use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monoquad"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the process may exit before reading stdin
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn reads_stdin_and_prints_text() {
    let out = run(&[], "x' = x^5\n");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# monomial quadratization of order 1, optimal\n"));
    assert!(text.contains("z1 = x^4\n"));
    assert!(text.contains("x' = x*z1\n"));
    assert!(text.contains("z1' = 4*z1^2\n"));
    assert!(!text.contains("nodes visited"));
}

#[test]
fn reads_a_file() {
    let path = std::env::temp_dir().join(format!("monoquad-cli-{}.ode", std::process::id()));
    std::fs::write(&path, "x1' = x2^4\nx2' = x1^2\n").unwrap();
    let out = run(&[path.to_str().unwrap(), "--stats"], "");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order 3"));
    assert!(text.contains("# nodes visited:"));
}

#[test]
fn structured_output_is_json() {
    let out = run(&["--benchmark", "rf", "--format", "structured"], "");
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["order"], 3);
    assert_eq!(doc["optimal"], true);
    assert_eq!(doc["parameters"], serde_json::json!(["a", "b"]));
    let monomials: Vec<&str> = doc["new_variables"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["monomial"].as_str().unwrap())
        .collect();
    assert_eq!(monomials.len(), 3);
    for m in ["x^2", "x*y", "y^2"] {
        assert!(monomials.contains(&m));
    }
    assert!(doc["stats"]["nodes_visited"].as_u64().unwrap() > 0);
}

#[test]
fn structured_output_is_reproducible() {
    let a = run(&["--benchmark", "cubic_bicycle:4", "--format", "structured"], "");
    let b = run(&["--benchmark", "cubic_bicycle:4", "--format", "structured"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn pruning_flags_change_only_the_search() {
    let both = run(&["--benchmark", "cubic_cycle:4", "--format", "structured"], "");
    let none = run(
        &["--benchmark", "cubic_cycle:4", "--format", "structured", "--no-prune-quadratic", "--no-prune-c4"],
        "",
    );
    let both: serde_json::Value = serde_json::from_slice(&both.stdout).unwrap();
    let none: serde_json::Value = serde_json::from_slice(&none.stdout).unwrap();
    assert_eq!(both["order"], 8);
    assert_eq!(none["order"], 8);
    assert!(none["stats"]["nodes_visited"].as_u64() > both["stats"]["nodes_visited"].as_u64());
}

#[test]
fn laurent_mode() {
    let out = run(&["--laurent"], "x1' = x2^4\nx2' = x1^2\n");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# Laurent monomial quadratization of order 2\n"));
    assert!(text.contains("x1^-1*x2^4"));
}

#[test]
fn max_order_cap() {
    let out = run(&["--benchmark", "cubic_cycle:3", "--max-order", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("optimality not certified"));
    let out = run(&["--benchmark", "cubic_cycle:3", "--max-order", "6"], "");
    assert!(stdout(&out).contains("order 6, optimal"));
}

#[test]
fn parse_errors_exit_1() {
    let out = run(&[], "x' = x^\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    let out = run(&["/nonexistent/system.ode"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_options_exit_2() {
    for args in [
        &["--benchmark", "pendulum:3"][..],
        &["--benchmark", "cubic_cycle:x"],
        &["--benchmark", "cubic_cycle:1"],
        &["--format", "yaml"],
        &["--laurent", "--max-order", "3"],
        &["input.ode", "--benchmark", "rf"],
    ] {
        let out = run(args, "x' = x^2\n");
        assert_eq!(out.status.code(), Some(2), "{:?}", args);
    }
}

#[test]
fn hidden_table_subcommand() {
    let out = run(&["c4-table", "--max-n", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("4\t4 5 5 6 6\tok"));
    assert!(!text.contains("MISMATCH"));
    let help = run(&["--help"], "");
    assert!(!stdout(&help).contains("c4-table"));
}
