// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn expdag(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_expdag"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn expdag");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_owned()
}

const MUL4: &str = "let y = i1+i1 in y+y";

#[test]
fn eval_command() {
    assert_eq!(stdout(&expdag(&["eval", "--var", "i1=5"], MUL4)), "20");
    assert_eq!(stdout(&expdag(&["eval"], "7")), "7");
    assert_eq!(
        stdout(&expdag(
            &["eval", "-", "--var", "a=1", "--var", "b=-3"],
            "a - b"
        )),
        "4"
    );

    let unbound = expdag(&["eval"], "x");
    assert_eq!(unbound.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&unbound.stderr).contains('x'));
}

#[test]
fn parse_errors_exit_2() {
    for cmd in ["eval", "show", "size", "compile"] {
        assert_eq!(expdag(&[cmd], "let in x").status.code(), Some(2), "{cmd}");
    }
}

#[test]
fn missing_file_exits_1() {
    assert_eq!(
        expdag(&["eval", "/nonexistent/program"], "").status.code(),
        Some(1)
    );
}

#[test]
fn program_from_file() {
    let path = std::env::temp_dir().join(format!("expdag-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, MUL4).unwrap();
    let out = expdag(&["eval", path.to_str().unwrap(), "--var", "i1=5"], "");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&out), "20");
}

#[test]
fn show_and_size() {
    assert_eq!(
        stdout(&expdag(&["show"], MUL4)),
        "let v0 = i1 + i1 in v0 + v0"
    );
    assert_eq!(stdout(&expdag(&["size"], "i1 + i1 + i1 + i1")), "7");
    assert_eq!(
        stdout(&expdag(&["size"], "let x = i1 in let y = x + x in y + y")),
        "3"
    );
}

#[test]
fn compile_command() {
    assert_eq!(
        stdout(&expdag(
            &["compile", "--format", "dag"],
            "let y=i1+i1 in y+y"
        )),
        r#"(2,DAG BiMap[(0,NVar "i1"),(1,NAdd 0 0),(2,NAdd 1 1)])"#
    );
    assert_eq!(
        stdout(&expdag(&["compile", "--format", "netlist"], MUL4)),
        "n0 = input i1\nn1 = add n0 n0\nn2 = add n1 n1\nout n2"
    );
    assert_eq!(
        stdout(&expdag(&["compile", "--format", "threeaddr"], "5")),
        "LOADI r0, 5\nRET r0"
    );
}

struct Row {
    nodes: usize,
    build_ms: f64,
}

fn bench(args: &[&str]) -> Row {
    let mut full = vec!["bench"];
    full.extend_from_slice(args);
    let text = stdout(&expdag(&full, ""));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("gen,n,nodes,build_ms"));
    let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(fields.len(), 4);
    assert!(lines.next().is_none());
    Row {
        nodes: fields[2].parse().unwrap(),
        build_ms: fields[3].parse().unwrap(),
    }
}

#[test]
fn bench_command() {
    assert_eq!(bench(&["--gen", "mul-shared", "--n", "1048576"]).nodes, 21);
    let zero = bench(&["--gen", "mul", "--n", "0"]);
    assert_eq!(zero.nodes, 1);
    assert!(zero.build_ms >= 0.0);
}

#[test]
fn bench_unshared_time_scales_with_tree() {
    // Each run takes a few milliseconds, so 21 repeats keep the medians stable.
    let small = bench(&["--gen", "mul", "--n", "4096", "--repeat", "21"]);
    let large = bench(&["--gen", "mul", "--n", "8192", "--repeat", "21"]);
    assert_eq!((small.nodes, large.nodes), (13, 14));
    let ratio = large.build_ms / small.build_ms;
    assert!((1.5..=3.0).contains(&ratio), "ratio {ratio}");
}

#[test]
fn bench_rejects_bad_arguments() {
    assert!(!expdag(&["bench", "--gen", "mul", "--n", "-1"], "")
        .status
        .success());
    assert!(
        !expdag(&["bench", "--gen", "mul", "--n", "4", "--repeat", "0"], "")
            .status
            .success()
    );
}
