//! End-to-end checks of the `pauli` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pauli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pauli")).args(args).output().unwrap()
}

fn pauli_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pauli"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compose_prints_triplets() {
    assert_eq!(stdout(&pauli(&["compose", "Z"])), "0 0 1 0\n1 1 -1 0\n");
    assert_eq!(stdout(&pauli(&["compose", "Z", "--weight", "2.5"])), "0 0 2.5 0\n1 1 -2.5 0\n");
    assert_eq!(stdout(&pauli(&["compose", "X", "--dense"])), "dim 2\n0 1\n1 0\n");
    let yx = stdout(&pauli(&["compose", "YX"]));
    assert_eq!(yx.lines().count(), 4);
}

#[test]
fn decompose_reads_files_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.txt");
    std::fs::write(&path, "dim 2\n1 0\n0 -1\n").unwrap();
    let o = pauli(&["decompose", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "Z 1 0\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("class: diagonal"));

    let o = pauli_stdin(&["decompose", "-"], "dim 4\n1 0 0 0\n0 -1 0 0\n0 0 -1 0\n0 0 0 1\n");
    assert_eq!(stdout(&o), "ZZ 1 0\n");
}

#[test]
fn error_exit_codes() {
    assert_eq!(pauli(&["compose", "ZQ"]).status.code(), Some(2));
    assert_eq!(pauli_stdin(&["decompose", "-"], "dim 3\n1 0 0\n0 1 0\n0 0 1\n").status.code(), Some(3));
    assert_eq!(pauli_stdin(&["decompose", "-"], "dim 2\n1 0\n").status.code(), Some(2));
    assert_eq!(pauli(&["compose", "Z", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(pauli(&["ising", "--alpha", "0,0", "--beta", "1 0 1"]).status.code(), Some(2));
}

#[test]
fn ising_and_exp() {
    let o = pauli(&["ising", "--alpha", "1,2", "--beta", "0 1 3"]);
    assert_eq!(stdout(&o), "0 6\n1 -4\n2 -2\n3 0\n");
    assert_eq!(stdout(&pauli(&["exp", "Z", "--theta", "0"])), "0 0 1 0\n1 1 1 0\n");
    assert_eq!(stdout(&pauli(&["exp", "XY", "--theta", "-0.4"])).lines().count(), 8);
}

#[test]
fn bench_writes_csv() {
    let csv = stdout(&pauli(&["bench", "compose", "--n-range", "2..6", "--methods", "pc,naive", "--reps", "3"]));
    let rows: Vec<_> = csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "method,n,reps,median_seconds,threads");
    assert_eq!(rows.len(), 11);
    for row in &rows[1..] {
        let fields: Vec<_> = row.split(',').collect();
        assert_eq!(fields.len(), 5);
        assert!(fields[3].parse::<f64>().unwrap() > 0.0);
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let o = pauli(&[
        "bench", "decompose", "--n-range", "2..3", "--class", "diagonal", "--reps", "2",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(stdout(&o).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.lines().any(|l| l.starts_with("decompose-pc-seq,3,")));
}

#[test]
fn dense_compose_round_trips_through_decompose() {
    let dir = tempfile::tempdir().unwrap();
    for label in ["X", "YZ", "IXY", "ZZYX", "XYZIY", "YYXZIX"] {
        let path = dir.path().join(format!("{label}.txt"));
        std::fs::write(&path, stdout(&pauli(&["compose", label, "--dense"]))).unwrap();
        let out = stdout(&pauli(&["decompose", path.to_str().unwrap()]));
        assert_eq!(out, format!("{label} 1 0\n"));
    }
}
