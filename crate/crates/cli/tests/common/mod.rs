#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[derive(Debug, PartialEq, Eq)]
pub struct Run {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

/// Runs the built binary in the golden directory.
pub fn zonoracle(args: &[&str], stdin: Option<&[u8]>) -> Run {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_zonoracle"))
        .args(args)
        .current_dir(golden_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Run { stdout: out.stdout, stderr: out.stderr, code: out.status.code().expect("exited") }
}

/// `(stem, args)` pairs from the golden case table.
pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let table = std::fs::read_to_string(golden_dir().join("cases")).unwrap();
    table
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (stem, args) = l.split_once(':').expect("`stem: args`");
            (stem.trim().to_string(), args.split_whitespace().map(String::from).collect())
        })
        .collect()
}

pub fn expected(stem: &str) -> Run {
    let read = |ext: &str| std::fs::read(golden_dir().join(format!("{stem}.{ext}"))).unwrap();
    let code = String::from_utf8(read("code")).unwrap().trim().parse().unwrap();
    Run { stdout: read("stdout"), stderr: read("stderr"), code }
}
