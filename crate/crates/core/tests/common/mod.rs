#![allow(dead_code)]

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub struct Transcript {
    pub name: String,
    pub stdin: Vec<u8>,
    pub stdout: Vec<u8>,
    /// Transcripts named `error-*` end in a Java exception (exit status 1).
    pub expect_failure: bool,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn transcripts() -> Vec<Transcript> {
    let mut names: Vec<String> = fs::read_dir(golden_dir())
        .expect("golden dir")
        .filter_map(|e| {
            let path = e.ok()?.path();
            (path.extension()? == "in").then(|| path.file_stem()?.to_str().map(String::from))?
        })
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let dir = golden_dir();
            Transcript {
                stdin: fs::read(dir.join(format!("{name}.in"))).unwrap(),
                stdout: fs::read(dir.join(format!("{name}.out"))).unwrap(),
                expect_failure: name.starts_with("error-"),
                name,
            }
        })
        .collect()
}

pub struct Run {
    pub status: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

pub fn esym(args: &[&str], stdin: &[u8]) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_esym"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn esym");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        status: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

/// Replay one transcript; `Err` describes the first mismatch.
pub fn check_transcript(t: &Transcript) -> Result<(), String> {
    let run = esym(&["java-compat"], &t.stdin);
    if run.stdout != t.stdout {
        return Err(format!(
            "{}: stdout differs\n--- expected\n{}\n--- got\n{}",
            t.name,
            String::from_utf8_lossy(&t.stdout),
            String::from_utf8_lossy(&run.stdout)
        ));
    }
    let want = if t.expect_failure { 1 } else { 0 };
    if run.status != want {
        return Err(format!("{}: exit {} (want {want}), stderr {}", t.name, run.status, run.stderr));
    }
    Ok(())
}
