//! Golden-file runner over the documented corpus.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

pub const SEED: &str = "20240611";

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn rows(file: &str) -> Vec<Vec<String>> {
    let text = fs::read_to_string(dir().join("corpus").join(file)).expect("corpus file");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split('|').map(|s| s.trim().to_string()).collect())
        .collect()
}

/// Corpus pairs `(name, x, y)`.
pub fn pairs() -> Vec<(String, String, String)> {
    rows("pairs.txt").into_iter().map(|r| (r[0].clone(), r[1].clone(), r[2].clone())).collect()
}

/// Each pair under `dominance` and `spectrum`, plus the single commands.
pub fn cases() -> Vec<Case> {
    let mut out = Vec::new();
    for (name, x, y) in pairs() {
        out.push(Case { name: format!("{name}.dominance"), args: vec!["dominance".into(), x.clone(), y.clone()] });
        out.push(Case {
            name: format!("{name}.spectrum"),
            args: vec!["spectrum".into(), x, y, "--resolution".into(), "4".into()],
        });
    }
    for r in rows("commands.txt") {
        out.push(Case { name: r[0].clone(), args: r[1].split_whitespace().map(String::from).collect() });
    }
    out
}

/// Stdout, stderr and exit status of one run, as a single transcript.
pub fn run(case: &Case) -> String {
    let o = Command::new(env!("CARGO_BIN_EXE_semiring-pss"))
        .args(&case.args)
        .current_dir(dir().join("corpus"))
        .env("SEMIRING_PSS_SEED", SEED)
        .output()
        .expect("spawn binary");
    format!(
        "$ semiring-pss {}\n{}--- stderr\n{}--- exit {}\n",
        case.args.join(" "),
        String::from_utf8_lossy(&o.stdout),
        String::from_utf8_lossy(&o.stderr),
        o.status.code().unwrap_or(-1)
    )
}

pub fn golden_path(case: &Case) -> PathBuf {
    dir().join("golden").join(format!("{}.txt", case.name))
}

/// Exit status recorded in a transcript.
pub fn exit_code(transcript: &str) -> Option<i32> {
    transcript.lines().last()?.strip_prefix("--- exit ")?.parse().ok()
}

/// Compares every case against its golden file across two runs. With
/// `UPDATE_GOLDEN=1` the golden files are rewritten first.
pub fn check_all() -> Vec<(String, Result<(), String>)> {
    let update = std::env::var("UPDATE_GOLDEN").is_ok_and(|v| v == "1");
    cases()
        .iter()
        .map(|case| {
            let first = run(case);
            let second = run(case);
            let path = golden_path(case);
            if update {
                fs::write(&path, &first).expect("write golden");
            }
            let verdict = match fs::read_to_string(&path) {
                Err(e) => Err(format!("missing golden file {}: {e}", path.display())),
                Ok(_) if first != second => Err("two consecutive runs differ".into()),
                Ok(g) if g != first => Err(format!("output differs from golden:\n{first}")),
                Ok(_) => Ok(()),
            };
            (case.name.clone(), verdict)
        })
        .collect()
}
