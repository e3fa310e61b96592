//! Golden CLI runs shared by the integration tests and the acceptance suite.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "smooth-nonuniform", args: &["smooth", "nonuniform-block.json"], exit: 0 },
    Case { name: "smooth-uniform2", args: &["smooth", "uniform2.json"], exit: 0 },
    Case { name: "smooth-narrowed", args: &["--window-n", "4", "smooth", "uniform2.json"], exit: 3 },
    Case { name: "smooth-unsmooth", args: &["smooth", "unsmooth.json"], exit: 5 },
    Case { name: "smooth-empty", args: &["smooth", "empty-family.json"], exit: 5 },
    Case { name: "smooth-missing", args: &["smooth", "no-such-file.json"], exit: 1 },
    Case { name: "pouzet-all-true", args: &["pouzet", "all-true3.json"], exit: 0 },
    Case { name: "pouzet-identity", args: &["pouzet", "identity3.json"], exit: 0 },
    Case { name: "pouzet-mixed", args: &["pouzet", "mixed4.json"], exit: 0 },
    Case { name: "pouzet-nonreflexive", args: &["pouzet", "nonreflexive.json"], exit: 3 },
    Case { name: "pouzet-ragged", args: &["pouzet", "ragged.json"], exit: 3 },
    Case { name: "check-block", args: &["check", "nonuniform-block.json"], exit: 0 },
    Case { name: "check-comparable", args: &["check", "comparable.json"], exit: 0 },
    Case { name: "check-empty", args: &["check", "empty-family.json"], exit: 0 },
    Case { name: "check-indeterminate-strict", args: &["check", "indeterminate.json"], exit: 7 },
    Case {
        name: "check-indeterminate-warn",
        args: &["--boundary-policy", "warn", "check", "indeterminate.json"],
        exit: 0,
    },
    Case {
        name: "check-good-pair",
        args: &["check", "uniform1.json", "--array", "index-array.json", "--relation", "all-true3.json"],
        exit: 0,
    },
    Case {
        name: "check-bad-array",
        args: &["check", "uniform1.json", "--array", "index-array.json", "--relation", "identity3.json"],
        exit: 0,
    },
    Case {
        name: "check-array-needs-relation",
        args: &["check", "uniform1.json", "--array", "index-array.json"],
        exit: 3,
    },
    Case {
        name: "check-projection",
        args: &["check", "uniform2.json", "--array", "projection-array.json", "--codomain", "projection-codomain.json"],
        exit: 0,
    },
    Case {
        name: "check-tail",
        args: &["check", "uniform2.json", "--array", "tail-array.json", "--codomain", "projection-codomain.json"],
        exit: 0,
    },
    Case {
        name: "check-corrupt",
        args: &["check", "uniform2.json", "--array", "corrupt-array.json", "--codomain", "projection-codomain.json"],
        exit: 0,
    },
    Case {
        name: "check-array-wrong-family",
        args: &["check", "uniform2.json", "--array", "index-array.json", "--relation", "all-true3.json"],
        exit: 3,
    },
    Case { name: "reduce-carrier", args: &["reduce", "code-singles.json", "x.json", "--query", "0,1", "--query", "2,2"], exit: 0 },
    Case { name: "reduce-y0", args: &["reduce", "code-singles.json", "x.json", "--y", "y0.json"], exit: 0 },
    Case { name: "reduce-y1", args: &["reduce", "code-singles.json", "x.json", "--y", "y1.json"], exit: 0 },
    Case { name: "reduce-empty-code", args: &["reduce", "code-empty.json", "x.json", "--y", "y0.json"], exit: 0 },
    Case { name: "reduce-short-x", args: &["reduce", "code-singles.json", "x-short.json"], exit: 4 },
    Case { name: "reduce-short-y", args: &["reduce", "code-singles.json", "x.json", "--y", "y-short.json"], exit: 4 },
    Case { name: "reduce-bad-code", args: &["reduce", "code-bad.json", "x.json"], exit: 3 },
    Case { name: "reduce-query-range", args: &["reduce", "code-singles.json", "x.json", "--query", "0,99"], exit: 3 },
    Case { name: "selftest", args: &["selftest", "--cases", "8"], exit: 0 },
    Case { name: "selftest-seeded", args: &["--seed", "7", "selftest", "--cases", "8"], exit: 0 },
    Case { name: "usage-error", args: &["reduce", "--query", "nonsense"], exit: 2 },
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixtures() -> PathBuf {
    crate_dir().join("tests/fixtures")
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.txt"))
}

/// Exit code, stdout and stderr of one run, rendered as a single text.
pub fn run(args: &[&str]) -> (i32, String) {
    run_in(&fixtures(), args)
}

pub fn run_in(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bqo"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let text = format!(
        "exit: {code}\n--- stdout\n{}--- stderr\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    (code, text)
}

/// Problems found when running every case twice against its golden file.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut problems = Vec::new();
    for case in CASES {
        let (code, first) = run(case.args);
        let (_, second) = run(case.args);
        if first != second {
            problems.push(format!("{}: two runs differ", case.name));
        }
        if code != case.exit {
            problems.push(format!("{}: exit {code}, expected {}", case.name, case.exit));
        }
        let path = golden_path(case.name);
        if update {
            std::fs::write(&path, &first).expect("golden dir is writable");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == first => {}
            Ok(_) => problems.push(format!("{}: output differs from {}", case.name, path.display())),
            Err(e) => problems.push(format!("{}: cannot read golden file: {e}", case.name)),
        }
    }
    problems
}
