use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// Golden cases: output file name and CLI arguments. `@` expands to the
/// fixtures directory.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("L3.dual.json", &["dual", "--lattice", "@/L3.json"]),
    ("L3.assembly.json", &["assembly", "--lattice", "@/L3.json"]),
    ("L3.nuclei.json", &["nuclei", "--lattice", "@/L3.json"]),
    (
        "L3.nuclei-count.json",
        &["nuclei", "--lattice", "@/L3.json", "--count"],
    ),
    ("L3.points.json", &["points", "--lattice", "@/L3.json"]),
    (
        "L3.check-duality.json",
        &["check", "--lattice", "@/L3.json", "--duality"],
    ),
    (
        "L3.check-boolean.json",
        &["check", "--lattice", "@/L3.json", "--boolean"],
    ),
    (
        "L3.check-spatial.json",
        &["check", "--lattice", "@/L3.json", "--spatial"],
    ),
    (
        "L3.check-primes.json",
        &["check", "--lattice", "@/L3.json", "--primes"],
    ),
    (
        "L3.dual.dot",
        &[
            "export-dot",
            "--lattice",
            "@/L3.json",
            "--dual",
            "--phi",
            "m",
            "--name",
            "X_L3",
        ],
    ),
    (
        "L3.assembly.dot",
        &[
            "export-dot",
            "--lattice",
            "@/L3.json",
            "--assembly",
            "--name",
            "N_L3",
        ],
    ),
    (
        "sierpinski.space.json",
        &["space", "--space", "@/sierpinski.json"],
    ),
    (
        "sierpinski.check-simmons.json",
        &["check", "--space", "@/sierpinski.json", "--simmons"],
    ),
    (
        "sierpinski.check-scatter.json",
        &["check", "--space", "@/sierpinski.json", "--scatter"],
    ),
    (
        "sierpinski.check-compactification.json",
        &[
            "check",
            "--space",
            "@/sierpinski.json",
            "--compactification",
        ],
    ),
    (
        "sierpinski.dot",
        &["export-dot", "--space", "@/sierpinski.json", "--name", "S"],
    ),
    ("two.dual.json", &["dual", "--lattice", "@/two.json"]),
    (
        "C2.dot",
        &["export-dot", "--poset", "@/C2.json", "--name", "C2"],
    ),
];

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn framekit(args: &[&str]) -> Output {
    let fixtures = tests_dir().join("fixtures");
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(rest) => format!("{}{rest}", fixtures.display()),
            None => a.to_string(),
        })
        .collect();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_framekit"));
    for (key, _) in std::env::vars_os() {
        if key.to_string_lossy().starts_with("FRAMEKIT_MAX_") {
            cmd.env_remove(key);
        }
    }
    cmd.args(&args).output().expect("binary runs")
}

/// Compares every golden case, or rewrites the files when
/// `FRAMEKIT_UPDATE_GOLDEN` is set. Returns the mismatching names.
pub fn golden_mismatches() -> Vec<String> {
    let dir = tests_dir().join("golden");
    let update = std::env::var_os("FRAMEKIT_UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for (name, args) in GOLDEN {
        let out = framekit(args);
        let path = dir.join(name);
        if update {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_default();
        if !out.status.success() || out.stdout != expected {
            bad.push(name.to_string());
        }
    }
    bad
}
