use std::path::{Path, PathBuf};
use std::process::Command;

use mixed_spectra_cli::format::parse_graph;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_in(dir: &Path, args: &[&str], envs: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mixed-spectra"));
    cmd.current_dir(dir).args(args).env_remove("MIXED_SPECTRA_TOL");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn spectrum_command() {
    let tmp = tempfile::tempdir().unwrap();
    let digon = write(tmp.path(), "digon.mg", "vertices 2\n0 -- 1\n");
    let r = run_in(tmp.path(), &["spectrum", p(&digon), "--exact-charpoly"], &[]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("spectrum: 2.000000, 0.000000; det=0"));
    assert!(r.stdout.contains("charpoly: λ^2 - 2λ"));

    let r = run_in(tmp.path(), &["spectrum", p(&digon), "--matrix", "h"], &[]);
    assert!(r.stdout.contains("spectrum: 1.000000, -1.000000"));

    let out = tmp.path().join("spectrum.json");
    let r = run_in(tmp.path(), &["spectrum", p(&digon), "--json", "--output", p(&out)], &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["trace"], 2);
}

#[test]
fn verify_command_and_json_schema() {
    let tmp = tempfile::tempdir().unwrap();
    let c4 = write(tmp.path(), "c4.mg", "vertices 4\n0 -- 1\n1 -- 2\n2 -- 3\n3 -- 0\n");
    let r = run_in(tmp.path(), &["verify", p(&c4)], &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.lines().any(|l| l.starts_with("singularity ") && l.contains("singular=true")));
    assert!(r.stdout.ends_with("status: ok\n"));

    let r = run_in(tmp.path(), &["verify", p(&c4), "--json"], &[]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["status"], "ok");
    for report in v["reports"].as_array().unwrap() {
        let keys: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["applicable", "details", "holds", "kind", "lhs", "name", "rhs", "slack", "witness"]
        );
    }

    let edgeless = write(tmp.path(), "edgeless.mg", "vertices 4\n");
    let r = run_in(tmp.path(), &["verify", p(&edgeless), "--json"], &[]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    for report in v["reports"].as_array().unwrap() {
        if report["kind"] != "exact" {
            assert_eq!(report["applicable"], false, "{report}");
        } else {
            assert_eq!(report["holds"], true, "{report}");
        }
    }
}

#[test]
fn input_errors_exit_3() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = write(tmp.path(), "bad.mg", "vertices 2\n0 -> 1\n1 -> 0\n");
    let r = run_in(tmp.path(), &["verify", p(&bad)], &[]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("line 3: anti-parallel arcs: pair {0, 1}"), "{}", r.stderr);

    let r = run_in(tmp.path(), &["verify", "missing.mg"], &[]);
    assert_eq!(r.code, 3);
    let r = run_in(tmp.path(), &["verify"], &[]);
    assert_eq!(r.code, 3);
    let r = run_in(tmp.path(), &["frobnicate"], &[]);
    assert_eq!(r.code, 3);

    let ok = write(tmp.path(), "ok.mg", "vertices 2\n0 -- 1\n");
    let r = run_in(tmp.path(), &["spectrum", p(&ok)], &[("MIXED_SPECTRA_TOL", "-1")]);
    assert_eq!(r.code, 3);
    let r = run_in(tmp.path(), &["spectrum", p(&ok)], &[("MIXED_SPECTRA_TOL", "1e-12")]);
    assert_eq!(r.code, 0);
}

#[test]
fn linegraph_command() {
    let tmp = tempfile::tempdir().unwrap();
    let chain = write(tmp.path(), "chain.mg", "vertices 3\n0 -> 1\n1 -> 2\n");
    let r = run_in(tmp.path(), &["linegraph", p(&chain)], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "vertices 2\n# vertex 0: 0 -> 1\n# vertex 1: 1 -> 2\n0 -> 1\n");

    let out = tmp.path().join("al.mg");
    let r = run_in(tmp.path(), &["linegraph", p(&chain), "--emit-file", p(&out)], &[]);
    assert_eq!(r.code, 0);
    let al = parse_graph(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(al.arc_count(), 1);
}

#[test]
fn switch_command() {
    let tmp = tempfile::tempdir().unwrap();
    let digon = write(tmp.path(), "digon.mg", "vertices 2\n0 -- 1\n");
    let r = run_in(tmp.path(), &["switch", p(&digon), "--gauge", "0:0,1:0"], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "vertices 2\n0 -- 1\n");
    assert!(r.stderr.contains("Q-spectra match"));

    let r = run_in(tmp.path(), &["switch", p(&digon), "--gauge", "0:0,1:1"], &[]);
    assert_eq!(r.code, 0);
    assert_eq!(parse_graph(&r.stdout).unwrap().arc_count(), 1);

    let r = run_in(tmp.path(), &["switch", p(&digon), "--gauge", "0:1"], &[]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("incomplete"));
}

#[test]
fn batch_command() {
    let tmp = tempfile::tempdir().unwrap();
    let r = run_in(tmp.path(), &["batch", "--trials", "0"], &[]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("exact failures: 0"));

    let args = ["batch", "--n-max", "8", "--trials", "500", "--seed", "1", "--json"];
    let a = run_in(tmp.path(), &args, &[]);
    let b = run_in(tmp.path(), &args, &[]);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["exact_failures"], 0);
    assert_eq!(v["inequality_failures"], 0);
    assert!(!tmp.path().join("witnesses").exists());

    let r = run_in(tmp.path(), &["batch", "--p-digon", "0.9", "--p-arc", "0.9"], &[]);
    assert_eq!(r.code, 3);
}
