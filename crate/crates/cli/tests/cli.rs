use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use galjac_cli::report::{Report, Verdict};
use galjac_cli::{status_of, status_of_error};
use galjac_core::Error;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn galjac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galjac")).args(args).output().unwrap()
}

fn run_fixture(sub: &str, name: &str, extra: &[&str]) -> Output {
    let path = fixture(name);
    let mut args = vec![sub, "--input", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    galjac(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn quaternion_group_report() {
    let o = run_fixture("group", "h8.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("symplectic characters: {chi_4}"), "{text}");
    assert!(text.contains("[PASS] orthogonality relations"));
    assert!(text.contains("dixon prime: 17"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for (sub, name) in [("group", "h8.json"), ("local", "c2_tame_abelian.json"), ("global", "h12_global.json")] {
        for format in ["text", "structured"] {
            let a = run_fixture(sub, name, &["--format", format]);
            let b = run_fixture(sub, name, &["--format", format]);
            assert_eq!(a.status.code(), Some(0), "{name}");
            assert_eq!(a.stdout, b.stdout, "{name} {format}");
        }
    }
}

#[test]
fn structured_output_is_json() {
    let o = run_fixture("local", "c3_wild.json", &["--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "local");
    assert_eq!(v["inputs"]["p"], 3);
    let ord = v["invariants"].as_array().unwrap().iter().find(|e| e["name"] == "ord(D)").unwrap();
    assert_eq!(ord["value"], "4");
    let verdicts = v["verdicts"].as_array().unwrap();
    let congruence = verdicts.iter().find(|e| e["check"] == "freeness congruence").unwrap();
    assert_eq!(congruence["status"], "pass");
}

#[test]
fn strongly_ramified_congruence_is_unknown() {
    let o = run_fixture("local", "c3_strong.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[UNKNOWN] freeness congruence"), "{}", stdout(&o));
}

#[test]
fn tame_abelian_report() {
    let o = run_fixture("local", "c2_tame_abelian.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("J2"), "{text}");
    assert!(text.contains("[PASS] J2 is rational-equivariant"));
    assert!(text.contains("residue field"));
}

#[test]
fn global_reports() {
    let o = run_fixture("global", "h12_global.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[PASS] decomposition identity"));
    assert!(text.contains(": -1"), "{text}");

    let o = run_fixture("global", "h8_wild_global.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[UNKNOWN] J'"), "{}", stdout(&o));
}

#[test]
fn standard_input_is_accepted() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_galjac"))
        .args(["group", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"kind": "group", "group": {"family": "cyclic", "params": [3]}}"#)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("C3"));
}

#[test]
fn invalid_inputs_exit_with_two() {
    let o = run_fixture("group", "nonassoc.json", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("group.table"));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    bad.write_all(b"{\"kind\": \"group\",\n \"group\": }").unwrap();
    let o = galjac(&["group", "--input", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    // a local descriptor handed to the group command
    let o = run_fixture("group", "c3_wild.json", &[]);
    assert_eq!(o.status.code(), Some(2));

    let o = galjac(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("hilbert") && err.contains("symplectic"), "{err}");

    let o = galjac(&["group", "--input", "/nonexistent/file.json", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["error"].as_str().unwrap().contains("cannot read"));
}

#[test]
fn small_verification_suite_passes() {
    let o = galjac(&["verify", "--suite", "decomposition", "--max-order", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("[FAIL]"));
}

#[test]
fn exit_status_mapping() {
    let mut r = Report::new("group", serde_json::Value::Null);
    r.verdict(Verdict::unknown("a", "b"));
    assert_eq!(status_of(&r), 0);
    r.verdict(Verdict::fail("c", "d"));
    assert_eq!(status_of(&r), 1);
    assert_eq!(status_of_error(&Error::Descriptor("x".into())), 2);
    assert_eq!(status_of_error(&Error::Internal("x".into())), 3);
}
