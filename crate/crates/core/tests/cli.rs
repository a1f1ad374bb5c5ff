use std::path::PathBuf;
use std::process::{Command, Output};

fn sample() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/three_valued.btop")
}

fn basictop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_basictop"))
        .args(args)
        .env_remove("BASICTOP_SUBSET_CAP")
        .env_remove("BASICTOP_SAMPLE_COUNT")
        .env_remove("BASICTOP_SEED")
        .output()
        .expect("binary runs")
}

fn with_doc(args: &[&str]) -> Output {
    let doc = sample();
    let mut all = vec!["--doc", doc.to_str().unwrap()];
    all.extend_from_slice(args);
    basictop(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn validate_lists_objects() {
    let o = with_doc(&["validate"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("algebra {0, u, 1}"));
    assert!(text.contains("topologies: tj"));
}

#[test]
fn galois_id_id_holds() {
    let o = with_doc(&["galois", "id", "id"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("= 1").count(), 3, "{text}");
}

#[test]
fn failed_law_exits_one_with_witness() {
    let o = with_doc(&["compat", "top", "id"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("fails"), "{text}");
    assert!(text.contains("U={}"), "{text}");
}

#[test]
fn counterexample_needs_no_document() {
    let o = basictop(&["counterexample", "red-not-saturated"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("degree u (expected u)"), "{text}");
    assert!(text.contains("degree 1 (expected 1)"), "{text}");
}

#[test]
fn diagram_is_dot() {
    let o = with_doc(&["diagram", "id-bot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("digraph basic_topologies {"));
    assert_eq!(text.matches("[label=").count(), 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(with_doc(&["classify", "nope"]).status.code(), Some(2));
    assert_eq!(with_doc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(basictop(&["counterexample", "nope"]).status.code(), Some(2));
    let o = basictop(&["validate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--doc"));
}

#[test]
fn parse_error_reports_position() {
    let dir = std::env::temp_dir().join(format!("basictop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.btop");
    std::fs::write(&path, "[algebra]\nchain 3\n[carrier]\na\n[operators]\nx = const {a:q}\n").unwrap();
    let o = basictop(&["--doc", path.to_str().unwrap(), "validate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`x`"), "{}", stderr(&o));

    std::fs::write(&path, "[algebra]\nchain 3\n[nowhere]\n").unwrap();
    let o = basictop(&["--doc", path.to_str().unwrap(), "validate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cap_exceeded_exits_three() {
    let o = with_doc(&["--subset-cap", "4", "classify", "ap"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("cap"));
}

#[test]
fn environment_is_a_fallback_for_flags() {
    let doc = sample();
    let run = |cap_flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_basictop"));
        c.env("BASICTOP_SUBSET_CAP", "4").arg("--doc").arg(&doc);
        if let Some(cap) = cap_flag {
            c.args(["--subset-cap", cap]);
        }
        c.args(["classify", "ap"]).output().unwrap()
    };
    assert_eq!(run(None).status.code(), Some(3));
    assert_eq!(run(Some("4096")).status.code(), Some(0));
}

#[test]
fn sampled_laws_report_seed() {
    let dir = std::env::temp_dir().join(format!("basictop-laws-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("four.btop");
    std::fs::write(&path, "[algebra]\nboolean\n[carrier]\na b c d\n").unwrap();
    let o = basictop(&[
        "--doc",
        path.to_str().unwrap(),
        "--sample-count",
        "20",
        "--seed",
        "5",
        "laws",
        "unit",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("seed 5"), "{text}");
    assert!(text.contains("no counterexample found"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}
