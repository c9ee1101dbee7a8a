//! End-to-end checks of the command-line binary: exit codes, schema
//! conformance, byte determinism, seed plumbing.

mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::testdata;

fn facon_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_facon"))
}

fn run(args: &[&str]) -> Output {
    facon_bin().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn schema() -> serde_json::Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file")).expect("valid json")
}

#[test]
fn count_facons_three_is_nineteen() {
    let out = run(&["count-facons", "-n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "19\n");
}

#[test]
fn analyze_exfacon_conforms_to_schema() {
    let input = testdata("exfacon.map");
    let out = run(&["analyze", input.to_str().unwrap(), "-E", "2", "--samples", "120"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("json output");

    facon::report::validate_schema(&report, &schema(), "$").expect("schema conformance");

    let labels: Vec<&str> = report["facons"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, vec!["(3)[1]", "(3)[1,2]", "(3)[2]"]);

    let dims: Vec<i64> = report["filtration"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["dimension"].as_i64().unwrap())
        .collect();
    assert_eq!(dims, vec![2, 1, 0]);
    assert_eq!(report["frontier"], serde_json::json!(true));
    assert_eq!(report["top_dimension"], serde_json::json!(2));
}

#[test]
fn analyze_all_bundled_reports_conform_to_schema() {
    let schema = schema();
    for name in common::DOMINANT_EXAMPLES.iter().chain(["identity.map"].iter()) {
        let input = testdata(name);
        let out =
            run(&["analyze", input.to_str().unwrap(), "-E", "2", "--samples", "80"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let report: serde_json::Value =
            serde_json::from_str(&stdout_str(&out)).expect("json output");
        facon::report::validate_schema(&report, &schema, "$")
            .unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn identical_configs_give_byte_identical_reports() {
    let input = testdata("cusp.map");
    let args = ["analyze", input.to_str().unwrap(), "-E", "2", "--seed", "11"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.status.success());
}

#[test]
fn seed_env_var_is_a_fallback_for_the_flag() {
    let input = testdata("cusp.map");
    let with_flag = run(&["analyze", input.to_str().unwrap(), "-E", "2", "--seed", "7"]);
    let with_env = facon_bin()
        .args(["analyze", input.to_str().unwrap(), "-E", "2"])
        .env("FACON_SEED", "7")
        .output()
        .expect("binary runs");
    assert_eq!(with_flag.stdout, with_env.stdout);
}

#[test]
fn verify_cusp_passes() {
    let input = testdata("cusp.map");
    let out = run(&["verify", input.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("oracle cross-check (E = 2): ok"), "{text}");
    assert!(text.contains("verify: all checks passed"), "{text}");
}

#[test]
fn missing_input_exits_2() {
    let out = run(&["analyze", "/no/such/input.map"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_error_exits_2_with_position() {
    let path = std::env::temp_dir().join(format!("facon-bad-{}.map", std::process::id()));
    std::fs::write(&path, "vars x1; x2").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("1:10"), "{stderr}");
    assert!(stderr.contains("unknown variable"), "{stderr}");
}

#[test]
fn text_format_and_stratify_views() {
    let input = testdata("cone.map");
    let out = run(&["analyze", input.to_str().unwrap(), "-E", "2", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("(1,3)[2]"), "{text}");
    assert!(text.contains("frontier: true"), "{text}");
    assert!(text.contains("top dimension: 2 (hypersurface: true)"), "{text}");

    let out = run(&["stratify", input.to_str().unwrap(), "-E", "2"]);
    assert!(out.status.success());
    let view: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("json");
    assert!(view.get("strata").is_some());
    assert!(view.get("filtration").is_some());
    assert_eq!(view["frontier"], serde_json::json!(true));
}
