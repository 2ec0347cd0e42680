use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-deform")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("hopf-deform-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn forced_zero_is_an_input_error() {
    let out = run(&["build", "--input", &data("taft_forced.json")]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["status"], "input-error");
    assert!(r["error"].as_str().unwrap().contains("forced zero: g^n = 1"));
}

#[test]
fn unknown_field_reports_pointer() {
    let out = run(&["build", "--input", &data("unknown_field.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("/generators/0/h: unknown field"));
}

#[test]
fn non_quantum_linear_pair_is_rejected() {
    let out = run(&["build", "--input", &data("bad_pair.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].as_str().unwrap().contains("for the pair (1, 2)"));
}

#[test]
fn build_echoes_field_order_and_conventions() {
    let out = run(&["build", "--input", &data("taft.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], "hopf-deform/report/v1");
    assert_eq!(r["inputs"]["E"], 6);
    assert_eq!(r["results"]["dim"], 18);
    assert_eq!(r["results"]["coradical_dims"], serde_json::json!([6, 12, 18]));
    for key in ["relations", "dictionary", "delta_sign", "retraction", "verify_mode", "indices"] {
        assert!(r["conventions"].get(key).is_some(), "missing convention {key}");
    }
}

#[test]
fn reports_are_deterministic_across_runs_and_jobs() {
    let a = run(&["dual", "--input", &data("bdg3.json"), "--seed", "3"]);
    let b = run(&["dual", "--input", &data("bdg3.json"), "--seed", "3", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bdg_dual_has_one_grouplike() {
    let r = json(&run(&["dual", "--input", &data("bdg3.json")]));
    assert_eq!(r["status"], "pass");
    assert_eq!(r["results"]["grouplikes_of_dual"], 1);
    assert_eq!(r["results"]["dual_pointed"], false);
    assert_eq!(r["results"]["dim"], 81);
}

#[test]
fn budget_exceeded_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopf-deform"))
        .args(["build", "--input", &data("taft.json")])
        .env("HOPF_DEFORM_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["status"], "budget-exceeded");
}

#[test]
fn property_failure_exits_one_with_witness() {
    let out = run(&["deform-comult", "--input", &data("taft.json")]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let failed: Vec<&Value> = r["certificates"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failed.is_empty());
    assert!(failed[0]["witness"].is_string());
}

#[test]
fn deform_mult_from_cocycle_file() {
    // ζ(x^i g^u, x^j g^v) = q^{ju} for i + j = 3, q = z3
    let mut entries = Vec::new();
    for (i, j) in [(1, 2), (2, 1)] {
        for u in 0..6 {
            for v in 0..6 {
                let value = serde_json::json!({"root": [3, (j * u) % 3]});
                entries.push(serde_json::json!([format!("x1^{i} g^{u}"), format!("x1^{j} g^{v}"), value]));
            }
        }
    }
    let good = temp_file("zeta.json", &serde_json::json!({ "entries": entries }).to_string());
    let out = run(&["deform-mult", "--input", &data("taft.json"), "--cocycle", &good]);
    let r = json(&out);
    assert_eq!(out.status.code(), Some(0), "{r}");
    assert_eq!(r["results"]["infinitesimal_degree"], 3);
    let bad = temp_file("bad.json", r#"{"entries": [["x1", "x1", 1]]}"#);
    let out = run(&["deform-mult", "--input", &data("taft.json"), "--cocycle", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let typo = temp_file("typo.json", r#"{"entries": [], "scale": 2}"#);
    assert_eq!(run(&["deform-mult", "--input", &data("taft.json"), "--cocycle", &typo]).status.code(), Some(2));
}

#[test]
fn fixtures_taft_deform_passes() {
    let out = run(&["fixtures", "--example", "taft-deform", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] taft-deform: m_sigma equals the closed form on all 324 pairs"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn fixtures_dual_deform_reports_the_failing_law() {
    let out = run(&["fixtures", "--example", "dual-deform"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let failed: Vec<&str> = r["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.iter().any(|n| n.contains("coassociativity")));
    assert_eq!(run(&["fixtures", "--example", "dual-deform-p2-1"]).status.code(), Some(0));
}

#[test]
fn unknown_example_and_bad_p_are_input_errors() {
    assert_eq!(run(&["fixtures", "--example", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["irreps", "--p", "4"]).status.code(), Some(2));
    assert_eq!(run(&["build"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate", "--input", &data("taft.json")]).status.code(), Some(2));
}

#[test]
fn irreps_and_cohomology_commands() {
    let r = json(&run(&["irreps", "--p", "5"]));
    assert_eq!(r["status"], "pass");
    assert_eq!(r["results"]["count"], 5);
    let out = run(&["cohomology", "--input", &data("quantum_plane.json"), "--level", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let dims: Vec<u64> = r["results"]["levels"].as_array().unwrap().iter().map(|l| l["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 2, 3]);
}

#[test]
fn theta_and_delta_commands() {
    let out = run(&["theta", "--input", &data("bdg3.json"), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] U(D, f) equals H(a) with a = f(z)"));
    let r = json(&run(&["delta", "--input", &data("taft.json")]));
    assert_eq!(r["status"], "pass");
    assert_eq!(r["results"]["class"], "nonzero");
}

#[test]
fn text_output_renders_pbw_monomials() {
    let out = run(&["build", "--input", &data("quantum_plane.json"), "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("x2 x1 = "), "{text}");
    assert!(text.contains("[PASS] associativity"));
}
