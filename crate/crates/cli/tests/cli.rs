//! Interface contracts of the binary: exit codes, JSON output shape, the
//! algebra file format round trip, and output determinism.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antirotor"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn exit_codes() {
    // success
    assert_eq!(run(&["antirotor", "registry:complex"]).status.code(), Some(0));
    // usage: unknown registry name
    assert_eq!(run(&["antirotor", "registry:nope"]).status.code(), Some(2));
    // usage: unknown flag rejected by the parser
    assert_eq!(run(&["antirotor", "registry:complex", "--bogus"]).status.code(), Some(2));
    // domain: no inverse field on the nilpotent algebra
    assert_eq!(run(&["antirotor", "registry:nilpotent"]).status.code(), Some(1));
    // domain: singular transform matrix is a usage error
    assert_eq!(
        run(&["transform", "registry:complex", "--matrix", "[[1,2],[2,4]]"]).status.code(),
        Some(2)
    );
    // verification failure: exit 3
    assert_eq!(
        run(&[
            "check",
            "path-independence",
            "registry:dual",
            "--metric",
            "[[1,0],[0,1]]",
            "--point",
            "1.2,0.5"
        ])
        .status
        .code(),
        Some(3)
    );
    // power mode works on the nilpotent algebra
    assert_eq!(
        run(&["antirotor", "registry:nilpotent", "--power", "2"]).status.code(),
        Some(0)
    );
}

#[test]
fn json_report_shape() {
    let out = run(&["--json", "invariants", "registry:toeplitz:3"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tool"], "antirotor");
    assert_eq!(v["verb"], "invariants");
    assert!(v["inputs_digest"].is_string());
    let r = &v["result"];
    assert_eq!(r["anti_rotor_dim"], 3);
    assert_eq!(r["det_poly"], "-γ^3");
    assert_eq!(r["variety"]["kind"], "classified");
    assert_eq!(r["variety"]["dim"], 0);
    assert_eq!(r["variety"]["components"], 1);
    assert_eq!(r["tau_reduced"], serde_json::json!([2, 0, 0]));
    assert_eq!(r["min_nonzero_rank_certainty"], "certified");
}

#[test]
fn registry_roundtrip_through_file_format() {
    let dir = std::env::temp_dir().join(format!("antirotor-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["complex", "rxd", "toeplitz:3", "spin:2", "nilpotent", "matrix:2"] {
        let out = run(&["registry", name]);
        assert!(out.status.success(), "{name}");
        let path = dir.join(format!("{}.json", name.replace(':', "-")));
        std::fs::write(&path, &out.stdout).unwrap();
        // invariants computed from the file must match the registry's
        let spec = path.to_str().unwrap();
        let a: Value =
            serde_json::from_slice(&run(&["--json", "validate", spec]).stdout).unwrap();
        let b: Value = serde_json::from_slice(
            &run(&["--json", "validate", &format!("registry:{name}")]).stdout,
        )
        .unwrap();
        assert_eq!(a["result"], b["result"], "{name}: file round trip changed validation");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn rationals_survive_the_file_format() {
    // A structure constant of 1/3 must round-trip exactly as a string.
    let dir = std::env::temp_dir().join(format!("antirotor-q-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("third.json");
    std::fs::write(
        &path,
        r#"{"name": "scaled-line", "dim": 1, "structure": [[["1/3"]]]}"#,
    )
    .unwrap();
    let out = run(&["--json", "validate", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    // unit of x·y/3 is 3
    assert_eq!(v["result"]["unit"][0], 3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn byte_identical_output_for_fixed_seed() {
    let a = run(&["--json", "check", "iso-trials", "registry:complex", "--count", "5"]);
    let b = run(&["--json", "check", "iso-trials", "registry:complex", "--count", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "same inputs and seed must give identical bytes");
    let c = run(&["--json", "invariants", "registry:rxc"]);
    let d = run(&["--json", "invariants", "registry:rxc"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn compare_human_output_names_witnesses() {
    let out = run(&["compare", "registry:split-complex", "registry:dual"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("not isomorphic"), "{text}");
    assert!(text.contains("τ"), "witness list should cite the τ triple: {text}");
}

#[test]
fn selftest_filter_runs_subset() {
    let out = run(&["selftest", "--only", "tables"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("two-dim-anti-rotors"));
    assert!(!text.contains("isomorphism-trials"));
    // unknown filter is a usage error
    assert_eq!(run(&["selftest", "--only", "zzz-no-such"]).status.code(), Some(2));
}

#[test]
fn norm_eval_designated_metric() {
    let out = run(&[
        "--json",
        "norm-eval",
        "registry:complex",
        "--metric",
        "designated",
        "--point",
        "3,4",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let val = v["result"]["value"].as_f64().unwrap();
    assert!((val - 5.0).abs() < 1e-8, "norm at (3,4) should be 5, got {val}");
    // non-member metric is rejected with a domain error
    let bad = run(&[
        "norm-eval",
        "registry:dual",
        "--metric",
        "[[1,0],[0,1]]",
        "--point",
        "1.5,0.3",
    ]);
    assert_eq!(bad.status.code(), Some(1));
}
