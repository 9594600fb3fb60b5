//! End-to-end checks of the command-line interface: exit codes, JSON
//! shapes, seeding and determinism.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_karoubi"))
}

#[test]
fn split_prints_a_verified_witness() {
    let out = bin()
        .args(["split", "[[1,1],[0,0]]", "--ring", "fp2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["r"]["entries"], serde_json::json!([[1, 1]]));
    assert_eq!(v["s"]["entries"], serde_json::json!([[1], [0]]));
}

#[test]
fn split_rejects_non_idempotents_with_exit_1() {
    let out = bin()
        .args(["split", "[[0,1],[0,0]]", "--ring", "fp2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not idempotent"), "stderr: {err}");
}

#[test]
fn split_accepts_full_matrix_objects() {
    let m = r#"{"ring":"q","rows":2,"cols":2,"entries":[["1/2","1/2"],["1/2","1/2"]]}"#;
    let out = bin().args(["split", m, "--ring", "q"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn roundtrip_is_exact_on_inclusion_style_input() {
    let ext = r#"{"A":2,"C":1,
        "alpha":{"ring":"fp","p":2,"rows":2,"cols":1,"entries":[[1],[0]]},
        "e_A":{"ring":"fp","p":2,"rows":2,"cols":2,"entries":[[1,0],[0,1]]},
        "e_C":{"ring":"fp","p":2,"rows":1,"cols":1,"entries":[[1]]}}"#;
    let out = bin().args(["roundtrip", ext, "--ring", "fp2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("roundtrip: exact"), "{text}");
}

#[test]
fn roundtrip_rejects_incompatible_elements() {
    // identity extension between rank-one idempotents violates the
    // compatibility equations
    let ext = r#"{"A":2,"C":2,
        "alpha":{"ring":"fp","p":2,"rows":2,"cols":2,"entries":[[1,0],[0,1]]},
        "e_A":{"ring":"fp","p":2,"rows":2,"cols":2,"entries":[[1,0],[0,0]]},
        "e_C":{"ring":"fp","p":2,"rows":2,"cols":2,"entries":[[1,0],[0,0]]}}"#;
    let out = bin().args(["roundtrip", ext, "--ring", "fp2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_suite_is_exit_2() {
    let out = bin().args(["run", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flags_are_exit_2() {
    let out = bin().args(["run", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_emits_identical_reports_for_identical_seeds() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("karoubi-report-1.json");
    let p2 = dir.join("karoubi-report-2.json");
    for p in [&p1, &p2] {
        let out = bin()
            .args([
                "run",
                "--suite",
                "prop-a",
                "--seed",
                "9",
                "--cases",
                "20",
                "--max-dim",
                "3",
                "--out",
                p.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let mut a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p1).unwrap()).unwrap();
    let mut b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p2).unwrap()).unwrap();
    a["wall_clock_ms"] = serde_json::json!(0);
    b["wall_clock_ms"] = serde_json::json!(0);
    assert_eq!(a, b);
}

#[test]
fn env_seed_overrides_the_flag() {
    let out = bin()
        .args(["run", "--suite", "determinism", "--seed", "5", "--cases", "10"])
        .env("KAROUBI_SEED", "77")
        .output()
        .unwrap();
    assert!(out.status.success());
    // the config echo carries the effective seed
    let out2 = bin()
        .args(["run", "--suite", "determinism", "--seed", "77", "--cases", "10"])
        .output()
        .unwrap();
    assert!(out2.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).lines().next(),
        String::from_utf8_lossy(&out2.stdout).lines().next()
    );
}

#[test]
fn complete_applies_a_registry_functor() {
    let out = bin()
        .args(["complete", "doubling", "--ring", "fp5", "--seed", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["functor"], "doubling");
    let base = v["object"]["base"].as_u64().unwrap();
    assert_eq!(v["image_object"]["base"].as_u64().unwrap(), 2 * base);
    let unknown = bin()
        .args(["complete", "frobenius", "--ring", "fp5"])
        .output()
        .unwrap();
    assert_eq!(unknown.status.code(), Some(2));
}
