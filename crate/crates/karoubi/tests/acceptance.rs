//! Acceptance suite: every criterion runs at its stated scale with exact
//! (tolerance-zero) equality under exact arithmetic, over the default
//! instance set (seed 1, 200 cases, dimensions up to 4, F2/F5/Q). One test
//! per criterion; each prints a PASS/FAIL line per underlying check.

use karoubi::suite::{
    run_suite, suite_example_matrices, suite_functor_2_laws, suite_karoubi_laws, suite_prop_a,
    suite_shin_naturality, suite_thm_b_exactness, suite_thm_b_roundtrip, suite_wic, SuiteConfig,
    SuiteEntry,
};

fn default_config() -> SuiteConfig {
    SuiteConfig {
        seed: 1,
        cases: 200,
        max_dim: 4,
        primes: vec![2, 5],
        with_q: true,
        suites: vec!["all".to_string()],
    }
}

fn assert_all_pass(criterion: &str, entries: &[SuiteEntry]) {
    assert!(!entries.is_empty(), "{criterion}: no checks ran");
    let mut ok = true;
    for e in entries {
        let status = if e.pass() { "PASS" } else { "FAIL" };
        println!("{criterion}: {status} {}", e.name());
        if !e.pass() {
            ok = false;
            println!(
                "{criterion}:   counterexample: {}",
                e.counterexample().unwrap_or("none recorded")
            );
        }
    }
    assert!(ok, "{criterion} failed");
}

/// Criterion 1: the idempotent completion of Mat(F2), Mat(F5) and Mat(Q)
/// satisfies the category and additivity laws, and every sampled idempotent
/// in it splits with a verified witness; 200 cases per ring, exact.
#[test]
fn acceptance_1_karoubi_laws() {
    let entries = suite_karoubi_laws(&default_config()).unwrap();
    assert_all_pass("acceptance 1 karoubi-laws", &entries);
}

/// Criterion 2: the constructive idempotent splitting in the extension
/// category recomposes exactly on 200 sampled triples per ring, and the
/// converse direction recovers splittings of the components.
#[test]
fn acceptance_2_prop_a() {
    let entries = suite_prop_a(&default_config()).unwrap();
    assert_all_pass("acceptance 2 prop-a", &entries);
}

/// Criterion 3: tsadi after shin is the identity on 500 sampled objects and
/// 500 sampled morphisms per ring; the mem components are isomorphisms and
/// their naturality squares commute on 200 sampled morphisms.
#[test]
fn acceptance_3_thm_b_roundtrip() {
    let entries = suite_thm_b_roundtrip(&default_config()).unwrap();
    assert_all_pass("acceptance 3 thm-b-roundtrip", &entries);
}

/// Criterion 4: shin images of 100 sampled conflations of the lifted exact
/// structure verify against the explicit section and base-conflation
/// witness; tsadi images of 100 sampled conflations of the completed
/// extension category are componentwise split exact.
#[test]
fn acceptance_4_thm_b_exactness() {
    let entries = suite_thm_b_exactness(&default_config()).unwrap();
    assert_all_pass("acceptance 4 thm-b-exactness", &entries);
}

/// Criterion 5: completion and the induced-extension-functor assignment
/// preserve identities, composition, vertical and horizontal composition on
/// at least 100 sampled configurations from the registry.
#[test]
fn acceptance_5_functor_2_laws() {
    let entries = suite_functor_2_laws(&default_config()).unwrap();
    assert_all_pass("acceptance 5 functor-2-laws", &entries);
}

/// Criterion 6: the naturality square and the 2-naturality component
/// computation pass for every registry pair and transformation at 200 cases
/// each, and a corrupted-gamma mutant fails with a replayable
/// counterexample.
#[test]
fn acceptance_6_shin_naturality() {
    let entries = suite_shin_naturality(&default_config()).unwrap();
    assert_all_pass("acceptance 6 shin-naturality", &entries);
    assert!(
        entries.iter().any(|e| e.name().starts_with("shin-naturality-mutant-detected")),
        "mutant detection entry missing"
    );
}

/// Criterion 7: every sampled section in the extension category over a
/// weakly idempotent complete instance has a verified componentwise
/// cokernel; the weak restrictions round-trip exactly; the final diagram
/// commutes pointwise on 100 samples.
#[test]
fn acceptance_7_wic() {
    let entries = suite_wic(&default_config()).unwrap();
    assert_all_pass("acceptance 7 wic", &entries);
}

/// Criterion 8: over F2 and F5 the rectangular-matrix functor into the
/// extension category is additive, hom-space dimensions agree across it on
/// 100 sampled pairs, the hom dimension bound holds, and the completed-side
/// arrow correspondence verifies on 100 samples.
#[test]
fn acceptance_8_example_matrices() {
    let entries = suite_example_matrices(&default_config()).unwrap();
    assert_all_pass("acceptance 8 example-matrices", &entries);
}

/// Criterion 9: two runs with identical seed and configuration produce
/// identical reports, excluding the timing field.
#[test]
fn acceptance_9_determinism() {
    let cfg = SuiteConfig {
        suites: vec![
            "karoubi-laws".to_string(),
            "prop-a".to_string(),
            "example-matrices".to_string(),
        ],
        cases: 50,
        ..default_config()
    };
    let a = run_suite(&cfg).unwrap();
    let b = run_suite(&cfg).unwrap();
    let ok = a.stable_json() == b.stable_json();
    println!(
        "acceptance 9 determinism: {} identical-reports ({} entries)",
        if ok { "PASS" } else { "FAIL" },
        a.total
    );
    assert!(ok, "reports differ between identical runs");
    // and the dedicated suite agrees
    let entries = karoubi::suite::suite_determinism(&default_config()).unwrap();
    assert_all_pass("acceptance 9 determinism", &entries);
}
