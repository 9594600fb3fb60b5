//! Running the property suites programmatically and inspecting the report.
//! `cargo run --example property_suites`

use karoubi::suite::{run_suite, SuiteConfig};

fn main() -> karoubi::Result<()> {
    let cfg = SuiteConfig {
        seed: 1,
        cases: 40,
        max_dim: 3,
        primes: vec![2, 5],
        with_q: false,
        suites: vec!["prop-a".into(), "thm-b-roundtrip".into(), "determinism".into()],
    };
    let report = run_suite(&cfg)?;
    for entry in &report.entries {
        println!(
            "{} {}",
            if entry.pass() { "PASS" } else { "FAIL" },
            entry.name()
        );
    }
    println!(
        "{} checks, {} passed, {} failed in {} ms",
        report.total, report.passed, report.failed, report.wall_clock_ms
    );
    println!(
        "report JSON (timing zeroed for comparisons):\n{}",
        serde_json::to_string_pretty(&report.stable_json()).unwrap()
    );
    Ok(())
}
