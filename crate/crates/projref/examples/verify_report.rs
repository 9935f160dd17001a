//! Run verification suites from code and inspect the structured report.
//!
//!     cargo run --example verify_report

use projref::report::{run_suite, VerifyConfig, SUITES};

fn main() {
    // Keep this demonstration quick: skip groups of order above 200.
    let cfg = VerifyConfig { max_order: Some(200), ..VerifyConfig::default() };

    println!("available suites: {}", SUITES.join(", "));

    for name in ["worked-examples", "coinvariant", "group-theory"] {
        let report = run_suite(name, &cfg).unwrap();
        let status = if report.passed() { "pass" } else { "FAIL" };
        println!("{name}: {} checks, {status}", report.checks.len());
        for check in report.checks.iter().take(3) {
            println!("  {} [{}] {:?}", check.name, check.params, check.status);
        }
    }

    // The JSON form is what the command-line `verify` subcommand emits.
    let report = run_suite("worked-examples", &cfg).unwrap();
    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
}
