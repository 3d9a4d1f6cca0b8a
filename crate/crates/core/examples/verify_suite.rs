//! Runs a named verification suite and prints a per-check summary.
//!
//! cargo run --example verify_suite -- [suite] [seed]

use ultranorm::verify::{run_suite, SuiteConfig};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let suite = args.next().unwrap_or_else(|| "all".into());
    let seed = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0);
    let report = run_suite(
        &suite,
        &SuiteConfig {
            seed,
            ..Default::default()
        },
    )?;
    for (key, check) in &report.checks {
        println!("{key:<48} {:>7} cases  {:?}", check.cases, check.status);
    }
    for (suite, secs) in &report.timing {
        println!("{suite:<24} {secs:.2}s");
    }
    println!(
        "{}",
        if report.passed() {
            "all checks passed"
        } else {
            "FAILURES"
        }
    );
    Ok(())
}
