//! Seeded randomized checks of lifting-invariant and reduction properties.
//!
//! `cargo run --release --example property_suite -- 42` uses seed 42.

use std::time::Instant;

use a6_hurwitz::classify::{run_property_suite, SuiteConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut cfg = SuiteConfig::default();
    if let Some(seed) = std::env::args().nth(1) {
        cfg.seed = seed.parse()?;
    }
    let start = Instant::now();
    let report = run_property_suite(&cfg)?;
    for c in &report.checks {
        println!(
            "{:<34} {} trials={} violations={}  {}",
            c.name,
            if c.passed { "PASS" } else { "FAIL" },
            c.trials,
            c.violations,
            c.detail
        );
    }
    println!("seed {} in {:.1}s", cfg.seed, start.elapsed().as_secs_f64());
    Ok(())
}
