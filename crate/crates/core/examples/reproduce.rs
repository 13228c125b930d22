//! Re-runs the computer checks behind the reduction lemmas.
//!
//! `cargo run --release --example reproduce -- b5 b6` runs a selection;
//! with no arguments every check runs.

use std::time::Instant;

use a6_hurwitz::classify::{reproduce, ReproCode};

fn main() -> Result<(), a6_hurwitz::error::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let codes: Vec<ReproCode> = if args.is_empty() {
        ReproCode::ALL.to_vec()
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    for code in codes {
        let start = Instant::now();
        let out = reproduce(code);
        println!(
            "{code} {} candidates={} screened={} count={} ({:.1}s) {}",
            if out.passed { "PASS" } else { "FAIL" },
            out.candidates,
            out.screened,
            out.count,
            start.elapsed().as_secs_f64(),
            code.description()
        );
        for w in &out.witnesses {
            println!("    {w}");
        }
    }
    Ok(())
}
