//! Odd conjugation against the inner orbits at six points.
//!
//! `cargo run --release --example parity_bridges`

use a6_hurwitz::classify::verify_inner_parity_bridges;

fn main() -> Result<(), a6_hurwitz::error::Error> {
    let report = verify_inner_parity_bridges()?;
    for c in &report.checks {
        println!("{} {}  {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    Ok(())
}
