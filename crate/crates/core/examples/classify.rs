//! Braid orbits on Ni(A6, C^k) up to inner or absolute equivalence.
//!
//! `cargo run --release --example classify -- 6 inner`
//! `cargo run --release --example classify -- 6 abs g24`

use std::time::Instant;

use a6_hurwitz::classify::{classify_with, ClassifyOptions, GroupChoice, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let k: usize = args.next().as_deref().unwrap_or("5").parse()?;
    let mode: Mode = args.next().as_deref().unwrap_or("inner").parse()?;
    let group: GroupChoice = args.next().as_deref().unwrap_or("a6").parse()?;
    let start = Instant::now();
    let c = classify_with(k, mode, group, &ClassifyOptions::default())?;
    let r = &c.report;
    println!(
        "k={} mode={} group={} orbits={} tuples={} ({:.1}s)",
        r.k,
        r.mode,
        r.group_label.label(),
        r.orbit_count,
        r.total_tuples,
        start.elapsed().as_secs_f64()
    );
    for (i, o) in r.orbits.iter().enumerate() {
        println!(
            "  #{i} size={} exponent={} order={} monodromy={}  {}",
            o.size, o.lift_exponent, o.lift_order, o.monodromy_order, o.representative
        );
    }
    println!(
        "certificate {:?}: {} of {} states",
        c.certificate.method, c.certificate.found_states, c.certificate.expected_states
    );
    Ok(())
}
