//! The five-point normal forms: their monodromy orders, which of them share
//! an absolute braid orbit, and the one-orbit strata by monodromy group.
//!
//! `cargo run --release --example five_points`

use a6_hurwitz::classify::{classify_five_subgroups, five_point_cases};

fn main() -> Result<(), a6_hurwitz::error::Error> {
    for case in five_point_cases()? {
        print!("[{}] order {:>3}  {}", case.label, case.monodromy_order, case.tuple);
        if !case.same_orbit_as.is_empty() {
            print!("  ~ [{}]", case.same_orbit_as.join("], ["));
        }
        println!();
    }
    for r in classify_five_subgroups()? {
        println!(
            "{}: {} abs orbit(s), {} states",
            r.group_label.label(),
            r.orbit_count,
            r.total_states()
        );
    }
    Ok(())
}
