//! Sizes of Nielsen classes by monodromy target, without listing tuples.
//!
//! `cargo run --release --example nielsen_counts`

use a6_hurwitz::classify::GroupChoice;
use a6_hurwitz::nielsen::{count_nielsen, Target};

fn main() -> Result<(), a6_hurwitz::error::Error> {
    for k in 2..=8 {
        print!("k = {k}: product one {:>12}", count_nielsen(k, &Target::ProductOne)?);
        for g in [GroupChoice::A6, GroupChoice::G60, GroupChoice::G24] {
            print!("  {} {:>11}", g.label(), count_nielsen(k, &g.target())?);
        }
        println!();
    }
    Ok(())
}
