//! Braid orbit of a tuple up to inner or absolute conjugation.
//!
//! `cargo run --release --example braid_orbit -- abs "(1,2)(3,4) (1,2)(3,4) (1,2)(3,5) (1,2)(3,5) (1,3)(2,6) (1,3)(2,6)"`

use a6_hurwitz::nielsen::{braid_orbit, canonical_inner, Canon, NielsenTuple};

fn main() -> Result<(), a6_hurwitz::error::Error> {
    let mut args = std::env::args().skip(1);
    let canon = match args.next().as_deref() {
        Some("abs") => Canon::Abs,
        Some("none") => Canon::None,
        _ => Canon::Inner,
    };
    let text = args
        .next()
        .unwrap_or_else(|| "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)".into());
    let t = NielsenTuple::parse(&text)?;
    let orbit = braid_orbit(&t, canon);
    println!("{t}");
    println!("  {:?} orbit of {} states", canon, orbit.size());
    if let Some(rep) = orbit.min_key() {
        println!("  least key {}", rep.tuple());
    }
    println!("  inner key {}", canonical_inner(&t).tuple());
    Ok(())
}
