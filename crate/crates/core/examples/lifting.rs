//! Lifting invariant of a product-one tuple, and the exponents attained for
//! each number of branch points.
//!
//! `cargo run --example lifting -- "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)"`

use a6_hurwitz::lifting::{lift_counts, lifting_invariant, spectrum};
use a6_hurwitz::nielsen::{NielsenTuple, Target};

fn main() -> Result<(), a6_hurwitz::error::Error> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)".into());
    let t = NielsenTuple::parse(&text)?;
    let gamma = lifting_invariant(&t)?;
    println!("{t}");
    println!("  {gamma}  (order {})", gamma.order());
    for k in 5..=7 {
        let counts = lift_counts(k, &Target::a6())?;
        println!("k = {k}: exponents {:?}, tuples by exponent {counts:?}", spectrum(k)?);
    }
    Ok(())
}
