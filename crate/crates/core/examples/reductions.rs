//! Reductions of a six-point tuple, forcing a one-reduction, pruning a
//! generating set, and lifting a braid equivalence through reductions.
//!
//! `cargo run --release --example reductions`

use a6_hurwitz::classify::{random_nielsen_tuple, random_word};
use a6_hurwitz::nielsen::NielsenTuple;
use a6_hurwitz::perm::Perm;
use a6_hurwitz::reduce::{
    apply_reduction, find_reduction, force_one_reduction, lift_braid_equivalence, marked_braid_word, prune_generators,
    DEFAULT_DEPTH,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word_text(w: &[a6_hurwitz::nielsen::BraidMove]) -> String {
    w.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = NielsenTuple::parse("(1,2)(3,4) (1,2)(3,4) (1,2)(3,6) (1,2)(3,6) (1,3)(2,5) (1,3)(2,5)")?;
    let r = find_reduction(&t, DEFAULT_DEPTH).ok_or("no reduction")?;
    println!("{t}\n  {:?} at {:?} -> {}", r.kind, r.positions, r.result);
    match force_one_reduction(&t, &r)? {
        Some(one) => println!(
            "  forced one-reduction after [{}] -> {}",
            word_text(&one.braid_prefix),
            one.result
        ),
        None => println!("  the remaining block is too small to force a one-reduction"),
    }

    let set: Vec<Perm> = ["(1,2)(3,4)", "(1,2)(3,5)", "(1,6)(3,4)", "(1,6)(4,5)", "(2,3)(4,5)"]
        .iter()
        .map(|s| Perm::parse(s, 6))
        .collect::<Result<_, _>>()?;
    if let Some(p) = prune_generators(&set, 3)? {
        let picked: Vec<String> = p.elements.iter().map(|e| e.to_string()).collect();
        println!(
            "generating triple after [{}]: {}",
            word_text(&p.braid),
            picked.join(" ")
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let t1 = random_nielsen_tuple(&mut rng, 6);
    let t2 = t1.apply_word(&random_word(&mut rng, 6, 12))?;
    let one = |t: &NielsenTuple| -> Result<_, Box<dyn std::error::Error>> {
        let r = find_reduction(t, DEFAULT_DEPTH).ok_or("no reduction")?;
        Ok(force_one_reduction(t, &r)?.ok_or("no one-reduction")?)
    };
    let (r1, r2) = (one(&t1)?, one(&t2)?);
    let (u1, u2) = (apply_reduction(&t1, &r1)?, apply_reduction(&t2, &r2)?);
    match marked_braid_word(&u1, r1.positions.0, &u2, r2.positions.0, 4_000_000)? {
        Some(w) => {
            let lifted = lift_braid_equivalence(&t1, &t2, &r1, &r2, &w)?;
            println!("{t1}\n  reaches {t2}\n  via {} lifted moves", lifted.len());
        }
        None => println!("reduced tuples are not related by a strand-carrying braid"),
    }
    Ok(())
}
