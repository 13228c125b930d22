//! Subgroups of A6 and its longest subgroup chain.
//!
//! `cargo run --release --example subgroup_lattice`

use std::collections::BTreeMap;

use a6_hurwitz::a6val::A6_GENERATORS;
use a6_hurwitz::perm::{close, Perm, SubgroupLattice};

fn main() -> Result<(), a6_hurwitz::error::Error> {
    let gens: Vec<Perm> = A6_GENERATORS
        .iter()
        .map(|s| Perm::parse(s, 6))
        .collect::<Result<_, _>>()?;
    let a6 = close(&gens)?;
    let lattice = SubgroupLattice::build(&a6);
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for o in lattice.orders() {
        *by_order.entry(o).or_default() += 1;
    }
    println!(
        "{} subgroups, closed under joins: {}",
        lattice.len(),
        lattice.is_closed_under_joins(&a6)
    );
    for (order, n) in by_order {
        println!("  order {order:>3}: {n}");
    }
    println!("max chain length {}", lattice.max_chain_length());
    Ok(())
}
