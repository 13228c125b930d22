//! Odd conjugation and the inner orbits: an odd permutation swaps the two
//! nontrivial lifting exponents, and fixes the exponent-0 inner orbit at six
//! points.

use serde::Serialize;

use crate::error::Result;
use crate::lifting::lifting_invariant;
use crate::nielsen::{braid_orbit, BraidMove, Canon, NielsenTuple};
use crate::perm::Perm;

/// Exponent-0 tuple on six points.
pub const BRIDGE_TUPLE: &str = "(1,2)(3,4) (1,3)(2,4) (1,2)(3,6) (1,2)(4,5) (1,5)(2,6) (3,6)(4,5)";
/// Its image under [`ODD_ELEMENT`].
pub const BRIDGE_IMAGE: &str = "(1,2)(3,4) (1,3)(2,4) (1,2)(4,5) (1,2)(3,6) (1,5)(2,6) (3,6)(4,5)";
/// A tuple with nontrivial exponent.
pub const SWAP_TUPLE: &str = "(1,2)(3,4) (1,2)(3,4) (1,2)(3,6) (1,2)(5,6) (1,4)(3,5) (1,4)(5,6)";
pub const SWAP_IMAGE: &str = "(1,2)(3,4) (1,2)(3,4) (1,2)(4,5) (1,2)(5,6) (2,3)(4,6) (2,3)(5,6)";
pub const ODD_ELEMENT: &str = "(1,2)(3,4)(5,6)";
/// A second odd element of a different cycle type.
pub const ODD_ELEMENT_ALT: &str = "(1,2)";
/// Even, despite the transposition.
pub const EVEN_ELEMENT: &str = "(1,2,3,4)(5,6)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub checks: Vec<BridgeCheck>,
}

impl BridgeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, passed: bool, detail: String) -> BridgeCheck {
    BridgeCheck {
        name: name.to_string(),
        passed,
        detail,
    }
}

pub fn verify_inner_parity_bridges() -> Result<BridgeReport> {
    let g = NielsenTuple::parse(BRIDGE_TUPLE)?;
    let g_image = NielsenTuple::parse(BRIDGE_IMAGE)?;
    let odd = Perm::parse(ODD_ELEMENT, 6)?;
    let odd_alt = Perm::parse(ODD_ELEMENT_ALT, 6)?;
    let even = Perm::parse(EVEN_ELEMENT, 6)?;
    let mut checks = Vec::new();

    let e = lifting_invariant(&g)?.exponent;
    checks.push(check("bridge tuple has exponent 0", e == 0, format!("exponent {e}")));

    let conj = g.conjugate_by(&odd)?;
    checks.push(check(
        "odd conjugate of the bridge tuple",
        conj == g_image,
        format!("{conj}"),
    ));

    let moved = g.apply_word(&[BraidMove::forward(2)])?;
    checks.push(check(
        "one braid move realises the conjugate",
        moved == g_image,
        format!("{moved}"),
    ));

    let orbit = braid_orbit(&g, Canon::Inner);
    for (label, s) in [(ODD_ELEMENT, &odd), (ODD_ELEMENT_ALT, &odd_alt)] {
        let c = g.conjugate_by(s)?;
        checks.push(check(
            &format!("conjugate by {label} stays in the inner orbit"),
            orbit.contains_tuple(&c),
            format!("orbit of {} states", orbit.size()),
        ));
    }

    let h = NielsenTuple::parse(SWAP_TUPLE)?;
    let e_h = lifting_invariant(&h)?.exponent;
    let h_image = h.conjugate_by(&odd)?;
    checks.push(check(
        "odd conjugate of the swap tuple",
        h_image == NielsenTuple::parse(SWAP_IMAGE)?,
        format!("{h_image}"),
    ));
    for (label, s) in [(ODD_ELEMENT, &odd), (ODD_ELEMENT_ALT, &odd_alt)] {
        let e_c = lifting_invariant(&h.conjugate_by(s)?)?.exponent;
        checks.push(check(
            &format!("conjugate by {label} swaps exponents 1 and 2"),
            e_h != 0 && e_h + e_c == 3,
            format!("{e_h} -> {e_c}"),
        ));
    }

    let e_even = lifting_invariant(&h.conjugate_by(&even)?)?.exponent;
    checks.push(check(
        "even conjugation keeps the exponent",
        e_even == e_h,
        format!("{e_h} -> {e_even}"),
    ));
    let same = h.conjugate_by(&Perm::identity(6)?)? == h;
    checks.push(check("identity conjugation is trivial", same, String::new()));

    Ok(BridgeReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bridges_hold() {
        let report = verify_inner_parity_bridges().unwrap();
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(report.checks.len(), 10);
    }
}
