//! The lifting invariant: the product of the order-2 lifts of a tuple's
//! entries to the Valentiner group, which lands in the central kernel
//! `{1, σ, σ²}` whenever the tuple has product one.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::a6val::{context, ClassElem, ClassSubgroups, SubgroupId};
use crate::error::{Error, Result};
use crate::nielsen::{NielsenTuple, Target, MAX_KEY_LEN};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LiftValue {
    /// σ^exponent as a permutation of 18 points.
    pub element: Perm,
    pub exponent: u8,
}

impl LiftValue {
    pub fn from_exponent(exponent: u8) -> LiftValue {
        LiftValue {
            element: context().covering().kernel_element(exponent),
            exponent: exponent % 3,
        }
    }

    /// 1 for the identity, 3 otherwise.
    pub fn order(&self) -> u8 {
        if self.exponent == 0 {
            1
        } else {
            3
        }
    }
}

impl fmt::Display for LiftValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma^{} = {}", self.exponent, self.element)
    }
}

impl Serialize for LiftValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LiftValue", 3)?;
        s.serialize_field("exponent", &self.exponent)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("element", &self.element.to_string())?;
        s.end()
    }
}

/// Kernel exponent of the lifted product, or `None` when the entries do not
/// multiply to the identity.
pub(crate) fn exponent_of(entries: &[ClassElem]) -> Option<u8> {
    let cov = context().covering();
    let v = entries
        .iter()
        .fold(cov.identity_index(), |v, &c| cov.mul_index(v, cov.lift_index(c)));
    cov.exponent_of_index(v)
}

/// γ(t), defined for every product-one tuple whether or not it is transitive.
pub fn lifting_invariant(t: &NielsenTuple) -> Result<LiftValue> {
    exponent_of(t.entries())
        .map(LiftValue::from_exponent)
        .ok_or_else(|| Error::Precondition(format!("{t} does not have product one")))
}

pub fn lift_order(t: &NielsenTuple) -> Result<u8> {
    lifting_invariant(t).map(|v| v.order())
}

/// Number of tuples of length `k` accepted by `target` whose lifting
/// invariant is σ^e, indexed by `e`.
///
/// Dynamic programming over (generated subgroup, running product in the
/// Valentiner group); no tuple is listed.
pub fn lift_counts(k: usize, target: &Target) -> Result<[u64; 3]> {
    if k == 0 || k > MAX_KEY_LEN {
        return Err(Error::Precondition(format!(
            "tuple length {k} outside 1..={MAX_KEY_LEN}"
        )));
    }
    let ctx = context();
    let cov = ctx.covering();
    let subs = ctx.subgroups();
    let n = cov.valentiner().order();
    let lifts: Vec<u16> = ClassElem::all().map(|c| cov.lift_index(c)).collect();
    let mut counts = vec![0u64; subs.len() * n];
    counts[ClassSubgroups::TRIVIAL.0 as usize * n + cov.identity_index() as usize] = 1;
    for _ in 0..k {
        let mut next = vec![0u64; subs.len() * n];
        for (state, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sub = SubgroupId((state / n) as u16);
            let v = (state % n) as u16;
            for x in ClassElem::all() {
                let h = subs.join(sub, x);
                next[h.0 as usize * n + cov.mul_index(v, lifts[x.index()]) as usize] += c;
            }
        }
        counts = next;
    }
    let mut out = [0u64; 3];
    for h in 0..subs.len() {
        if !target.accepts(subs, SubgroupId(h as u16)) {
            continue;
        }
        for (e, slot) in out.iter_mut().enumerate() {
            let v = cov
                .valentiner()
                .index_of(&cov.kernel_element(e as u8))
                .expect("kernel element");
            *slot += counts[h * n + v];
        }
    }
    Ok(out)
}

/// Exponents attained by γ on A6-generating tuples of length `k`.
pub fn spectrum(k: usize) -> Result<BTreeSet<u8>> {
    if !(5..=7).contains(&k) {
        return Err(Error::Precondition(format!(
            "spectrum is defined for 5 <= k <= 7, got {k}"
        )));
    }
    let counts = lift_counts(k, &Target::a6())?;
    Ok((0..3u8).filter(|&e| counts[e as usize] > 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nielsen::{braid_move, count_nielsen, Direction};

    fn t(s: &str) -> NielsenTuple {
        NielsenTuple::parse(s).unwrap()
    }

    const EXAMPLE_A: &str = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)";
    const EXAMPLE_B: &str = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,6) (1,5)(2,3) (1,5)(3,6)";

    #[test]
    fn repeated_pair_lifts_to_one() {
        let v = lifting_invariant(&t("(1,4)(2,6) (1,4)(2,6)")).unwrap();
        assert_eq!(v.exponent, 0);
        assert!(v.element.is_identity());
        assert_eq!(v.order(), 1);
    }

    #[test]
    fn odd_twins_have_both_nontrivial_exponents() {
        let a = lifting_invariant(&t(EXAMPLE_A)).unwrap();
        let b = lifting_invariant(&t(EXAMPLE_B)).unwrap();
        let both: BTreeSet<u8> = [a.exponent, b.exponent].into();
        assert_eq!(both, BTreeSet::from([1, 2]));
        assert_eq!((a.order(), b.order()), (3, 3));
    }

    #[test]
    fn six_point_examples() {
        let pairs = t("(1,2)(3,4) (1,2)(3,4) (1,2)(3,6) (1,2)(3,6) (1,3)(2,5) (1,3)(2,5)");
        let other = t("(1,2)(3,4) (1,2)(3,4) (1,2)(3,6) (1,2)(5,6) (1,4)(3,5) (1,4)(5,6)");
        assert_eq!(lifting_invariant(&pairs).unwrap().exponent, 0);
        assert_ne!(lifting_invariant(&other).unwrap().exponent, 0);
    }

    #[test]
    fn matches_the_permutation_product() {
        let tuple = t(EXAMPLE_A);
        let cov = context().covering();
        let direct = tuple.perms().iter().fold(Perm::identity(18).unwrap(), |acc, x| {
            acc.then(&cov.order2_lift(x).unwrap())
        });
        assert_eq!(lifting_invariant(&tuple).unwrap().element, direct);
    }

    #[test]
    fn rejects_non_product_one() {
        assert!(matches!(
            lifting_invariant(&t("(1,2)(3,4) (1,3)(2,4)")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn braid_moves_preserve_gamma() {
        let tuple = t(EXAMPLE_A);
        let e = lifting_invariant(&tuple).unwrap();
        for p in 0..4 {
            for d in [Direction::Forward, Direction::Backward] {
                assert_eq!(lifting_invariant(&braid_move(&tuple, p, d).unwrap()).unwrap(), e);
            }
        }
    }

    #[test]
    fn lift_counts_partition_the_product_one_count() {
        for k in [3, 5] {
            for target in [Target::ProductOne, Target::a6()] {
                let by_exponent = lift_counts(k, &target).unwrap();
                assert_eq!(by_exponent.iter().sum::<u64>(), count_nielsen(k, &target).unwrap());
            }
        }
    }

    #[test]
    fn spectra() {
        assert_eq!(spectrum(5).unwrap(), BTreeSet::from([1, 2]));
        assert_eq!(spectrum(6).unwrap(), BTreeSet::from([0, 1, 2]));
        assert!(spectrum(4).is_err());
    }
}
