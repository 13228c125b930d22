use serde::Serialize;

use super::{pack, CanonicalKey, NielsenTuple, MAX_KEY_LEN};
use crate::a6val::{context, ClassElem};

/// Which simultaneous conjugations identify two tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Canon {
    /// Conjugation by A6.
    Inner,
    /// Conjugation by all of S6, the normaliser of A6.
    Abs,
    /// No identification.
    None,
}

/// Lexicographically least conjugate of `entries` under the chosen group,
/// packed.
///
/// A6 is transitive on the class, so the least conjugate always starts with
/// class index 0 and only conjugators sending the first entry there need to
/// be tried: 8 in A6, 16 in S6.
pub fn canonicalize(entries: &[ClassElem], canon: Canon) -> u64 {
    debug_assert!(entries.len() <= MAX_KEY_LEN);
    let Some(&first) = entries.first() else {
        return 0;
    };
    let even_only = match canon {
        Canon::None => return pack(entries),
        Canon::Inner => true,
        Canon::Abs => false,
    };
    let ctx = context();
    let mut best = u64::MAX;
    for &s in ctx.to_front(first, even_only) {
        let s = s as usize;
        let key = entries[1..]
            .iter()
            .fold(0u64, |acc, &x| (acc << 8) | ctx.conj(s, x).0 as u64);
        best = best.min(key);
    }
    best
}

pub fn canonical_inner(t: &NielsenTuple) -> CanonicalKey {
    CanonicalKey::from_packed(t.len(), canonicalize(t.entries(), Canon::Inner))
}

pub fn canonical_abs(t: &NielsenTuple) -> CanonicalKey {
    CanonicalKey::from_packed(t.len(), canonicalize(t.entries(), Canon::Abs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    /// Minimum over every conjugator, with no first-entry shortcut.
    fn brute_force(t: &NielsenTuple, even_only: bool) -> u64 {
        let ctx = context();
        (0..ctx.s6().order())
            .filter(|&s| !even_only || ctx.is_even_index(s))
            .map(|s| pack(t.conjugate_by_index(s).entries()))
            .min()
            .unwrap()
    }

    fn t(s: &str) -> NielsenTuple {
        NielsenTuple::parse(s).unwrap()
    }

    const EXAMPLE_A: &str = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)";
    const EXAMPLE_B: &str = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,6) (1,5)(2,3) (1,5)(3,6)";

    #[test]
    fn shortcut_matches_brute_force() {
        for text in [
            EXAMPLE_A,
            EXAMPLE_B,
            "(2,6)(3,5) (1,4)(2,3) (3,4)(5,6) (1,5)(2,6) (1,6)(2,5) (3,6)(4,5)",
            "(3,6)(4,5)",
        ] {
            let tuple = t(text);
            assert_eq!(canonical_inner(&tuple).packed(), brute_force(&tuple, true), "{text}");
            assert_eq!(canonical_abs(&tuple).packed(), brute_force(&tuple, false), "{text}");
        }
    }

    #[test]
    fn constant_on_conjugation_orbits() {
        let ctx = context();
        let tuple = t(EXAMPLE_A);
        let inner = canonical_inner(&tuple);
        let abs = canonical_abs(&tuple);
        for s in (0..ctx.s6().order()).step_by(7) {
            let c = tuple.conjugate_by_index(s);
            assert_eq!(canonical_abs(&c), abs);
            if ctx.is_even_index(s) {
                assert_eq!(canonical_inner(&c), inner);
            }
        }
    }

    #[test]
    fn minimal_tuple_is_fixed() {
        let tuple = t(EXAMPLE_A);
        let min = canonical_inner(&tuple).tuple();
        assert_eq!(canonical_inner(&min).tuple(), min);
        assert_eq!(
            canonical_inner(&tuple.conjugate_by(&Perm::identity(6).unwrap()).unwrap()),
            canonical_inner(&tuple)
        );
    }

    #[test]
    fn odd_twins_split_inner_merge_abs() {
        let a = t(EXAMPLE_A);
        let b = t(EXAMPLE_B);
        let swap = Perm::parse("(5,6)", 6).unwrap();
        assert_eq!(a.conjugate_by(&swap).unwrap(), b);
        assert_ne!(canonical_inner(&a), canonical_inner(&b));
        assert_eq!(canonical_abs(&a), canonical_abs(&b));
    }

    #[test]
    fn none_is_identity() {
        let a = t(EXAMPLE_A);
        assert_eq!(canonicalize(a.entries(), Canon::None), a.raw_key().unwrap().packed());
    }
}
