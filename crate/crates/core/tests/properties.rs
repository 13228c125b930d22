use a6_hurwitz::a6val::{ClassElem, CLASS_SIZE};
use a6_hurwitz::lifting::lifting_invariant;
use a6_hurwitz::nielsen::{braid_move, canonical_abs, canonical_inner, BraidMove, Direction, NielsenTuple};
use a6_hurwitz::perm::{Parity, Perm};
use a6_hurwitz::reduce::{apply_reduction, find_reduction};
use proptest::prelude::*;

fn perm6() -> impl Strategy<Value = Perm> {
    Just((0u8..6).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(&images).unwrap())
}

fn even_perm6() -> impl Strategy<Value = Perm> {
    perm6().prop_filter("even", |p| p.parity() == Parity::Even)
}

/// Product-one tuples over the class; the closing entry is forced.
fn product_one(k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = NielsenTuple> {
    k.prop_flat_map(|k| proptest::collection::vec(0..CLASS_SIZE as u8, k - 1))
        .prop_filter_map("closing entry outside the class", |idx| {
            let mut entries: Vec<ClassElem> = idx.into_iter().map(ClassElem).collect();
            let p = NielsenTuple::new(entries.clone()).product();
            entries.push(ClassElem::from_perm(&p.inverse()).ok()?);
            Some(NielsenTuple::new(entries))
        })
}

fn word(len: usize, k: usize) -> impl Strategy<Value = Vec<BraidMove>> {
    proptest::collection::vec((0..k - 1, any::<bool>()), 0..len).prop_map(|moves| {
        moves
            .into_iter()
            .map(|(position, fwd)| {
                if fwd {
                    BraidMove::forward(position)
                } else {
                    BraidMove::backward(position)
                }
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn perm_display_round_trips(p in perm6()) {
        prop_assert_eq!(Perm::parse(&p.to_string(), 6).unwrap(), p);
    }

    #[test]
    fn perm_group_laws(a in perm6(), b in perm6(), c in perm6()) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.then(&b).parity(), a.parity().combine(b.parity()));
        prop_assert_eq!(a.conjugate_by(&b).conjugate_by(&b.inverse()), a);
    }

    #[test]
    fn braid_moves_invert(t in product_one(3..=7), p in 0usize..6) {
        let p = p % (t.len() - 1);
        let there = braid_move(&t, p, Direction::Forward).unwrap();
        prop_assert_eq!(braid_move(&there, p, Direction::Backward).unwrap(), t.clone());
    }

    #[test]
    fn braid_words_keep_product_group_and_gamma(
        (t, w) in product_one(3..=7).prop_flat_map(|t| {
            let k = t.len();
            (Just(t), word(30, k))
        })
    ) {
        let moved = t.apply_word(&w).unwrap();
        prop_assert!(moved.is_product_one());
        prop_assert_eq!(moved.generated(), t.generated());
        prop_assert_eq!(lifting_invariant(&moved).unwrap(), lifting_invariant(&t).unwrap());
    }

    #[test]
    fn canonical_keys_ignore_conjugation(t in product_one(2..=8), even in even_perm6(), any in perm6()) {
        prop_assert_eq!(canonical_inner(&t.conjugate_by(&even).unwrap()), canonical_inner(&t));
        prop_assert_eq!(canonical_abs(&t.conjugate_by(&any).unwrap()), canonical_abs(&t));
        let key = canonical_inner(&t);
        prop_assert_eq!(canonical_inner(&key.tuple()), key);
        prop_assert!(canonical_abs(&t) <= key);
    }

    #[test]
    fn reductions_keep_gamma(t in product_one(5..=6)) {
        if let Some(r) = find_reduction(&t, 4) {
            let reduced = apply_reduction(&t, &r).unwrap();
            let drop = if r.is_one_reduction() { 1 } else { 2 };
            prop_assert_eq!(reduced.len(), t.len() - drop);
            prop_assert!(reduced.is_product_one());
            prop_assert_eq!(lifting_invariant(&reduced).unwrap(), lifting_invariant(&t).unwrap());
        }
    }
}
