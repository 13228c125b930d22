//! Nielsen tuples over the double-transposition class and the braid action
//! on them.
//!
//! Braid positions are 0-based: a move at position `p` acts on entries `p`
//! and `p + 1`. The forward move is
//! `(a, b) ↦ (b, b⁻¹ a b)` and the backward move is its inverse
//! `(a, b) ↦ (a b a⁻¹, a)`.

mod canon;
mod enumerate;
mod orbit;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use canon::{canonical_abs, canonical_inner, canonicalize, Canon};
pub use enumerate::{count_nielsen, enumerate_nielsen, enumerate_nielsen_from, Target};
pub use orbit::{braid_orbit, braid_orbit_with, OrbitOptions, OrbitSet};
pub use search::{block_conjugate, block_conjugate_word, hurwitz_search, sort_to_ordered, Directions, SearchHit};

use crate::a6val::{context, ClassElem, SubgroupId};
use crate::error::{Error, Result};
use crate::perm::{GroupTable, Perm};

/// Longest tuple a [`CanonicalKey`] can hold.
pub const MAX_KEY_LEN: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NielsenTuple {
    entries: Vec<ClassElem>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn inverse(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BraidMove {
    pub position: usize,
    pub direction: Direction,
}

impl BraidMove {
    pub fn forward(position: usize) -> BraidMove {
        BraidMove {
            position,
            direction: Direction::Forward,
        }
    }

    pub fn backward(position: usize) -> BraidMove {
        BraidMove {
            position,
            direction: Direction::Backward,
        }
    }

    pub fn inverse(self) -> BraidMove {
        BraidMove {
            position: self.position,
            direction: self.direction.inverse(),
        }
    }
}

impl fmt::Display for BraidMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Forward => write!(f, "+{}", self.position),
            Direction::Backward => write!(f, "-{}", self.position),
        }
    }
}

/// The inverse braid word: reversed, each move inverted.
pub fn invert_word(word: &[BraidMove]) -> Vec<BraidMove> {
    word.iter().rev().map(|m| m.inverse()).collect()
}

/// In-place braid move on raw class entries; the caller guarantees
/// `position + 1 < entries.len()`.
#[inline]
pub(crate) fn move_in_place(entries: &mut [ClassElem], position: usize, direction: Direction) {
    let ctx = context();
    let a = entries[position];
    let b = entries[position + 1];
    match direction {
        Direction::Forward => {
            entries[position] = b;
            entries[position + 1] = ctx.braid_conj(b, a);
        }
        Direction::Backward => {
            entries[position] = ctx.braid_conj(a, b);
            entries[position + 1] = a;
        }
    }
}

impl NielsenTuple {
    pub fn new(entries: Vec<ClassElem>) -> NielsenTuple {
        NielsenTuple { entries }
    }

    pub fn from_perms(perms: &[Perm]) -> Result<NielsenTuple> {
        let entries = perms.iter().map(ClassElem::from_perm).collect::<Result<_>>()?;
        Ok(NielsenTuple { entries })
    }

    /// Parses whitespace-separated cycle notation; every entry must be a
    /// double transposition.
    pub fn parse(text: &str) -> Result<NielsenTuple> {
        let perms = split_tuple(text)?
            .iter()
            .map(|s| Perm::parse(s, 6))
            .collect::<Result<Vec<_>>>()?;
        if perms.is_empty() {
            return Err(Error::parse(text, "empty tuple"));
        }
        NielsenTuple::from_perms(&perms)
    }

    pub fn entries(&self) -> &[ClassElem] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn perms(&self) -> Vec<Perm> {
        self.entries.iter().map(|c| c.perm()).collect()
    }

    /// Left-to-right product of the entries.
    pub fn product(&self) -> Perm {
        self.entries
            .iter()
            .fold(Perm::identity(6).expect("degree 6"), |acc, c| acc.then(&c.perm()))
    }

    pub fn is_product_one(&self) -> bool {
        let ctx = context();
        let p = self
            .entries
            .iter()
            .fold(ctx.a6_identity(), |p, &c| ctx.a6_mul_class(p, c));
        p == ctx.a6_identity()
    }

    /// The subgroup generated by the entries.
    pub fn generated(&self) -> SubgroupId {
        context().subgroups().generated(&self.entries)
    }

    pub fn monodromy_order(&self) -> usize {
        context().subgroups().order(self.generated())
    }

    pub fn is_transitive(&self) -> bool {
        context().subgroups().is_transitive(self.generated())
    }

    /// Non-decreasing in class-list order.
    pub fn is_ordered(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// Simultaneous conjugation `s⁻¹ gᵢ s` by an element of S6.
    pub fn conjugate_by(&self, s: &Perm) -> Result<NielsenTuple> {
        let ctx = context();
        let si = ctx
            .s6_index(s)
            .ok_or_else(|| Error::Precondition(format!("{s} is not in S6")))?;
        Ok(self.conjugate_by_index(si))
    }

    pub(crate) fn conjugate_by_index(&self, s: usize) -> NielsenTuple {
        let ctx = context();
        NielsenTuple {
            entries: self.entries.iter().map(|&x| ctx.conj(s, x)).collect(),
        }
    }

    /// The tuple itself as a key, without canonicalisation.
    pub fn raw_key(&self) -> Result<CanonicalKey> {
        CanonicalKey::from_entries(&self.entries)
    }

    pub fn apply_word(&self, word: &[BraidMove]) -> Result<NielsenTuple> {
        let mut t = self.clone();
        for m in word {
            t = braid_move(&t, m.position, m.direction)?;
        }
        Ok(t)
    }
}

pub(crate) fn split_tuple(text: &str) -> Result<Vec<String>> {
    // Entries are separated by whitespace outside parentheses; "(1,2) (3,4)"
    // is two entries while "(1,2)(3,4)" is one.
    let mut out = Vec::new();
    let mut current = String::new();
    let mut depth = 0i32;
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            c if c.is_whitespace() => {
                if depth == 0 && !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
        if depth < 0 {
            return Err(Error::parse(text, "unbalanced parenthesis"));
        }
    }
    if depth != 0 {
        return Err(Error::parse(text, "unbalanced parenthesis"));
    }
    if !current.is_empty() {
        out.push(current);
    }
    Ok(out)
}

impl fmt::Display for NielsenTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for NielsenTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<NielsenTuple> {
        NielsenTuple::parse(s)
    }
}

impl Serialize for NielsenTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Applies one braid move.
pub fn braid_move(t: &NielsenTuple, position: usize, direction: Direction) -> Result<NielsenTuple> {
    if position + 1 >= t.len() {
        return Err(Error::IndexOutOfRange {
            index: position,
            len: t.len(),
        });
    }
    let mut out = t.clone();
    move_in_place(&mut out.entries, position, direction);
    Ok(out)
}

/// Product one, and the entries generate exactly `g`. Class membership holds
/// by construction.
pub fn is_nielsen(t: &NielsenTuple, g: &GroupTable) -> bool {
    if !t.is_product_one() {
        return false;
    }
    let subs = context().subgroups();
    match subs.find(g) {
        Some(id) => t.generated() == id,
        None => false,
    }
}

/// Fixed-length sequence of class indices packed big-endian into a `u64`, so
/// integer order is lexicographic order for equal lengths.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey {
    len: u8,
    packed: u64,
}

impl CanonicalKey {
    pub fn from_entries(entries: &[ClassElem]) -> Result<CanonicalKey> {
        if entries.len() > MAX_KEY_LEN {
            return Err(Error::Precondition(format!(
                "tuples longer than {MAX_KEY_LEN} have no packed key"
            )));
        }
        Ok(CanonicalKey {
            len: entries.len() as u8,
            packed: pack(entries),
        })
    }

    pub(crate) fn from_packed(len: usize, packed: u64) -> CanonicalKey {
        CanonicalKey { len: len as u8, packed }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn packed(&self) -> u64 {
        self.packed
    }

    /// One byte per entry: the entry's class-list index.
    pub fn bytes(&self) -> Vec<u8> {
        let mut buf = [ClassElem(0); MAX_KEY_LEN];
        unpack(self.packed, self.len(), &mut buf);
        buf[..self.len()].iter().map(|c| c.0).collect()
    }

    pub fn tuple(&self) -> NielsenTuple {
        let mut buf = [ClassElem(0); MAX_KEY_LEN];
        unpack(self.packed, self.len(), &mut buf);
        NielsenTuple::new(buf[..self.len()].to_vec())
    }
}

#[inline]
pub(crate) fn pack(entries: &[ClassElem]) -> u64 {
    entries.iter().fold(0u64, |acc, c| (acc << 8) | c.0 as u64)
}

#[inline]
pub(crate) fn unpack(packed: u64, len: usize, out: &mut [ClassElem]) {
    for (i, slot) in out[..len].iter_mut().enumerate() {
        *slot = ClassElem((packed >> (8 * (len - 1 - i))) as u8);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> NielsenTuple {
        NielsenTuple::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let text = "(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)";
        let tuple = t(text);
        assert_eq!(tuple.len(), 5);
        assert_eq!(tuple.to_string(), text);
        assert!(tuple.is_product_one());
    }

    #[test]
    fn parse_rejects_entries_outside_the_class() {
        assert!(matches!(
            NielsenTuple::parse("(1,2)(3,4) (1,2)"),
            Err(Error::NotInClass(_))
        ));
        assert!(NielsenTuple::parse("").is_err());
        assert!(NielsenTuple::parse("(1,2)(3,4) ((1,2)").is_err());
    }

    #[test]
    fn braid_moves_invert_each_other() {
        let tuple = t("(1,2)(3,5) (1,3)(2,6) (1,4)(5,6) (2,5)(3,4)");
        for p in 0..3 {
            let f = braid_move(&tuple, p, Direction::Forward).unwrap();
            assert_eq!(braid_move(&f, p, Direction::Backward).unwrap(), tuple);
            let b = braid_move(&tuple, p, Direction::Backward).unwrap();
            assert_eq!(braid_move(&b, p, Direction::Forward).unwrap(), tuple);
        }
        assert!(matches!(
            braid_move(&tuple, 3, Direction::Forward),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn forward_move_matches_the_formula() {
        let tuple = t("(1,2)(3,5) (1,3)(2,6)");
        let (a, b) = (tuple.perms()[0], tuple.perms()[1]);
        let moved = braid_move(&tuple, 0, Direction::Forward).unwrap().perms();
        assert_eq!(moved, vec![b, b.inverse().then(&a).then(&b)]);
        let moved = braid_move(&tuple, 0, Direction::Backward).unwrap().perms();
        assert_eq!(moved, vec![a.then(&b).then(&a.inverse()), a]);
    }

    #[test]
    fn commuting_neighbours_swap() {
        let tuple = t("(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)");
        let moved = braid_move(&tuple, 0, Direction::Forward).unwrap();
        assert_eq!(moved.entries()[0], tuple.entries()[1]);
        assert_eq!(moved.entries()[1], tuple.entries()[0]);
    }

    #[test]
    fn product_is_preserved_by_moves() {
        let tuple = t("(1,2)(3,5) (1,3)(2,6) (1,4)(5,6) (2,5)(3,4) (3,6)(4,5)");
        for p in 0..4 {
            for d in [Direction::Forward, Direction::Backward] {
                assert_eq!(braid_move(&tuple, p, d).unwrap().product(), tuple.product());
            }
        }
    }

    #[test]
    fn is_nielsen_examples() {
        use crate::perm::close;
        let pair = t("(1,2)(3,4) (1,2)(3,4)");
        let c2 = close(&[Perm::parse("(1,2)(3,4)", 6).unwrap()]).unwrap();
        assert!(pair.is_product_one());
        assert!(is_nielsen(&pair, &c2));
        assert!(!is_nielsen(&pair, context().a6()));

        let case_31 = t("(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)");
        assert!(is_nielsen(&case_31, context().a6()));

        let case_2 = t("(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)");
        assert!(!is_nielsen(&case_2, context().a6()));
        let g24 = close(&case_2.perms()).unwrap();
        assert_eq!(g24.order(), 24);
        assert!(g24.is_transitive());
        assert!(is_nielsen(&case_2, &g24));
    }

    #[test]
    fn key_packing() {
        let tuple = t("(1,2)(3,5) (3,6)(4,5) (1,2)(3,4)");
        let key = tuple.raw_key().unwrap();
        assert_eq!(key.bytes(), vec![1, 44, 0]);
        assert_eq!(key.tuple(), tuple);
        let smaller = t("(1,2)(3,5) (3,6)(4,5) (1,2)(3,5)").raw_key().unwrap();
        assert!(key < smaller);
    }

    #[test]
    fn word_inversion() {
        let tuple = t("(1,2)(3,5) (1,3)(2,6) (1,4)(5,6) (2,5)(3,4)");
        let word = [BraidMove::forward(0), BraidMove::backward(2), BraidMove::forward(1)];
        let there = tuple.apply_word(&word).unwrap();
        assert_eq!(there.apply_word(&invert_word(&word)).unwrap(), tuple);
    }
}
