use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::{move_in_place, BraidMove, Direction, NielsenTuple};
use crate::a6val::ClassElem;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Which braid generators a search may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Directions {
    #[default]
    Both,
    /// Only the move `(a, b) ↦ (a b a⁻¹, a)`, as in Magma's `HurwitzAction`.
    BackwardOnly,
}

impl Directions {
    fn moves(self) -> &'static [Direction] {
        match self {
            Directions::Both => &[Direction::Forward, Direction::Backward],
            Directions::BackwardOnly => &[Direction::Backward],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    /// Moves taking the start tuple to `tuple`.
    pub word: Vec<BraidMove>,
    pub tuple: NielsenTuple,
}

/// Breadth-first search from `start` through braid words of length at most
/// `depth`, returning a shortest word reaching a tuple that satisfies `pred`.
pub fn hurwitz_search(
    start: &NielsenTuple,
    depth: usize,
    dirs: Directions,
    mut pred: impl FnMut(&NielsenTuple) -> bool,
) -> Option<SearchHit> {
    if pred(start) {
        return Some(SearchHit {
            word: Vec::new(),
            tuple: start.clone(),
        });
    }
    let len = start.len();
    // node index -> (parent index, move from parent)
    let mut nodes: Vec<(Vec<ClassElem>, usize, Option<BraidMove>)> = vec![(start.entries().to_vec(), 0, None)];
    let mut seen: FxHashMap<Vec<ClassElem>, ()> = FxHashMap::default();
    seen.insert(start.entries().to_vec(), ());
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((node, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for p in 0..len.saturating_sub(1) {
            for &dir in dirs.moves() {
                let mut next = nodes[node].0.clone();
                move_in_place(&mut next, p, dir);
                if seen.insert(next.clone(), ()).is_some() {
                    continue;
                }
                let mv = BraidMove {
                    position: p,
                    direction: dir,
                };
                nodes.push((next, node, Some(mv)));
                let id = nodes.len() - 1;
                let tuple = NielsenTuple::new(nodes[id].0.clone());
                if pred(&tuple) {
                    let mut word = Vec::new();
                    let mut cur = id;
                    while let Some(m) = nodes[cur].2 {
                        word.push(m);
                        cur = nodes[cur].1;
                    }
                    word.reverse();
                    return Some(SearchHit { word, tuple });
                }
                queue.push_back((id, d + 1));
            }
        }
    }
    None
}

fn check_block(t: &NielsenTuple, i: usize, j: usize) -> Result<()> {
    if i > j || j >= t.len() {
        return Err(Error::IndexOutOfRange { index: j, len: t.len() });
    }
    let block = NielsenTuple::new(t.entries()[i..=j].to_vec());
    if !block.product().is_identity() {
        return Err(Error::Precondition(format!(
            "block {i}..={j} of {t} does not have product one"
        )));
    }
    Ok(())
}

/// Replaces entries `i..=j` by `γ g γ⁻¹`.
///
/// The block must have product one and `gamma` must lie in the group it
/// generates; under those conditions the result is braid equivalent to `t`
/// (see [`block_conjugate_word`]).
pub fn block_conjugate(t: &NielsenTuple, i: usize, j: usize, gamma: &Perm) -> Result<NielsenTuple> {
    check_block(t, i, j)?;
    let inv = gamma.inverse();
    let mut entries = t.entries().to_vec();
    for e in &mut entries[i..=j] {
        *e = ClassElem::from_perm(&e.perm().conjugate_by(&inv))?;
    }
    Ok(NielsenTuple::new(entries))
}

/// Writes `gamma` as a shortest left-to-right product of block entries.
fn word_in_block(block: &[Perm], gamma: &Perm) -> Option<Vec<usize>> {
    let id = Perm::identity(6).expect("degree 6");
    let mut parent: FxHashMap<Perm, (Perm, usize)> = FxHashMap::default();
    let mut queue = VecDeque::from([id]);
    parent.insert(id, (id, usize::MAX));
    while let Some(h) = queue.pop_front() {
        if h == *gamma {
            let mut word = Vec::new();
            let mut cur = h;
            while let Some(&(prev, m)) = parent.get(&cur) {
                if m == usize::MAX {
                    break;
                }
                word.push(m);
                cur = prev;
            }
            word.reverse();
            return Some(word);
        }
        for (m, x) in block.iter().enumerate() {
            let next = h.then(x);
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert((h, m));
                queue.push_back(next);
            }
        }
    }
    None
}

/// A braid word on positions `i..j` carrying `t` to
/// [`block_conjugate`]`(t, i, j, gamma)`.
///
/// With block entries `x₀ … x_{n-1}` of product one, the forward chain
/// `+i … +(j-1)` rotates the block to `x₁ … x_{n-1} x₀`, and the backward
/// chain `-i … -(j-1)` sends it to `x₀ x₁ x₀⁻¹ … x₀ x_{n-1} x₀⁻¹, x₀`.
/// Rotating `m` times and then applying the backward chain and the remaining
/// rotations conjugates the block by `x_m`; these compose along a word for
/// `gamma` in the block entries.
pub fn block_conjugate_word(t: &NielsenTuple, i: usize, j: usize, gamma: &Perm) -> Result<Vec<BraidMove>> {
    check_block(t, i, j)?;
    let block: Vec<Perm> = t.entries()[i..=j].iter().map(|c| c.perm()).collect();
    let letters = word_in_block(&block, gamma)
        .ok_or_else(|| Error::Precondition(format!("{gamma} is not in the group generated by the block")))?;
    let n = j - i + 1;
    let rotate: Vec<BraidMove> = (i..j).map(BraidMove::forward).collect();
    let twist: Vec<BraidMove> = (i..j).map(BraidMove::backward).collect();
    let mut word = Vec::new();
    for m in letters {
        for _ in 0..m {
            word.extend_from_slice(&rotate);
        }
        word.extend_from_slice(&twist);
        for _ in 0..(n - m - 1) {
            word.extend_from_slice(&rotate);
        }
    }
    let expected = block_conjugate(t, i, j, gamma)?;
    if t.apply_word(&word)? != expected {
        return Err(Error::Verification(format!(
            "block conjugation word for {t} does not reach {expected}"
        )));
    }
    Ok(word)
}

/// Forward moves at the first descent until the tuple is non-decreasing.
///
/// Each move replaces `(a, b)` with `a > b` by `(b, b a b)`, which is
/// lexicographically smaller, so the loop terminates.
pub fn sort_to_ordered(t: &NielsenTuple) -> (NielsenTuple, Vec<BraidMove>) {
    let mut entries = t.entries().to_vec();
    let mut word = Vec::new();
    while let Some(p) = entries.windows(2).position(|w| w[0] > w[1]) {
        move_in_place(&mut entries, p, Direction::Forward);
        word.push(BraidMove::forward(p));
    }
    (NielsenTuple::new(entries), word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> NielsenTuple {
        NielsenTuple::parse(s).unwrap()
    }

    #[test]
    fn search_finds_shortest_word() {
        let start = t("(1,2)(3,5) (1,3)(2,6) (1,4)(5,6) (2,5)(3,4)");
        let target = start
            .apply_word(&[BraidMove::forward(0), BraidMove::backward(2)])
            .unwrap();
        let hit = hurwitz_search(&start, 3, Directions::Both, |x| *x == target).unwrap();
        assert_eq!(hit.word.len(), 2);
        assert_eq!(start.apply_word(&hit.word).unwrap(), target);
        assert!(hurwitz_search(&start, 0, Directions::Both, |x| *x == target).is_none());
    }

    #[test]
    fn backward_only_uses_backward_moves() {
        let start = t("(1,2)(3,5) (1,3)(2,6) (1,4)(5,6)");
        let target = start.apply_word(&[BraidMove::forward(1)]).unwrap();
        let hit = hurwitz_search(&start, 6, Directions::BackwardOnly, |x| *x == target).unwrap();
        assert!(hit.word.iter().all(|m| m.direction == Direction::Backward));
        assert_eq!(start.apply_word(&hit.word).unwrap(), target);
    }

    #[test]
    fn block_conjugation_is_realised_by_braids() {
        let tuple = t("(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)");
        let gamma = Perm::parse("(1,2)(3,4)", 6)
            .unwrap()
            .then(&Perm::parse("(1,3)(2,4)", 6).unwrap());
        let target = block_conjugate(&tuple, 0, 2, &gamma).unwrap();
        let word = block_conjugate_word(&tuple, 0, 2, &gamma).unwrap();
        assert!(word.iter().all(|m| m.position < 2));
        assert_eq!(tuple.apply_word(&word).unwrap(), target);

        let swapped = block_conjugate(&tuple, 3, 4, &Perm::parse("(1,5)(2,6)", 6).unwrap()).unwrap();
        assert_eq!(swapped, tuple);
    }

    #[test]
    fn block_conjugation_preconditions() {
        let tuple = t("(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)");
        let outside = Perm::parse("(1,5)(2,6)", 6).unwrap();
        assert!(block_conjugate_word(&tuple, 0, 2, &outside).is_err());
        assert!(block_conjugate(&tuple, 0, 1, &outside).is_err());
        assert!(block_conjugate(&tuple, 3, 5, &outside).is_err());
    }

    #[test]
    fn sorting_reaches_an_ordered_equivalent() {
        let tuple = t("(3,6)(4,5) (1,5)(2,6) (1,2)(3,4) (1,4)(2,3) (2,5)(3,4)");
        let (sorted, word) = sort_to_ordered(&tuple);
        assert!(sorted.is_ordered());
        assert_eq!(tuple.apply_word(&word).unwrap(), sorted);
        assert_eq!(sorted.product(), tuple.product());
    }
}
