//! Reductions of tuples through pairs of entries with the same fixed points,
//! generator pruning, and the transport of braid equivalences back through
//! a reduction.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::a6val::{context, ClassElem};
use crate::error::{Error, Result};
use crate::nielsen::{
    block_conjugate_word, hurwitz_search, invert_word, move_in_place, pack, unpack, BraidMove, Direction, Directions,
    NielsenTuple, MAX_KEY_LEN,
};
use crate::perm::{close, Perm};

/// Default braid depth for reduction searches.
pub const DEFAULT_DEPTH: usize = 10;

/// The quadruple that admits no equal-fixed-point pair under braiding.
pub const EXCEPTIONAL_QUADRUPLE: [&str; 4] = ["(1,2)(3,4)", "(1,2)(3,5)", "(1,6)(3,4)", "(1,6)(4,5)"];

/// What the product of two class elements is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductLaw {
    InClass(Perm),
    Identity,
    Neither,
}

pub fn product_law(x: &Perm, y: &Perm) -> ProductLaw {
    let p = x.then(y);
    if p.is_identity() {
        ProductLaw::Identity
    } else if ClassElem::from_perm(&p).is_ok() {
        ProductLaw::InClass(p)
    } else {
        ProductLaw::Neither
    }
}

#[inline]
pub fn same_fixed_points(x: ClassElem, y: ClassElem) -> bool {
    x.perm().fixed_mask() == y.perm().fixed_mask()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    /// Two different entries with the same fixed points, replaced by their
    /// product.
    OneReduction,
    /// Two equal entries, deleted.
    TwoReduction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub kind: ReductionKind,
    /// Adjacent positions `(p, p + 1)` in the tuple after `braid_prefix`.
    pub positions: (usize, usize),
    pub braid_prefix: Vec<BraidMove>,
    pub result: NielsenTuple,
}

impl Reduction {
    pub fn is_one_reduction(&self) -> bool {
        self.kind == ReductionKind::OneReduction
    }
}

fn reduce_adjacent(t: &NielsenTuple, p: usize) -> Result<(ReductionKind, NielsenTuple)> {
    let e = t.entries();
    if p + 1 >= e.len() {
        return Err(Error::InvalidReduction(format!(
            "position {p} has no right neighbour in {t}"
        )));
    }
    let (x, y) = (e[p], e[p + 1]);
    if !same_fixed_points(x, y) {
        return Err(Error::InvalidReduction(format!(
            "{x} and {y} do not have the same fixed points"
        )));
    }
    let mut out: Vec<ClassElem> = e[..p].to_vec();
    let kind = match product_law(&x.perm(), &y.perm()) {
        ProductLaw::Identity => ReductionKind::TwoReduction,
        ProductLaw::InClass(q) => {
            out.push(ClassElem::from_perm(&q)?);
            ReductionKind::OneReduction
        }
        ProductLaw::Neither => {
            return Err(Error::InvalidReduction(format!("{x} * {y} leaves the class")));
        }
    };
    out.extend_from_slice(&e[p + 2..]);
    Ok((kind, NielsenTuple::new(out)))
}

/// Moves entry `j` next to entry `i < j` with forward moves; both entries
/// keep their values.
fn adjacency_word(i: usize, j: usize) -> Vec<BraidMove> {
    ((i + 1)..j).rev().map(BraidMove::forward).collect()
}

/// Equal-fixed-point pairs `(i, j)` of a tuple, one-reductions first, each
/// group in lexicographic order.
fn candidate_pairs(entries: &[ClassElem]) -> Vec<(usize, usize, ReductionKind)> {
    let mut ones = Vec::new();
    let mut twos = Vec::new();
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            if same_fixed_points(entries[i], entries[j]) {
                if entries[i] == entries[j] {
                    twos.push((i, j, ReductionKind::TwoReduction));
                } else {
                    ones.push((i, j, ReductionKind::OneReduction));
                }
            }
        }
    }
    ones.extend(twos);
    ones
}

fn has_fixed_point_pair(t: &NielsenTuple) -> bool {
    !candidate_pairs(t.entries()).is_empty()
}

fn reduction_at(
    t: &NielsenTuple,
    search_word: Vec<BraidMove>,
    moved: &NielsenTuple,
    i: usize,
    j: usize,
) -> Result<Reduction> {
    let mut prefix = search_word;
    prefix.extend(adjacency_word(i, j));
    let adjacent = t.apply_word(&prefix)?;
    debug_assert_eq!(adjacent.entries()[i + 1], moved.entries()[j]);
    let (kind, result) = reduce_adjacent(&adjacent, i)?;
    Ok(Reduction {
        kind,
        positions: (i, i + 1),
        braid_prefix: prefix,
        result,
    })
}

/// Searches the braid orbit of `t` breadth first, up to `depth` moves, for a
/// tuple containing two entries with the same fixed points. At the first
/// such tuple a one-reduction is preferred over a two-reduction.
pub fn find_reduction(t: &NielsenTuple, depth: usize) -> Option<Reduction> {
    find_reduction_where(t, depth, Directions::Both, |_| true)
}

/// As [`find_reduction`], keeping only reductions that satisfy `accept`.
/// The predicate sees the reduction from the searched tuple itself, so it
/// should not depend on `braid_prefix`.
pub fn find_reduction_where(
    t: &NielsenTuple,
    depth: usize,
    dirs: Directions,
    mut accept: impl FnMut(&Reduction) -> bool,
) -> Option<Reduction> {
    let mut first = |moved: &NielsenTuple| {
        candidate_pairs(moved.entries())
            .into_iter()
            .find(|&(i, j, _)| reduction_at(moved, Vec::new(), moved, i, j).is_ok_and(|r| accept(&r)))
    };
    let mut chosen = None;
    let hit = hurwitz_search(t, depth, dirs, |moved| {
        chosen = first(moved);
        chosen.is_some()
    })?;
    let (i, j, _) = chosen?;
    reduction_at(t, hit.word, &hit.tuple, i, j).ok()
}

/// Recomputes the reduction from `t` and checks it against `r`.
pub fn apply_reduction(t: &NielsenTuple, r: &Reduction) -> Result<NielsenTuple> {
    let (p, q) = r.positions;
    if q != p + 1 {
        return Err(Error::InvalidReduction(format!("positions {p}, {q} are not adjacent")));
    }
    let moved = t.apply_word(&r.braid_prefix)?;
    let (kind, result) = reduce_adjacent(&moved, p)?;
    if kind != r.kind || result != r.result {
        return Err(Error::InvalidReduction(format!(
            "reduction of {t} does not give {}",
            r.result
        )));
    }
    Ok(result)
}

/// Turns a two-reduction into a one-reduction of the same tuple.
///
/// The equal pair is moved to the front unchanged. The remaining block then
/// has product one, so conjugating it by any element `γ` of the group it
/// generates is a braid. A `γ` and block entry `g` are chosen so that the
/// pair's entry and `γ g γ⁻¹` are distinct with equal fixed points; that
/// entry is then brought next to the pair.
/// Returns `None` when no block conjugate works.
pub fn force_one_reduction(t: &NielsenTuple, r: &Reduction) -> Result<Option<Reduction>> {
    if r.is_one_reduction() {
        return Ok(Some(r.clone()));
    }
    apply_reduction(t, r)?;
    let (p, _) = r.positions;
    let mut word = r.braid_prefix.clone();
    for q in (0..p).rev() {
        word.push(BraidMove::forward(q));
        word.push(BraidMove::forward(q + 1));
    }
    let front = t.apply_word(&word)?;
    let k = front.len();
    if k < 3 {
        return Ok(None);
    }
    let x = front.entries()[0];
    let block: Vec<Perm> = front.entries()[2..].iter().map(|c| c.perm()).collect();
    let group = close(&block)?;
    for m in 2..k {
        let g = front.entries()[m].perm();
        for gamma in group.elements() {
            let image = ClassElem::from_perm(&g.conjugate_by(&gamma.inverse()))?;
            if image == x || !same_fixed_points(image, x) {
                continue;
            }
            let mut full = word.clone();
            full.extend(block_conjugate_word(&front, 2, k - 1, gamma)?);
            full.extend(adjacency_word(1, m));
            let moved = t.apply_word(&full)?;
            let (kind, result) = reduce_adjacent(&moved, 1)?;
            debug_assert_eq!(kind, ReductionKind::OneReduction);
            return Ok(Some(Reduction {
                kind,
                positions: (1, 2),
                braid_prefix: full,
                result,
            }));
        }
    }
    Ok(None)
}

/// A generating subsequence, possibly after braiding the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pruned {
    /// Moves applied to the input sequence before selecting.
    pub braid: Vec<BraidMove>,
    /// Indices into the braided sequence.
    pub indices: Vec<usize>,
    pub elements: Vec<Perm>,
}

fn generates_a6(entries: &[ClassElem]) -> bool {
    let subs = context().subgroups();
    subs.generated(entries) == subs.a6()
}

fn generating_subset(entries: &[ClassElem], size: usize) -> Option<Vec<usize>> {
    fn rec(entries: &[ClassElem], size: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == size {
            let picked: Vec<ClassElem> = chosen.iter().map(|&i| entries[i]).collect();
            return generates_a6(&picked);
        }
        for i in start..entries.len() {
            chosen.push(i);
            if rec(entries, size, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    rec(entries, size, 0, &mut chosen).then_some(chosen)
}

/// Picks `target` entries of `s` that still generate A6. For `target = 3`
/// a braid search of depth 2 on a generating 4-subset is used when no
/// 3-subset works.
pub fn prune_generators(s: &[Perm], target: usize) -> Result<Option<Pruned>> {
    prune_generators_with(s, target, 2)
}

pub fn prune_generators_with(s: &[Perm], target: usize, depth: usize) -> Result<Option<Pruned>> {
    let seq = NielsenTuple::from_perms(s)?;
    if !generates_a6(seq.entries()) {
        return Err(Error::Precondition("the sequence does not generate A6".into()));
    }
    if !(3..=5).contains(&target) {
        return Err(Error::Precondition(format!("target {target} outside 3..=5")));
    }
    let pick = |braid: Vec<BraidMove>, t: &NielsenTuple, indices: Vec<usize>| Pruned {
        braid,
        elements: indices.iter().map(|&i| t.entries()[i].perm()).collect(),
        indices,
    };
    if seq.len() <= target {
        return Ok(Some(pick(Vec::new(), &seq, (0..seq.len()).collect())));
    }
    if let Some(ix) = generating_subset(seq.entries(), target) {
        return Ok(Some(pick(Vec::new(), &seq, ix)));
    }
    if target > 3 {
        return Ok(None);
    }
    let Some(four) = generating_subset(seq.entries(), 4) else {
        return Ok(None);
    };
    let quad = NielsenTuple::new(four.iter().map(|&i| seq.entries()[i]).collect());
    let hit = hurwitz_search(&quad, depth, Directions::BackwardOnly, |q| {
        generating_subset(q.entries(), 3).is_some()
    });
    Ok(hit.map(|h| {
        let ix = generating_subset(h.tuple.entries(), 3).expect("predicate held");
        let braid = h.word.clone();
        let mut out = pick(braid, &h.tuple, ix);
        // indices refer to the selected quadruple
        out.indices = out.indices.iter().map(|&i| four[i]).collect();
        out
    }))
}

/// Least S6-conjugate of the entries taken as a set.
pub fn set_canonical_abs(entries: &[ClassElem]) -> Vec<ClassElem> {
    let ctx = context();
    let mut best: Option<Vec<ClassElem>> = None;
    for s in 0..ctx.s6().order() {
        let mut image: Vec<ClassElem> = entries.iter().map(|&x| ctx.conj(s, x)).collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    best.unwrap_or_default()
}

pub fn exceptional_quadruple() -> NielsenTuple {
    NielsenTuple::parse(&EXCEPTIONAL_QUADRUPLE.join(" ")).expect("pinned quadruple")
}

/// Whether the entries, as a set, are an S6-conjugate of the exceptional
/// quadruple.
pub fn is_exceptional(entries: &[ClassElem]) -> bool {
    entries.len() == 4 && set_canonical_abs(entries) == set_canonical_abs(exceptional_quadruple().entries())
}

/// Lifts a word on positions of the reduced tuple to the full tuple, with the
/// product-one pair replaced by a block of two adjacent strands that starts
/// at `mark`. Returns the lifted word and where the block ends.
fn lift_word(w: &[BraidMove], mut mark: usize) -> (Vec<BraidMove>, usize) {
    let mut out = Vec::with_capacity(2 * w.len());
    for mv in w {
        let q = mv.position;
        let dir = mv.direction;
        if q + 1 < mark {
            out.push(*mv);
        } else if q > mark {
            out.push(BraidMove {
                position: q + 1,
                direction: dir,
            });
        } else if q == mark {
            // block on the left, neighbour at mark + 2
            out.push(BraidMove {
                position: mark + 1,
                direction: dir,
            });
            out.push(BraidMove {
                position: mark,
                direction: dir,
            });
            mark += 1;
        } else {
            // block on the right, neighbour at mark - 1
            match dir {
                Direction::Forward => {
                    out.push(BraidMove::forward(mark - 1));
                    out.push(BraidMove::forward(mark));
                }
                Direction::Backward => {
                    out.push(BraidMove::backward(mark - 1));
                    out.push(BraidMove::backward(mark));
                }
            }
            mark -= 1;
        }
    }
    (out, mark)
}

/// Where the strand starting at `mark` ends after `w`.
pub fn track_strand(w: &[BraidMove], mut mark: usize) -> usize {
    for mv in w {
        if mv.position == mark {
            mark += 1;
        } else if mv.position + 1 == mark {
            mark -= 1;
        }
    }
    mark
}

/// A braid word from `u1` to `u2` that carries strand `p1` to strand `p2`,
/// found by breadth-first search over (tuple, marked strand) pairs.
pub fn marked_braid_word(
    u1: &NielsenTuple,
    p1: usize,
    u2: &NielsenTuple,
    p2: usize,
    max_states: usize,
) -> Result<Option<Vec<BraidMove>>> {
    let len = u1.len();
    if len != u2.len() || p1 >= len || p2 >= len {
        return Err(Error::Precondition(
            "marked strands must index tuples of equal length".into(),
        ));
    }
    if len > 7 {
        return Err(Error::Precondition(
            "marked search supports tuples up to length 7".into(),
        ));
    }
    // mark in the top byte, entries below
    let encode = |entries: &[ClassElem], mark: usize| pack(entries) | (mark as u64) << 56;
    let start = encode(u1.entries(), p1);
    let goal = encode(u2.entries(), p2);
    let mut parent: FxHashMap<u64, (u64, BraidMove)> = FxHashMap::default();
    let mut queue = VecDeque::from([start]);
    let mut seen = rustc_hash::FxHashSet::default();
    seen.insert(start);
    let mut buf = [ClassElem(0); MAX_KEY_LEN];
    while let Some(state) = queue.pop_front() {
        if state == goal {
            let mut word = Vec::new();
            let mut cur = state;
            while let Some(&(prev, mv)) = parent.get(&cur) {
                word.push(mv);
                cur = prev;
            }
            word.reverse();
            return Ok(Some(word));
        }
        let mark = (state >> 56) as usize;
        unpack(state & ((1 << 56) - 1), len, &mut buf);
        for p in 0..len - 1 {
            for dir in [Direction::Forward, Direction::Backward] {
                let mv = BraidMove {
                    position: p,
                    direction: dir,
                };
                let mut moved = buf;
                move_in_place(&mut moved[..len], p, dir);
                let next = encode(&moved[..len], track_strand(&[mv], mark));
                if seen.insert(next) {
                    if seen.len() > max_states {
                        return Err(Error::Budget(format!(
                            "marked braid search exceeded {max_states} states"
                        )));
                    }
                    parent.insert(next, (state, mv));
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(None)
}

/// A braid word from `t1` to `t2`, given one-reductions of both and a word
/// `w` taking the first reduced tuple to the second.
///
/// `w` is replayed with the reduced pair carried as a block of two strands.
/// When it ends, the block sits where the second reduction's pair sits and
/// has the same product; the block's two entries agree with that pair up to
/// one swap, since both lie in the Klein group of elements with those fixed
/// points. `w` must therefore carry the reduced strand of the first tuple to
/// that of the second (see [`marked_braid_word`]).
pub fn lift_braid_equivalence(
    t1: &NielsenTuple,
    t2: &NielsenTuple,
    r1: &Reduction,
    r2: &Reduction,
    w: &[BraidMove],
) -> Result<Vec<BraidMove>> {
    if !r1.is_one_reduction() || !r2.is_one_reduction() {
        return Err(Error::Precondition("both reductions must be one-reductions".into()));
    }
    let u1 = apply_reduction(t1, r1)?;
    let u2 = apply_reduction(t2, r2)?;
    if u1.apply_word(w)? != u2 {
        return Err(Error::Precondition(
            "the word does not map the first reduced tuple to the second".into(),
        ));
    }
    let (p1, p2) = (r1.positions.0, r2.positions.0);
    let (lifted, end) = lift_word(w, p1);
    if end != p2 {
        return Err(Error::Precondition(format!(
            "the word carries the reduced strand {p1} to {end}, not {p2}"
        )));
    }
    let mut word = r1.braid_prefix.clone();
    word.extend(lifted);
    let reached = t1.apply_word(&word)?;
    let target = t2.apply_word(&r2.braid_prefix)?;
    if reached != target {
        let (a, b) = (reached.entries(), target.entries());
        if a[p2] == b[p2 + 1] && a[p2 + 1] == b[p2] {
            word.push(BraidMove::forward(p2));
        } else {
            return Err(Error::Verification(format!(
                "lifted word reaches {reached}, which differs from {target} outside one swap"
            )));
        }
    }
    word.extend(invert_word(&r2.braid_prefix));
    if t1.apply_word(&word)? != *t2 {
        return Err(Error::Verification(format!("lifted word does not map {t1} to {t2}")));
    }
    Ok(word)
}

/// Whether `t` has two entries with equal fixed points within `depth`
/// backward moves, as the reproduction searches count it.
pub(crate) fn reducible_within(t: &NielsenTuple, depth: usize) -> bool {
    hurwitz_search(t, depth, Directions::BackwardOnly, has_fixed_point_pair).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::lifting_invariant;

    fn t(s: &str) -> NielsenTuple {
        NielsenTuple::parse(s).unwrap()
    }

    fn p(s: &str) -> Perm {
        Perm::parse(s, 6).unwrap()
    }

    #[test]
    fn product_law_examples() {
        let x = p("(1,2)(3,4)");
        assert_eq!(product_law(&x, &x), ProductLaw::Identity);
        assert_eq!(product_law(&x, &p("(1,3)(2,4)")), ProductLaw::InClass(p("(1,4)(2,3)")));
        assert_eq!(product_law(&x, &p("(1,3)(2,5)")), ProductLaw::Neither);
    }

    #[test]
    fn product_law_is_never_neither_on_equal_fixed_points() {
        let mut pairs = 0;
        for x in ClassElem::all() {
            for y in ClassElem::all() {
                if same_fixed_points(x, y) {
                    pairs += 1;
                    assert_ne!(product_law(&x.perm(), &y.perm()), ProductLaw::Neither);
                }
            }
        }
        // each element shares its fixed points with itself and two others
        assert_eq!(pairs, 45 * 3);
    }

    #[test]
    fn repeated_entry_reduces_at_depth_zero() {
        let tuple = t("(1,3)(2,5) (1,4)(2,6) (1,3)(2,5)");
        let r = find_reduction(&tuple, 0).unwrap();
        assert_eq!(r.kind, ReductionKind::TwoReduction);
        assert_eq!(r.result.len(), 1);
        assert_eq!(apply_reduction(&tuple, &r).unwrap(), r.result);
    }

    #[test]
    fn one_reduction_example() {
        let tuple = t("(1,3)(2,4) (1,4)(2,3) (1,2)(3,5) (1,2)(3,5)");
        let r = find_reduction(&tuple, 0).unwrap();
        assert_eq!(r.kind, ReductionKind::OneReduction);
        assert_eq!(r.positions, (0, 1));
        assert_eq!(r.result, t("(1,2)(3,4) (1,2)(3,5) (1,2)(3,5)"));
    }

    #[test]
    fn reduction_preserves_gamma() {
        let tuple = t("(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)");
        let r = find_reduction(&tuple, DEFAULT_DEPTH).unwrap();
        assert_eq!(
            lifting_invariant(&r.result).unwrap(),
            lifting_invariant(&tuple).unwrap()
        );
    }

    #[test]
    fn tampered_reduction_is_rejected() {
        let tuple = t("(1,3)(2,4) (1,4)(2,3) (1,2)(3,5) (1,2)(3,5)");
        let mut r = find_reduction(&tuple, 0).unwrap();
        r.positions = (1, 2);
        assert!(matches!(apply_reduction(&tuple, &r), Err(Error::InvalidReduction(_))));
    }

    #[test]
    fn forcing_a_one_reduction() {
        let tuple = t("(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,3)(2,5) (1,3)(2,5) (1,6)(2,3) (1,6)(3,5)");
        let r = find_reduction_where(&tuple, 0, Directions::Both, |r| !r.is_one_reduction()).unwrap();
        assert_eq!(r.positions, (3, 4));
        let forced = force_one_reduction(&tuple, &r).unwrap().unwrap();
        assert!(forced.is_one_reduction());
        assert_eq!(apply_reduction(&tuple, &forced).unwrap(), forced.result);
        assert_eq!(
            lifting_invariant(&forced.result).unwrap(),
            lifting_invariant(&tuple).unwrap()
        );
    }

    #[test]
    fn pruning_the_example_quadruple_needs_braids() {
        let s: Vec<Perm> = ["(1,2)(3,4)", "(1,2)(3,5)", "(1,2)(4,6)", "(1,3)(2,4)"].map(p).to_vec();
        let seq = NielsenTuple::from_perms(&s).unwrap();
        assert!(generating_subset(seq.entries(), 3).is_none());
        let pruned = prune_generators(&s, 3).unwrap().unwrap();
        assert!(!pruned.braid.is_empty());
        assert_eq!(close(&pruned.elements).unwrap().order(), 360);
        assert_eq!(prune_generators(&s, 4).unwrap().unwrap().indices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn pruning_a_generating_triple_is_identity() {
        let s: Vec<Perm> = ["(1,2)(3,4)", "(1,3)(2,5)", "(1,4)(5,6)"].map(p).to_vec();
        assert_eq!(close(&s).unwrap().order(), 360);
        let pruned = prune_generators(&s, 3).unwrap().unwrap();
        assert_eq!(pruned.elements, s);
        assert!(prune_generators(&s[..2], 3).is_err());
    }

    #[test]
    fn exceptional_quadruple_is_recognised() {
        let q = exceptional_quadruple();
        assert!(is_exceptional(q.entries()));
        let swap = Perm::parse("(2,5)", 6).unwrap();
        assert!(is_exceptional(q.conjugate_by(&swap).unwrap().entries()));
        assert!(!reducible_within(&q, 10));
        assert!(!is_exceptional(
            t("(1,2)(3,4) (1,2)(3,4) (1,6)(3,4) (1,6)(4,5)").entries()
        ));
    }

    #[test]
    fn strand_tracking_matches_lifted_block() {
        let w = [
            BraidMove::forward(1),
            BraidMove::backward(0),
            BraidMove::forward(2),
            BraidMove::backward(2),
        ];
        for mark in 0..4 {
            assert_eq!(lift_word(&w, mark).1, track_strand(&w, mark));
        }
    }

    #[test]
    fn lifting_a_swap_of_commuting_neighbours() {
        // common reduced tuple with (1,2)(3,4) at the front
        let base = "(1,2)(3,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5) (1,3)(2,4)";
        let reduced = t(base);
        assert!(reduced.is_product_one());
        let t1 = t(&format!("(1,3)(2,4) (1,4)(2,3) {}", &base[11..]));
        let t2 = t(&format!("(1,4)(2,3) (1,3)(2,4) {}", &base[11..]));
        let r1 = find_reduction(&t1, 0).unwrap();
        let r2 = find_reduction(&t2, 0).unwrap();
        assert_eq!(r1.result, reduced);
        assert_eq!(r2.result, reduced);
        let word = lift_braid_equivalence(&t1, &t2, &r1, &r2, &[]).unwrap();
        assert_eq!(t1.apply_word(&word).unwrap(), t2);
        assert_eq!(lift_braid_equivalence(&t1, &t1, &r1, &r1, &[]).unwrap(), Vec::new());
    }

    #[test]
    fn lifting_a_word_through_the_reduction() {
        let t1 = t("(1,3)(2,4) (1,4)(2,3) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5) (1,3)(2,4)");
        let r1 = find_reduction(&t1, 0).unwrap();
        let u1 = r1.result.clone();
        let w = [
            BraidMove::forward(0),
            BraidMove::backward(2),
            BraidMove::forward(3),
            BraidMove::forward(0),
        ];
        let u2 = u1.apply_word(&w).unwrap();
        let end = track_strand(&w, r1.positions.0);
        // build t2 by splitting the marked entry of u2 back into a pair
        let x = u2.entries()[end].perm();
        let (a, b) = ClassElem::all()
            .filter(|c| same_fixed_points(*c, u2.entries()[end]) && c.perm() != x)
            .map(|c| (c.perm(), c.perm().then(&x)))
            .next()
            .unwrap();
        let mut perms = u2.perms();
        perms.splice(end..=end, [a, b]);
        let t2 = NielsenTuple::from_perms(&perms).unwrap();
        let r2 = find_reduction_where(&t2, 0, Directions::Both, |r| {
            r.positions.0 == end && r.is_one_reduction()
        })
        .unwrap();
        assert_eq!(r2.result, u2);
        let word = lift_braid_equivalence(&t1, &t2, &r1, &r2, &w).unwrap();
        assert_eq!(t1.apply_word(&word).unwrap(), t2);

        let found = marked_braid_word(&u1, r1.positions.0, &u2, end, 1_000_000)
            .unwrap()
            .unwrap();
        assert!(found.len() <= w.len());
        assert!(lift_braid_equivalence(&t1, &t2, &r1, &r2, &found).is_ok());
    }
}
