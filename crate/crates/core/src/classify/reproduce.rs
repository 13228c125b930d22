//! The case-by-case computer checks behind the reduction lemmas, re-run
//! loop for loop with this crate's primitives. Braid searches use only the
//! backward move and count depth in breadth-first levels.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::a6val::{context, ClassElem, CLASS_SIZE};
use crate::error::{Error, Result};
use crate::nielsen::{hurwitz_search, Directions, NielsenTuple};
use crate::perm::Perm;
use crate::reduce::{is_exceptional, reducible_within, same_fixed_points, DEFAULT_DEPTH};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ReproCode {
    B3,
    B4,
    B5,
    B6,
    B8,
    B9,
}

impl ReproCode {
    /// Braid search depth of the printed loop; B3 does not braid.
    pub fn default_depth(self) -> Option<usize> {
        match self {
            ReproCode::B3 => None,
            ReproCode::B4 => Some(2),
            ReproCode::B5 | ReproCode::B6 => Some(DEFAULT_DEPTH),
            ReproCode::B8 => Some(5),
            ReproCode::B9 => Some(1),
        }
    }

    pub const ALL: [ReproCode; 6] = [
        ReproCode::B3,
        ReproCode::B4,
        ReproCode::B5,
        ReproCode::B6,
        ReproCode::B8,
        ReproCode::B9,
    ];

    pub fn description(self) -> &'static str {
        match self {
            ReproCode::B3 => "generating 5-sets contain a generating 4-subset",
            ReproCode::B4 => "generating 4-sets contain a generating 3-subset after braiding",
            ReproCode::B5 => "4-tuples without a fixed-point pair are the exceptional quadruple",
            ReproCode::B6 => "5-tuples always braid to a fixed-point pair",
            ReproCode::B8 => "6-tuples with only 2-reductions braid to a 1-reduction",
            ReproCode::B9 => "6-tuples whose head reduction loses transitivity can be fixed",
        }
    }
}

impl fmt::Display for ReproCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ReproCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReproCode> {
        match s.to_ascii_lowercase().as_str() {
            "b3" => Ok(ReproCode::B3),
            "b4" => Ok(ReproCode::B4),
            "b5" => Ok(ReproCode::B5),
            "b6" => Ok(ReproCode::B6),
            "b8" => Ok(ReproCode::B8),
            "b9" => Ok(ReproCode::B9),
            _ => Err(Error::parse(s, "expected one of b3, b4, b5, b6, b8, b9")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproOutcome {
    pub code: ReproCode,
    /// Braid search depth used, if the check braids.
    pub depth: Option<usize>,
    pub passed: bool,
    /// Candidates the loop visited.
    pub candidates: u64,
    /// Candidates that passed the loop's preconditions and were searched.
    pub screened: u64,
    /// Non-reducible candidates; for B5, candidates printed.
    pub count: u64,
    pub expectation: String,
    /// Offending candidates, at most ten.
    pub witnesses: Vec<String>,
}

const MAX_WITNESSES: usize = 10;
const HEAD: ClassElem = ClassElem(0);

fn subs_generate_a6(entries: &[ClassElem]) -> bool {
    let subs = context().subgroups();
    subs.generated(entries) == subs.a6()
}

/// Some entry can be dropped with the rest still generating A6.
fn reduce_by_one(entries: &[ClassElem]) -> bool {
    (0..entries.len()).any(|r| {
        let rest: Vec<ClassElem> = entries
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, &c)| c)
            .collect();
        subs_generate_a6(&rest)
    })
}

fn is_one_reducible(t: &NielsenTuple) -> bool {
    let e = t.entries();
    (0..e.len()).any(|r| ((r + 1)..e.len()).any(|k| e[r] != e[k] && same_fixed_points(e[r], e[k])))
}

fn transitive_on_points(perms: &[Perm]) -> bool {
    let mut reached = 1u32;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for p in perms {
            let y = p.apply(x);
            if reached & (1 << y) == 0 {
                reached |= 1 << y;
                frontier.push(y);
            }
        }
    }
    reached == (1 << 6) - 1
}

/// The first two entries multiplied together, with the rest, still act
/// transitively.
fn head_product_transitive(t: &NielsenTuple) -> bool {
    let p = t.perms();
    let mut reduced = vec![p[0].then(&p[1])];
    reduced.extend_from_slice(&p[2..]);
    transitive_on_points(&reduced)
}

fn ascending(n: usize, from: usize, to: usize, strict: bool) -> Vec<Vec<ClassElem>> {
    fn rec(n: usize, start: usize, to: usize, strict: bool, cur: &mut Vec<ClassElem>, out: &mut Vec<Vec<ClassElem>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..to {
            cur.push(ClassElem(i as u8));
            rec(n, if strict { i + 1 } else { i }, to, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, from, to, strict, &mut Vec::with_capacity(n), &mut out);
    out
}

fn with_head(head: &[ClassElem], tail: &[ClassElem]) -> NielsenTuple {
    NielsenTuple::new(head.iter().chain(tail).copied().collect())
}

fn outcome(
    code: ReproCode,
    (candidates, screened): (u64, u64),
    mut bad: Vec<NielsenTuple>,
    passed: bool,
    expectation: &str,
) -> ReproOutcome {
    bad.sort();
    ReproOutcome {
        code,
        depth: code.default_depth(),
        passed,
        candidates,
        screened,
        count: bad.len() as u64,
        expectation: expectation.to_string(),
        witnesses: bad.iter().take(MAX_WITNESSES).map(|t| t.to_string()).collect(),
    }
}

fn zero_expected(code: ReproCode, counts: (u64, u64), bad: Vec<NielsenTuple>) -> ReproOutcome {
    let passed = bad.is_empty();
    outcome(code, counts, bad, passed, "Number of non reducible elements: 0")
}

fn headed(n: usize, from: usize, strict: bool, head: &[ClassElem]) -> Vec<NielsenTuple> {
    ascending(n, from, CLASS_SIZE, strict)
        .iter()
        .map(|tail| with_head(head, tail))
        .collect()
}

/// Screens `candidates` by the loop's preconditions and keeps those whose
/// search fails, returning (visited, screened) counts.
fn run(
    candidates: Vec<NielsenTuple>,
    screen: impl Fn(&NielsenTuple) -> bool + Sync,
    search: impl Fn(&NielsenTuple) -> bool + Sync,
) -> ((u64, u64), Vec<NielsenTuple>) {
    let total = candidates.len() as u64;
    let screened: Vec<NielsenTuple> = candidates.into_par_iter().filter(|c| screen(c)).collect();
    let n = screened.len() as u64;
    let bad = screened.into_par_iter().filter(|c| !search(c)).collect();
    ((total, n), bad)
}

fn b3() -> ReproOutcome {
    let (counts, bad) = run(
        headed(4, 1, true, &[HEAD]),
        |c| subs_generate_a6(c.entries()),
        |c| reduce_by_one(c.entries()),
    );
    zero_expected(ReproCode::B3, counts, bad)
}

fn b4(depth: usize) -> ReproOutcome {
    let (counts, bad) = run(
        headed(3, 1, true, &[HEAD]),
        |c| subs_generate_a6(c.entries()) && !reduce_by_one(c.entries()),
        |c| hurwitz_search(c, depth, Directions::BackwardOnly, |t| reduce_by_one(t.entries())).is_some(),
    );
    zero_expected(ReproCode::B4, counts, bad)
}

fn b5(depth: usize) -> ReproOutcome {
    let (counts, printed) = run(headed(3, 1, true, &[HEAD]), |_| true, |c| reducible_within(c, depth));
    let strays: Vec<NielsenTuple> = printed
        .iter()
        .filter(|c| !is_exceptional(c.entries()))
        .cloned()
        .collect();
    let passed = !printed.is_empty() && strays.is_empty();
    let mut out = outcome(
        ReproCode::B5,
        counts,
        printed,
        passed,
        "every printed set is S6-conjugate to (1,2)(3,4), (1,2)(3,5), (1,6)(3,4), (1,6)(4,5)",
    );
    if !strays.is_empty() {
        out.witnesses = strays.iter().take(MAX_WITNESSES).map(|t| t.to_string()).collect();
    }
    out
}

fn b6(depth: usize) -> ReproOutcome {
    let (counts, bad) = run(headed(4, 1, true, &[HEAD]), |_| true, |c| reducible_within(c, depth));
    zero_expected(ReproCode::B6, counts, bad)
}

fn b8(depth: usize) -> ReproOutcome {
    let mut candidates: Vec<NielsenTuple> = Vec::new();
    for i in 1..30u8 {
        for j in i..CLASS_SIZE as u8 {
            let (x, y) = (ClassElem(i), ClassElem(j));
            candidates.push(NielsenTuple::new(vec![HEAD, HEAD, x, x, y, y]));
        }
    }
    let quad = crate::reduce::exceptional_quadruple();
    for x in ClassElem::all() {
        candidates.push(with_head(quad.entries(), &[x, x]));
    }
    let (counts, bad) = run(
        candidates,
        |c| subs_generate_a6(c.entries()),
        |c| hurwitz_search(c, depth, Directions::BackwardOnly, is_one_reducible).is_some(),
    );
    zero_expected(ReproCode::B8, counts, bad)
}

fn b9(depth: usize) -> ReproOutcome {
    let second = ClassElem::from_perm(&Perm::parse("(1,3)(2,4)", 6).expect("literal")).expect("in class");
    let head_product = HEAD.perm().then(&second.perm());
    let (counts, bad) = run(
        headed(4, 0, false, &[HEAD, second]),
        |c| {
            let mut reduced = vec![head_product];
            reduced.extend(c.entries()[2..].iter().map(|e| e.perm()));
            c.is_product_one() && subs_generate_a6(c.entries()) && !transitive_on_points(&reduced)
        },
        |c| hurwitz_search(c, depth, Directions::BackwardOnly, head_product_transitive).is_some(),
    );
    zero_expected(ReproCode::B9, counts, bad)
}

pub fn reproduce(code: ReproCode) -> ReproOutcome {
    reproduce_at(code, None)
}

/// As [`reproduce`], overriding the braid search depth when `depth` is set.
pub fn reproduce_at(code: ReproCode, depth: Option<usize>) -> ReproOutcome {
    let d = depth.or(code.default_depth()).unwrap_or(0);
    let mut out = match code {
        ReproCode::B3 => b3(),
        ReproCode::B4 => b4(d),
        ReproCode::B5 => b5(d),
        ReproCode::B6 => b6(d),
        ReproCode::B8 => b8(d),
        ReproCode::B9 => b9(d),
    };
    out.depth = code.default_depth().map(|_| d);
    out
}

/// Runs the selected checks in order; an empty selection passes trivially.
pub fn reproduce_all(codes: &[ReproCode]) -> Vec<ReproOutcome> {
    codes.iter().map(|&c| reproduce(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> NielsenTuple {
        NielsenTuple::parse(s).unwrap()
    }

    #[test]
    fn loop_bounds() {
        assert_eq!(ascending(4, 1, 45, true).len(), 135_751);
        assert_eq!(ascending(3, 1, 45, true).len(), 13_244);
        assert_eq!(ascending(4, 0, 45, false).len(), 194_580);
    }

    #[test]
    fn predicates() {
        let quad = t("(1,2)(3,4) (1,2)(3,5) (1,2)(4,6) (1,3)(2,4)");
        assert!(subs_generate_a6(quad.entries()));
        assert!(!reduce_by_one(quad.entries()));
        assert!(is_one_reducible(&t("(1,2)(3,4) (1,5)(2,6) (1,3)(2,4)")));
        assert!(!is_one_reducible(&t("(1,2)(3,4) (1,5)(2,6) (1,2)(3,4)")));
        let id = Perm::identity(6).unwrap();
        assert!(!transitive_on_points(&[id]));
        assert!(transitive_on_points(&[Perm::parse("(1,2,3,4,5,6)", 6).unwrap()]));
    }

    #[test]
    fn empty_selection_passes() {
        assert!(reproduce_all(&[]).is_empty());
    }

    #[test]
    fn parse_codes() {
        assert_eq!("B6".parse::<ReproCode>().unwrap(), ReproCode::B6);
        assert!("b7".parse::<ReproCode>().is_err());
    }

    #[test]
    fn shallow_search_finds_more_exceptions() {
        let out = reproduce_at(ReproCode::B6, Some(0));
        assert_eq!(out.depth, Some(0));
        assert!(!out.passed && out.count > 0);
    }

    #[test]
    fn b3_passes() {
        let out = reproduce(ReproCode::B3);
        assert!(out.passed, "{out:?}");
        assert_eq!(out.count, 0);
    }
}
