use serde::Serialize;

use super::MAX_KEY_LEN;
use crate::a6val::{context, ClassElem, ClassSubgroups, SubgroupId, CLASS_SIZE};
use crate::error::{Error, Result};
use crate::perm::GroupTable;

/// Which generated subgroups a product-one tuple must have to be counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// Class membership and product one only.
    ProductOne,
    /// Generates exactly this subgroup.
    Group(SubgroupId),
    /// Generates some transitive subgroup.
    Transitive,
    /// Generates a transitive subgroup of this order.
    TransitiveOfOrder(usize),
}

impl Target {
    pub fn a6() -> Target {
        Target::Group(context().subgroups().a6())
    }

    pub fn from_table(g: &GroupTable) -> Result<Target> {
        context()
            .subgroups()
            .find(g)
            .map(Target::Group)
            .ok_or_else(|| Error::Precondition("group is not generated by double transpositions".into()))
    }

    #[inline]
    pub fn accepts(&self, subs: &ClassSubgroups, h: SubgroupId) -> bool {
        match *self {
            Target::ProductOne => true,
            Target::Group(g) => h == g,
            Target::Transitive => subs.is_transitive(h),
            Target::TransitiveOfOrder(n) => subs.is_transitive(h) && subs.order(h) == n,
        }
    }
}

fn check_len(k: usize) -> Result<()> {
    if k == 0 || k > MAX_KEY_LEN {
        Err(Error::Precondition(format!(
            "tuple length {k} outside 1..={MAX_KEY_LEN}"
        )))
    } else {
        Ok(())
    }
}

struct Walk<'a, F> {
    k: usize,
    target: Target,
    subs: &'a ClassSubgroups,
    buf: [ClassElem; MAX_KEY_LEN],
    visit: F,
    count: u64,
}

impl<F: FnMut(&[ClassElem])> Walk<'_, F> {
    fn descend(&mut self, depth: usize, product: u16, sub: SubgroupId) {
        let ctx = context();
        if depth + 1 == self.k {
            let closing = ctx.a6_inverse(product);
            if let Some(last) = ctx.a6_as_class(closing) {
                let h = self.subs.join(sub, last);
                if self.target.accepts(self.subs, h) {
                    self.buf[depth] = last;
                    (self.visit)(&self.buf[..self.k]);
                    self.count += 1;
                }
            }
            return;
        }
        for c in 0..CLASS_SIZE as u8 {
            let c = ClassElem(c);
            self.buf[depth] = c;
            self.descend(depth + 1, ctx.a6_mul_class(product, c), self.subs.join(sub, c));
        }
    }
}

/// Visits every tuple of length `k` with product one whose generated subgroup
/// satisfies `target`, in lexicographic order. The last entry is forced to
/// the inverse of the running product. Returns the number visited.
pub fn enumerate_nielsen(k: usize, target: &Target, visit: impl FnMut(&[ClassElem])) -> Result<u64> {
    enumerate_nielsen_from(&[], k, target, visit)
}

/// As [`enumerate_nielsen`], restricted to tuples starting with `prefix`.
pub fn enumerate_nielsen_from(
    prefix: &[ClassElem],
    k: usize,
    target: &Target,
    visit: impl FnMut(&[ClassElem]),
) -> Result<u64> {
    check_len(k)?;
    if prefix.len() >= k {
        return Err(Error::Precondition("prefix must be shorter than the tuple".into()));
    }
    let ctx = context();
    let subs = ctx.subgroups();
    let mut walk = Walk {
        k,
        target: *target,
        subs,
        buf: [ClassElem(0); MAX_KEY_LEN],
        visit,
        count: 0,
    };
    let mut product = ctx.a6_identity();
    let mut sub = ClassSubgroups::TRIVIAL;
    for (i, &c) in prefix.iter().enumerate() {
        walk.buf[i] = c;
        product = ctx.a6_mul_class(product, c);
        sub = subs.join(sub, c);
    }
    walk.descend(prefix.len(), product, sub);
    Ok(walk.count)
}

/// Number of tuples [`enumerate_nielsen`] would visit, by dynamic programming
/// over (generated subgroup, running product) without listing any tuple.
pub fn count_nielsen(k: usize, target: &Target) -> Result<u64> {
    check_len(k)?;
    let ctx = context();
    let subs = ctx.subgroups();
    let n = ctx.a6().order();
    let mut counts = vec![0u64; subs.len() * n];
    counts[ClassSubgroups::TRIVIAL.0 as usize * n + ctx.a6_identity() as usize] = 1;
    for _ in 0..k {
        let mut next = vec![0u64; subs.len() * n];
        for (state, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sub = SubgroupId((state / n) as u16);
            let product = (state % n) as u16;
            for x in ClassElem::all() {
                let h = subs.join(sub, x);
                let p = ctx.a6_mul_class(product, x);
                next[h.0 as usize * n + p as usize] += c;
            }
        }
        counts = next;
    }
    let id = ctx.a6_identity() as usize;
    Ok((0..subs.len())
        .filter(|&h| target.accepts(subs, SubgroupId(h as u16)))
        .map(|h| counts[h * n + id])
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Product-one count from the character table of A6 on the class of
    /// double transpositions: degrees 1, 5, 5, 8, 8, 9, 10 with values
    /// 1, 1, 1, 0, 0, 1, -2.
    fn frobenius_count(k: u32) -> u64 {
        let chars: [(f64, f64); 7] = [
            (1.0, 1.0),
            (5.0, 1.0),
            (5.0, 1.0),
            (8.0, 0.0),
            (8.0, 0.0),
            (9.0, 1.0),
            (10.0, -2.0),
        ];
        let sum: f64 = chars
            .iter()
            .map(|&(deg, val)| val.powi(k as i32) / deg.powi(k as i32 - 2))
            .sum();
        (45f64.powi(k as i32) / 360.0 * sum).round() as u64
    }

    #[test]
    fn pairs_are_repeated_entries() {
        let mut seen = Vec::new();
        let n = enumerate_nielsen(2, &Target::ProductOne, |t| seen.push((t[0], t[1]))).unwrap();
        assert_eq!(n, 45);
        assert!(seen.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn triples_match_brute_force() {
        let ctx = context();
        let mut brute = 0;
        for a in ClassElem::all() {
            for b in ClassElem::all() {
                let p = ctx.a6_mul_class(ctx.a6_mul_class(ctx.a6_identity(), a), b);
                if ctx.a6_as_class(ctx.a6_inverse(p)).is_some() {
                    brute += 1;
                }
            }
        }
        assert_eq!(brute, 180);
        assert_eq!(enumerate_nielsen(3, &Target::ProductOne, |_| {}).unwrap(), brute);
        assert_eq!(count_nielsen(3, &Target::ProductOne).unwrap(), brute);
    }

    #[test]
    fn dp_matches_character_formula() {
        for k in 2..=8u32 {
            assert_eq!(
                count_nielsen(k as usize, &Target::ProductOne).unwrap(),
                frobenius_count(k),
                "k={k}"
            );
        }
    }

    #[test]
    fn dp_matches_enumeration_at_five() {
        for target in [
            Target::ProductOne,
            Target::a6(),
            Target::Transitive,
            Target::TransitiveOfOrder(24),
        ] {
            let listed = enumerate_nielsen(5, &target, |_| {}).unwrap();
            assert_eq!(count_nielsen(5, &target).unwrap(), listed);
        }
        assert!(enumerate_nielsen(5, &Target::a6(), |_| {}).unwrap() > 0);
    }

    #[test]
    fn prefix_enumeration_partitions_the_full_one() {
        let full = enumerate_nielsen(5, &Target::a6(), |_| {}).unwrap();
        let by_first: u64 = ClassElem::all()
            .map(|c| enumerate_nielsen_from(&[c], 5, &Target::a6(), |_| {}).unwrap())
            .sum();
        assert_eq!(full, by_first);
        // conjugation by A6 permutes first entries transitively
        let first = enumerate_nielsen_from(&[ClassElem(0)], 5, &Target::a6(), |_| {}).unwrap();
        assert_eq!(full, 45 * first);
    }

    #[test]
    fn visited_tuples_are_product_one_and_generating() {
        let subs = context().subgroups();
        enumerate_nielsen_from(&[ClassElem(0), ClassElem(6)], 5, &Target::a6(), |t| {
            let tuple = crate::nielsen::NielsenTuple::new(t.to_vec());
            assert!(tuple.is_product_one());
            assert_eq!(subs.order(tuple.generated()), 360);
        })
        .unwrap();
    }

    #[test]
    fn length_limits() {
        assert!(enumerate_nielsen(0, &Target::ProductOne, |_| {}).is_err());
        assert!(count_nielsen(9, &Target::ProductOne).is_err());
        assert_eq!(count_nielsen(1, &Target::ProductOne).unwrap(), 0);
    }
}
