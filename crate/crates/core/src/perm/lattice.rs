use rustc_hash::FxHashMap;

use super::GroupTable;

/// Bitset over the element indices of one [`GroupTable`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct ElementSet(Vec<u64>);

impl ElementSet {
    fn empty(n: usize) -> Self {
        ElementSet(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, i: usize) -> bool {
        let had = self.contains(i);
        self.0[i / 64] |= 1 << (i % 64);
        !had
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }
}

#[derive(Clone, Debug)]
struct Subgroup {
    members: ElementSet,
    order: usize,
    generators: Vec<usize>,
}

/// Every subgroup of a small group, found as closures of element pairs and
/// validated to be closed under joining one more element.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group_order: usize,
    subgroups: Vec<Subgroup>,
    /// 2 when pairs sufficed, 3 when triples were needed, and so on.
    generation_rank: usize,
}

struct IndexedGroup {
    n: usize,
    identity: usize,
    mul: Vec<u16>,
}

impl IndexedGroup {
    /// Closure of `base ∪ {extra}` where `base` is a subgroup generated by
    /// `base_gens`. Returns the full group as soon as more than half of it is
    /// reached.
    fn join(&self, base: &ElementSet, base_gens: &[usize], extra: usize) -> ElementSet {
        let mut members = base.clone();
        let mut list: Vec<usize> = base.iter().collect();
        if list.is_empty() {
            members.insert(self.identity);
            list.push(self.identity);
        }
        let gens: Vec<usize> = base_gens.iter().copied().chain([extra]).collect();
        let mut count = list.len();
        let mut cursor = 0;
        // Elements of `base` are already closed under `base_gens`, but a
        // product with `extra` can land anywhere, so every element is
        // expanded by every generator.
        while cursor < list.len() {
            let x = list[cursor];
            cursor += 1;
            for &g in &gens {
                let y = self.mul[x * self.n + g] as usize;
                if members.insert(y) {
                    list.push(y);
                    count += 1;
                    if 2 * count > self.n {
                        return ElementSet::full(self.n);
                    }
                }
            }
        }
        members
    }
}

impl SubgroupLattice {
    pub fn build(group: &GroupTable) -> SubgroupLattice {
        let n = group.order();
        let indexed = IndexedGroup {
            n,
            identity: group.identity_index(),
            mul: group.multiplication_table(),
        };
        let mut by_members: FxHashMap<ElementSet, usize> = FxHashMap::default();
        let mut subgroups: Vec<Subgroup> = Vec::new();
        fn add(
            by_members: &mut FxHashMap<ElementSet, usize>,
            subgroups: &mut Vec<Subgroup>,
            members: ElementSet,
            generators: Vec<usize>,
        ) {
            if !by_members.contains_key(&members) {
                by_members.insert(members.clone(), subgroups.len());
                let order = members.len();
                subgroups.push(Subgroup {
                    members,
                    order,
                    generators,
                });
            }
        }

        let trivial = {
            let mut s = ElementSet::empty(n);
            s.insert(indexed.identity);
            s
        };
        add(&mut by_members, &mut subgroups, trivial.clone(), vec![]);
        let cyclic: Vec<ElementSet> = (0..n).map(|a| indexed.join(&trivial, &[], a)).collect();
        for (a, members) in cyclic.iter().enumerate() {
            add(&mut by_members, &mut subgroups, members.clone(), vec![a]);
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if cyclic[a].contains(b) || cyclic[b].contains(a) {
                    continue;
                }
                let members = indexed.join(&cyclic[a], &[a], b);
                add(&mut by_members, &mut subgroups, members, vec![a, b]);
            }
        }

        // Closure check: joining any element to any known subgroup must give
        // a known subgroup. Missing ones need one more generator.
        let mut generation_rank = 2;
        loop {
            let mut missing: Vec<(ElementSet, Vec<usize>)> = Vec::new();
            for h in &subgroups {
                for g in 0..n {
                    if h.members.contains(g) {
                        continue;
                    }
                    let joined = indexed.join(&h.members, &h.generators, g);
                    if !by_members.contains_key(&joined) && !missing.iter().any(|(m, _)| *m == joined) {
                        let mut gens = h.generators.clone();
                        gens.push(g);
                        missing.push((joined, gens));
                    }
                }
            }
            if missing.is_empty() {
                break;
            }
            generation_rank += 1;
            for (members, gens) in missing {
                add(&mut by_members, &mut subgroups, members, gens);
            }
        }

        subgroups.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.members.cmp(&b.members)));
        SubgroupLattice {
            group_order: n,
            subgroups,
            generation_rank,
        }
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Smallest number of generators that sufficed for every subgroup found.
    pub fn generation_rank(&self) -> usize {
        self.generation_rank
    }

    /// Subgroup orders in ascending order.
    pub fn orders(&self) -> Vec<usize> {
        self.subgroups.iter().map(|s| s.order).collect()
    }

    /// Re-runs the closure check on the final subgroup list.
    pub fn is_closed_under_joins(&self, group: &GroupTable) -> bool {
        let n = group.order();
        let indexed = IndexedGroup {
            n,
            identity: group.identity_index(),
            mul: group.multiplication_table(),
        };
        let known: rustc_hash::FxHashSet<&ElementSet> = self.subgroups.iter().map(|s| &s.members).collect();
        self.subgroups.iter().all(|h| {
            (0..n)
                .filter(|&g| !h.members.contains(g))
                .all(|g| known.contains(&indexed.join(&h.members, &h.generators, g)))
        })
    }

    /// Number of strict inclusions in the longest chain `1 = H₀ < … < H_l = G`.
    pub fn max_chain_length(&self) -> usize {
        let mut length = vec![0usize; self.subgroups.len()];
        for i in 0..self.subgroups.len() {
            let hi = &self.subgroups[i];
            let mut best = 0;
            for (hj, &lj) in self.subgroups[..i].iter().zip(&length) {
                if hj.order < hi.order && hi.order.is_multiple_of(hj.order) && hj.members.is_subset(&hi.members) {
                    best = best.max(lj + 1);
                }
            }
            length[i] = best;
        }
        *length.last().unwrap_or(&0)
    }
}

/// Longest strict subgroup chain of `group`, counted in links.
pub fn max_chain_length(group: &GroupTable) -> usize {
    SubgroupLattice::build(group).max_chain_length()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{close, Perm};

    fn p(s: &str) -> Perm {
        Perm::parse(s, 6).unwrap()
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(max_chain_length(&close(&[p("(1,2)")]).unwrap()), 1);
        assert_eq!(max_chain_length(&close(&[p("(1,2,3,4)")]).unwrap()), 2);
        assert_eq!(max_chain_length(&close(&[p("(1,2,3,4,5,6)")]).unwrap()), 2);
        assert_eq!(max_chain_length(&GroupTable::trivial(6).unwrap()), 0);
    }

    #[test]
    fn s4_lattice() {
        // S4 has 30 subgroups; longest chain 1 < C2 < V4 < D8 < S4.
        let s4 = close(&[p("(1,2)"), p("(1,2,3,4)")]).unwrap();
        let lattice = SubgroupLattice::build(&s4);
        assert_eq!(lattice.len(), 30);
        assert_eq!(lattice.max_chain_length(), 4);
        assert!(lattice.is_closed_under_joins(&s4));
    }

    #[test]
    fn a5_lattice() {
        let a5 = close(&[p("(1,2,3)"), p("(1,2,3,4,5)")]).unwrap();
        let lattice = SubgroupLattice::build(&a5);
        assert_eq!(lattice.len(), 59);
        assert_eq!(lattice.generation_rank(), 2);
        assert_eq!(lattice.max_chain_length(), 4);
    }

    #[test]
    fn a6_lattice() {
        let a6 = close(&[p("(1,2)(3,4)"), p("(1,2,4,5)(3,6)")]).unwrap();
        let lattice = SubgroupLattice::build(&a6);
        assert_eq!(lattice.len(), 501);
        assert_eq!(lattice.max_chain_length(), 5);
        assert!(lattice.is_closed_under_joins(&a6));
    }
}
