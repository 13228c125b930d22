use std::collections::hash_map::Entry;
use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::Perm;
use crate::error::{Error, Result};

/// An explicitly enumerated permutation group.
///
/// Elements are kept sorted so that two tables with the same element set
/// compare equal element by element.
#[derive(Clone, Debug)]
pub struct GroupTable {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: FxHashMap<Perm, u32>,
}

/// BFS closure of `gens` under right multiplication.
pub fn close(gens: &[Perm]) -> Result<GroupTable> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("close needs at least one generator".into()))?;
    let degree = first.degree();
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: bad.degree(),
        });
    }
    let identity = Perm::identity(degree)?;
    let mut seen: FxHashMap<Perm, u32> = FxHashMap::default();
    let mut elements = vec![identity];
    seen.insert(identity, 0);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if let Entry::Vacant(e) = seen.entry(y) {
                e.insert(elements.len() as u32);
                elements.push(y);
                queue.push_back(y);
            }
        }
    }
    Ok(GroupTable::from_closed(degree, gens.to_vec(), elements))
}

impl GroupTable {
    pub fn trivial(degree: usize) -> Result<GroupTable> {
        let id = Perm::identity(degree)?;
        Ok(GroupTable::from_closed(degree, vec![], vec![id]))
    }

    /// Wraps an element list already known to be closed.
    pub(crate) fn from_closed(degree: usize, generators: Vec<Perm>, mut elements: Vec<Perm>) -> Self {
        elements.sort_unstable();
        let index = elements.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect();
        GroupTable {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// All elements in ascending image-array order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn identity_index(&self) -> usize {
        let id = Perm::identity(self.degree).expect("degree already validated");
        self.index[&id] as usize
    }

    pub fn same_elements(&self, other: &GroupTable) -> bool {
        self.elements == other.elements
    }

    pub fn is_subgroup_of(&self, other: &GroupTable) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }

    /// Orbit of point 1 covers every point.
    pub fn is_transitive(&self) -> bool {
        let mut seen = 1u32;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for g in &self.elements {
                let y = g.apply(x);
                if seen & (1 << y) == 0 {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
        seen.count_ones() as usize == self.degree
    }

    /// Checks closure, inverses and the Lagrange condition against the
    /// ambient symmetric group.
    pub fn validate(&self) -> Result<()> {
        let id = Perm::identity(self.degree)?;
        if !self.contains(&id) {
            return Err(Error::Verification("identity missing".into()));
        }
        for a in &self.elements {
            if !self.contains(&a.inverse()) {
                return Err(Error::Verification(format!("inverse of {a} missing")));
            }
            for b in &self.elements {
                if !self.contains(&a.then(b)) {
                    return Err(Error::Verification(format!("{a}·{b} missing")));
                }
            }
        }
        let factorial: u64 = (1..=self.degree as u64).product();
        if !factorial.is_multiple_of(self.order() as u64) {
            return Err(Error::Verification(format!(
                "order {} does not divide {}!",
                self.order(),
                self.degree
            )));
        }
        Ok(())
    }

    /// Row-major multiplication table over element indices:
    /// `table[i * n + j]` is the index of `elements[i] · elements[j]`.
    pub fn multiplication_table(&self) -> Vec<u16> {
        let n = self.order();
        assert!(n <= u16::MAX as usize, "group too large for a u16 table");
        let mut table = vec![0u16; n * n];
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                table[i * n + j] = self.index[&a.then(b)] as u16;
            }
        }
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        Perm::parse(s, 6).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(close(&[Perm::identity(6).unwrap()]).unwrap().order(), 1);
        assert_eq!(close(&[p("(1,2)(3,4)")]).unwrap().order(), 2);
        let a6 = close(&[p("(1,2)(3,4)"), p("(1,2,4,5)(3,6)")]).unwrap();
        assert_eq!(a6.order(), 360);
        a6.validate().unwrap();
        assert!(a6.is_transitive());
        let s6 = close(&[p("(1,2)"), p("(1,2,3,4,5,6)")]).unwrap();
        assert_eq!(s6.order(), 720);
        assert!(a6.is_subgroup_of(&s6));
    }

    #[test]
    fn empty_and_mixed_generators_rejected() {
        assert!(close(&[]).is_err());
        let mixed = [Perm::identity(6).unwrap(), Perm::identity(18).unwrap()];
        assert!(matches!(close(&mixed), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn transitivity() {
        assert!(!GroupTable::trivial(6).unwrap().is_transitive());
        assert!(!close(&[p("(1,2)(3,4)")]).unwrap().is_transitive());
        assert!(close(&[p("(1,2,3,4,5,6)")]).unwrap().is_transitive());
    }

    #[test]
    fn close_is_idempotent() {
        let g = close(&[p("(1,2)(3,4)"), p("(1,3,5)")]).unwrap();
        let again = close(g.elements()).unwrap();
        assert!(g.same_elements(&again));
    }

    #[test]
    fn multiplication_table_matches_products() {
        let g = close(&[p("(1,2,3)"), p("(1,2)")]).unwrap();
        let t = g.multiplication_table();
        let n = g.order();
        for i in 0..n {
            for j in 0..n {
                let prod = g.elements()[i].then(&g.elements()[j]);
                assert_eq!(g.elements()[t[i * n + j] as usize], prod);
            }
        }
    }
}
