//! Permutations on at most [`MAX_DEGREE`] points and the small groups they
//! generate.
//!
//! Products act left to right: `compose(p, q)` sends `x` to `q(p(x))`. Points
//! are 1-based in every textual form and 0-based inside the image arrays.

mod group;
mod lattice;

use std::fmt;
use std::str::FromStr;

pub use group::{close, GroupTable};
pub use lattice::{max_chain_length, SubgroupLattice};

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 18;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Result<Perm> {
        check_degree(degree)?;
        let mut images = [0u8; MAX_DEGREE];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Ok(Perm {
            degree: degree as u8,
            images,
        })
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: &[u8]) -> Result<Perm> {
        let degree = images.len();
        check_degree(degree)?;
        let mut seen = [false; MAX_DEGREE];
        let mut out = Perm::identity(degree)?;
        for (i, &img) in images.iter().enumerate() {
            let img_u = img as usize;
            if img_u >= degree || seen[img_u] {
                return Err(Error::parse(&format!("{images:?}"), "images do not form a bijection"));
            }
            seen[img_u] = true;
            out.images[i] = img;
        }
        Ok(out)
    }

    /// Parses disjoint-or-not cycle notation such as `(1,2)(3,4)`; `()` is the
    /// identity. Cycles are composed left to right.
    pub fn parse(text: &str, degree: usize) -> Result<Perm> {
        check_degree(degree)?;
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut result = Perm::identity(degree)?;
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(Error::parse(text, "empty permutation"));
        }
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(text, "expected '('"))?;
            let close_at = inner
                .find(')')
                .ok_or_else(|| Error::parse(text, "unbalanced parenthesis"))?;
            let body = &inner[..close_at];
            rest = &inner[close_at + 1..];
            if body.is_empty() {
                continue;
            }
            let mut points = Vec::new();
            for token in body.split(',') {
                let value: usize = token
                    .parse()
                    .map_err(|_| Error::parse(text, format!("bad point {token:?}")))?;
                if value == 0 || value > degree {
                    return Err(Error::parse(text, format!("point {value} outside 1..={degree}")));
                }
                if points.contains(&(value - 1)) {
                    return Err(Error::parse(text, format!("point {value} repeated in a cycle")));
                }
                points.push(value - 1);
            }
            let mut cycle = Perm::identity(degree)?;
            for (i, &p) in points.iter().enumerate() {
                cycle.images[p] = points[(i + 1) % points.len()] as u8;
            }
            result = result.then(&cycle);
        }
        Ok(result)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.images[..self.degree as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Left-to-right product, unchecked degrees. See [`compose`].
    #[inline]
    pub fn then(&self, q: &Perm) -> Perm {
        debug_assert_eq!(self.degree, q.degree);
        let mut out = *self;
        for i in 0..self.degree as usize {
            out.images[i] = q.images[self.images[i] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Perm {
        let mut out = *self;
        for i in 0..self.degree as usize {
            out.images[self.images[i] as usize] = i as u8;
        }
        out
    }

    /// `s⁻¹ · self · s`, the relabelling of `self` through `s`.
    pub fn conjugate_by(&self, s: &Perm) -> Perm {
        s.inverse().then(self).then(s)
    }

    pub fn pow(&self, exponent: u32) -> Perm {
        let mut out = Perm::identity(self.degree()).expect("degree already checked");
        for _ in 0..exponent {
            out = out.then(self);
        }
        out
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, sorted by least point. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted cycle lengths including fixed points, e.g. `[1, 1, 2, 2]`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        lengths.sort_unstable();
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().map(|c| c.len() as u64).fold(1, lcm)
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Fixed points, 1-based, ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.apply(i) == i)
            .map(|i| i + 1)
            .collect()
    }

    /// Bit `i` set iff 0-based point `i` is fixed.
    pub fn fixed_mask(&self) -> u32 {
        (0..self.degree())
            .filter(|&i| self.apply(i) == i)
            .fold(0, |m, i| m | (1 << i))
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        Err(Error::UnsupportedDegree(degree))
    } else {
        Ok(())
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn same_degree(p: &Perm, q: &Perm) -> Result<()> {
    if p.degree != q.degree {
        Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        })
    } else {
        Ok(())
    }
}

/// The left-to-right product `pq`: the image of `x` is `q(p(x))`.
pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
    same_degree(p, q)?;
    Ok(p.then(q))
}

/// `s⁻¹ x s`.
pub fn conjugate(x: &Perm, s: &Perm) -> Result<Perm> {
    same_degree(x, s)?;
    Ok(x.conjugate_by(s))
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm<{}>{}", self.degree, self)
    }
}

/// Parses degree-6 cycle notation.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        Perm::parse(s, 6)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        Perm::parse(s, 6).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id = Perm::identity(6).unwrap();
        let x = p("(1,2)(3,4)");
        assert_eq!(compose(&id, &x).unwrap(), x);
        assert!(compose(&x, &x.inverse()).unwrap().is_identity());
        // point by point: 1→2→4, 2→1→3, 3→4→2, 4→3→1
        assert_eq!(compose(&x, &p("(1,3)(2,4)")).unwrap(), p("(1,4)(2,3)"));
    }

    #[test]
    fn compose_is_left_to_right() {
        // (1,2) then (2,3): 1→2→3, 3→3→2, 2→1→1
        let r = compose(&p("(1,2)"), &p("(2,3)")).unwrap();
        assert_eq!(r, p("(1,3,2)"));
    }

    #[test]
    fn conjugate_examples() {
        let x = p("(1,2)(3,4)");
        assert_eq!(conjugate(&x, &Perm::identity(6).unwrap()).unwrap(), x);
        assert_eq!(conjugate(&x, &p("(5,6)")).unwrap(), x);
        assert_eq!(conjugate(&x, &p("(1,3)(2,4)")).unwrap(), x);
        // relabel 1→2, 2→3: (1,2)(3,4) becomes (2,3)(1,4)
        assert_eq!(conjugate(&x, &p("(1,2,3)")).unwrap(), p("(1,4)(2,3)"));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Perm::identity(6).unwrap();
        let b = Perm::identity(18).unwrap();
        assert!(matches!(compose(&a, &b), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(conjugate(&a, &b), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn order_parity_fixed_points() {
        let x = p("(1,2)(3,4)");
        assert_eq!(x.fixed_points(), vec![5, 6]);
        assert_eq!(x.order(), 2);
        assert_eq!(p("(1,2,4,5)(3,6)").parity(), Parity::Even);
        assert_eq!(p("(1,2,4,5)(3,6)").order(), 4);
        assert_eq!(p("(1,2)").parity(), Parity::Odd);
        assert_eq!(Perm::identity(6).unwrap().order(), 1);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("(3,4)(2,1)").to_string(), "(1,2)(3,4)");
        assert_eq!(p("(4,5,1,2)(6,3)").to_string(), "(1,2,4,5)(3,6)");
        assert_eq!(p("()").to_string(), "()");
        assert_eq!(p(" ( 1 , 2 ) ").to_string(), "(1,2)");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "(1,2", "1,2)", "(1,7)", "(0,1)", "(1,1)", "(a,b)", "(1,2)x"] {
            assert!(Perm::parse(bad, 6).is_err(), "{bad}");
        }
        assert!(Perm::parse("(1,2)", 19).is_err());
    }

    #[test]
    fn cycle_type_counts_fixed_points() {
        assert_eq!(p("(1,2)(3,4)").cycle_type(), vec![1, 1, 2, 2]);
        assert_eq!(p("(1,2,3)").cycle_type(), vec![1, 1, 1, 3]);
    }
}
