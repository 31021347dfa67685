//! Permutations of `{0, .., d-1}`.
//!
//! Products are read left to right: `a * b` applies `a` first and then `b`,
//! so conjugation is `x^g = g⁻¹ x g`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} of point {i} is out of range for degree {n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("point {x} is hit twice")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let a = a as usize;
                if a >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} in cycle is out of range for degree {degree}"
                    )));
                }
                if moved[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {a} appears in more than one cycle"
                    )));
                }
                moved[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)` or `(0,1)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {s:?}")))?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                cycle.push(tok.parse::<u32>().map_err(|_| {
                    Error::InvalidPermutation(format!("bad point {tok:?} in {s:?}"))
                })?);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self * other`, or an error when the degrees differ.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // x^g maps g(i) to g(self(i)).
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Places `self` on points `offset..offset+deg(self)` of a permutation of
    /// degree `total`, fixing everything else.
    pub fn embed(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }

    /// `self ⊕ other` acting on the disjoint union of the two point sets.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let d = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + d as u32));
        Permutation { images }
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::from_images(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Orbit of `g` under conjugation by the group generated by `gens`, in
/// breadth-first order. Needs only the generators, so it works for groups
/// far too large to enumerate.
pub fn conjugation_orbit(gens: &[Permutation], g: &Permutation) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut orbit = vec![g.clone()];
    let mut queue = VecDeque::from([g.clone()]);
    seen.insert(g.clone());
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = x.conjugate_by(s);
            if seen.insert(y.clone()) {
                orbit.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    orbit
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles(5, "(0 1 2)(3,4)").unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert!(Permutation::parse_cycles(3, "()").unwrap().is_identity());
        assert!(Permutation::parse_cycles(3, "(0 1").is_err());
    }

    #[test]
    fn product_order_is_left_to_right() {
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert!(a.compose(&Permutation::identity(4)).is_err());
    }

    proptest! {
        #[test]
        fn group_axioms(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!(a.conjugate_by(&b), &(&b.inverse() * &a) * &b);
            prop_assert!(a.pow(a.order()).is_identity());
        }

        #[test]
        fn cycles_reconstruct(a in arb_perm(9)) {
            prop_assert_eq!(Permutation::from_cycles(9, &a.cycles()).unwrap(), a.clone());
            prop_assert_eq!(Permutation::parse_cycles(9, &a.to_string()).unwrap(), a);
        }
    }
}
