//! Conjugacy classes by conjugation orbits.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::perm::{conjugation_orbit, Permutation};
use crate::primes::PrimeSet;

const NO_CLASS: u32 = u32::MAX;

/// Conjugacy classes of a subgroup `H`. Class `i` is the orbit of
/// `representatives[i]`; classes are numbered in the order their first
/// element appears in the enumeration of the parent group.
#[derive(Debug, Clone)]
pub struct ConjClassData {
    pub representatives: Vec<Elem>,
    pub class_sizes: Vec<u64>,
    pub centralizer_orders: Vec<u64>,
    members: Vec<Vec<Elem>>,
    class_of: Vec<u32>,
    order: u64,
}

impl ConjClassData {
    pub(crate) fn compute(h: &Subgroup) -> ConjClassData {
        let g = h.group();
        let gens = h.generators();
        let mut class_of = vec![NO_CLASS; g.len()];
        let mut members = Vec::new();
        for &x in h.elements() {
            if class_of[x] != NO_CLASS {
                continue;
            }
            let id = members.len() as u32;
            class_of[x] = id;
            let mut orbit = vec![x];
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &s in gens {
                    let z = g.conj(y, s);
                    if class_of[z] == NO_CLASS {
                        class_of[z] = id;
                        orbit.push(z);
                        queue.push_back(z);
                    }
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let order = h.order();
        let class_sizes: Vec<u64> = members.iter().map(|m| m.len() as u64).collect();
        ConjClassData {
            representatives: members.iter().map(|m| m[0]).collect(),
            centralizer_orders: class_sizes.iter().map(|&s| order / s).collect(),
            class_sizes,
            members,
            class_of,
            order,
        }
    }

    /// Number of classes.
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn group_order(&self) -> u64 {
        self.order
    }

    pub fn class_of(&self, e: Elem) -> Option<usize> {
        match self.class_of.get(e) {
            Some(&c) if c != NO_CLASS => Some(c as usize),
            _ => None,
        }
    }

    pub fn members(&self, class: usize) -> &[Elem] {
        &self.members[class]
    }

    /// Number of classes whose elements have `π`-number order.
    pub fn count_pi(&self, g: &FiniteGroup, pi: &PrimeSet) -> usize {
        self.representatives
            .iter()
            .filter(|&&r| pi.is_pi_number(g.elem_order(r)))
            .count()
    }
}

pub fn conjugacy_classes(h: &Subgroup) -> std::sync::Arc<ConjClassData> {
    h.classes()
}

/// Number of conjugacy classes.
pub fn ccl(h: &Subgroup) -> u64 {
    h.classes().count() as u64
}

/// Number of conjugacy classes of `π`-elements.
pub fn ccl_pi(h: &Subgroup, pi: &PrimeSet) -> u64 {
    h.classes().count_pi(h.group(), pi) as u64
}

/// Orbit of `x` under conjugation by `h`, found from `h`'s generators only.
pub fn conjugation_orbit_in(h: &Subgroup, x: Elem) -> Vec<Elem> {
    let g = h.group();
    let mut seen = fixedbitset::FixedBitSet::with_capacity(g.len());
    seen.insert(x);
    let mut orbit = vec![x];
    let mut i = 0;
    while i < orbit.len() {
        for &s in h.generators() {
            let z = g.conj(orbit[i], s);
            if !seen.put(z) {
                orbit.push(z);
            }
        }
        i += 1;
    }
    orbit
}

/// `|H_x|`, computed as `|H| / |x^H|` without building class data.
pub fn centralizer_order(h: &Subgroup, x: Elem) -> Result<u64> {
    if !h.contains(x) {
        return Err(Error::ElementNotInGroup);
    }
    Ok(h.order() / conjugation_orbit_in(h, x).len() as u64)
}

/// A permutation group known only by generators and its order, for groups
/// too large to enumerate. The order must come from the construction.
#[derive(Debug, Clone)]
pub struct GeneratedGroup {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub order: u64,
}

impl GeneratedGroup {
    /// `|G_g| = |G| / |g^G|` with the orbit found by conjugating with generators.
    pub fn centralizer_order(&self, g: &Permutation) -> u64 {
        let orbit = conjugation_orbit(&self.generators, g).len() as u64;
        debug_assert_eq!(self.order % orbit, 0);
        self.order / orbit
    }
}
