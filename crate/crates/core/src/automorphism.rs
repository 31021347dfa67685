//! Groups of automorphisms given by generator images.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::classes::ccl;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup, IDENTITY};
use crate::perm::Permutation;
use crate::subgroups::normalizes;

/// Largest automorphism group enumerated.
const AUT_CAP: usize = 100_000;

/// A group `T` of automorphisms of `target`. Each automorphism is given by
/// the images of `target`'s generators and is checked against the full
/// multiplication before it is accepted.
#[derive(Debug, Clone)]
pub struct AutAction {
    target: Subgroup,
    // maps[i][j] = image of target.elements()[j] under the i-th generator of T
    maps: Vec<Vec<u32>>,
    group: Arc<FiniteGroup>,
}

impl AutAction {
    /// `maps[i][k]` is the image of the `k`-th generator of `target` under
    /// the `i`-th automorphism.
    pub fn new(target: &Subgroup, maps: &[Vec<Elem>]) -> Result<AutAction> {
        let grp = target.group();
        let gens = target.generators();
        let pos = |e: Elem| target.elements().binary_search(&e).ok();
        let mut full_maps = Vec::with_capacity(maps.len());
        for (i, images) in maps.iter().enumerate() {
            if images.len() != gens.len() {
                return Err(Error::NotAnAutomorphism(format!(
                    "map {i} gives {} images for {} generators",
                    images.len(),
                    gens.len()
                )));
            }
            if let Some(&bad) = images.iter().find(|&&y| !target.contains(y)) {
                return Err(Error::NotAnAutomorphism(format!(
                    "map {i} sends a generator to {bad}, outside the group"
                )));
            }
            // Extend along a breadth-first spanning tree: φ(x s) = φ(x) φ(s).
            let mut phi = vec![u32::MAX; target.elements().len()];
            phi[0] = IDENTITY as u32;
            let mut queue = VecDeque::from([IDENTITY]);
            while let Some(x) = queue.pop_front() {
                let fx = phi[pos(x).expect("member")] as Elem;
                for (k, &s) in gens.iter().enumerate() {
                    let y = grp.mul(x, s);
                    let py = pos(y).expect("closed");
                    if phi[py] == u32::MAX {
                        phi[py] = grp.mul(fx, images[k]) as u32;
                        queue.push_back(y);
                    }
                }
            }
            for (j, &x) in target.elements().iter().enumerate() {
                for (k, &s) in gens.iter().enumerate() {
                    let lhs = phi[pos(grp.mul(x, s)).expect("closed")] as Elem;
                    if lhs != grp.mul(phi[j] as Elem, images[k]) {
                        return Err(Error::NotAnAutomorphism(format!(
                            "map {i} does not respect the relations"
                        )));
                    }
                }
            }
            let mut hit = vec![false; phi.len()];
            for &y in &phi {
                let p = pos(y as Elem).expect("member");
                if std::mem::replace(&mut hit[p], true) {
                    return Err(Error::NotAnAutomorphism(format!(
                        "map {i} is not injective"
                    )));
                }
            }
            full_maps.push(phi);
        }
        let perms: Vec<Permutation> = full_maps
            .iter()
            .map(|phi| {
                Permutation::from_images(
                    phi.iter()
                        .map(|&y| pos(y as Elem).expect("member") as u32)
                        .collect(),
                )
                .expect("bijection")
            })
            .collect();
        let group = FiniteGroup::generate_with_cap(target.elements().len(), &perms, AUT_CAP)?;
        Ok(AutAction {
            target: target.clone(),
            maps: full_maps,
            group,
        })
    }

    /// Conjugation by each of `by`, which must normalise `target`.
    pub fn by_conjugation(target: &Subgroup, by: &[Elem]) -> Result<AutAction> {
        let grp = target.group();
        let mut maps = Vec::new();
        for &t in by {
            if !normalizes(target, t) {
                return Err(Error::NotAnAutomorphism(format!(
                    "element {t} does not normalise the target"
                )));
            }
            maps.push(
                target
                    .generators()
                    .iter()
                    .map(|&s| grp.conj(s, t))
                    .collect(),
            );
        }
        AutAction::new(target, &maps)
    }

    pub fn target(&self) -> &Subgroup {
        &self.target
    }

    /// `|T|`.
    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// `T` as a permutation group on the positions of the target's elements.
    pub fn as_group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Image of `x` under the `i`-th generating automorphism.
    pub fn apply(&self, i: usize, x: Elem) -> Elem {
        let p = self
            .target
            .elements()
            .binary_search(&x)
            .expect("element of the target");
        self.maps[i][p] as Elem
    }

    pub fn generator_count(&self) -> usize {
        self.maps.len()
    }

    /// `H_T`, the elements fixed by every automorphism.
    pub fn fixed_points(&self) -> Subgroup {
        let elems: Vec<Elem> = self
            .target
            .elements()
            .iter()
            .enumerate()
            .filter(|&(j, &x)| self.maps.iter().all(|phi| phi[j] as Elem == x))
            .map(|(_, &x)| x)
            .collect();
        Subgroup::from_elems(self.target.group(), &elems)
    }

    /// Number of classes of the target mapped to themselves by every
    /// generating automorphism.
    pub fn invariant_class_count(&self) -> u64 {
        let classes = self.target.classes();
        (0..classes.count())
            .filter(|&c| {
                let r = classes.representatives[c];
                (0..self.maps.len()).all(|i| classes.class_of(self.apply(i, r)) == Some(c))
            })
            .count() as u64
    }

    /// `ccl(H_T)`, the other side of the coprime-action identity.
    pub fn fixed_point_class_count(&self) -> u64 {
        ccl(&self.fixed_points())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        let c = Permutation::from_images((1..n as u32).chain([0]).collect()).unwrap();
        FiniteGroup::generate(n, &[c]).unwrap()
    }

    #[test]
    fn order_three_action_on_c7() {
        let g = cyclic(7);
        let s = g.generators()[0];
        let h = g.whole();
        let t = AutAction::new(&h, &[vec![g.pow(s, 2)]]).unwrap();
        assert_eq!(t.order(), 3);
        assert!(t.fixed_points().is_trivial());
        assert_eq!(t.invariant_class_count(), 1);
    }

    #[test]
    fn trivial_action() {
        let g = cyclic(5);
        let h = g.whole();
        let t = AutAction::new(&h, &[]).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.fixed_points(), h);
        assert_eq!(t.invariant_class_count(), 5);
    }

    #[test]
    fn swap_on_c3_squared() {
        let a = Permutation::parse_cycles(6, "(0 1 2)").unwrap();
        let b = Permutation::parse_cycles(6, "(3 4 5)").unwrap();
        let g = FiniteGroup::generate(6, &[a, b]).unwrap();
        let h = g.whole();
        let gens = h.generators().to_vec();
        let t = AutAction::new(&h, &[vec![gens[1], gens[0]]]).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.fixed_points().order(), 3);
        // Brute force: a class {x} is invariant iff x is fixed.
        let fixed = h.elements().iter().filter(|&&x| t.apply(0, x) == x).count() as u64;
        assert_eq!(t.invariant_class_count(), fixed);
        assert_eq!(t.invariant_class_count(), 3);
    }

    #[test]
    fn rejects_non_automorphisms() {
        let g = cyclic(6);
        let s = g.generators()[0];
        let h = g.whole();
        // x ↦ x² is not injective on C6.
        assert!(matches!(
            AutAction::new(&h, &[vec![g.pow(s, 2)]]),
            Err(Error::NotAnAutomorphism(_))
        ));
        let s4 = FiniteGroup::generate(
            4,
            &[
                Permutation::parse_cycles(4, "(0 1)").unwrap(),
                Permutation::parse_cycles(4, "(0 1 2 3)").unwrap(),
            ],
        )
        .unwrap();
        let whole = s4.whole();
        let gens = whole.generators().to_vec();
        // Swapping a transposition and a 4-cycle breaks the relations.
        assert!(AutAction::new(&whole, &[vec![gens[1], gens[0]]]).is_err());
    }
}
