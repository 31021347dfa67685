//! Quotients by normal subgroups, realised as the action on right cosets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::perm::Permutation;
use crate::subgroups::is_normal_in;

const OUTSIDE: u32 = u32::MAX;

/// `amb / kernel` as a permutation group on the cosets of `kernel`, with
/// the projection from `amb`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    pub source: Subgroup,
    pub kernel: Subgroup,
    // projection[e] for e in source, indexed by parent element
    projection: Vec<u32>,
}

/// `amb / n`; fails unless `n ⊴ amb`.
pub fn quotient(amb: &Subgroup, n: &Subgroup) -> Result<Quotient> {
    amb.same_parent(n)?;
    if !is_normal_in(n, amb) {
        return Err(Error::NotNormal);
    }
    let grp = amb.group();
    let mut coset_of = vec![OUTSIDE; grp.len()];
    let mut reps: Vec<Elem> = Vec::new();
    for &x in amb.elements() {
        if coset_of[x] != OUTSIDE {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &k in n.elements() {
            coset_of[grp.mul(k, x)] = id;
        }
    }
    let k = reps.len();
    let action = |g: Elem| -> Permutation {
        let images = reps
            .iter()
            .map(|&r| coset_of[grp.mul(r, g)])
            .collect::<Vec<u32>>();
        Permutation::from_images(images).expect("coset action is a bijection")
    };
    let gens: Vec<Permutation> = amb.generators().iter().map(|&g| action(g)).collect();
    let q = FiniteGroup::generate(k, &gens)?;
    let mut projection = vec![OUTSIDE; grp.len()];
    // Elements of one coset share an image, so act once per coset.
    let mut image_of_coset = vec![OUTSIDE; k];
    for &x in amb.elements() {
        let c = coset_of[x] as usize;
        if image_of_coset[c] == OUTSIDE {
            image_of_coset[c] = q.index_of(&action(x)).expect("image lies in the quotient") as u32;
        }
        projection[x] = image_of_coset[c];
    }
    Ok(Quotient {
        group: q,
        source: amb.clone(),
        kernel: n.clone(),
        projection,
    })
}

impl Quotient {
    /// Image of `e ∈ source`.
    pub fn project(&self, e: Elem) -> Elem {
        let p = self.projection[e];
        assert!(p != OUTSIDE, "element outside the source group");
        p as Elem
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Image of a subgroup of the source.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = h.generators().iter().map(|&g| self.project(g)).collect();
        Subgroup::generated(&self.group, &gens)
    }

    /// Full preimage in the source of a subgroup of the quotient.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let grp = self.source.group();
        let elems: Vec<Elem> = self
            .source
            .elements()
            .iter()
            .copied()
            .filter(|&e| h.contains(self.project(e)))
            .collect();
        Subgroup::from_elems(grp, &elems)
    }
}
