//! Subgroup constructions inside a common parent group.
//!
//! The ambient group is itself a [`Subgroup`]; pass `G.whole()` to work in
//! the full parent.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::classes::conjugation_orbit_in;
use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup, IDENTITY};

/// Subgroups of groups larger than this are never swept exhaustively.
pub const SUBGROUP_SWEEP_LIMIT: u64 = 400;

/// Default cap on the number of subgroups an exhaustive sweep may produce.
pub const DEFAULT_SUBGROUP_CAP: usize = 20_000;

pub fn intersection(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.same_parent(k)?;
    let mut mask = h.mask().clone();
    mask.intersect_with(k.mask());
    Ok(Subgroup::from_mask(h.group(), mask))
}

/// `H^g = g⁻¹ H g`.
pub fn conjugate(h: &Subgroup, g: Elem) -> Subgroup {
    let grp = h.group();
    let mut mask = FixedBitSet::with_capacity(grp.len());
    for &x in h.elements() {
        mask.insert(grp.conj(x, g));
    }
    Subgroup::from_mask(grp, mask)
}

/// True when `g` maps `h` onto itself by conjugation.
pub fn normalizes(h: &Subgroup, g: Elem) -> bool {
    let grp = h.group();
    h.generators().iter().all(|&s| h.contains(grp.conj(s, g)))
}

/// `N_amb(H)`.
pub fn normalizer(amb: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    amb.same_parent(h)?;
    let elems: Vec<Elem> = amb
        .elements()
        .iter()
        .copied()
        .filter(|&g| normalizes(h, g))
        .collect();
    Ok(Subgroup::from_elems(amb.group(), &elems))
}

pub fn is_normal_in(h: &Subgroup, amb: &Subgroup) -> bool {
    h.is_subgroup_of(amb) && amb.generators().iter().all(|&g| normalizes(h, g))
}

/// `⋂_{g ∈ amb} H^g`, the largest subgroup of `H` normalised by `amb`.
pub fn core(amb: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    amb.same_parent(h)?;
    let mut c = h.clone();
    loop {
        let mut mask = c.mask().clone();
        for &g in amb.generators() {
            mask.intersect_with(conjugate(&c, g).mask());
        }
        if mask.count_ones(..) == c.elements().len() {
            return Ok(c);
        }
        c = Subgroup::from_mask(h.group(), mask);
    }
}

/// `amb_x`, the centraliser of one element.
pub fn centralizer_of_element(amb: &Subgroup, x: Elem) -> Subgroup {
    let grp = amb.group();
    let elems: Vec<Elem> = amb
        .elements()
        .iter()
        .copied()
        .filter(|&g| grp.commute(g, x))
        .collect();
    Subgroup::from_elems(grp, &elems)
}

/// `amb_H`, the centraliser of a subgroup.
pub fn centralizer(amb: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    amb.same_parent(h)?;
    let grp = amb.group();
    let gens = h.generators();
    let elems: Vec<Elem> = amb
        .elements()
        .iter()
        .copied()
        .filter(|&g| gens.iter().all(|&s| grp.commute(g, s)))
        .collect();
    Ok(Subgroup::from_elems(grp, &elems))
}

pub fn center(h: &Subgroup) -> Subgroup {
    centralizer(h, h).expect("same parent")
}

/// Smallest subgroup of `amb` normalised by `amb` and containing `gens`.
pub fn normal_closure_of(amb: &Subgroup, gens: &[Elem]) -> Subgroup {
    let grp = amb.group();
    let mut gens: Vec<Elem> = gens.to_vec();
    let mut n = Subgroup::generated(grp, &gens);
    'grow: loop {
        for &s in gens.clone().iter() {
            for &t in amb.generators() {
                let y = grp.conj(s, t);
                if !n.contains(y) {
                    gens.push(y);
                    n = Subgroup::generated(grp, &gens);
                    continue 'grow;
                }
            }
        }
        return n;
    }
}

pub fn normal_closure(amb: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    amb.same_parent(h)?;
    Ok(normal_closure_of(amb, h.generators()))
}

/// `H′`, the normal closure of the commutators of generators.
pub fn derived_subgroup(h: &Subgroup) -> Subgroup {
    let grp = h.group();
    let gens = h.generators();
    let mut comms = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = grp.commutator(a, b);
            if c != IDENTITY {
                comms.push(c);
            }
        }
    }
    normal_closure_of(h, &comms)
}

/// `⟨H, K⟩`.
pub fn join(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.same_parent(k)?;
    if k.is_subgroup_of(h) {
        return Ok(h.clone());
    }
    if h.is_subgroup_of(k) {
        return Ok(k.clone());
    }
    let mut gens = h.generators().to_vec();
    gens.extend_from_slice(k.generators());
    Ok(Subgroup::generated(h.group(), &gens))
}

/// The set `HK` as a mask over the parent.
pub fn product_set(h: &Subgroup, k: &Subgroup) -> Result<FixedBitSet> {
    h.same_parent(k)?;
    let grp = h.group();
    let mut mask = FixedBitSet::with_capacity(grp.len());
    for &a in h.elements() {
        for &b in k.elements() {
            mask.insert(grp.mul(a, b));
        }
    }
    Ok(mask)
}

/// `HK = KH`, decided by `|⟨H, K⟩| · |H ∩ K| = |H| · |K|`.
pub fn permutes(h: &Subgroup, k: &Subgroup) -> Result<bool> {
    let meet = intersection(h, k)?;
    Ok(join(h, k)?.order() * meet.order() == h.order() * k.order())
}

/// Every normal subgroup of `amb`, from the trivial group up to `amb`,
/// ordered by size and then by elements.
pub fn normal_subgroups(amb: &Subgroup) -> Vec<Subgroup> {
    let classes = amb.classes();
    let mut minimal: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    for &r in classes.representatives.iter().skip(1) {
        let n = normal_closure_of(amb, &[r]);
        if seen.insert(n.elements().to_vec()) {
            minimal.push(n);
        }
    }
    let mut all = vec![amb.group().trivial()];
    seen.insert(vec![IDENTITY]);
    all.extend(minimal.iter().cloned());
    let mut frontier = minimal.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for y in &minimal {
                if y.is_subgroup_of(x) {
                    continue;
                }
                let z = join(x, y).expect("same parent");
                if seen.insert(z.elements().to_vec()) {
                    next.push(z.clone());
                    all.push(z);
                }
            }
        }
        frontier = next;
    }
    sort_subgroups(&mut all);
    all
}

/// Every subgroup of `amb`, as joins of cyclic subgroups.
///
/// Refuses groups above [`SUBGROUP_SWEEP_LIMIT`] and stops with
/// `CapExceeded` once more than `cap` subgroups have been found.
pub fn all_subgroups(amb: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
    if amb.order() > SUBGROUP_SWEEP_LIMIT {
        return Err(Error::BoundExceeded {
            n: amb.order(),
            bound: SUBGROUP_SWEEP_LIMIT,
        });
    }
    let grp = amb.group();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut cyclic: Vec<Subgroup> = Vec::new();
    for &x in amb.elements() {
        let c = Subgroup::generated(grp, &[x]);
        if seen.insert(c.elements().to_vec()) {
            cyclic.push(c);
        }
    }
    let mut all = cyclic.clone();
    let mut frontier: Vec<Subgroup> = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for c in &cyclic {
                if c.is_subgroup_of(x) {
                    continue;
                }
                let z = join(x, c)?;
                if seen.insert(z.elements().to_vec()) {
                    if all.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    next.push(z.clone());
                    all.push(z);
                }
            }
        }
        frontier = next;
    }
    sort_subgroups(&mut all);
    Ok(all)
}

fn sort_subgroups(v: &mut [Subgroup]) {
    v.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
}

/// Subgroups of prime order `p` generated by elements of `amb`, deduplicated.
pub fn prime_order_subgroups(amb: &Subgroup, within: &Subgroup, p: u64) -> Vec<Subgroup> {
    let grp = amb.group();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut out = Vec::new();
    for &x in within.elements() {
        if grp.elem_order(x) == p {
            let c = Subgroup::generated(grp, &[x]);
            if seen.insert(c.elements().to_vec()) {
                out.push(c);
            }
        }
    }
    out
}

/// `x^amb` as a set of parent indices.
pub fn class_of(amb: &Subgroup, x: Elem) -> Vec<Elem> {
    let mut v = conjugation_orbit_in(amb, x);
    v.sort_unstable();
    v
}

/// Index `|amb : h|`.
pub fn index(amb: &Subgroup, h: &Subgroup) -> u64 {
    amb.order() / h.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn group(degree: usize, gens: &[&str]) -> Arc<FiniteGroup> {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        FiniteGroup::generate(degree, &gens).unwrap()
    }

    fn elem(g: &Arc<FiniteGroup>, s: &str) -> Elem {
        g.index_of(&Permutation::parse_cycles(g.degree(), s).unwrap())
            .unwrap()
    }

    fn sym4() -> Arc<FiniteGroup> {
        group(4, &["(0 1)", "(0 1 2 3)"])
    }

    fn frob42() -> Arc<FiniteGroup> {
        let t = Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)").unwrap();
        let m = Permutation::from_images((0..7).map(|x| (3 * x) % 7).collect()).unwrap();
        FiniteGroup::generate(7, &[t, m]).unwrap()
    }

    /// Normal subgroups among all 2-generated subgroups; every subgroup of
    /// Sym(4) is 2-generated.
    fn normal_by_brute_force(g: &Arc<FiniteGroup>) -> HashSet<Vec<Elem>> {
        let mut out = HashSet::new();
        for a in 0..g.len() {
            for b in 0..g.len() {
                let h = Subgroup::generated(g, &[a, b]);
                let normal =
                    (0..g.len()).all(|x| h.elements().iter().all(|&y| h.contains(g.conj(y, x))));
                if normal {
                    out.insert(h.elements().to_vec());
                }
            }
        }
        out
    }

    #[test]
    fn center_of_sym4_is_trivial() {
        let g = sym4();
        let brute: Vec<Elem> = (0..g.len())
            .filter(|&z| (0..g.len()).all(|x| g.commute(z, x)))
            .collect();
        assert_eq!(brute, vec![IDENTITY]);
        assert!(center(&g.whole()).is_trivial());
    }

    #[test]
    fn derived_subgroup_of_sym4() {
        let g = sym4();
        let d = derived_subgroup(&g.whole());
        assert_eq!(d.order(), 12);
        let comms: Vec<Elem> = (0..g.len())
            .flat_map(|a| (0..g.len()).map(move |b| (a, b)))
            .map(|(a, b)| g.commutator(a, b))
            .collect();
        assert_eq!(Subgroup::generated(&g, &comms), d);
    }

    #[test]
    fn core_of_sylow_two() {
        let g = sym4();
        let d8 = Subgroup::generated(&g, &[elem(&g, "(0 1 2 3)"), elem(&g, "(0 2)")]);
        assert_eq!(d8.order(), 8);
        let c = core(&g.whole(), &d8).unwrap();
        assert_eq!(c.order(), 4);
        let mut brute = d8.mask().clone();
        for x in 0..g.len() {
            brute.intersect_with(conjugate(&d8, x).mask());
        }
        assert_eq!(&brute, c.mask());
        assert_eq!(normalizer(&g.whole(), &d8).unwrap(), d8);
    }

    #[test]
    fn normal_subgroups_of_sym4_and_frob42() {
        let g = sym4();
        let ns = normal_subgroups(&g.whole());
        let orders: Vec<u64> = ns.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let got: HashSet<Vec<Elem>> = ns.iter().map(|n| n.elements().to_vec()).collect();
        assert_eq!(got, normal_by_brute_force(&g));

        let f = frob42();
        let orders: Vec<u64> = normal_subgroups(&f.whole())
            .iter()
            .map(|n| n.order())
            .collect();
        assert_eq!(orders, vec![1, 7, 14, 21, 42]);
    }

    #[test]
    fn cyclic_prime_has_two_normal_subgroups() {
        let g = group(5, &["(0 1 2 3 4)"]);
        assert_eq!(normal_subgroups(&g.whole()).len(), 2);
    }

    #[test]
    fn subgroup_count_of_sym4() {
        // Sym(4) has 30 subgroups.
        let g = sym4();
        let all = all_subgroups(&g.whole(), DEFAULT_SUBGROUP_CAP).unwrap();
        assert_eq!(all.len(), 30);
        assert!(all.iter().all(|h| h.order() > 0 && 24 % h.order() == 0));
        assert_eq!(
            all_subgroups(&g.whole(), 10).unwrap_err(),
            Error::CapExceeded { cap: 10 }
        );
    }

    #[test]
    fn permutability() {
        let g = sym4();
        let d8 = Subgroup::generated(&g, &[elem(&g, "(0 1 2 3)"), elem(&g, "(0 2)")]);
        let c3 = Subgroup::generated(&g, &[elem(&g, "(0 1 2)")]);
        assert!(permutes(&d8, &c3).unwrap());
        assert_eq!(product_set(&d8, &c3).unwrap().count_ones(..), 24);
        let t1 = Subgroup::generated(&g, &[elem(&g, "(0 1)")]);
        let t2 = Subgroup::generated(&g, &[elem(&g, "(1 2)")]);
        assert!(!permutes(&t1, &t2).unwrap());
    }

    #[test]
    fn mismatched_parents_are_rejected() {
        let a = sym4();
        let b = sym4();
        assert_eq!(
            intersection(&a.whole(), &b.whole()).unwrap_err(),
            Error::MismatchedParents
        );
    }
}
