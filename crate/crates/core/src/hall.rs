//! Hall subgroups, Sylow systems and the factorisation `G = AB`.

use std::collections::BTreeMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup, IDENTITY};
use crate::primes::PrimeSet;
use crate::radicals::is_soluble;
use crate::subgroups::{conjugate, intersection, normalizer};

/// A Hall π-subgroup of `amb`.
///
/// Grows a π-subgroup greedily: scanning `amb` in enumeration order, a
/// π-element is added whenever the enlarged subgroup is still a π-group.
/// Every π-subgroup of a soluble group lies in a Hall π-subgroup, so the
/// scan cannot stall below the Hall order, and a rejected element stays
/// rejected as the subgroup grows, so one pass suffices.
pub fn hall_subgroup(amb: &Subgroup, pi: &PrimeSet) -> Result<Subgroup> {
    if !is_soluble(amb) {
        return Err(Error::InsolubleInput);
    }
    Ok(grow_hall(amb, pi, amb.group().trivial()))
}

/// A Hall π-subgroup of `amb` containing the π-subgroup `start`.
pub fn hall_subgroup_containing(
    amb: &Subgroup,
    pi: &PrimeSet,
    start: &Subgroup,
) -> Result<Subgroup> {
    amb.same_parent(start)?;
    if !start.is_subgroup_of(amb) || !pi.is_pi_number(start.order()) {
        return Err(Error::InvalidInput(
            "starting subgroup is not a π-subgroup of the ambient group".into(),
        ));
    }
    if !is_soluble(amb) {
        return Err(Error::InsolubleInput);
    }
    Ok(grow_hall(amb, pi, start.clone()))
}

fn grow_hall(amb: &Subgroup, pi: &PrimeSet, start: Subgroup) -> Subgroup {
    let grp = amb.group();
    let target = pi.part_of(amb.order());
    let mut k = start;
    let mut gens = k.generators().to_vec();
    for &g in amb.elements() {
        if k.order() == target {
            break;
        }
        if k.contains(g) || !pi.is_pi_number(grp.elem_order(g)) {
            continue;
        }
        gens.push(g);
        match Subgroup::generated_bounded(grp, &gens, target as usize) {
            Some(next) if pi.is_pi_number(next.order()) => k = next,
            _ => {
                gens.pop();
            }
        }
    }
    assert_eq!(
        k.order(),
        target,
        "greedy Hall search stalled in a soluble group"
    );
    k
}

/// One Hall π-subgroup for every π over the primes dividing `|amb|`,
/// all pairwise permutable.
#[derive(Debug, Clone)]
pub struct SylowSystem {
    ambient: Subgroup,
    primes: PrimeSet,
    members: BTreeMap<PrimeSet, Subgroup>,
}

impl SylowSystem {
    /// The system generated by a complement basis, given as one Hall
    /// `p′`-subgroup per prime in increasing order of `p`.
    ///
    /// Any such family is a complement basis; the π-member is the
    /// intersection of the `p′`-members over `p ∉ π`.
    pub fn from_complement_basis(amb: &Subgroup, basis: &[Subgroup]) -> Result<SylowSystem> {
        let primes = PrimeSet::of_order(amb.order());
        if basis.len() != primes.len() {
            return Err(Error::InvalidInput(format!(
                "complement basis has {} members for {} primes",
                basis.len(),
                primes.len()
            )));
        }
        for (&p, k) in primes.primes().iter().zip(basis) {
            amb.same_parent(k)?;
            let want = amb.order() / PrimeSet::single(p).part_of(amb.order());
            if !k.is_subgroup_of(amb) || k.order() != want {
                return Err(Error::InvalidInput(format!(
                    "basis member for {p} is not a Hall {p}′-subgroup"
                )));
            }
        }
        let mut members = BTreeMap::new();
        for pi in primes.subsets() {
            let mut mask = amb.mask().clone();
            for (&p, k) in primes.primes().iter().zip(basis) {
                if !pi.contains(p) {
                    mask.intersect_with(k.mask());
                }
            }
            members.insert(pi, Subgroup::from_mask(amb.group(), mask));
        }
        Ok(SylowSystem {
            ambient: amb.clone(),
            primes,
            members,
        })
    }

    pub fn ambient(&self) -> &Subgroup {
        &self.ambient
    }

    /// Prime divisors of the ambient order.
    pub fn primes(&self) -> &PrimeSet {
        &self.primes
    }

    /// The Hall π-member; primes not dividing the order are ignored.
    pub fn member(&self, pi: &PrimeSet) -> &Subgroup {
        &self.members[&pi.intersection(&self.primes)]
    }

    pub fn members(&self) -> impl Iterator<Item = (&PrimeSet, &Subgroup)> {
        self.members.iter()
    }

    pub fn complement_basis(&self) -> Vec<&Subgroup> {
        self.primes
            .primes()
            .iter()
            .map(|&p| self.member(&PrimeSet::single(p).complement_in(&self.primes)))
            .collect()
    }

    /// Every member has Hall order and every pair of members permutes.
    pub fn is_valid(&self) -> bool {
        let n = self.ambient.order();
        let hall_orders = self
            .members
            .iter()
            .all(|(pi, s)| s.order() == pi.part_of(n));
        let members: Vec<&Subgroup> = self.members.values().collect();
        let permutable = members.iter().enumerate().all(|(i, s)| {
            members[i + 1..]
                .iter()
                .all(|t| crate::subgroups::permutes(s, t).expect("same parent"))
        });
        hall_orders && permutable
    }

    /// `Σ ↘ H`: every member meets `H` in a Hall subgroup of `H`.
    pub fn reduces_into(&self, h: &Subgroup) -> bool {
        let n = h.order();
        self.members.iter().all(|(pi, s)| {
            let mut m = s.mask().clone();
            m.intersect_with(h.mask());
            m.count_ones(..) as u64 == pi.part_of(n)
        })
    }

    /// The first `g` in enumeration order with `Σ ↘ H^g`.
    pub fn conjugate_to_reduce(&self, h: &Subgroup) -> Elem {
        self.ambient
            .elements()
            .iter()
            .copied()
            .find(|&g| self.reduces_into(&conjugate(h, g)))
            .expect("some conjugate is reduced into")
    }

    /// `Σ^g`.
    pub fn conjugate(&self, g: Elem) -> SylowSystem {
        SylowSystem {
            ambient: self.ambient.clone(),
            primes: self.primes.clone(),
            members: self
                .members
                .iter()
                .map(|(pi, s)| (pi.clone(), conjugate(s, g)))
                .collect(),
        }
    }

    /// `Σ ∩ H` as a Sylow system of `H`, when `Σ ↘ H`.
    pub fn restrict(&self, h: &Subgroup) -> Option<SylowSystem> {
        if !self.reduces_into(h) {
            return None;
        }
        let primes = PrimeSet::of_order(h.order());
        let members = primes
            .subsets()
            .into_iter()
            .map(|pi| {
                let s = intersection(self.member(&pi), h).expect("same parent");
                (pi, s)
            })
            .collect();
        Some(SylowSystem {
            ambient: h.clone(),
            primes,
            members,
        })
    }
}

/// A Sylow system built from greedily found Hall `p′`-subgroups.
pub fn sylow_system(amb: &Subgroup) -> Result<SylowSystem> {
    if !is_soluble(amb) {
        return Err(Error::InsolubleInput);
    }
    let primes = PrimeSet::of_order(amb.order());
    let basis: Vec<Subgroup> = primes
        .primes()
        .iter()
        .map(|&p| {
            grow_hall(
                amb,
                &PrimeSet::single(p).complement_in(&primes),
                amb.group().trivial(),
            )
        })
        .collect();
    SylowSystem::from_complement_basis(amb, &basis)
}

/// `A ∈ Hall_π`, `B ∈ Hall_π′`, both taken from one Sylow system.
#[derive(Debug, Clone)]
pub struct HallPair {
    pub pi: PrimeSet,
    pub a: Subgroup,
    pub b: Subgroup,
    pub system: SylowSystem,
}

pub fn hall_pair(amb: &Subgroup, pi: &PrimeSet) -> Result<HallPair> {
    Ok(HallPair::from_system(sylow_system(amb)?, pi))
}

impl HallPair {
    pub fn from_system(system: SylowSystem, pi: &PrimeSet) -> HallPair {
        let pi = pi.intersection(system.primes());
        let a = system.member(&pi).clone();
        let b = system.member(&pi.complement_in(system.primes())).clone();
        HallPair { pi, a, b, system }
    }

    pub fn ambient(&self) -> &Subgroup {
        self.system.ambient()
    }

    /// π′ relative to the primes of the ambient order.
    pub fn pi_prime(&self) -> PrimeSet {
        self.pi.complement_in(self.system.primes())
    }

    /// The same system with the roles of `A` and `B` exchanged.
    pub fn swapped(&self) -> HallPair {
        HallPair::from_system(self.system.clone(), &self.pi_prime())
    }

    /// `A` or `B` trivial.
    pub fn is_degenerate(&self) -> bool {
        self.a.is_trivial() || self.b.is_trivial()
    }

    /// `[A, B] = 1`, checked on generators.
    pub fn is_direct(&self) -> bool {
        let grp = self.a.group();
        self.a
            .generators()
            .iter()
            .all(|&x| self.b.generators().iter().all(|&y| grp.commute(x, y)))
    }
}

/// `H = (H ∩ A)(H ∩ B)`, decided by orders.
pub fn is_split(h: &Subgroup, pair: &HallPair) -> Result<bool> {
    let ha = intersection(h, &pair.a)?;
    let hb = intersection(h, &pair.b)?;
    Ok(ha.order() * hb.order() == h.order())
}

/// `G^▷ = N_G(A) ∩ N_G(B)`, `A^▷ = G^▷ ∩ A`, `B^▷ = G^▷ ∩ B`.
pub fn g_triangle(pair: &HallPair) -> Result<(Subgroup, Subgroup, Subgroup)> {
    let amb = pair.ambient();
    let gt = intersection(&normalizer(amb, &pair.a)?, &normalizer(amb, &pair.b)?)?;
    let at = intersection(&gt, &pair.a)?;
    let bt = intersection(&gt, &pair.b)?;
    Ok((gt, at, bt))
}

/// `A × B` as a permutation group on two copies of the points, with the
/// bijection `(ab)* = (a, b)`.
#[derive(Debug, Clone)]
pub struct StarImage {
    pub pair: HallPair,
    pub product_group: Arc<FiniteGroup>,
    forward: Vec<u32>,
}

impl StarImage {
    pub fn new(pair: &HallPair) -> Result<StarImage> {
        let grp = pair.a.group();
        let d = grp.degree();
        let id = grp.perm(IDENTITY);
        let mut gens = Vec::new();
        for &a in pair.a.generators() {
            gens.push(grp.perm(a).direct_sum(id));
        }
        for &b in pair.b.generators() {
            gens.push(id.direct_sum(grp.perm(b)));
        }
        let product_group = FiniteGroup::generate(2 * d, &gens)?;
        let mut forward = vec![u32::MAX; grp.len()];
        for &a in pair.a.elements() {
            for &b in pair.b.elements() {
                let image = grp.perm(a).direct_sum(grp.perm(b));
                let idx = product_group.index_of(&image).expect("pair lies in A × B");
                forward[grp.mul(a, b)] = idx as u32;
            }
        }
        Ok(StarImage {
            pair: pair.clone(),
            product_group,
            forward,
        })
    }

    /// `g*`.
    pub fn forward(&self, g: Elem) -> Elem {
        let v = self.forward[g];
        assert!(v != u32::MAX, "element outside the factorised group");
        v as Elem
    }

    /// `X*` as a mask over `A × B`.
    pub fn image_set(&self, h: &Subgroup) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.product_group.len());
        for &e in h.elements() {
            mask.insert(self.forward(e));
        }
        mask
    }

    /// `H*` when it is a subgroup of `A × B`.
    pub fn image_subgroup(&self, h: &Subgroup) -> Option<Subgroup> {
        let set: Vec<Elem> = self.image_set(h).ones().collect();
        let s = Subgroup::generated_bounded(&self.product_group, &set, set.len())?;
        (s.order() == set.len() as u64).then_some(s)
    }
}
