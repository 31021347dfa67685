//! Linear characters of elementary abelian normal subgroups, their
//! stabilisers, and the balanced-action and extension tests.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup, IDENTITY};
use crate::hall::{hall_pair, HallPair};
use crate::primes::{factorize, PrimeSet};
use crate::subgroups::{derived_subgroup, intersection, is_normal_in};

/// `ν ∈ Irr(N)` for elementary abelian `N` of exponent `p`. Values are
/// exponents of a fixed primitive `p`-th root of unity.
#[derive(Debug, Clone)]
pub struct DualCharacter {
    n: Subgroup,
    p: u64,
    basis: Vec<Elem>,
    coeffs: Vec<u64>,
    coords: Arc<HashMap<Elem, Vec<u64>>>,
}

impl DualCharacter {
    pub fn subgroup(&self) -> &Subgroup {
        &self.n
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `k` with `ν(x) = ζ^k`.
    pub fn value(&self, x: Elem) -> Result<u64> {
        let v = self.coords.get(&x).ok_or(Error::ElementNotInGroup)?;
        Ok(v.iter().zip(&self.coeffs).map(|(a, b)| a * b).sum::<u64>() % self.p)
    }

    pub fn kernel(&self) -> Subgroup {
        let elems: Vec<Elem> = self
            .n
            .elements()
            .iter()
            .copied()
            .filter(|&x| self.value(x).expect("member") == 0)
            .collect();
        Subgroup::from_elems(self.n.group(), &elems)
    }
}

/// Exponent `p` of `n`, if `n` is a nontrivial elementary abelian group.
fn elementary_prime(n: &Subgroup) -> Option<u64> {
    let f = factorize(n.order());
    if f.len() != 1 || !n.is_abelian() {
        return None;
    }
    let p = f[0].0;
    let grp = n.group();
    n.elements()
        .iter()
        .all(|&x| x == IDENTITY || grp.elem_order(x) == p)
        .then_some(p)
}

/// All `p^r` characters of `n`, the trivial one first.
pub fn irr_elementary_abelian(n: &Subgroup) -> Result<Vec<DualCharacter>> {
    let p = elementary_prime(n).ok_or(Error::NotElementaryAbelian)?;
    let grp = n.group();
    let basis = n.generators().to_vec();
    let r = basis.len();
    let mut coords = HashMap::with_capacity(n.elements().len());
    for v in vectors(p, r) {
        let mut x = IDENTITY;
        for (&b, &c) in basis.iter().zip(&v) {
            x = grp.mul(x, grp.pow(b, c));
        }
        coords.insert(x, v);
    }
    debug_assert_eq!(coords.len() as u64, n.order());
    let coords = Arc::new(coords);
    Ok(vectors(p, r)
        .map(|coeffs| DualCharacter {
            n: n.clone(),
            p,
            basis: basis.clone(),
            coeffs,
            coords: coords.clone(),
        })
        .collect())
}

/// All vectors of length `r` over `0..p`, lexicographically.
fn vectors(p: u64, r: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(r as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0; r];
        for slot in v.iter_mut().rev() {
            *slot = k % p;
            k /= p;
        }
        v
    })
}

/// `G_ν`: elements of `amb` fixing `ν` under conjugation.
pub fn stabilizer(amb: &Subgroup, nu: &DualCharacter) -> Result<Subgroup> {
    amb.same_parent(&nu.n)?;
    let grp = amb.group();
    let elems: Vec<Elem> = amb
        .elements()
        .iter()
        .copied()
        .filter(|&g| {
            nu.basis.iter().all(|&b| {
                nu.value(grp.conj(b, g)).expect("normal subgroup") == nu.value(b).expect("member")
            })
        })
        .collect();
    Ok(Subgroup::from_elems(grp, &elems))
}

fn check_normal_elementary(amb: &Subgroup, n: &Subgroup) -> Result<()> {
    amb.same_parent(n)?;
    if !n.is_subgroup_of(amb) || !is_normal_in(n, amb) {
        return Err(Error::NotNormal);
    }
    Ok(())
}

/// Whether `A_ν` is Hall in `G_ν` for every `ν ∈ Irr(N)` when `N` is a
/// π-group, or `B_ν` in `G_ν` when `N` is a π′-group.
pub fn balanced_action(amb: &Subgroup, pi: &PrimeSet, n: &Subgroup) -> Result<bool> {
    check_normal_elementary(amb, n)?;
    let chars = irr_elementary_abelian(n)?;
    balanced_action_pair(&hall_pair(amb, pi)?, &chars)
}

pub fn balanced_action_pair(pair: &HallPair, chars: &[DualCharacter]) -> Result<bool> {
    let amb = pair.ambient();
    for nu in chars {
        let (side, set) = if pair.pi.contains(nu.p) {
            (&pair.a, pair.pi.clone())
        } else {
            (&pair.b, pair.pi_prime())
        };
        let g_nu = stabilizer(amb, nu)?;
        if intersection(side, &g_nu)?.order() != set.part_of(g_nu.order()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `ν` extends to a (necessarily linear) character of `h`: `ν` is
/// `h`-invariant and `N ∩ h′ ≤ ker ν`. Requires `N ≤ h`.
pub fn extends_to(nu: &DualCharacter, h: &Subgroup) -> Result<bool> {
    h.same_parent(&nu.n)?;
    if !nu.n.is_subgroup_of(h) {
        return Err(Error::InvalidInput("subgroup does not contain N".into()));
    }
    // The restriction of an extension is h-invariant.
    if stabilizer(h, nu)?.order() != h.order() {
        return Ok(false);
    }
    let meet = intersection(&nu.n, &derived_subgroup(h))?;
    Ok(meet.is_subgroup_of(&nu.kernel()))
}
