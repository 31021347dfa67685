//! Commuting probabilities, class fusion counts and the class-count identities.

use num_rational::Ratio;

use crate::classes::{ccl, ccl_pi, conjugation_orbit_in};
use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};
use crate::hall::HallPair;
use crate::primes::PrimeSet;
use crate::subgroups::{centralizer_of_element, product_set};

/// Number of commuting pairs `(h, k) ∈ H × K`.
pub fn commuting_pairs(h: &Subgroup, k: &Subgroup) -> Result<u64> {
    h.same_parent(k)?;
    let grp = h.group();
    let mut count = 0u64;
    for &x in h.elements() {
        for &y in k.elements() {
            if grp.commute(x, y) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `pr(H, K) = |(H, K)| / (|H| |K|)`.
pub fn pr(h: &Subgroup, k: &Subgroup) -> Result<Ratio<u64>> {
    Ok(Ratio::new(commuting_pairs(h, k)?, h.order() * k.order()))
}

/// `f^G_A(t)`: the number of `A`-classes met by `t^G ∩ A`.
pub fn f_count(amb: &Subgroup, a: &Subgroup, t: Elem) -> Result<u64> {
    amb.same_parent(a)?;
    if !a.contains(t) {
        return Err(Error::ElementNotInGroup);
    }
    let classes = a.classes();
    let mut hit = vec![false; classes.count()];
    for x in conjugation_orbit_in(amb, t) {
        if let Some(c) = classes.class_of(x) {
            hit[c] = true;
        }
    }
    Ok(hit.iter().filter(|&&b| b).count() as u64)
}

/// `|G| ccl(G) = Σ_g |G_g|`, with the right side counted as commuting pairs.
pub fn check_class_equation(amb: &Subgroup) -> bool {
    let pairs = commuting_pairs(amb, amb).expect("same parent");
    let classes = amb.classes();
    let by_classes: u64 = classes
        .class_sizes
        .iter()
        .zip(&classes.centralizer_orders)
        .map(|(s, c)| s * c)
        .sum();
    pairs == amb.order() * ccl(amb)
        && by_classes == amb.order() * classes.count() as u64
        && classes.class_sizes.iter().sum::<u64>() == amb.order()
}

/// `ccl(G) = Σ_{r ∈ R} ccl_π′(G_r)` over representatives `R` of the
/// classes of π-elements. Returns both sides.
pub fn pi_split_sum(amb: &Subgroup, pi: &PrimeSet) -> (u64, u64) {
    let grp = amb.group();
    let classes = amb.classes();
    let pi_prime = pi.complement_in(&PrimeSet::of_order(amb.order()));
    let rhs = classes
        .representatives
        .iter()
        .filter(|&&r| pi.is_pi_number(grp.elem_order(r)))
        .map(|&r| ccl_pi(&centralizer_of_element(amb, r), &pi_prime))
        .sum();
    (ccl(amb), rhs)
}

/// `ccl(G) = Σ_{t ∈ T} ccl_π′(G_t) / f^G_A(t)` over representatives `T` of
/// the classes of `A`. Returns both sides, the right side as an exact ratio.
pub fn fused_sum(pair: &HallPair) -> (u64, Ratio<u64>) {
    let amb = pair.ambient();
    let pi_prime = pair.pi_prime();
    let classes = pair.a.classes();
    let mut rhs = Ratio::from_integer(0u64);
    for &t in &classes.representatives {
        let c = ccl_pi(&centralizer_of_element(amb, t), &pi_prime);
        let f = f_count(amb, &pair.a, t).expect("t in A");
        rhs += Ratio::new(c, f);
    }
    (ccl(amb), rhs)
}

/// `ccl(K)/|G:K| < ccl(G) ≤ ccl(K)|G:K|` for a proper subgroup `K`,
/// compared as integers.
pub fn check_subgroup_bounds(amb: &Subgroup, k: &Subgroup) -> bool {
    let idx = amb.order() / k.order();
    let (cg, ck) = (ccl(amb), ccl(k));
    ck < cg * idx && cg <= ck * idx
}

/// Outcome of the commuting-probability monotonicity check for `K < L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrMonotonicity {
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub equality: bool,
    pub equality_condition: bool,
}

impl PrMonotonicity {
    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds && self.equality == self.equality_condition
    }
}

/// `pr(H,K)/|L:K| < pr(H,L) ≤ pr(H,K)`, with equality on the right iff
/// `L = ⋂_{h ∈ H} L_h K`.
pub fn check_pr_monotonicity(h: &Subgroup, k: &Subgroup, l: &Subgroup) -> Result<PrMonotonicity> {
    h.same_parent(k)?;
    h.same_parent(l)?;
    if !k.is_subgroup_of(l) || k.order() == l.order() {
        return Err(Error::InvalidInput(
            "K must be a proper subgroup of L".into(),
        ));
    }
    let idx = l.order() / k.order();
    let prk = pr(h, k)?;
    let prl = pr(h, l)?;
    let mut meet = l.mask().clone();
    for &x in h.elements() {
        let lx = centralizer_of_element(l, x);
        meet.intersect_with(&product_set(&lx, k)?);
    }
    Ok(PrMonotonicity {
        lower_holds: prk / idx < prl,
        upper_holds: prl <= prk,
        equality: prl == prk,
        equality_condition: &meet == l.mask(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::hall::hall_pair;
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

    #[test]
    fn pr_of_sym3() {
        let g = group(3, &["(0 1)", "(0 1 2)"]);
        let w = g.whole();
        assert_eq!(commuting_pairs(&w, &w).unwrap(), 18);
        assert_eq!(pr(&w, &w).unwrap(), Ratio::new(1, 2));
        assert_eq!(
            pr(&w, &w).unwrap() * w.order(),
            Ratio::from_integer(ccl(&w))
        );
    }

    #[test]
    fn f_count_in_sym4() {
        let g = group(4, &["(0 1)", "(0 1 2 3)"]);
        let d8 = Subgroup::generated(&g, &[elem(&g, "(0 1 2 3)"), elem(&g, "(0 2)")]);
        let t = elem(&g, "(0 2)");
        // t^G ∩ D8 = {(0 2), (1 3)}, one D8-class.
        let in_d8: Vec<Elem> = conjugation_orbit_in(&g.whole(), t)
            .into_iter()
            .filter(|&x| d8.contains(x))
            .collect();
        assert_eq!(in_d8.len(), 2);
        assert_eq!(f_count(&g.whole(), &d8, t).unwrap(), 1);
        // Double transpositions: (0 2)(1 3) is central in D8, the other two
        // are swapped by it, so two classes.
        assert_eq!(f_count(&g.whole(), &d8, elem(&g, "(0 1)(2 3)")).unwrap(), 2);
        assert_eq!(f_count(&g.whole(), &g.whole(), t).unwrap(), 1);
        assert!(f_count(&g.whole(), &d8, elem(&g, "(0 1 2)")).is_err());
    }

    #[test]
    fn identities_on_sym4() {
        let g = group(4, &["(0 1)", "(0 1 2 3)"]);
        let w = g.whole();
        assert!(check_class_equation(&w));
        for pi in PrimeSet::of_order(24).subsets() {
            let (l, r) = pi_split_sum(&w, &pi);
            assert_eq!(l, r);
            let pair = hall_pair(&w, &pi).unwrap();
            let (l, r) = fused_sum(&pair);
            assert_eq!(Ratio::from_integer(l), r);
        }
    }

    #[test]
    fn monotonicity_on_sym4() {
        let g = group(4, &["(0 1)", "(0 1 2 3)"]);
        let w = g.whole();
        let k = Subgroup::generated(&g, &[elem(&g, "(0 1 2)")]);
        let l = Subgroup::generated(&g, &[elem(&g, "(0 1 2)"), elem(&g, "(0 1)(2 3)")]);
        let m = check_pr_monotonicity(&w, &k, &l).unwrap();
        assert!(m.holds());
        let m = check_pr_monotonicity(&g.trivial(), &k, &l).unwrap();
        assert!(m.equality && m.equality_condition);
        assert!(check_subgroup_bounds(&w, &l));
    }
}
