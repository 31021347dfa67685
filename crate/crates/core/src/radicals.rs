//! Derived and Fitting series, `O_π` and solubility tests.

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::hall::hall_subgroup;
use crate::primes::PrimeSet;
use crate::quotient::quotient;
use crate::subgroups::{core, derived_subgroup, join};

/// `amb ▷ amb′ ▷ amb″ ▷ …`, stopping at the first repeated term.
pub fn derived_series(amb: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![amb.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_soluble(amb: &Subgroup) -> bool {
    derived_series(amb).last().expect("nonempty").is_trivial()
}

/// Every Sylow subgroup is normal, i.e. for each prime `p` the `p`-elements
/// number exactly the `p`-part of the order.
pub fn is_nilpotent(amb: &Subgroup) -> bool {
    let grp = amb.group();
    let order = amb.order();
    PrimeSet::of_order(order).primes().iter().all(|&p| {
        let p_part = PrimeSet::single(p).part_of(order);
        let count = amb
            .elements()
            .iter()
            .filter(|&&e| PrimeSet::single(p).is_pi_number(grp.elem_order(e)))
            .count() as u64;
        count == p_part
    })
}

/// `O_π(amb)`, the core of a Hall π-subgroup.
pub fn o_pi(amb: &Subgroup, pi: &PrimeSet) -> Result<Subgroup> {
    let h = hall_subgroup(amb, pi)?;
    core(amb, &h)
}

/// `O_π(amb) O_π′(amb)`.
pub fn o_pi_o_pi_prime(amb: &Subgroup, pi: &PrimeSet) -> Result<Subgroup> {
    let universe = PrimeSet::of_order(amb.order());
    let a = o_pi(amb, pi)?;
    let b = o_pi(amb, &pi.complement_in(&universe))?;
    join(&a, &b)
}

/// `F(amb)`, the join of `O_p` over the primes dividing the order.
pub fn fitting(amb: &Subgroup) -> Result<Subgroup> {
    let mut f = amb.group().trivial();
    for &p in PrimeSet::of_order(amb.order()).primes() {
        f = join(&f, &o_pi(amb, &PrimeSet::single(p))?)?;
    }
    Ok(f)
}

/// Ascending series `1 = F_0 < F_1 < … < F_h = amb` with
/// `F_{i+1} / F_i = F(amb / F_i)`.
pub fn fitting_series(amb: &Subgroup) -> Result<Vec<Subgroup>> {
    if !is_soluble(amb) {
        return Err(Error::InsolubleInput);
    }
    let mut series = vec![amb.group().trivial()];
    while series.last().expect("nonempty").order() < amb.order() {
        let q = quotient(amb, series.last().expect("nonempty"))?;
        let f = fitting(&q.group.whole())?;
        series.push(q.preimage(&f));
    }
    Ok(series)
}

pub fn fitting_height(amb: &Subgroup) -> Result<usize> {
    Ok(fitting_series(amb)?.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::perm::Permutation;
    use crate::subgroups::normal_subgroups;
    use std::sync::Arc;

    fn group(degree: usize, gens: &[&str]) -> Arc<FiniteGroup> {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        FiniteGroup::generate(degree, &gens).unwrap()
    }

    fn sym4() -> Arc<FiniteGroup> {
        group(4, &["(0 1)", "(0 1 2 3)"])
    }

    #[test]
    fn sym4_series() {
        let g = sym4();
        let orders: Vec<u64> = derived_series(&g.whole())
            .iter()
            .map(|s| s.order())
            .collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(is_soluble(&g.whole()));
        assert!(!is_nilpotent(&g.whole()));
        assert_eq!(fitting(&g.whole()).unwrap().order(), 4);
        let fs: Vec<u64> = fitting_series(&g.whole())
            .unwrap()
            .iter()
            .map(|s| s.order())
            .collect();
        assert_eq!(fs, vec![1, 4, 12, 24]);
    }

    #[test]
    fn o_pi_matches_exhaustive_scan() {
        let g = sym4();
        for (p, want) in [(2, 4), (3, 1)] {
            let pi = PrimeSet::single(p);
            let o = o_pi(&g.whole(), &pi).unwrap();
            assert_eq!(o.order(), want);
            let largest = normal_subgroups(&g.whole())
                .into_iter()
                .filter(|n| pi.is_pi_number(n.order()))
                .max_by_key(|n| n.order())
                .unwrap();
            assert_eq!(o, largest);
        }
    }

    #[test]
    fn alt5_is_insoluble() {
        let g = group(5, &["(0 1 2)", "(0 1 2 3 4)"]);
        assert_eq!(g.order(), 60);
        assert!(!is_soluble(&g.whole()));
        assert_eq!(
            o_pi(&g.whole(), &PrimeSet::single(2)).unwrap_err(),
            Error::InsolubleInput
        );
        assert_eq!(
            fitting_height(&g.whole()).unwrap_err(),
            Error::InsolubleInput
        );
    }

    #[test]
    fn abelian_groups_are_nilpotent() {
        let g = group(7, &["(0 1 2)", "(3 4 5 6)"]);
        assert!(is_nilpotent(&g.whole()));
        assert_eq!(fitting_height(&g.whole()).unwrap(), 1);
        let q8 = group(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]);
        assert_eq!(q8.order(), 8);
        assert!(is_nilpotent(&q8.whole()));
    }
}
