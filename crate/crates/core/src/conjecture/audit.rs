//! Structural properties every minimal Con* counterexample must have.
//!
//! A group failing Con* while failing any of these would contradict the
//! theory, so the audit is run on violators and reported on everything else.

use serde::{Deserialize, Serialize};

use crate::conjecture::characters::{
    balanced_action_pair, extends_to, irr_elementary_abelian, stabilizer,
};
use crate::conjecture::con::scon_details;
use crate::error::Result;
use crate::group::Subgroup;
use crate::hall::{hall_pair, hall_subgroup};
use crate::primes::PrimeSet;
use crate::quotient::quotient;
use crate::radicals::{o_pi, o_pi_o_pi_prime};
use crate::subgroups::{center, derived_subgroup, normal_subgroups};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditProperty {
    /// `G / O_π O_π′` has no normal Hall π- or π′-subgroup.
    NoNormalHallAboveRadical,
    /// Every prime with a nontrivial cyclic Sylow subgroup divides `|G′|`.
    CyclicSylowInDerived,
    /// For each elementary abelian normal `N` with balanced action, some `ν`
    /// fails to extend to `G_ν` and some `G_ν / ker ν` fails SCon.
    NoExtensionShortcut,
    /// `Z(G) ≤ G′`.
    CentreInDerived,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditItem {
    pub property: AuditProperty,
    pub holds: bool,
}

pub fn minimal_counterexample_audit(amb: &Subgroup, pi: &PrimeSet) -> Result<Vec<AuditItem>> {
    let pair = hall_pair(amb, pi)?;
    let universe = PrimeSet::of_order(amb.order());
    let pi = pair.pi.clone();
    let derived = derived_subgroup(amb);

    let radical = o_pi_o_pi_prime(amb, &pi)?;
    let q = quotient(amb, &radical)?;
    let top = q.group.whole();
    let has_normal_hall = [pi.clone(), pi.complement_in(&universe)].iter().any(|s| {
        let o = o_pi(&top, s).expect("soluble quotient");
        o.order() == s.part_of(top.order())
    });

    let cyclic_ok = universe.primes().iter().all(|&p| {
        let sylow = hall_subgroup(amb, &PrimeSet::single(p)).expect("soluble");
        !sylow.is_cyclic() || derived.order().is_multiple_of(p)
    });

    let mut shortcut_free = true;
    for n in normal_subgroups(amb) {
        if n.is_trivial() {
            continue;
        }
        let Ok(chars) = irr_elementary_abelian(&n) else {
            continue;
        };
        if !balanced_action_pair(&pair, &chars)? {
            continue;
        }
        let mut all_extend = true;
        let mut all_scon = true;
        for nu in &chars {
            let g_nu = stabilizer(amb, nu)?;
            all_extend &= extends_to(nu, &g_nu)?;
            let top = quotient(&g_nu, &nu.kernel())?.group.whole();
            let (report, _) = scon_details(&hall_pair(&top, &pi)?)?;
            all_scon &= report.is_scon == Some(true);
        }
        if all_extend || all_scon {
            shortcut_free = false;
            break;
        }
    }

    Ok(vec![
        AuditItem {
            property: AuditProperty::NoNormalHallAboveRadical,
            holds: !has_normal_hall,
        },
        AuditItem {
            property: AuditProperty::CyclicSylowInDerived,
            holds: cyclic_ok,
        },
        AuditItem {
            property: AuditProperty::NoExtensionShortcut,
            holds: shortcut_free,
        },
        AuditItem {
            property: AuditProperty::CentreInDerived,
            holds: center(amb).is_subgroup_of(&derived),
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::perm::Permutation;

    fn holds(items: &[AuditItem], p: AuditProperty) -> bool {
        items.iter().find(|i| i.property == p).unwrap().holds
    }

    #[test]
    fn sym4_and_frobenius() {
        let gens = [
            Permutation::parse_cycles(4, "(0 1)").unwrap(),
            Permutation::parse_cycles(4, "(0 1 2 3)").unwrap(),
        ];
        let s4 = FiniteGroup::generate(4, &gens).unwrap();
        let items = minimal_counterexample_audit(&s4.whole(), &"2".parse().unwrap()).unwrap();
        assert!(holds(&items, AuditProperty::CentreInDerived));
        // Sym(4)/V4 ≅ Sym(3) has a normal Hall 3-subgroup.
        assert!(!holds(&items, AuditProperty::NoNormalHallAboveRadical));

        let t = Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)").unwrap();
        let m = Permutation::from_images((0..7).map(|x| (3 * x) % 7).collect()).unwrap();
        let f = FiniteGroup::generate(7, &[t, m]).unwrap();
        let items = minimal_counterexample_audit(&f.whole(), &"7".parse().unwrap()).unwrap();
        assert!(!holds(&items, AuditProperty::NoNormalHallAboveRadical));
        // Sylow 2 and 3 are cyclic but G′ = C7.
        assert!(!holds(&items, AuditProperty::CyclicSylowInDerived));
        assert!(!holds(&items, AuditProperty::NoExtensionShortcut));
    }
}
