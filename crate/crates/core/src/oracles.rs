//! Instance checks for the known theorems about class counts.
//!
//! Each check detects whether a theorem's hypotheses hold on a concrete
//! group and, when they do, whether its conclusion holds. A conclusion
//! failing under met hypotheses is a refutation, which in practice means a
//! bug in this crate.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::automorphism::AutAction;
use crate::classes::{ccl, ccl_pi, conjugation_orbit_in};
use crate::conjecture::characters::{
    balanced_action_pair, extends_to, irr_elementary_abelian, stabilizer,
};
use crate::conjecture::con::{con_check, con_check_pair, scon_details};
use crate::conjecture::counts::f_count;
use crate::conjecture::height::{pi_height, Height};
use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};
use crate::hall::{g_triangle, hall_pair, HallPair, SylowSystem};
use crate::primes::{is_prime, PrimeSet};
use crate::quotient::quotient;
use crate::radicals::is_soluble;
use crate::subgroups::{
    all_subgroups, center, centralizer_of_element, derived_subgroup, intersection, is_normal_in,
    join, normal_subgroups, DEFAULT_SUBGROUP_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Oracle {
    Gallagher,
    NormalHallCentralizer,
    Glauberman,
    TheoremA,
    TheoremB,
    TheoremC,
    TheoremD,
    StructuralLemma,
    EasySubgroup,
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Oracle::Gallagher => "gallagher",
            Oracle::NormalHallCentralizer => "normal-hall-centralizer",
            Oracle::Glauberman => "glauberman",
            Oracle::TheoremA => "theorem-a",
            Oracle::TheoremB => "theorem-b",
            Oracle::TheoremC => "theorem-c",
            Oracle::TheoremD => "theorem-d",
            Oracle::StructuralLemma => "structural-lemma",
            Oracle::EasySubgroup => "easy-subgroup",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub oracle: Oracle,
    /// Hypotheses met.
    pub applicable: bool,
    /// False when a sweep cap stopped the hypotheses from being decided.
    pub checked: bool,
    /// Conclusion holds; vacuously true when not applicable.
    pub holds: bool,
    pub detail: String,
}

impl OracleOutcome {
    fn new(oracle: Oracle, applicable: bool, holds: bool, detail: String) -> Self {
        OracleOutcome {
            oracle,
            applicable,
            checked: true,
            holds: !applicable || holds,
            detail,
        }
    }

    fn not_applicable(oracle: Oracle, detail: impl Into<String>) -> Self {
        Self::new(oracle, false, true, detail.into())
    }

    fn unchecked(oracle: Oracle, detail: impl Into<String>) -> Self {
        OracleOutcome {
            oracle,
            applicable: false,
            checked: false,
            holds: true,
            detail: detail.into(),
        }
    }

    /// Hypotheses met and conclusion false.
    pub fn refuted(&self) -> bool {
        self.applicable && self.checked && !self.holds
    }
}

fn is_pi_elem(amb: &Subgroup, pi: &PrimeSet, x: Elem) -> bool {
    pi.is_pi_number(amb.group().elem_order(x))
}

/// Result of `ccl_π(G) ≤ ccl_π(N) ccl_π(G/N)` and its equality criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallagherOutcome {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub equality: bool,
    /// `h ∈ N G_g` whenever `g` is a π-element and `[g, h] ∈ N`.
    pub condition: bool,
    pub condition_matches: bool,
}

impl GallagherOutcome {
    pub fn outcome(&self) -> OracleOutcome {
        OracleOutcome::new(
            Oracle::Gallagher,
            true,
            self.holds && self.condition_matches,
            format!(
                "{} <= {}, equality {}, condition {}",
                self.lhs, self.rhs, self.equality, self.condition
            ),
        )
    }
}

pub fn gallagher_check(amb: &Subgroup, n: &Subgroup, pi: &PrimeSet) -> Result<GallagherOutcome> {
    amb.same_parent(n)?;
    if !n.is_subgroup_of(amb) || !is_normal_in(n, amb) {
        return Err(Error::NotNormal);
    }
    let grp = amb.group();
    let lhs = ccl_pi(amb, pi);
    let rhs = ccl_pi(n, pi) * ccl_pi(&quotient(amb, n)?.group.whole(), pi);
    // The condition is invariant under simultaneous conjugation of (g, h),
    // so class representatives suffice for g.
    let classes = amb.classes();
    let mut condition = true;
    'reps: for &g in &classes.representatives {
        if !is_pi_elem(amb, pi, g) || !amb.contains(g) {
            continue;
        }
        let ng = join(n, &centralizer_of_element(amb, g))?;
        for &h in amb.elements() {
            if n.contains(grp.commutator(g, h)) && !ng.contains(h) {
                condition = false;
                break 'reps;
            }
        }
    }
    let equality = lhs == rhs;
    Ok(GallagherOutcome {
        lhs,
        rhs,
        holds: lhs <= rhs,
        equality,
        condition,
        condition_matches: equality == condition,
    })
}

/// With `A` normal and `y` a π′-element: `ccl(A_y) ≤ ccl(A)`, with equality
/// iff `y` centralises `A`.
pub fn normal_hall_centralizer_check(pair: &HallPair, y: Elem) -> Result<OracleOutcome> {
    let amb = pair.ambient();
    if !is_normal_in(&pair.a, amb) {
        return Err(Error::HallNotNormal);
    }
    if !amb.contains(y) || !is_pi_elem(amb, &pair.pi_prime(), y) {
        return Err(Error::HypothesisNotMet(
            "element is not a π′-element of the group".into(),
        ));
    }
    let a_y = centralizer_of_element(&pair.a, y);
    let (c_y, c_a) = (ccl(&a_y), ccl(&pair.a));
    let holds = c_y <= c_a && ((c_y == c_a) == (a_y == pair.a));
    Ok(OracleOutcome::new(
        Oracle::NormalHallCentralizer,
        true,
        holds,
        format!("ccl(A_y) = {c_y}, ccl(A) = {c_a}"),
    ))
}

/// Coprime action: `T`-invariant classes of `H` number `ccl(H_T)`, and only
/// the trivial action fixes every class.
pub fn glauberman_check(action: &AutAction) -> Result<OracleOutcome> {
    let h = action.target().order();
    let t = action.order();
    if h.gcd(&t) != 1 {
        return Err(Error::NonCoprime { left: h, right: t });
    }
    if !is_soluble(&action.as_group().whole()) {
        return Err(Error::InsolubleInput);
    }
    let invariant = action.invariant_class_count();
    let fixed = action.fixed_point_class_count();
    let rigid = invariant < ccl(action.target()) || t == 1;
    Ok(OracleOutcome::new(
        Oracle::Glauberman,
        true,
        invariant == fixed && rigid,
        format!("|T| = {t}, invariant classes {invariant}, ccl(H_T) = {fixed}"),
    ))
}

/// Height at most 2½ implies Con*.
pub fn theorem_a_check(pair: &HallPair) -> Result<OracleOutcome> {
    let height = pi_height(pair)?.height;
    let applicable = height <= Height::from_doubled(5);
    let report = con_check_pair(pair);
    Ok(OracleOutcome::new(
        Oracle::TheoremA,
        applicable,
        report.is_con_star,
        format!("height {height}, excess {}", report.excess),
    ))
}

/// Every subgroup of `amb` is Con_π. `None` when the sweep is refused.
fn every_subgroup_con(amb: &Subgroup, pi: &PrimeSet) -> Result<Option<bool>> {
    let subs = match all_subgroups(amb, DEFAULT_SUBGROUP_CAP) {
        Ok(s) => s,
        Err(Error::BoundExceeded { .. }) | Err(Error::CapExceeded { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    for h in &subs {
        if !con_check(h, pi)?.is_con {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// `G/N` cyclic, coprime to `N` and a π-group, and every subgroup of `N`
/// Con_π: then `G` is Con_π, and Con_π* when `N` is.
pub fn theorem_b_check(amb: &Subgroup, n: &Subgroup, pi: &PrimeSet) -> Result<OracleOutcome> {
    amb.same_parent(n)?;
    if !n.is_subgroup_of(amb) || !is_normal_in(n, amb) {
        return Err(Error::NotNormal);
    }
    let q = quotient(amb, n)?;
    let top = q.group.whole();
    if !top.is_cyclic() || n.order().gcd(&top.order()) != 1 || !pi.is_pi_number(top.order()) {
        return Ok(OracleOutcome::not_applicable(
            Oracle::TheoremB,
            "quotient not a cyclic coprime π-group",
        ));
    }
    match every_subgroup_con(n, pi)? {
        None => Ok(OracleOutcome::unchecked(
            Oracle::TheoremB,
            format!("subgroup sweep of order {} refused", n.order()),
        )),
        Some(false) => Ok(OracleOutcome::not_applicable(
            Oracle::TheoremB,
            "some subgroup of N is not Con",
        )),
        Some(true) => {
            let g = con_check(amb, pi)?;
            let star_needed = con_check(n, pi)?.is_con_star;
            Ok(OracleOutcome::new(
                Oracle::TheoremB,
                true,
                g.is_con && (!star_needed || g.is_con_star),
                format!("|N| = {}, excess {}", n.order(), g.excess),
            ))
        }
    }
}

/// Which alternative of the elementary abelian criterion applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremCCase {
    /// Every `ν` extends to `G_ν`.
    Extends,
    /// Every `G_ν / ker ν` is SCon.
    StabilizerScon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCOutcome {
    pub balanced: bool,
    pub case: Option<TheoremCCase>,
    pub outcome: OracleOutcome,
}

/// Balanced action on `Irr(N)` and every `G_ν / N` Con_π, plus one of the
/// two alternatives: then `G` is Con_π, and Con_π* when `G/N` is.
pub fn theorem_c_check(amb: &Subgroup, n: &Subgroup, pi: &PrimeSet) -> Result<TheoremCOutcome> {
    amb.same_parent(n)?;
    if !n.is_subgroup_of(amb) || !is_normal_in(n, amb) {
        return Err(Error::NotNormal);
    }
    let chars = irr_elementary_abelian(n)?;
    let pair = hall_pair(amb, pi)?;
    let pi = pair.pi.clone();
    if !balanced_action_pair(&pair, &chars)? {
        return Ok(TheoremCOutcome {
            balanced: false,
            case: None,
            outcome: OracleOutcome::not_applicable(Oracle::TheoremC, "imbalanced action"),
        });
    }
    let mut quotients_con = true;
    let mut all_extend = true;
    let mut all_scon = true;
    for nu in &chars {
        let g_nu = stabilizer(amb, nu)?;
        quotients_con &= con_check(&quotient(&g_nu, n)?.group.whole(), &pi)?.is_con;
        all_extend &= extends_to(nu, &g_nu)?;
        if all_scon {
            let top = quotient(&g_nu, &nu.kernel())?.group.whole();
            all_scon &= scon_details(&hall_pair(&top, &pi)?)?.0.is_scon == Some(true);
        }
    }
    let case = if !quotients_con {
        None
    } else if all_extend {
        Some(TheoremCCase::Extends)
    } else if all_scon {
        Some(TheoremCCase::StabilizerScon)
    } else {
        None
    };
    let g = con_check_pair(&pair);
    let top_star = con_check(&quotient(amb, n)?.group.whole(), &pi)?.is_con_star;
    let outcome = OracleOutcome::new(
        Oracle::TheoremC,
        case.is_some(),
        g.is_con && (!top_star || g.is_con_star),
        format!("|N| = {}, case {case:?}, excess {}", n.order(), g.excess),
    );
    Ok(TheoremCOutcome {
        balanced: true,
        case,
        outcome,
    })
}

/// `M` central of prime order with `M ∩ G′ = 1` and every subgroup of `G/M`
/// Con_π: then `G` is Con_π, Con_π* when `G/M` is, and SCon_π (over its
/// central clauses) when every central subgroup of prime order qualifies.
pub fn theorem_d_check(amb: &Subgroup, m: &Subgroup, pi: &PrimeSet) -> Result<OracleOutcome> {
    amb.same_parent(m)?;
    let z = center(amb);
    if !is_prime(m.order()) || !m.is_subgroup_of(&z) {
        return Err(Error::NotCentralPrime);
    }
    let derived = derived_subgroup(amb);
    let qualifies = |m: &Subgroup| -> Result<Option<bool>> {
        if !intersection(m, &derived)?.is_trivial() {
            return Ok(Some(false));
        }
        every_subgroup_con(&quotient(amb, m)?.group.whole(), pi)
    };
    match qualifies(m)? {
        None => {
            return Ok(OracleOutcome::unchecked(
                Oracle::TheoremD,
                format!(
                    "subgroup sweep of order {} refused",
                    amb.order() / m.order()
                ),
            ))
        }
        Some(false) => {
            return Ok(OracleOutcome::not_applicable(
                Oracle::TheoremD,
                "M meets G′ or some subgroup of G/M is not Con",
            ))
        }
        Some(true) => {}
    }
    let pair = hall_pair(amb, pi)?;
    let (g, clauses) = scon_details(&pair)?;
    let top_star = con_check(&quotient(amb, m)?.group.whole(), pi)?.is_con_star;
    let mut holds = g.is_con && (!top_star || g.is_con_star);
    let mut all_qualify = true;
    for &p in PrimeSet::of_order(z.order()).primes() {
        for c in crate::subgroups::prime_order_subgroups(amb, &z, p) {
            all_qualify &= qualifies(&c)? == Some(true);
        }
    }
    let literal_scon = g.is_con && clauses.iter().all(|c| c.holds);
    if all_qualify {
        // The conclusion covers central subgroups only.
        holds &= clauses.iter().filter(|c| c.central).all(|c| c.holds);
    }
    Ok(OracleOutcome::new(
        Oracle::TheoremD,
        true,
        holds,
        format!(
            "|M| = {}, excess {}, all central qualify {all_qualify}, literal scon {literal_scon}",
            m.order(),
            g.excess
        ),
    ))
}

/// Under `A_◁2 = A`: `B = B^▷ B_◁`, `B_x = B^▷_x (B_◁)_x`, `G`-conjugacy on
/// `A` agrees with `AB^▷`-conjugacy, and `f^G_A(x) = |B^▷ : B^▷_x|` when the
/// system reduces into `G_x`.
pub fn structural_lemma_check(pair: &HallPair) -> Result<OracleOutcome> {
    let amb = pair.ambient();
    let h = pi_height(pair)?;
    let top = h.series.len() - 1;
    if h.a_series[2.min(top)] != pair.a {
        return Err(Error::HypothesisNotMet(
            "A is not contained in the second term".into(),
        ));
    }
    let (gt, _, bt) = g_triangle(pair)?;
    let b_low = &h.b_series[1.min(top)];
    let mut failures = Vec::new();
    if !pair.system.reduces_into(&gt) {
        failures.push("system does not reduce into G^▷");
    }
    let size = |x: &Subgroup, y: &Subgroup| -> Result<u64> {
        Ok(x.order() * y.order() / intersection(x, y)?.order())
    };
    if size(&bt, b_low)? != pair.b.order() {
        failures.push("(i)");
    }
    let abt = join(&pair.a, &bt)?;
    let mut ok_ii = true;
    let mut ok_iii = true;
    let mut ok_iv = true;
    for &x in pair.a.elements() {
        let b_x = centralizer_of_element(&pair.b, x);
        let bt_x = centralizer_of_element(&bt, x);
        let bl_x = centralizer_of_element(b_low, x);
        ok_ii &= size(&bt_x, &bl_x)? == b_x.order();
        let mut in_a: Vec<Elem> = conjugation_orbit_in(amb, x)
            .into_iter()
            .filter(|&y| pair.a.contains(y))
            .collect();
        let mut local = conjugation_orbit_in(&abt, x);
        in_a.sort_unstable();
        local.sort_unstable();
        ok_iii &= in_a == local;
        if pair.system.reduces_into(&centralizer_of_element(amb, x)) {
            ok_iv &= f_count(amb, &pair.a, x)? == bt.order() / bt_x.order();
        }
    }
    for (ok, name) in [(ok_ii, "(ii)"), (ok_iii, "(iii)"), (ok_iv, "(iv)")] {
        if !ok {
            failures.push(name);
        }
    }
    Ok(OracleOutcome::new(
        Oracle::StructuralLemma,
        true,
        failures.is_empty(),
        if failures.is_empty() {
            format!("|B^▷| = {}", bt.order())
        } else {
            format!("failed {}", failures.join(", "))
        },
    ))
}

/// With `S_x` a Hall π′-subgroup of `G_x`: `ccl(S_x) ≤ ccl(B)` for every
/// π-element `x` gives Con_π; strict inequality whenever `|S_x| < |B|`
/// gives Con_π*.
pub fn easy_subgroup_check(pair: &HallPair) -> Result<OracleOutcome> {
    let amb = pair.ambient();
    let pi_prime = pair.pi_prime();
    let ccl_b = ccl(&pair.b);
    let mut weak = true;
    let mut strong = true;
    for &x in &amb.classes().representatives {
        if !amb.contains(x) || !is_pi_elem(amb, &pair.pi, x) {
            continue;
        }
        let s = crate::hall::hall_subgroup(&centralizer_of_element(amb, x), &pi_prime)?;
        let c = ccl(&s);
        weak &= c <= ccl_b;
        strong &= s.order() == pair.b.order() || c < ccl_b;
    }
    let report = con_check_pair(pair);
    Ok(OracleOutcome::new(
        Oracle::EasySubgroup,
        weak,
        report.is_con && (!strong || report.is_con_star),
        format!("strong form {strong}, excess {}", report.excess),
    ))
}

/// Lemma on reduction: (i) `Σ ↘ G_g` puts `g` in every member whose order
/// `|g|` divides; (ii) every subgroup has a conjugate reduced into; (iii)
/// `Σ ∩ H` is a Sylow system of `H` that reduces into exactly the
/// subgroups of `H` that `Σ` does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOutcome {
    pub part_i: bool,
    pub part_ii: bool,
    pub part_iii: bool,
    pub subgroups_checked: usize,
}

impl ReductionOutcome {
    pub fn holds(&self) -> bool {
        self.part_i && self.part_ii && self.part_iii
    }
}

pub fn reduction_lemma_check(system: &SylowSystem, subgroups: &[Subgroup]) -> ReductionOutcome {
    let amb = system.ambient();
    let grp = amb.group();
    let part_i = amb.elements().iter().all(|&g| {
        !system.reduces_into(&centralizer_of_element(amb, g))
            || system
                .members()
                .filter(|(_, s)| s.order() % grp.elem_order(g) == 0)
                .all(|(_, s)| s.contains(g))
    });
    let part_ii = subgroups.iter().all(|h| {
        let g = system.conjugate_to_reduce(h);
        system.reduces_into(&crate::subgroups::conjugate(h, g))
    });
    let part_iii = subgroups.iter().all(|h| {
        let Some(local) = system.restrict(h) else {
            return true;
        };
        local.is_valid()
            && subgroups
                .iter()
                .filter(|l| l.is_subgroup_of(h))
                .all(|l| local.reduces_into(l) == system.reduces_into(l))
    });
    ReductionOutcome {
        part_i,
        part_ii,
        part_iii,
        subgroups_checked: subgroups.len(),
    }
}

/// One orientation of every applicable oracle for `(amb, pi)`.
fn run_oriented(pair: &HallPair, out: &mut Vec<OracleOutcome>) -> Result<()> {
    let amb = pair.ambient();
    if is_normal_in(&pair.a, amb) {
        let pi_prime = pair.pi_prime();
        for &y in &amb.classes().representatives {
            if is_pi_elem(amb, &pi_prime, y) {
                out.push(normal_hall_centralizer_check(pair, y)?);
            }
        }
        if !pair.a.is_trivial() {
            let action = AutAction::by_conjugation(&pair.a, pair.b.generators())?;
            out.push(glauberman_check(&action)?);
        }
    }
    match structural_lemma_check(pair) {
        Ok(o) => out.push(o),
        Err(Error::HypothesisNotMet(_)) => {}
        Err(e) => return Err(e),
    }
    out.push(easy_subgroup_check(pair)?);
    Ok(())
}

/// Every oracle over `(amb, pi)` and, for the asymmetric ones, `(amb, π′)`.
pub fn run_all(amb: &Subgroup, pi: &PrimeSet) -> Result<Vec<OracleOutcome>> {
    let pair = hall_pair(amb, pi)?;
    let pi = pair.pi.clone();
    let pi_prime = pair.pi_prime();
    let mut out = Vec::new();
    let normals = normal_subgroups(amb);
    for n in &normals {
        out.push(gallagher_check(amb, n, &pi)?.outcome());
        out.push(gallagher_check(amb, n, &pi_prime)?.outcome());
    }
    out.push(theorem_a_check(&pair)?);
    for n in &normals {
        out.push(theorem_b_check(amb, n, &pi)?);
        out.push(theorem_b_check(amb, n, &pi_prime)?);
        if !n.is_trivial() && irr_elementary_abelian(n).is_ok() {
            out.push(theorem_c_check(amb, n, &pi)?.outcome);
        }
    }
    let z = center(amb);
    for &p in PrimeSet::of_order(z.order()).primes() {
        for m in crate::subgroups::prime_order_subgroups(amb, &z, p) {
            out.push(theorem_d_check(amb, &m, &pi)?);
        }
    }
    run_oriented(&pair, &mut out)?;
    run_oriented(&pair.swapped(), &mut out)?;
    Ok(out)
}
