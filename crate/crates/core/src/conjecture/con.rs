//! Con, Con* and SCon verdicts for a coprime factorisation `G = AB`.

use serde::{Deserialize, Serialize};

use crate::classes::ccl;
use crate::error::Result;
use crate::group::Subgroup;
use crate::hall::{hall_pair, HallPair};
use crate::primes::PrimeSet;
use crate::quotient::quotient;
use crate::subgroups::{center, normal_subgroups};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConReport {
    pub order: u64,
    pub pi: PrimeSet,
    pub ccl_g: u64,
    pub ccl_a: u64,
    pub ccl_b: u64,
    /// `ccl(G) − ccl(A) ccl(B)`; positive on a violation.
    pub excess: i64,
    pub is_con: bool,
    pub is_direct_product: bool,
    pub is_con_star: bool,
    /// `A` or `B` trivial, so the inequality is an equality by construction.
    pub degenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub is_scon: Option<bool>,
}

pub fn con_check(amb: &Subgroup, pi: &PrimeSet) -> Result<ConReport> {
    Ok(con_check_pair(&hall_pair(amb, pi)?))
}

pub fn con_check_pair(pair: &HallPair) -> ConReport {
    let amb = pair.ambient();
    let ccl_g = ccl(amb);
    let ccl_a = ccl(&pair.a);
    let ccl_b = ccl(&pair.b);
    let bound = ccl_a * ccl_b;
    let is_direct_product = pair.is_direct();
    ConReport {
        order: amb.order(),
        pi: pair.pi.clone(),
        ccl_g,
        ccl_a,
        ccl_b,
        excess: ccl_g as i64 - bound as i64,
        is_con: ccl_g <= bound,
        is_direct_product,
        is_con_star: ccl_g < bound || is_direct_product,
        degenerate: pair.is_degenerate(),
        is_scon: None,
    }
}

/// One difference inequality of the SCon definition, for a normal subgroup
/// `N` of prime order `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SconClause {
    pub p: u64,
    /// `p ∈ π`: the clause compares against `A`, otherwise against `B`.
    pub in_pi: bool,
    pub central: bool,
    /// `ccl(G) − ccl(G/N)`.
    pub lhs: u64,
    /// `(ccl(X) − ccl(X/N)) ccl(Y)` with `N ≤ X`.
    pub rhs: u64,
    pub holds: bool,
}

/// The Con report with `is_scon` filled in, and every clause evaluated.
///
/// For `p ∈ π` the clause runs over central subgroups of order `p`; for
/// `p ∈ π′` it runs over all normal subgroups of order `p`.
pub fn scon_details(pair: &HallPair) -> Result<(ConReport, Vec<SconClause>)> {
    let amb = pair.ambient();
    let mut report = con_check_pair(pair);
    let z = center(amb);
    let mut clauses = Vec::new();
    for n in normal_subgroups(amb) {
        let p = n.order();
        if !crate::primes::is_prime(p) {
            continue;
        }
        let in_pi = pair.pi.contains(p);
        let central = n.is_subgroup_of(&z);
        if in_pi && !central {
            continue;
        }
        let (x, y) = if in_pi {
            (&pair.a, &pair.b)
        } else {
            (&pair.b, &pair.a)
        };
        let ccl_gn = ccl(&quotient(amb, &n)?.group.whole());
        let ccl_xn = ccl(&quotient(x, &n)?.group.whole());
        let lhs = report.ccl_g - ccl_gn;
        let rhs = (ccl(x) - ccl_xn) * ccl(y);
        clauses.push(SconClause {
            p,
            in_pi,
            central,
            lhs,
            rhs,
            holds: lhs <= rhs,
        });
    }
    report.is_scon = Some(report.is_con && clauses.iter().all(|c| c.holds));
    Ok((report, clauses))
}

pub fn scon_check(amb: &Subgroup, pi: &PrimeSet) -> Result<bool> {
    let (report, _) = scon_details(&hall_pair(amb, pi)?)?;
    Ok(report.is_scon == Some(true))
}
