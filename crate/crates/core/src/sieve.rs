//! Arithmetic elimination of orders that cannot host a minimal soluble
//! counterexample to Con*.
//!
//! Each order `n` is tested against a fixed sequence of necessary
//! conditions. The first one that fails names the verdict's tag. An order
//! survives when every condition can be met for some coprime split of `n`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{divisors, factorize, is_prime, PrimeSet};

/// Constants the elimination rules depend on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticTables {
    /// `(p, e(p))` for the small primes; every other prime has `e(p) = 2`.
    pub e: Vec<(u64, u32)>,
    /// `|F(G)|` divides this.
    pub fitting_bound: u64,
    /// Primes that can divide the automorphism group of a nilpotent group
    /// whose order divides `fitting_bound`.
    pub aut_prime_whitelist: BTreeSet<u64>,
    /// Largest order the rules are valid for.
    pub max_order: u64,
}

impl Default for ArithmeticTables {
    fn default() -> Self {
        ArithmeticTables {
            e: vec![(2, 7), (3, 5), (5, 4), (7, 3)],
            fitting_bound: 2u64.pow(6) * 3u64.pow(4) * 5u64.pow(3) * 7u64.pow(2),
            aut_prime_whitelist: [2, 3, 5, 7, 13, 31].into_iter().collect(),
            max_order: 2000,
        }
    }
}

impl ArithmeticTables {
    pub fn e(&self, p: u64) -> u32 {
        self.e.iter().find(|&&(q, _)| q == p).map_or(2, |&(_, e)| e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SieveTag {
    /// Every coprime split has an abelian side or a side of order `p³`.
    P3,
    /// With at most three primes, no split has the required fourth powers.
    FewPrimes,
    /// `p^e(p)` divides `n`, or a prime outside the whitelist does.
    Pep,
    /// No admissible Fitting order admits the required coprime automorphisms.
    FittingAut,
    /// Only a normal Hall subgroup could supply the Fitting order.
    PropositionCase,
}

impl fmt::Display for SieveTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SieveTag::P3 => "p3",
            SieveTag::FewPrimes => "few-primes",
            SieveTag::Pep => "pep",
            SieveTag::FittingAut => "fitting-aut",
            SieveTag::PropositionCase => "proposition-case",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveVerdict {
    pub n: u64,
    pub survives: bool,
    pub eliminated_by: Option<SieveTag>,
    pub witness: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberPredicates {
    pub is_cyclic_number: bool,
    pub is_abelian_number: bool,
    pub is_nilpotent_number: bool,
}

/// Every group of order `n` is cyclic iff `gcd(n, φ(n)) = 1`; nilpotent iff
/// no prime `q | n` divides `p^i − 1` for `p^k ∥ n`, `1 ≤ i ≤ k`; abelian
/// iff nilpotent and cube-free.
pub fn number_predicates(n: u64) -> NumberPredicates {
    let f = factorize(n);
    let phi: u64 = f.iter().map(|&(p, k)| (p - 1) * p.pow(k - 1)).product();
    let nilpotent = f.iter().all(|&(p, k)| {
        f.iter()
            .filter(|&&(q, _)| q != p)
            .all(|&(q, _)| (1..=k).all(|i| (p.pow(i) - 1) % q != 0))
    });
    NumberPredicates {
        is_cyclic_number: n.gcd(&phi) == 1,
        is_abelian_number: nilpotent && f.iter().all(|&(_, k)| k <= 2),
        is_nilpotent_number: nilpotent,
    }
}

/// Necessary condition for a nilpotent group of order `m` to admit an
/// automorphism of prime order `p ∤ m`: some prime power `q^i` dividing `m`
/// has `q^i ≡ 1 (mod p)`.
pub fn coprime_aut_possible(m: u64, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if m.is_multiple_of(p) {
        return Err(Error::PrimeDividesOrder { p, m });
    }
    Ok(factorize(m)
        .iter()
        .any(|&(q, k)| (1..=k).any(|i| q.pow(i) % p == 1)))
}

fn is_prime_cube(n: u64) -> bool {
    matches!(factorize(n).as_slice(), [(_, 3)])
}

fn eliminated(n: u64, tag: SieveTag, witness: String) -> SieveVerdict {
    SieveVerdict {
        n,
        survives: false,
        eliminated_by: Some(tag),
        witness,
    }
}

/// Splits `π | π′` of the primes of `n`, each listed once with the smallest
/// prime on the π side.
fn splits(primes: &PrimeSet) -> Vec<PrimeSet> {
    let Some(&smallest) = primes.primes().first() else {
        return Vec::new();
    };
    primes
        .subsets()
        .into_iter()
        .filter(|pi| pi.contains(smallest) && pi.len() < primes.len())
        .collect()
}

fn show_split(pi: &PrimeSet, primes: &PrimeSet) -> String {
    format!("{pi}|{}", pi.complement_in(primes))
}

pub fn sieve_order(n: u64, tables: &ArithmeticTables) -> Result<SieveVerdict> {
    if n == 0 || n > tables.max_order {
        return Err(Error::BoundExceeded {
            n,
            bound: tables.max_order,
        });
    }
    let f = factorize(n);
    let primes = PrimeSet::of_order(n);

    let live: Vec<PrimeSet> = splits(&primes)
        .into_iter()
        .filter(|pi| {
            let a = pi.part_of(n);
            let b = n / a;
            ![a, b]
                .iter()
                .any(|&s| number_predicates(s).is_abelian_number || is_prime_cube(s))
        })
        .collect();
    if live.is_empty() {
        return Ok(eliminated(
            n,
            SieveTag::P3,
            "every split has an abelian side or a side of order p^3".into(),
        ));
    }

    let live: Vec<PrimeSet> = if primes.len() <= 3 {
        // One side is a single prime p with p^4 | n; with two primes both
        // sides need a fourth power.
        live.into_iter()
            .filter(|pi| {
                let sides = [pi.clone(), pi.complement_in(&primes)];
                let fourth = |s: &PrimeSet| {
                    s.len() == 1 && s.part_of(n).is_multiple_of(s.primes()[0].pow(4))
                };
                if primes.len() == 2 {
                    sides.iter().all(fourth)
                } else {
                    sides.iter().any(fourth)
                }
            })
            .collect()
    } else {
        live
    };
    if live.is_empty() {
        return Ok(eliminated(
            n,
            SieveTag::FewPrimes,
            "no split carries the required fourth powers".into(),
        ));
    }

    if let Some(&(p, _)) = f.iter().find(|&&(p, k)| k >= tables.e(p)) {
        return Ok(eliminated(
            n,
            SieveTag::Pep,
            format!("{p}^{} divides n", tables.e(p)),
        ));
    }
    if let Some(&(p, _)) = f
        .iter()
        .find(|&&(p, _)| !tables.aut_prime_whitelist.contains(&p))
    {
        return Ok(eliminated(
            n,
            SieveTag::Pep,
            format!("{p} lies outside the automorphism whitelist"),
        ));
    }

    // Candidate Fitting orders: divisors of gcd(n, bound) avoiding every
    // prime that divides n exactly once, and admitting a coprime
    // automorphism of each such prime.
    let exact: Vec<u64> = f
        .iter()
        .filter(|&&(_, k)| k == 1)
        .map(|&(p, _)| p)
        .collect();
    let candidates: Vec<u64> = divisors(n.gcd(&tables.fitting_bound))
        .into_iter()
        .filter(|&m| {
            exact
                .iter()
                .all(|&p| m % p != 0 && coprime_aut_possible(m, p).expect("p prime, p ∤ m"))
        })
        .collect();
    if candidates.is_empty() {
        return Ok(eliminated(
            n,
            SieveTag::FittingAut,
            format!(
                "no Fitting order admits automorphisms of order {}",
                exact
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        ));
    }
    // Neither Hall subgroup may be normal, so the Fitting subgroup falls
    // short of both the π-part and the π′-part of n.
    for pi in &live {
        for &m in &candidates {
            if pi.part_of(m) < pi.part_of(n) && pi.coprime_part_of(m) < pi.coprime_part_of(n) {
                return Ok(SieveVerdict {
                    n,
                    survives: true,
                    eliminated_by: None,
                    witness: format!("split {}, Fitting order {m}", show_split(pi, &primes)),
                });
            }
        }
    }
    Ok(eliminated(
        n,
        SieveTag::PropositionCase,
        "every admissible Fitting order contains a Hall subgroup".into(),
    ))
}

/// Verdicts for `1..=max`, in order.
pub fn sieve_range(max: u64, tables: &ArithmeticTables) -> Result<Vec<SieveVerdict>> {
    (1..=max).map(|n| sieve_order(n, tables)).collect()
}

pub fn survivors(verdicts: &[SieveVerdict]) -> Vec<u64> {
    verdicts
        .iter()
        .filter(|v| v.survives)
        .map(|v| v.n)
        .collect()
}
