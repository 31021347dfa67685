//! Prime sets and the small amount of integer arithmetic the group code needs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(p, k)` pairs in increasing order of `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n`, sorted.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, k) in factorize(n) {
        let mut next = Vec::with_capacity(ds.len() * (k as usize + 1));
        for &d in &ds {
            let mut pk = 1;
            for _ in 0..=k {
                next.push(d * pk);
                pk *= p;
            }
        }
        ds = next;
    }
    ds.sort_unstable();
    ds
}

/// `p`-adic valuation of `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    k
}

/// A finite set of primes. The complement is taken relative to whatever
/// universe the caller supplies, usually the prime divisors of a group order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let mut v: Vec<u64> = primes.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidInput(format!("{bad} is not prime")));
        }
        v.sort_unstable();
        v.dedup();
        Ok(PrimeSet(v))
    }

    pub fn empty() -> Self {
        PrimeSet(Vec::new())
    }

    pub fn single(p: u64) -> Self {
        debug_assert!(is_prime(p));
        PrimeSet(vec![p])
    }

    /// Prime divisors of `n`.
    pub fn of_order(n: u64) -> Self {
        PrimeSet(prime_divisors(n))
    }

    pub fn primes(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    /// `universe \ self`.
    pub fn complement_in(&self, universe: &PrimeSet) -> PrimeSet {
        PrimeSet(
            universe
                .0
                .iter()
                .copied()
                .filter(|&p| !self.contains(p))
                .collect(),
        )
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(
            self.0
                .iter()
                .copied()
                .filter(|&p| other.contains(p))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }

    /// The largest divisor of `n` whose prime factors all lie in the set.
    pub fn part_of(&self, n: u64) -> u64 {
        let mut out = 1;
        let mut rest = n;
        for &p in &self.0 {
            while rest.is_multiple_of(p) {
                rest /= p;
                out *= p;
            }
        }
        out
    }

    /// `n / part_of(n)`.
    pub fn coprime_part_of(&self, n: u64) -> u64 {
        n / self.part_of(n)
    }

    pub fn is_pi_number(&self, n: u64) -> bool {
        self.part_of(n) == n
    }

    /// Every subset of the set, in a fixed order (by bitmask over the sorted primes).
    pub fn subsets(&self) -> Vec<PrimeSet> {
        let k = self.0.len();
        (0u32..(1 << k))
            .map(|mask| {
                PrimeSet(
                    (0..k)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(p: PrimeSet) -> Self {
        p.0
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for PrimeSet {
    type Err = Error;

    /// Parses `2,3,7`, `{2,3}` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut v = Vec::new();
        for part in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let p = part
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("not an integer: {part:?}")))?;
            v.push(p);
        }
        PrimeSet::new(v)
    }
}
