//! Brute-force references built on raw permutation arithmetic only. Nothing
//! here touches the multiplication tables or class caches under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use hallcheck_core::primes::prime_divisors;
use hallcheck_core::{FiniteGroup, Permutation, PrimeSet, Subgroup};

pub fn perm(degree: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(degree, cycles).unwrap()
}

pub fn group(degree: usize, gens: &[&str]) -> Arc<FiniteGroup> {
    let gens: Vec<Permutation> = gens.iter().map(|g| perm(degree, g)).collect();
    FiniteGroup::generate(degree, &gens).unwrap()
}

pub fn sym4() -> Arc<FiniteGroup> {
    group(4, &["(0 1)", "(0 1 2 3)"])
}

pub fn sym3() -> Arc<FiniteGroup> {
    group(3, &["(0 1)", "(0 1 2)"])
}

/// 7:6 as x ↦ 3x + b on Z/7.
pub fn frob42() -> Arc<FiniteGroup> {
    group(7, &["(0 1 2 3 4 5 6)", "(1 3 2 6 4 5)"])
}

pub fn pi(s: &str) -> PrimeSet {
    s.parse().unwrap()
}

pub fn mul(a: &Permutation, b: &Permutation) -> Permutation {
    a.compose(b).unwrap()
}

/// Closure of `gens` by breadth-first multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = mul(&x, s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort_by(|a, b| a.images().cmp(b.images()));
    out
}

pub fn perms_of(h: &Subgroup) -> Vec<Permutation> {
    h.perms()
}

pub fn commuting_pairs(h: &[Permutation], k: &[Permutation]) -> u64 {
    let mut n = 0;
    for a in h {
        for b in k {
            if mul(a, b) == mul(b, a) {
                n += 1;
            }
        }
    }
    n
}

/// Class count as commuting pairs over the order.
pub fn ccl(elems: &[Permutation]) -> u64 {
    let c = commuting_pairs(elems, elems);
    assert_eq!(c % elems.len() as u64, 0);
    c / elems.len() as u64
}

/// Orbits of `elems` on those members whose order is a π-number.
pub fn ccl_pi(elems: &[Permutation], pi: &PrimeSet) -> u64 {
    let mut done: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut count = 0;
    for x in elems {
        if !pi.is_pi_number(x.order()) || done.contains(x.images()) {
            continue;
        }
        count += 1;
        for g in elems {
            done.insert(x.conjugate_by(g).images().to_vec());
        }
    }
    count
}

pub fn centralizer(elems: &[Permutation], x: &Permutation) -> Vec<Permutation> {
    elems
        .iter()
        .filter(|g| mul(g, x) == mul(x, g))
        .cloned()
        .collect()
}

pub fn image_set(elems: &[Permutation]) -> BTreeSet<Vec<u32>> {
    elems.iter().map(|p| p.images().to_vec()).collect()
}

pub fn is_normal(sub: &[Permutation], elems: &[Permutation]) -> bool {
    let set = image_set(sub);
    sub.iter().all(|h| {
        elems
            .iter()
            .all(|g| set.contains(h.conjugate_by(g).images()))
    })
}

/// Every subgroup generated by at most two elements.
pub fn two_generated_subgroups(degree: usize, elems: &[Permutation]) -> Vec<BTreeSet<Vec<u32>>> {
    let mut out: BTreeSet<BTreeSet<Vec<u32>>> = BTreeSet::new();
    for a in elems {
        for b in elems {
            out.insert(image_set(&closure(degree, &[a.clone(), b.clone()])));
        }
    }
    out.into_iter().collect()
}

pub fn primes_of(n: u64) -> PrimeSet {
    PrimeSet::new(prime_divisors(n)).unwrap()
}
