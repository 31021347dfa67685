//! Splitting an element into commuting π- and π′-parts.

use num_integer::Integer;

use crate::group::{Elem, FiniteGroup};
use crate::primes::PrimeSet;

/// `g = x y` with `x` a π-element, `y` a π′-element, both powers of `g`.
///
/// With `|g| = m m′` split into π- and π′-parts, pick `a m′ + b m = 1`;
/// then `x = g^(a m′)` and `y = g^(b m)`.
pub fn pi_decomposition(group: &FiniteGroup, g: Elem, pi: &PrimeSet) -> (Elem, Elem) {
    let n = group.elem_order(g);
    let m = pi.part_of(n);
    let m_prime = n / m;
    let gcd = (m_prime as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(gcd.gcd, 1);
    let n = n as i64;
    let ea = (gcd.x * m_prime as i64).rem_euclid(n) as u64;
    let eb = (gcd.y * m as i64).rem_euclid(n) as u64;
    (group.pow(g, ea), group.pow(g, eb))
}
