//! Affine groups `x ↦ a x^σ + b` over small finite fields, as permutations
//! of the field elements.

use crate::spec::Construction;

/// `GF(p^k)` with elements encoded as base-`p` digit strings of polynomial
/// coefficients, reduced by a monic irreducible `modulus` (low degree first,
/// leading coefficient omitted).
#[derive(Debug, Clone)]
pub struct Field {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
}

impl Field {
    pub fn new(p: u64, modulus: Vec<u64>) -> Field {
        let k = modulus.len();
        Field { p, k, modulus }
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        let mut d = vec![0; self.k];
        for slot in d.iter_mut() {
            *slot = x % self.p;
            x /= self.p;
        }
        d
    }

    fn encode(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.digits(x), self.digits(y));
        let s: Vec<u64> = a.iter().zip(&b).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&s)
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = vec![0u64; 2 * self.k];
        for (i, u) in a.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        // t^k = −Σ modulus[i] t^i
        for top in (self.k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = top - self.k + i;
                prod[idx] = (prod[idx] + c * (self.p - m % self.p)) % self.p;
            }
        }
        self.encode(&prod[..self.k])
    }

    pub fn pow(&self, x: u64, e: u64) -> u64 {
        (0..e).fold(1, |acc, _| self.mul(acc, x))
    }

    fn mult_order(&self, x: u64) -> u64 {
        let mut y = x;
        let mut n = 1;
        while y != 1 {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    /// Smallest element generating the multiplicative group.
    pub fn primitive(&self) -> u64 {
        (2..self.size())
            .find(|&x| self.mult_order(x) == self.size() - 1)
            .expect("field has a primitive element")
    }

    fn perm(&self, f: impl Fn(u64) -> u64) -> Vec<u32> {
        (0..self.size()).map(|x| f(x) as u32).collect()
    }
}

/// `{x ↦ a x^(p^j) + b}` with `a` ranging over the multiplicative subgroup of
/// order `mult_order`, and the field automorphism included when `frobenius`.
pub fn affine(field: &Field, mult_order: u64, frobenius: bool) -> Construction {
    let q = field.size();
    assert_eq!((q - 1) % mult_order, 0, "multiplier order divides q - 1");
    let mut generators = Vec::new();
    for i in 0..field.k {
        let e = field.p.pow(i as u32);
        generators.push(field.perm(|x| field.add(x, e)));
    }
    if mult_order > 1 {
        let a = field.pow(field.primitive(), (q - 1) / mult_order);
        generators.push(field.perm(|x| field.mul(a, x)));
    }
    if frobenius {
        generators.push(field.perm(|x| field.pow(x, field.p)));
    }
    Construction::Raw {
        degree: q as usize,
        generators,
    }
}

pub fn gf(p: u64, k: usize) -> Field {
    let modulus = match (p, k) {
        (_, 1) => vec![0],
        (2, 2) => vec![1, 1],
        (2, 3) => vec![1, 1, 0],
        (2, 4) => vec![1, 1, 0, 0],
        (3, 2) => vec![1, 0],
        (5, 2) => vec![3, 0],
        _ => panic!("no modulus tabulated for GF({p}^{k})"),
    };
    Field::new(p, modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::GroupSpec;

    #[test]
    fn fields_have_primitive_elements() {
        for (p, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2)] {
            let f = gf(p, k);
            let w = f.primitive();
            assert_eq!(f.mult_order(w), f.size() - 1, "GF({p}^{k})");
        }
    }

    #[test]
    fn affine_orders() {
        let order = |c: Construction| GroupSpec::new("t", c).materialise().unwrap().order();
        assert_eq!(order(affine(&gf(2, 3), 7, true)), 168);
        assert_eq!(order(affine(&gf(2, 3), 7, false)), 56);
        assert_eq!(order(affine(&gf(3, 2), 8, true)), 144);
        assert_eq!(order(affine(&gf(2, 4), 5, false)), 80);
        assert_eq!(order(affine(&gf(5, 2), 3, false)), 75);
    }
}
