//! Named group constructions and their permutation realisations.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use hallcheck_core::primes::{factorize, is_prime};
use hallcheck_core::{FiniteGroup, Permutation};
use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifierError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Construction {
    Cyclic {
        n: u64,
    },
    Abelian {
        factors: Vec<u64>,
    },
    /// Dihedral group of the given order `2m`.
    Dihedral {
        order: u64,
    },
    Symmetric {
        k: usize,
    },
    /// `C_p ⋊ C_q` with `C_q` acting by a fixed multiplier of order `q`.
    Frobenius {
        p: u64,
        q: u64,
    },
    /// `base ⋊ acting`. `action[i]` is a permutation of the base points that
    /// normalises the base group and induces the action of the `i`-th
    /// generator of `acting`.
    Semidirect {
        base: Box<Construction>,
        acting: Box<Construction>,
        action: Vec<Vec<u32>>,
    },
    Direct {
        left: Box<Construction>,
        right: Box<Construction>,
    },
    Raw {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub construction: Construction,
}

/// A degree and generating permutations.
#[derive(Debug, Clone)]
pub struct Realisation {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl Realisation {
    pub fn generate(&self) -> hallcheck_core::Result<Arc<FiniteGroup>> {
        FiniteGroup::generate(self.degree, &self.generators)
    }

    fn direct_sum(&self, other: &Realisation) -> Realisation {
        let degree = self.degree + other.degree;
        let generators = self
            .generators
            .iter()
            .map(|g| g.embed(0, degree))
            .chain(
                other
                    .generators
                    .iter()
                    .map(|g| g.embed(self.degree, degree)),
            )
            .collect();
        Realisation { degree, generators }
    }
}

fn cycle(n: u64) -> Permutation {
    let n = n as u32;
    Permutation::from_images((1..n).chain([0]).collect()).expect("cycle")
}

/// Smallest generator of the multiplicative group mod `p`.
fn primitive_root(p: u64) -> u64 {
    let f = factorize(p - 1);
    (2..p)
        .find(|&g| f.iter().all(|&(q, _)| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl Construction {
    /// Order implied by the construction, where it is known up front.
    pub fn expected_order(&self) -> Option<u64> {
        match self {
            Construction::Cyclic { n } => Some(*n),
            Construction::Abelian { factors } => Some(factors.iter().product()),
            Construction::Dihedral { order } => Some(*order),
            Construction::Symmetric { k } => Some((1..=*k as u64).product()),
            Construction::Frobenius { p, q } => Some(p * q),
            Construction::Semidirect { base, acting, .. } => {
                Some(base.expected_order()? * acting.expected_order()?)
            }
            Construction::Direct { left, right } => {
                Some(left.expected_order()? * right.expected_order()?)
            }
            Construction::Raw { .. } => None,
        }
    }

    pub fn realise(&self) -> std::result::Result<Realisation, String> {
        let r = match self {
            Construction::Cyclic { n } => {
                if *n == 0 {
                    return Err("cyclic group of order 0".into());
                }
                Realisation {
                    degree: *n as usize,
                    generators: vec![cycle(*n)],
                }
            }
            Construction::Abelian { factors } => {
                if factors.is_empty() {
                    return Err("no abelian factors".into());
                }
                let mut it = factors.iter();
                let first = Construction::Cyclic {
                    n: *it.next().unwrap(),
                }
                .realise()?;
                it.try_fold(first, |acc, &n| {
                    Ok::<_, String>(acc.direct_sum(&Construction::Cyclic { n }.realise()?))
                })?
            }
            Construction::Dihedral { order } => {
                if *order < 2 || order % 2 != 0 {
                    return Err(format!("dihedral order {order} is not even"));
                }
                let m = order / 2;
                if m <= 2 {
                    // D2 = C2, D4 = C2 x C2: the polygon action is not faithful.
                    let factors = if m == 1 { vec![2] } else { vec![2, 2] };
                    return Construction::Abelian { factors }.realise();
                }
                let flip = Permutation::from_images((0..m).map(|x| ((m - x) % m) as u32).collect())
                    .expect("reflection");
                Realisation {
                    degree: m as usize,
                    generators: vec![cycle(m), flip],
                }
            }
            Construction::Symmetric { k } => {
                let k = *k;
                if k == 0 {
                    return Err("symmetric group on no points".into());
                }
                if k == 1 {
                    return Ok(Realisation {
                        degree: 1,
                        generators: vec![Permutation::identity(1)],
                    });
                }
                let swap = Permutation::from_cycles(k, &[vec![0, 1]]).expect("transposition");
                Realisation {
                    degree: k,
                    generators: vec![swap, cycle(k as u64)],
                }
            }
            Construction::Frobenius { p, q } => {
                if !is_prime(*p) || *q == 0 || (p - 1) % q != 0 {
                    return Err(format!("need p prime and q | p - 1, got {p}:{q}"));
                }
                let mult = pow_mod(primitive_root(*p), (p - 1) / q, *p);
                let scale =
                    Permutation::from_images((0..*p).map(|x| (mult * x % p) as u32).collect())
                        .expect("multiplier");
                Realisation {
                    degree: *p as usize,
                    generators: vec![cycle(*p), scale],
                }
            }
            Construction::Semidirect {
                base,
                acting,
                action,
            } => {
                let b = base.realise()?;
                let h = acting.realise()?;
                if action.len() != h.generators.len() {
                    return Err(format!(
                        "{} action images for {} acting generators",
                        action.len(),
                        h.generators.len()
                    ));
                }
                let degree = b.degree + h.degree;
                let base_group = b.generate().map_err(|e| e.to_string())?;
                let mut generators: Vec<Permutation> =
                    b.generators.iter().map(|g| g.embed(0, degree)).collect();
                for (images, a) in action.iter().zip(&h.generators) {
                    let sigma =
                        Permutation::from_images(images.clone()).map_err(|e| e.to_string())?;
                    if sigma.degree() != b.degree {
                        return Err(format!(
                            "action image of degree {} on a base of degree {}",
                            sigma.degree(),
                            b.degree
                        ));
                    }
                    if b.generators
                        .iter()
                        .any(|g| base_group.index_of(&g.conjugate_by(&sigma)).is_none())
                    {
                        return Err(format!("{sigma} does not normalise the base"));
                    }
                    generators.push(sigma.direct_sum(a));
                }
                Realisation { degree, generators }
            }
            Construction::Direct { left, right } => left.realise()?.direct_sum(&right.realise()?),
            Construction::Raw { degree, generators } => {
                let generators = generators
                    .iter()
                    .map(|g| Permutation::from_images(g.clone()).map_err(|e| e.to_string()))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                if let Some(g) = generators.iter().find(|g| g.degree() != *degree) {
                    return Err(format!(
                        "generator of degree {} in degree {degree}",
                        g.degree()
                    ));
                }
                Realisation {
                    degree: *degree,
                    generators,
                }
            }
        };
        Ok(r)
    }
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, construction: Construction) -> Self {
        GroupSpec {
            name: name.into(),
            construction,
        }
    }

    /// Enumerates the group and checks its order against the construction.
    pub fn materialise(&self) -> Result<Arc<FiniteGroup>> {
        let invalid = |reason: String| VerifierError::ConstructionInvalid {
            name: self.name.clone(),
            reason,
        };
        let g = self.construction.realise().map_err(invalid)?.generate()?;
        if let Some(expected) = self.construction.expected_order() {
            if g.order() != expected {
                return Err(invalid(format!(
                    "generates order {}, expected {expected}",
                    g.order()
                )));
            }
        }
        Ok(g)
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Construction::Cyclic { n } => write!(f, "cyclic:{n}"),
            Construction::Abelian { factors } => write!(f, "abelian:{}", list(factors)),
            Construction::Dihedral { order } => write!(f, "dihedral:{order}"),
            Construction::Symmetric { k } => write!(f, "sym:{k}"),
            Construction::Frobenius { p, q } => write!(f, "frobenius:{p}:{q}"),
            Construction::Direct { left, right } => write!(f, "{left}*{right}"),
            Construction::Semidirect { base, acting, .. } => write!(f, "({base}):({acting})"),
            Construction::Raw { degree, generators } => {
                write!(f, "raw:{degree}:{}", generators.len())
            }
        }
    }
}

/// Compact syntax: `cyclic:6`, `abelian:2,2,3`, `dihedral:60`, `sym:4`,
/// `frobenius:7:6`, and direct products joined by `*`.
impl FromStr for Construction {
    type Err = VerifierError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || VerifierError::UnknownSpec(s.to_string());
        if let Some((l, r)) = s.split_once('*') {
            return Ok(Construction::Direct {
                left: Box::new(l.parse()?),
                right: Box::new(r.parse()?),
            });
        }
        let (kind, rest) = s.split_once(':').ok_or_else(unknown)?;
        let int = |t: &str| t.trim().parse::<u64>().map_err(|_| unknown());
        Ok(match kind.trim() {
            "cyclic" | "c" => Construction::Cyclic { n: int(rest)? },
            "abelian" => Construction::Abelian {
                factors: rest.split(',').map(int).collect::<Result<_>>()?,
            },
            "dihedral" | "d" => Construction::Dihedral { order: int(rest)? },
            "sym" | "symmetric" => Construction::Symmetric {
                k: int(rest)? as usize,
            },
            "frobenius" => {
                let (p, q) = rest.split_once(':').ok_or_else(unknown)?;
                Construction::Frobenius {
                    p: int(p)?,
                    q: int(q)?,
                }
            }
            _ => return Err(unknown()),
        })
    }
}

impl FromStr for GroupSpec {
    type Err = VerifierError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GroupSpec::new(s.trim(), s.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str) -> u64 {
        s.parse::<GroupSpec>()
            .unwrap()
            .materialise()
            .unwrap()
            .order()
    }

    #[test]
    fn compact_syntax() {
        assert_eq!(order("cyclic:6"), 6);
        assert_eq!(order("abelian:2,2,3"), 12);
        assert_eq!(order("dihedral:60"), 60);
        assert_eq!(order("dihedral:4"), 4);
        assert_eq!(order("sym:4"), 24);
        assert_eq!(order("frobenius:7:6"), 42);
        assert_eq!(order("frobenius:7:2"), 14);
        assert_eq!(order("cyclic:3*sym:3"), 18);
        assert!(matches!(
            "frobenius:7:4".parse::<GroupSpec>().unwrap().materialise(),
            Err(VerifierError::ConstructionInvalid { .. })
        ));
        assert!(matches!(
            "klein:4".parse::<GroupSpec>(),
            Err(VerifierError::UnknownSpec(_))
        ));
    }

    #[test]
    fn semidirect_checks_the_action() {
        // C3 x C3 inverted by C2: the generalised dihedral group of order 18.
        let base = Construction::Abelian {
            factors: vec![3, 3],
        };
        let invert = vec![0, 2, 1, 3, 5, 4];
        let spec = GroupSpec::new(
            "3^2:2",
            Construction::Semidirect {
                base: Box::new(base.clone()),
                acting: Box::new(Construction::Cyclic { n: 2 }),
                action: vec![invert],
            },
        );
        assert_eq!(spec.materialise().unwrap().order(), 18);
        // Swapping points of different orbits does not normalise C3 x C3.
        let bad = GroupSpec::new(
            "bad",
            Construction::Semidirect {
                base: Box::new(base),
                acting: Box::new(Construction::Cyclic { n: 2 }),
                action: vec![vec![0, 1, 3, 2, 4, 5]],
            },
        );
        assert!(bad.materialise().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let spec: GroupSpec = "frobenius:7:6".parse().unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"name":"frobenius:7:6","construction":{"kind":"frobenius","p":7,"q":6}}"#
        );
        assert_eq!(serde_json::from_str::<GroupSpec>(&json).unwrap(), spec);
    }
}
