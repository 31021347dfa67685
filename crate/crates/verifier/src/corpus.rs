//! The built-in corpus of small soluble groups, and the extended tier of
//! larger groups at the orders the sieve leaves open.

use std::collections::HashSet;
use std::sync::Arc;

use hallcheck_core::FiniteGroup;

use crate::affine::{affine, gf};
use crate::error::{Result, VerifierError};
use crate::spec::{Construction, GroupSpec};

fn parse(s: &str) -> Construction {
    s.parse().expect("built-in spec")
}

fn raw(degree: usize, generators: &[&[u32]]) -> Construction {
    Construction::Raw {
        degree,
        generators: generators.iter().map(|g| g.to_vec()).collect(),
    }
}

fn direct(left: Construction, right: Construction) -> Construction {
    Construction::Direct {
        left: Box::new(left),
        right: Box::new(right),
    }
}

fn alt4() -> Construction {
    raw(4, &[&[1, 2, 0, 3], &[1, 0, 3, 2]])
}

fn quaternion() -> Construction {
    // Left multiplication by i and j on 1, -1, i, -i, j, -j, k, -k.
    raw(8, &[&[2, 3, 1, 0, 6, 7, 5, 4], &[4, 5, 7, 6, 1, 0, 2, 3]])
}

fn sl23() -> Construction {
    // SL(2,3) on the 8 nonzero vectors of GF(3)^2.
    raw(8, &[&[3, 7, 2, 6, 1, 5, 0, 4], &[5, 2, 0, 6, 3, 1, 7, 4]])
}

fn gl23() -> Construction {
    let mut gens = match sl23() {
        Construction::Raw { generators, .. } => generators,
        _ => unreachable!(),
    };
    // diag(1, -1) on the same labelling.
    gens.push(vec![1, 0, 2, 4, 3, 5, 7, 6]);
    Construction::Raw {
        degree: 8,
        generators: gens,
    }
}

fn dicyclic12() -> Construction {
    // A 3-cycle inverted by an element of order 4 whose square is central.
    raw(7, &[&[1, 2, 0, 3, 4, 5, 6], &[0, 2, 1, 4, 5, 6, 3]])
}

fn heisenberg27() -> Construction {
    // Translations of GF(3)^2 and the shear (x, y) ↦ (x + y, y).
    raw(
        9,
        &[
            &[3, 4, 5, 6, 7, 8, 0, 1, 2],
            &[1, 2, 0, 4, 5, 3, 7, 8, 6],
            &[0, 4, 8, 3, 7, 2, 6, 1, 5],
        ],
    )
}

fn sym3_wreath_c2() -> Construction {
    raw(
        6,
        &[
            &[1, 0, 2, 3, 4, 5],
            &[1, 2, 0, 3, 4, 5],
            &[3, 4, 5, 0, 1, 2],
        ],
    )
}

fn seven_by_nine() -> Construction {
    Construction::Semidirect {
        base: Box::new(parse("cyclic:7")),
        acting: Box::new(parse("cyclic:9")),
        action: vec![(0..7).map(|x| (2 * x) % 7).collect()],
    }
}

fn generalised_dihedral18() -> Construction {
    Construction::Semidirect {
        base: Box::new(parse("abelian:3,3")),
        acting: Box::new(parse("cyclic:2")),
        action: vec![vec![0, 2, 1, 3, 5, 4]],
    }
}

/// The dihedral group of order `4pq` at `(p, q) = (3, 5)`, used for the
/// factorisation with non-coprime factors.
pub const RELAXED_EXAMPLE: &str = "dihedral:60";

/// At least forty soluble groups of order at most 200, in a fixed order.
pub fn default_corpus() -> Vec<GroupSpec> {
    let compact = [
        "cyclic:6",
        "cyclic:12",
        "cyclic:30",
        "abelian:2,2",
        "abelian:2,6",
        "abelian:3,3",
        "abelian:2,2,2,3",
        "dihedral:6",
        "dihedral:8",
        "dihedral:10",
        "dihedral:12",
        "dihedral:18",
        "dihedral:20",
        "dihedral:24",
        "dihedral:30",
        "dihedral:42",
        RELAXED_EXAMPLE,
        "sym:4",
        "frobenius:5:4",
        "frobenius:7:2",
        "frobenius:7:3",
        "frobenius:7:6",
        "frobenius:11:5",
        "frobenius:11:10",
        "frobenius:13:3",
        "frobenius:13:4",
        "frobenius:13:6",
        "frobenius:13:12",
        "frobenius:17:8",
        "frobenius:19:9",
        "cyclic:2*sym:4",
        "cyclic:3*sym:4",
        "dihedral:6*dihedral:6",
        "dihedral:6*dihedral:10",
        "frobenius:7:3*cyclic:2",
        "frobenius:5:4*cyclic:3",
        "dihedral:8*cyclic:3",
        "sym:4*dihedral:6",
    ];
    let mut out: Vec<GroupSpec> = compact
        .iter()
        .map(|s| s.parse().expect("built-in"))
        .collect();
    let named = [
        ("alt4", alt4()),
        ("quaternion8", quaternion()),
        ("dicyclic12", dicyclic12()),
        ("sl(2,3)", sl23()),
        ("gl(2,3)", gl23()),
        ("heisenberg27", heisenberg27()),
        ("3^2:2", generalised_dihedral18()),
        ("7:9", seven_by_nine()),
        ("alt4*cyclic:3", direct(alt4(), parse("cyclic:3"))),
        ("gl(2,3)*cyclic:3", direct(gl23(), parse("cyclic:3"))),
        ("sym3wrc2", sym3_wreath_c2()),
        ("2^3:7", affine(&gf(2, 3), 7, false)),
        ("agaml(1,8)", affine(&gf(2, 3), 7, true)),
        ("2^4:5", affine(&gf(2, 4), 5, false)),
        ("3^2:4", affine(&gf(3, 2), 4, false)),
        ("3^2:8", affine(&gf(3, 2), 8, false)),
        ("agaml(1,9)", affine(&gf(3, 2), 8, true)),
        ("5^2:3", affine(&gf(5, 2), 3, false)),
        ("5^2:4", affine(&gf(5, 2), 4, false)),
        ("5^2:8", affine(&gf(5, 2), 8, false)),
        (
            "2^2:3*cyclic:5",
            direct(affine(&gf(2, 2), 3, false), parse("cyclic:5")),
        ),
    ];
    out.extend(named.into_iter().map(|(n, c)| GroupSpec::new(n, c)));
    out
}

/// Groups at the orders 336 to 1680 that survive the sieve.
pub fn extended_corpus() -> Vec<GroupSpec> {
    let agaml8 = || affine(&gf(2, 3), 7, true);
    let mut out: Vec<GroupSpec> = [2u64, 4, 6, 8, 10]
        .into_iter()
        .map(|k| {
            GroupSpec::new(
                format!("agaml(1,8)*cyclic:{k}"),
                direct(agaml8(), Construction::Cyclic { n: k }),
            )
        })
        .collect();
    let s3 = || parse("dihedral:6");
    out.push(GroupSpec::new(
        "sym3^4",
        direct(direct(s3(), s3()), direct(s3(), s3())),
    ));
    out.push(GroupSpec::new(
        "abelian:2,2,2,2*5^2:3",
        direct(parse("abelian:2,2,2,2"), affine(&gf(5, 2), 3, false)),
    ));
    out
}

/// Materialises every spec, rejecting duplicate names.
pub fn build(specs: &[GroupSpec]) -> Result<Vec<(GroupSpec, Arc<FiniteGroup>)>> {
    let mut seen = HashSet::new();
    specs
        .iter()
        .map(|s| {
            if !seen.insert(s.name.clone()) {
                return Err(VerifierError::DuplicateName(s.name.clone()));
            }
            Ok((s.clone(), s.materialise()?))
        })
        .collect()
}

pub fn build_corpus() -> Result<Vec<(GroupSpec, Arc<FiniteGroup>)>> {
    build(&default_corpus())
}

#[cfg(test)]
mod tests {
    use super::*;
    use hallcheck_core::radicals::is_soluble;

    #[test]
    fn default_tier_shape() {
        let groups = build_corpus().unwrap();
        assert!(groups.len() >= 40, "{}", groups.len());
        for (spec, g) in &groups {
            assert!(g.order() <= 200, "{} has order {}", spec.name, g.order());
            assert!(is_soluble(&g.whole()), "{}", spec.name);
        }
        let orders: Vec<(&str, u64)> = groups
            .iter()
            .map(|(s, g)| (s.name.as_str(), g.order()))
            .collect();
        for (name, order) in [
            ("alt4", 12),
            ("quaternion8", 8),
            ("dicyclic12", 12),
            ("sl(2,3)", 24),
            ("gl(2,3)", 48),
            ("heisenberg27", 27),
            ("3^2:2", 18),
            ("7:9", 63),
            ("sym3wrc2", 72),
            ("agaml(1,8)", 168),
        ] {
            assert!(orders.contains(&(name, order)), "{name}");
        }
    }

    #[test]
    fn extended_orders() {
        let groups = build(&extended_corpus()).unwrap();
        let orders: Vec<u64> = groups.iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![336, 672, 1008, 1344, 1680, 1296, 1200]);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let s: GroupSpec = "cyclic:6".parse().unwrap();
        assert!(matches!(
            build(&[s.clone(), s]),
            Err(VerifierError::DuplicateName(_))
        ));
    }
}
