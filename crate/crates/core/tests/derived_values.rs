//! Small hand-checkable values, each recomputed here by brute force on raw
//! permutations before being compared with the library.

mod common;

use common::*;
use hallcheck_core::automorphism::AutAction;
use hallcheck_core::conjecture::{
    balanced_action, con_check, extends_to, f_count, irr_elementary_abelian,
    minimal_counterexample_audit, pi_height, pr, scon_check, AuditProperty,
};
use hallcheck_core::decompose::pi_decomposition;
use hallcheck_core::hall::g_triangle;
use hallcheck_core::oracles::{
    gallagher_check, glauberman_check, normal_hall_centralizer_check, theorem_a_check,
    theorem_b_check, theorem_d_check, Oracle,
};
use hallcheck_core::radicals::{derived_series, fitting, is_soluble, o_pi};
use hallcheck_core::subgroups::{center, core, derived_subgroup, normal_subgroups};
use hallcheck_core::{
    ccl, ccl_pi, hall_pair, hall_subgroup, quotient, sylow_system, FiniteGroup, Subgroup, IDENTITY,
};
use num_rational::Ratio;

fn sub(g: &std::sync::Arc<FiniteGroup>, gens: &[&str]) -> Subgroup {
    let elems: Vec<_> = gens
        .iter()
        .map(|s| g.index_of(&perm(g.degree(), s)).expect("element of g"))
        .collect();
    Subgroup::generated(g, &elems)
}

fn orders(subs: &[Subgroup]) -> Vec<u64> {
    let mut v: Vec<u64> = subs.iter().map(Subgroup::order).collect();
    v.sort_unstable();
    v
}

#[test]
fn frobenius_42_closure() {
    let g = frob42();
    let bf = closure(7, &[perm(7, "(0 1 2 3 4 5 6)"), perm(7, "(1 3 2 6 4 5)")]);
    assert_eq!(g.order(), 42);
    assert_eq!(bf.len(), 42);
}

#[test]
fn class_counts_agree_with_commuting_pairs() {
    for g in [sym3(), sym4(), frob42()] {
        let bf = g.elements().to_vec();
        assert_eq!(ccl(&g.whole()), common::ccl(&bf));
    }
    assert_eq!(ccl(&sym4().whole()), 5);
    assert_eq!(ccl(&frob42().whole()), 7);
}

#[test]
fn sym4_center_derived_and_core() {
    let g = sym4();
    let w = g.whole();
    assert!(center(&w).is_trivial());
    let bf_center: Vec<_> = g
        .elements()
        .iter()
        .filter(|x| g.elements().iter().all(|y| mul(x, y) == mul(y, x)))
        .collect();
    assert_eq!(bf_center.len(), 1);

    let d = derived_subgroup(&w);
    let comms: Vec<_> = g
        .elements()
        .iter()
        .flat_map(|x| {
            g.elements()
                .iter()
                .map(move |y| mul(&mul(&x.inverse(), &y.inverse()), &mul(x, y)))
        })
        .collect();
    assert_eq!(d.order(), closure(4, &comms).len() as u64);
    assert_eq!(d.order(), 12);

    let d8 = sub(&g, &["(0 1 2 3)", "(0 2)"]);
    let k = core(&w, &d8).unwrap();
    assert_eq!(k.order(), 4);
    assert!(k.elements().iter().all(|&x| g.elem_order(x) <= 2));
}

#[test]
fn normal_subgroup_lattices() {
    for (g, want) in [
        (sym4(), vec![1, 4, 12, 24]),
        (frob42(), vec![1, 7, 14, 21, 42]),
    ] {
        let bf: Vec<u64> = {
            let all = two_generated_subgroups(g.degree(), g.elements());
            let mut v: Vec<u64> = all
                .iter()
                .filter(|s| {
                    let perms: Vec<_> = s
                        .iter()
                        .map(|i| hallcheck_core::Permutation::from_images(i.clone()).unwrap())
                        .collect();
                    is_normal(&perms, g.elements())
                })
                .map(|s| s.len() as u64)
                .collect();
            v.sort_unstable();
            v
        };
        assert_eq!(orders(&normal_subgroups(&g.whole())), want);
        assert_eq!(bf, want);
    }
}

#[test]
fn quotients() {
    let g = sym4();
    let v4 = normal_subgroups(&g.whole())
        .into_iter()
        .find(|n| n.order() == 4)
        .unwrap();
    let q = quotient(&g.whole(), &v4).unwrap();
    assert_eq!(q.order(), 6);
    assert_eq!(ccl(&q.group.whole()), 3);

    let f = frob42();
    let c7 = normal_subgroups(&f.whole())
        .into_iter()
        .find(|n| n.order() == 7)
        .unwrap();
    let q = quotient(&f.whole(), &c7).unwrap();
    assert_eq!(q.order(), 6);
    assert!(q.group.whole().is_cyclic());
}

#[test]
fn radicals_of_sym4() {
    let w = sym4().whole();
    assert_eq!(o_pi(&w, &pi("2")).unwrap().order(), 4);
    assert!(o_pi(&w, &pi("3")).unwrap().is_trivial());
    assert_eq!(fitting(&w).unwrap().order(), 4);
    assert!(is_soluble(&w));
    assert_eq!(orders(&derived_series(&w)), vec![1, 4, 12, 24]);
}

#[test]
fn decomposition_of_a_7_element() {
    let g = frob42();
    let x = g.index_of(&perm(7, "(0 1 2 3 4 5 6)")).unwrap();
    assert_eq!(pi_decomposition(&g, x, &pi("3")), (IDENTITY, x));
    // Any element: parts commute, multiply back, and have the right orders.
    let p = pi("2");
    for e in 0..g.len() {
        let (a, b) = pi_decomposition(&g, e, &p);
        assert_eq!(g.mul(a, b), e);
        assert!(g.commute(a, b));
        assert!(p.is_pi_number(g.elem_order(a)));
        assert_eq!(p.part_of(g.elem_order(b)), 1);
    }
}

#[test]
fn coprime_actions() {
    let c7 = group(7, &["(0 1 2 3 4 5 6)"]);
    let gen = c7.index_of(&perm(7, "(0 1 2 3 4 5 6)")).unwrap();
    let t = AutAction::new(&c7.whole(), &[vec![c7.pow(gen, 2)]]).unwrap();
    assert_eq!(t.order(), 3);
    assert!(t.fixed_points().is_trivial());
    assert_eq!(t.invariant_class_count(), 1);
    assert!(!glauberman_check(&t).unwrap().refuted());

    // C3 × C3 inside Sym(6), swapped by (0 3)(1 4)(2 5).
    let g = group(6, &["(0 1 2)", "(3 4 5)", "(0 3)(1 4)(2 5)"]);
    let h = sub(&g, &["(0 1 2)", "(3 4 5)"]);
    let swap = g.index_of(&perm(6, "(0 3)(1 4)(2 5)")).unwrap();
    let t = AutAction::by_conjugation(&h, &[swap]).unwrap();
    assert_eq!(t.fixed_points().order(), 3);
    let bf_invariant = h
        .perms()
        .iter()
        .filter(|x| x.conjugate_by(&perm(6, "(0 3)(1 4)(2 5)")) == **x)
        .count();
    assert_eq!(bf_invariant, 3);
    assert_eq!(t.invariant_class_count(), 3);
    let o = glauberman_check(&t).unwrap();
    assert!(o.applicable && o.holds);
}

#[test]
fn hall_and_sylow_systems() {
    let w = sym4().whole();
    assert_eq!(hall_subgroup(&w, &pi("2")).unwrap().order(), 8);
    let pair = hall_pair(&w, &pi("3")).unwrap();
    assert_eq!((pair.a.order(), pair.b.order()), (3, 8));

    let s = sylow_system(&w).unwrap();
    assert!(s.is_valid());
    assert_eq!(
        orders(&s.members().map(|(_, m)| m.clone()).collect::<Vec<_>>()),
        vec![1, 3, 8, 24]
    );

    let s = sylow_system(&frob42().whole()).unwrap();
    assert!(s.is_valid());
    assert_eq!(
        orders(&s.members().map(|(_, m)| m.clone()).collect::<Vec<_>>()),
        vec![1, 2, 3, 6, 7, 14, 21, 42]
    );
}

#[test]
fn normaliser_triangles() {
    let pair = hall_pair(&sym3().whole(), &pi("3")).unwrap();
    let (gt, at, bt) = g_triangle(&pair).unwrap();
    assert_eq!((gt.order(), at.order(), bt.order()), (2, 1, 2));

    let pair = hall_pair(&frob42().whole(), &pi("7")).unwrap();
    let (gt, _, _) = g_triangle(&pair).unwrap();
    assert_eq!(gt.order(), 6);
    assert!(gt.is_cyclic());
}

#[test]
fn restricted_class_counts() {
    let g = sym4();
    assert_eq!(ccl_pi(&g.whole(), &pi("2")), 4);
    assert_eq!(
        ccl_pi(&g.whole(), &pi("2")),
        common::ccl_pi(g.elements(), &pi("2"))
    );

    // Identity, three classes of 3-elements, one class of 7-elements, plus
    // the identity's neighbours: the brute-force orbit count is authoritative.
    let f = frob42();
    let bf = common::ccl_pi(f.elements(), &pi("3,7"));
    assert_eq!(bf, 4);
    assert_eq!(ccl_pi(&f.whole(), &pi("3,7")), bf);
}

#[test]
fn commuting_probability_of_sym3() {
    let w = sym3().whole();
    assert_eq!(pr(&w, &w).unwrap(), Ratio::new(1, 2));
    assert_eq!(commuting_pairs(sym3().elements(), sym3().elements()), 18);
}

#[test]
fn fusion_count_of_a_transposition() {
    let g = sym4();
    let a = sub(&g, &["(0 1 2 3)", "(0 2)"]);
    let t = perm(4, "(0 2)");
    // t^G ∩ A, split into A-orbits.
    let a_perms = a.perms();
    let a_set = image_set(&a_perms);
    let meet: Vec<_> = g
        .elements()
        .iter()
        .map(|x| t.conjugate_by(x))
        .filter(|y| a_set.contains(y.images()))
        .collect();
    let mut done = std::collections::BTreeSet::new();
    let mut orbits = 0;
    for y in &meet {
        if done.insert(y.images().to_vec()) {
            orbits += 1;
            for z in &a_perms {
                done.insert(y.conjugate_by(z).images().to_vec());
            }
        }
    }
    let te = g.index_of(&t).unwrap();
    assert_eq!(f_count(&g.whole(), &a, te).unwrap(), orbits);
    // (0 1 2 3) conjugates (0 2) to (1 3) inside A.
    assert_eq!(orbits, 1);
}

#[test]
fn heights() {
    let pair = hall_pair(&sym4().whole(), &pi("2")).unwrap();
    assert_eq!(pi_height(&pair).unwrap().height.doubled(), 5);
    let pair = hall_pair(&frob42().whole(), &pi("7")).unwrap();
    assert_eq!(pi_height(&pair).unwrap().height.doubled(), 3);
}

#[test]
fn conjecture_values() {
    let r = con_check(&frob42().whole(), &pi("7")).unwrap();
    assert_eq!((r.ccl_g, r.ccl_a, r.ccl_b), (7, 7, 6));
    assert!(r.is_con_star && !r.is_direct_product);

    let r = con_check(&sym4().whole(), &pi("2")).unwrap();
    assert_eq!((r.ccl_g, r.ccl_a, r.ccl_b), (5, 5, 3));
    assert!(r.is_con_star && r.excess < 0);

    assert!(scon_check(&sym3().whole(), &pi("2")).unwrap());
    assert!(scon_check(&group(6, &["(0 1)(2 3 4)"]).whole(), &pi("2")).unwrap());
}

#[test]
fn relaxed_hypothesis_counterexample() {
    // D60 on 30 points; A and B are not Hall subgroups.
    let r = "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29)";
    let s =
        "(1 29)(2 28)(3 27)(4 26)(5 25)(6 24)(7 23)(8 22)(9 21)(10 20)(11 19)(12 18)(13 17)(14 16)";
    let g = group(30, &[r, s]);
    let rp = perm(30, r);
    let sp = perm(30, s);
    let a = closure(30, &[rp.pow(10), sp.clone()]);
    let b = closure(30, &[rp.pow(6), mul(&sp, &rp)]);
    assert_eq!((a.len(), b.len()), (6, 10));
    let shared = image_set(&a).intersection(&image_set(&b)).count();
    assert_eq!(shared, 1);
    assert_eq!(common::ccl(g.elements()), 18);
    assert_eq!(common::ccl(&a) * common::ccl(&b), 12);
    assert_eq!(ccl(&g.whole()), 18);
}

#[test]
fn invariant_characters_and_extension() {
    let alt4 = group(4, &["(0 1 2)", "(0 1)(2 3)"]);
    let v4 = normal_subgroups(&alt4.whole())
        .into_iter()
        .find(|n| n.order() == 4)
        .unwrap();
    let chars = irr_elementary_abelian(&v4).unwrap();
    assert_eq!(chars.len(), 4);
    for nu in chars.iter().filter(|c| !c.is_trivial()) {
        assert!(!extends_to(nu, &alt4.whole()).unwrap());
    }
    let s4 = sym4();
    let v4 = normal_subgroups(&s4.whole())
        .into_iter()
        .find(|n| n.order() == 4)
        .unwrap();
    assert!(!balanced_action(&s4.whole(), &pi("2"), &v4).unwrap());
}

#[test]
fn audit_values() {
    let audit = minimal_counterexample_audit(&sym4().whole(), &pi("2")).unwrap();
    let centre = audit
        .iter()
        .find(|i| i.property == AuditProperty::CentreInDerived)
        .unwrap();
    assert!(centre.holds);

    let audit = minimal_counterexample_audit(&frob42().whole(), &pi("7")).unwrap();
    let first = audit
        .iter()
        .find(|i| i.property == AuditProperty::NoNormalHallAboveRadical)
        .unwrap();
    assert!(!first.holds);
}

#[test]
fn gallagher_values() {
    let g = sym4();
    let v4 = normal_subgroups(&g.whole())
        .into_iter()
        .find(|n| n.order() == 4)
        .unwrap();
    let o = gallagher_check(&g.whole(), &v4, &pi("2,3")).unwrap();
    assert_eq!((o.lhs, o.rhs), (5, 12));
    assert!(o.holds && !o.equality);

    let f = frob42();
    let c7 = normal_subgroups(&f.whole())
        .into_iter()
        .find(|n| n.order() == 7)
        .unwrap();
    let o = gallagher_check(&f.whole(), &c7, &pi("7")).unwrap();
    assert_eq!(o.lhs, common::ccl_pi(f.elements(), &pi("7")));
    assert_eq!(o.lhs, 2);
    assert!(o.holds && !o.equality);
}

#[test]
fn normal_hall_centralizers() {
    let f = frob42();
    let pair = hall_pair(&f.whole(), &pi("7")).unwrap();
    let y = f.index_of(&perm(7, "(1 3 2 6 4 5)")).unwrap();
    let o = normal_hall_centralizer_check(&pair, y).unwrap();
    assert!(o.applicable && o.holds);
    assert!(o.detail.starts_with("ccl(A_y) = 1"));

    let d14 = sub(&f, &["(0 1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]);
    let pair = hall_pair(&d14, &pi("7")).unwrap();
    let y = f.index_of(&perm(7, "(1 6)(2 5)(3 4)")).unwrap();
    let o = normal_hall_centralizer_check(&pair, y).unwrap();
    assert!(o.detail.starts_with("ccl(A_y) = 1"));
}

#[test]
fn theorem_oracles_on_small_groups() {
    let o = theorem_a_check(&hall_pair(&sym4().whole(), &pi("2")).unwrap()).unwrap();
    assert_eq!(o.oracle, Oracle::TheoremA);
    assert!(o.applicable && o.holds);
    let o = theorem_a_check(&hall_pair(&frob42().whole(), &pi("7")).unwrap()).unwrap();
    assert!(o.applicable && o.holds);

    let g73 = group(7, &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"]);
    assert_eq!(ccl(&g73.whole()), 5);
    let c7 = normal_subgroups(&g73.whole())
        .into_iter()
        .find(|n| n.order() == 7)
        .unwrap();
    let o = theorem_b_check(&g73.whole(), &c7, &pi("3")).unwrap();
    assert!(o.applicable && o.holds);

    // C2 × Sym(3): the direct C2 is central and meets G′ trivially.
    let g = group(5, &["(0 1)", "(2 3)", "(2 3 4)"]);
    let m = sub(&g, &["(0 1)"]);
    let o = theorem_d_check(&g.whole(), &m, &pi("2")).unwrap();
    assert!(o.applicable && o.holds);
    assert!(o.detail.contains("literal scon"));

    // Q8: its centre lies in the derived subgroup.
    let q8 = group(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]);
    assert_eq!(q8.order(), 8);
    let z = center(&q8.whole());
    let o = theorem_d_check(&q8.whole(), &z, &pi("2")).unwrap();
    assert!(!o.applicable);
}

#[test]
fn reduction_lemma_on_fixed_groups() {
    use hallcheck_core::oracles::reduction_lemma_check;
    use hallcheck_core::subgroups::{all_subgroups, conjugate, DEFAULT_SUBGROUP_CAP};
    for g in [sym3(), sym4(), frob42()] {
        let w = g.whole();
        let system = sylow_system(&w).unwrap();
        let subs = all_subgroups(&w, DEFAULT_SUBGROUP_CAP).unwrap();
        let outcome = reduction_lemma_check(&system, &subs);
        assert!(outcome.holds(), "{outcome:?}");
        assert_eq!(outcome.subgroups_checked, subs.len());
        for h in &subs {
            let x = system.conjugate_to_reduce(h);
            assert!(system.reduces_into(&conjugate(h, x)));
        }
    }
    assert_eq!(
        all_subgroups(&sym4().whole(), DEFAULT_SUBGROUP_CAP)
            .unwrap()
            .len(),
        30
    );
}
