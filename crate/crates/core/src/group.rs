//! Enumerated permutation groups and their subgroups.
//!
//! A [`FiniteGroup`] stores every element, enumerated breadth-first over
//! generator words with the generators taken in the order given. Elements
//! are then referred to by their position in that enumeration ([`Elem`]),
//! and all arithmetic goes through a multiplication table when the group is
//! small enough to afford one.
//!
//! A [`Subgroup`] is a member set of a parent group. Almost every algorithm
//! in this crate takes a `&Subgroup` as its ambient group; the whole group
//! is just `G.whole()`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::classes::ConjClassData;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Index of an element in its group's enumeration. The identity is always 0.
pub type Elem = usize;

pub const IDENTITY: Elem = 0;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

pub struct FiniteGroup {
    degree: usize,
    gen_perms: Vec<Permutation>,
    generators: Vec<Elem>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    // right_gen[s][i] = index of elements[i] * gen_s
    right_gen: Vec<Vec<u32>>,
    // table[i * n + j] = index of elements[i] * elements[j]
    table: Option<Vec<u32>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    classes: OnceLock<Arc<ConjClassData>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("generators", &self.gen_perms.len())
            .finish()
    }
}

impl FiniteGroup {
    /// Closure of `gens` with the default element cap.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Arc<FiniteGroup>> {
        Self::generate_with_cap(degree, gens, DEFAULT_ELEMENT_CAP)
    }

    pub fn generate_with_cap(
        degree: usize,
        gens: &[Permutation],
        cap: usize,
    ) -> Result<Arc<FiniteGroup>> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0u32)]);
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut right_gen: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];

        let mut i = 0;
        while i < elements.len() {
            for (s, g) in gens.iter().enumerate() {
                let y = elements[i].compose_unchecked(g);
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        let j = elements.len() as u32;
                        index.insert(y.clone(), j);
                        elements.push(y);
                        parent.push((i as u32, s as u32));
                        j
                    }
                };
                right_gen[s].push(j);
            }
            i += 1;
        }

        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                let row = &mut t[a * n..(a + 1) * n];
                row[0] = a as u32;
                for b in 1..n {
                    let (p, s) = parent[b];
                    row[b] = right_gen[s as usize][row[p as usize] as usize];
                }
            }
            t
        });
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let generators = gens.iter().map(|g| index[g] as Elem).collect();

        Ok(Arc::new(FiniteGroup {
            degree,
            gen_perms: gens.to_vec(),
            generators,
            elements,
            index,
            right_gen,
            table,
            inverse,
            orders,
            classes: OnceLock::new(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generator_perms(&self) -> &[Permutation] {
        &self.gen_perms
    }

    pub fn perm(&self, e: Elem) -> &Permutation {
        &self.elements[e]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p).map(|&i| i as Elem)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as Elem,
            None => self.index[&self.elements[a].compose_unchecked(&self.elements[b])] as Elem,
        }
    }

    /// `e * generators[s]`, available without a table.
    #[inline]
    pub fn mul_gen(&self, e: Elem, s: usize) -> Elem {
        self.right_gen[s][e] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as Elem
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        let e = e % self.elem_order(a);
        let mut acc = IDENTITY;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    #[inline]
    pub fn elem_order(&self, a: Elem) -> u64 {
        self.orders[a] as u64
    }

    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn whole(self: &Arc<Self>) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.len());
        mask.insert_range(..);
        Subgroup::from_parts(self.clone(), mask, Some(self.generators.clone()))
    }

    pub fn trivial(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_elems(self, &[IDENTITY])
    }

    /// Conjugacy classes of the whole group, computed once.
    pub fn classes(self: &Arc<Self>) -> Arc<ConjClassData> {
        self.classes
            .get_or_init(|| Arc::new(ConjClassData::compute(&self.whole())))
            .clone()
    }
}

/// A subset of a parent group closed under its multiplication.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    mask: FixedBitSet,
    elems: Vec<Elem>,
    gens: OnceLock<Vec<Elem>>,
    classes: OnceLock<Arc<ConjClassData>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.order(),
            self.group.order()
        )
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl Subgroup {
    fn from_parts(group: Arc<FiniteGroup>, mask: FixedBitSet, gens: Option<Vec<Elem>>) -> Self {
        let elems = mask.ones().collect();
        let lock = OnceLock::new();
        if let Some(g) = gens {
            let _ = lock.set(g);
        }
        Subgroup {
            group,
            mask,
            elems,
            gens: lock,
            classes: OnceLock::new(),
        }
    }

    /// Wraps a member set that the caller knows to be closed.
    pub(crate) fn from_mask(group: &Arc<FiniteGroup>, mask: FixedBitSet) -> Self {
        Self::from_parts(group.clone(), mask, None)
    }

    pub(crate) fn from_elems(group: &Arc<FiniteGroup>, elems: &[Elem]) -> Self {
        let mut mask = FixedBitSet::with_capacity(group.len());
        for &e in elems {
            mask.insert(e);
        }
        Self::from_mask(group, mask)
    }

    /// Subgroup generated by `gens`.
    pub fn generated(group: &Arc<FiniteGroup>, gens: &[Elem]) -> Subgroup {
        Self::generated_bounded(group, gens, usize::MAX).expect("unbounded closure")
    }

    /// Subgroup generated by `gens`, or `None` once it exceeds `limit` elements.
    pub fn generated_bounded(
        group: &Arc<FiniteGroup>,
        gens: &[Elem],
        limit: usize,
    ) -> Option<Subgroup> {
        let gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != IDENTITY).collect();
        let mut mask = FixedBitSet::with_capacity(group.len());
        mask.insert(IDENTITY);
        let mut count = 1;
        let mut queue = VecDeque::from([IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = group.mul(x, s);
                if !mask.put(y) {
                    count += 1;
                    if count > limit {
                        return None;
                    }
                    queue.push_back(y);
                }
            }
        }
        Some(Self::from_parts(group.clone(), mask, Some(gens)))
    }

    /// Checks closure of an arbitrary element set and wraps it.
    pub fn from_closed_set(group: &Arc<FiniteGroup>, elems: &[Elem]) -> Result<Subgroup> {
        let h = Self::from_elems(group, elems);
        if !h.contains(IDENTITY) {
            return Err(Error::InvalidInput(
                "set does not contain the identity".into(),
            ));
        }
        for &a in &h.elems {
            for &b in &h.elems {
                if !h.contains(group.mul(a, b)) {
                    return Err(Error::InvalidInput("set is not closed".into()));
                }
            }
        }
        Ok(h)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.mask.contains(e)
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::MismatchedParents)
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.mask.is_subset(&other.mask)
    }

    /// A small generating set, chosen greedily in enumeration order unless
    /// the subgroup was built from generators.
    pub fn generators(&self) -> &[Elem] {
        self.gens.get_or_init(|| {
            let mut gens = Vec::new();
            let mut span = FixedBitSet::with_capacity(self.group.len());
            span.insert(IDENTITY);
            for &e in &self.elems {
                if !span.contains(e) {
                    gens.push(e);
                    span = Subgroup::generated(&self.group, &gens).mask;
                }
            }
            gens
        })
    }

    /// Conjugacy classes of this subgroup, computed once per value.
    pub fn classes(&self) -> Arc<ConjClassData> {
        if self.elems.len() == self.group.len() {
            return self.group.classes();
        }
        self.classes
            .get_or_init(|| Arc::new(ConjClassData::compute(self)))
            .clone()
    }

    /// Elements as permutations, for handing a subgroup to code that builds
    /// new groups.
    pub fn perms(&self) -> Vec<Permutation> {
        self.elems
            .iter()
            .map(|&e| self.group.perm(e).clone())
            .collect()
    }

    /// Re-enumerates the subgroup as a group in its own right.
    pub fn to_group(&self) -> Arc<FiniteGroup> {
        let gens: Vec<Permutation> = self
            .generators()
            .iter()
            .map(|&e| self.group.perm(e).clone())
            .collect();
        FiniteGroup::generate(self.group.degree(), &gens).expect("subgroup of a capped group")
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.group.commute(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elems.iter().any(|&e| self.group.elem_order(e) == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(k: usize) -> Arc<FiniteGroup> {
        let t = Permutation::parse_cycles(k, "(0 1)").unwrap();
        let c = Permutation::from_images((1..k as u32).chain([0]).collect()).unwrap();
        FiniteGroup::generate(k, &[t, c]).unwrap()
    }

    #[test]
    fn cyclic_closure() {
        let c3 = Permutation::parse_cycles(3, "(0 1 2)").unwrap();
        let g = FiniteGroup::generate(3, &[c3]).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn symmetric_closure() {
        let g = FiniteGroup::generate(
            4,
            &[
                Permutation::parse_cycles(4, "(0 1)").unwrap(),
                Permutation::parse_cycles(4, "(0 1 2 3)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        for &s in g.generators() {
            assert!(s < g.len());
        }
    }

    #[test]
    fn frobenius_42() {
        let t = Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)").unwrap();
        let m = Permutation::from_images((0..7).map(|x| (3 * x) % 7).collect()).unwrap();
        let g = FiniteGroup::generate(7, &[t, m]).unwrap();
        assert_eq!(g.order(), 42);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [
            Permutation::parse_cycles(5, "(0 1)").unwrap(),
            Permutation::parse_cycles(5, "(0 1 2 3 4)").unwrap(),
        ];
        assert_eq!(
            FiniteGroup::generate_with_cap(5, &gens, 100).unwrap_err(),
            Error::CapExceeded { cap: 100 }
        );
        let bad = Permutation::identity(4);
        assert!(FiniteGroup::generate(5, &[bad]).is_err());
    }

    #[test]
    fn table_agrees_with_permutations() {
        let g = sym(4);
        for a in 0..g.len() {
            for b in 0..g.len() {
                let p = g.perm(a) * g.perm(b);
                assert_eq!(g.mul(a, b), g.index_of(&p).unwrap());
            }
            assert_eq!(g.mul(a, g.inv(a)), IDENTITY);
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = sym(4);
        let b = sym(4);
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn greedy_generators_span() {
        let g = sym(4);
        let h = Subgroup::from_elems(&g, &(0..g.len()).collect::<Vec<_>>());
        let gens = h.generators().to_vec();
        assert!(gens.len() <= 4);
        assert_eq!(Subgroup::generated(&g, &gens).order(), 24);
    }

    #[test]
    fn closed_set_validation() {
        let g = sym(3);
        // element 1 is the first generator, the transposition (0 1)
        assert!(Subgroup::from_closed_set(&g, &[0, 1]).is_ok());
        let not_closed: Vec<Elem> = (0..g.len())
            .filter(|&e| g.elem_order(e) == 2)
            .chain([IDENTITY])
            .collect();
        assert!(Subgroup::from_closed_set(&g, &not_closed).is_err());
    }
}
