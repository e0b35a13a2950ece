//! Green's relations, the J-order, and maximal subgroups of regular J-classes.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{verify_group, Group};
use crate::semigroup::{Element, Semigroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JClass {
    pub id: usize,
    pub elements: Vec<Element>,
    pub regular: bool,
    pub idempotents: Vec<Element>,
}

/// R, L, J and H partitions. Class ids are numbered by smallest member.
#[derive(Debug, Clone)]
pub struct GreenData {
    pub r_class_of: Vec<usize>,
    pub l_class_of: Vec<usize>,
    pub j_class_of: Vec<usize>,
    pub h_class_of: Vec<usize>,
    pub j_classes: Vec<JClass>,
    right_ideals: Vec<FixedBitSet>,
    left_ideals: Vec<FixedBitSet>,
    /// `S¹JS¹` for each J-class.
    j_ideals: Vec<FixedBitSet>,
}

/// Groups elements by equal keys; ids are assigned in element order.
fn classify<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    keys.map(|k| {
        let next = ids.len();
        *ids.entry(k).or_insert(next)
    })
    .collect()
}

pub fn compute_green(s: &Semigroup) -> GreenData {
    let n = s.order();
    let mut right_ideals = Vec::with_capacity(n);
    let mut left_ideals = Vec::with_capacity(n);
    for x in s.elements() {
        let mut r = FixedBitSet::with_capacity(n);
        let mut l = FixedBitSet::with_capacity(n);
        r.insert(x);
        l.insert(x);
        for y in s.elements() {
            r.insert(s.mul(x, y));
            l.insert(s.mul(y, x));
        }
        right_ideals.push(r);
        left_ideals.push(l);
    }
    // S¹xS¹ = ⋃ { uS¹ : u ∈ S¹x }
    let two_sided: Vec<FixedBitSet> = s
        .elements()
        .map(|x| {
            let mut ideal = FixedBitSet::with_capacity(n);
            for u in left_ideals[x].ones() {
                ideal.union_with(&right_ideals[u]);
            }
            ideal
        })
        .collect();

    let r_class_of = classify(right_ideals.iter());
    let l_class_of = classify(left_ideals.iter());
    let j_class_of = classify(two_sided.iter());
    let h_class_of = classify(r_class_of.iter().zip(&l_class_of));

    let num_j = j_class_of.iter().max().map_or(0, |m| m + 1);
    let mut j_classes: Vec<JClass> = (0..num_j)
        .map(|id| JClass {
            id,
            elements: Vec::new(),
            regular: false,
            idempotents: Vec::new(),
        })
        .collect();
    let mut j_ideals = vec![FixedBitSet::new(); num_j];
    for x in s.elements() {
        let c = &mut j_classes[j_class_of[x]];
        if c.elements.is_empty() {
            j_ideals[c.id] = two_sided[x].clone();
        }
        c.elements.push(x);
        if s.is_idempotent(x) {
            c.idempotents.push(x);
            c.regular = true;
        }
    }
    GreenData {
        r_class_of,
        l_class_of,
        j_class_of,
        h_class_of,
        j_classes,
        right_ideals,
        left_ideals,
        j_ideals,
    }
}

impl GreenData {
    pub fn num_j_classes(&self) -> usize {
        self.j_classes.len()
    }

    pub fn regular_classes(&self) -> impl Iterator<Item = &JClass> {
        self.j_classes.iter().filter(|c| c.regular)
    }

    pub fn j_class(&self, id: usize) -> &JClass {
        &self.j_classes[id]
    }

    /// `sS¹`
    pub fn right_ideal(&self, s: Element) -> &FixedBitSet {
        &self.right_ideals[s]
    }

    /// `S¹s`
    pub fn left_ideal(&self, s: Element) -> &FixedBitSet {
        &self.left_ideals[s]
    }

    pub fn h_class(&self, s: Element) -> Vec<Element> {
        let h = self.h_class_of[s];
        (0..self.h_class_of.len())
            .filter(|&x| self.h_class_of[x] == h)
            .collect()
    }

    pub fn r_class(&self, s: Element) -> Vec<Element> {
        let r = self.r_class_of[s];
        (0..self.r_class_of.len())
            .filter(|&x| self.r_class_of[x] == r)
            .collect()
    }

    pub fn l_class(&self, s: Element) -> Vec<Element> {
        let l = self.l_class_of[s];
        (0..self.l_class_of.len())
            .filter(|&x| self.l_class_of[x] == l)
            .collect()
    }
}

/// The J-order as a reflexive reachability matrix plus its Hasse diagram.
#[derive(Debug, Clone)]
pub struct JOrder {
    /// `below[j]` holds every `j'` with `J_j' ≤ J_j`, including `j`.
    below: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
}

pub fn j_order(green: &GreenData) -> JOrder {
    let k = green.num_j_classes();
    let below: Vec<FixedBitSet> = (0..k)
        .map(|j| {
            let mut b = FixedBitSet::with_capacity(k);
            for (i, class) in green.j_classes.iter().enumerate() {
                if green.j_ideals[j].contains(class.elements[0]) {
                    b.insert(i);
                }
            }
            b
        })
        .collect();
    let mut covers = Vec::new();
    for upper in 0..k {
        for lower in below[upper].ones().filter(|&l| l != upper) {
            let between = below[upper]
                .ones()
                .any(|m| m != upper && m != lower && below[m].contains(lower));
            if !between {
                covers.push((lower, upper));
            }
        }
    }
    JOrder { below, covers }
}

impl JOrder {
    /// `J_a ≤ J_b`
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// `J_a < J_b`
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    pub fn strictly_below(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[j].ones().filter(move |&x| x != j)
    }

    /// Regular classes strictly below `j`.
    pub fn regular_below<'a>(
        &'a self,
        green: &'a GreenData,
        j: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        self.strictly_below(j)
            .filter(move |&x| green.j_classes[x].regular)
    }

    /// Hasse diagram edges `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Hasse diagram of the order restricted to regular classes.
    pub fn regular_covers(&self, green: &GreenData) -> Vec<(usize, usize)> {
        let reg: Vec<usize> = green.regular_classes().map(|c| c.id).collect();
        let mut out = Vec::new();
        for &u in &reg {
            for &l in &reg {
                if self.lt(l, u) && !reg.iter().any(|&m| self.lt(l, m) && self.lt(m, u)) {
                    out.push((l, u));
                }
            }
        }
        out
    }
}

/// `G_J`: the H-class of a chosen idempotent with its induced group structure.
#[derive(Debug, Clone)]
pub struct MaxSubgroup {
    pub j_class: usize,
    pub e: Element,
    pub carrier: Vec<Element>,
    pub group: Group,
}

/// Defaults to the lowest-index idempotent of the class.
pub fn maximal_subgroup(
    s: &Semigroup,
    green: &GreenData,
    j: usize,
    e: Option<Element>,
) -> Result<MaxSubgroup> {
    let class = &green.j_classes[j];
    if !class.regular {
        return Err(Error::NotRegular(j));
    }
    let e = match e {
        Some(e) if class.idempotents.contains(&e) => e,
        Some(e) => return Err(Error::NotIdempotentInClass(e, j)),
        None => class.idempotents[0],
    };
    let carrier = green.h_class(e);
    let group = verify_group(s, &carrier)?;
    if group.parent_element(group.identity()) != e {
        return Err(Error::Inconsistency(format!(
            "H-class of {e} has a different identity"
        )));
    }
    Ok(MaxSubgroup {
        j_class: j,
        e,
        carrier,
        group,
    })
}

/// The isomorphism `x ↦ a x a'` from `G_e` to `G_f` for idempotents `e`, `f`
/// in one J-class, where `a a' a = a`, `a' a a' = a'`, `a a' = f`, `a' a = e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportIso {
    pub a: Element,
    pub a_prime: Element,
    /// `(x, a x a')` for each `x` in `G_e`, ordered by `x`.
    pub map: Vec<(Element, Element)>,
}

impl TransportIso {
    pub fn apply(&self, x: Element) -> Option<Element> {
        self.map
            .iter()
            .find(|(from, _)| *from == x)
            .map(|&(_, to)| to)
    }
}

pub fn subgroup_transport_iso(
    s: &Semigroup,
    green: &GreenData,
    e: Element,
    f: Element,
) -> Result<TransportIso> {
    let j = green.j_class_of[e];
    let class = &green.j_classes[j];
    if !class.idempotents.contains(&e) {
        return Err(Error::NotIdempotentInClass(e, j));
    }
    if !class.idempotents.contains(&f) {
        return Err(Error::NotIdempotentInClass(f, j));
    }
    let (a, a_prime) = class
        .elements
        .iter()
        .flat_map(|&a| class.elements.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| {
            s.mul(s.mul(a, b), a) == a
                && s.mul(s.mul(b, a), b) == b
                && s.mul(a, b) == f
                && s.mul(b, a) == e
        })
        .ok_or(Error::NoLinkingPair(e, f))?;
    let ge = green.h_class(e);
    let gf = green.h_class(f);
    let map: Vec<(Element, Element)> = ge
        .iter()
        .map(|&x| (x, s.mul_all(&[a, x, a_prime])))
        .collect();
    let iso = TransportIso { a, a_prime, map };
    // bijective onto G_f and multiplicative
    let mut image: Vec<Element> = iso.map.iter().map(|&(_, y)| y).collect();
    image.sort_unstable();
    if image != gf {
        return Err(Error::Inconsistency(format!(
            "transport {e}→{f} is not onto G_f"
        )));
    }
    for &(x, px) in &iso.map {
        for &(y, py) in &iso.map {
            if iso.apply(s.mul(x, y)) != Some(s.mul(px, py)) {
                return Err(Error::Inconsistency(format!(
                    "transport {e}→{f} not a homomorphism"
                )));
            }
        }
    }
    Ok(iso)
}

/// `sS¹ ∩ J_s = R_s` and `S¹s ∩ J_s = L_s` for every `s`.
pub fn stability_audit(s: &Semigroup, green: &GreenData) -> bool {
    s.elements().all(|x| {
        let j = green.j_class_of[x];
        let in_j = |y: &usize| green.j_class_of[*y] == j;
        let right: Vec<Element> = green.right_ideals[x].ones().filter(in_j).collect();
        let left: Vec<Element> = green.left_ideals[x].ones().filter(in_j).collect();
        right == green.r_class(x) && left == green.l_class(x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_matrix_monoid, build_semilattice, chain_poset};
    use crate::semigroup::{
        closure_from_transformations, closure_with_elements, full_transformation_generators,
        Transformation,
    };

    fn t2() -> Semigroup {
        closure_from_transformations(&full_transformation_generators(2)).unwrap()
    }

    fn t3() -> (Semigroup, Vec<Transformation>) {
        closure_with_elements(&full_transformation_generators(3)).unwrap()
    }

    /// J-classes by direct comparison of S¹xS¹ as sets of triple products.
    fn brute_j_classes(s: &Semigroup) -> Vec<Vec<Element>> {
        let one = s.adjoin_identity();
        let ideal = |x: Element| {
            let mut v: Vec<Element> = one
                .elements()
                .flat_map(|u| one.elements().map(move |w| (u, w)))
                .map(|(u, w)| one.mul_all(&[u, x, w]))
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let ideals: Vec<Vec<Element>> = s.elements().map(ideal).collect();
        let mut classes: Vec<Vec<Element>> = Vec::new();
        for x in s.elements() {
            match classes.iter_mut().find(|c| ideals[c[0]] == ideals[x]) {
                Some(c) => c.push(x),
                None => classes.push(vec![x]),
            }
        }
        classes
    }

    #[test]
    fn group_is_one_h_class() {
        let s =
            crate::constructions::builtin_group(crate::constructions::BuiltinGroup::Symmetric(3))
                .unwrap();
        let g = compute_green(&s);
        assert_eq!(g.num_j_classes(), 1);
        assert!(g.j_classes[0].regular);
        assert_eq!(g.h_class(0).len(), 6);
    }

    #[test]
    fn t2_classes() {
        let s = t2();
        let g = compute_green(&s);
        let sizes: Vec<usize> = g.j_classes.iter().map(|c| c.elements.len()).collect();
        assert_eq!(sizes, vec![2, 2]);
        assert!(g.j_classes.iter().all(|c| c.regular));
        let brute: Vec<Vec<Element>> = brute_j_classes(&s);
        let ours: Vec<Vec<Element>> = g.j_classes.iter().map(|c| c.elements.clone()).collect();
        assert_eq!(ours, brute);
        let ord = j_order(&g);
        // constants lie below permutations
        let perm = g.j_class_of[s.identity().unwrap()];
        let constant = 1 - perm;
        assert!(ord.lt(constant, perm));
        assert_eq!(ord.covers(), &[(constant, perm)]);
    }

    #[test]
    fn semilattice_classes_are_singletons() {
        let s = build_semilattice(&chain_poset(3)).unwrap();
        let g = compute_green(&s);
        assert!(g
            .j_classes
            .iter()
            .all(|c| c.elements.len() == 1 && c.regular));
        let ord = j_order(&g);
        let id = |x: usize| g.j_class_of[x];
        assert!(ord.lt(id(0), id(1)) && ord.lt(id(1), id(2)) && ord.lt(id(0), id(2)));
        let mut covers = ord.covers().to_vec();
        covers.sort_unstable();
        let mut expected = vec![(id(0), id(1)), (id(1), id(2))];
        expected.sort_unstable();
        assert_eq!(covers, expected);
    }

    #[test]
    fn maximal_subgroups() {
        let m22 = build_matrix_monoid(2, 2).unwrap();
        let g = compute_green(&m22);
        let mut sizes: Vec<usize> = g.j_classes.iter().map(|c| c.elements.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 6, 9]);
        let rank1 = g.j_classes.iter().find(|c| c.elements.len() == 9).unwrap();
        assert_eq!(
            maximal_subgroup(&m22, &g, rank1.id, None)
                .unwrap()
                .group
                .order(),
            1
        );

        let (t3, elems) = t3();
        let g = compute_green(&t3);
        let rank2 = g
            .j_classes
            .iter()
            .find(|c| elems[c.elements[0]].rank() == 2)
            .unwrap();
        let ms = maximal_subgroup(&t3, &g, rank2.id, None).unwrap();
        assert_eq!(ms.group.order(), 2);
        // brute force: elements H-related to e by equal image and kernel
        let e = &elems[ms.e];
        let image = |t: &Transformation| {
            let mut v = t.images().to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        let kernel = |t: &Transformation| {
            (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j)))
                .filter(|&(i, j)| t.images()[i] == t.images()[j])
                .collect::<Vec<_>>()
        };
        let brute: Vec<Element> = t3
            .elements()
            .filter(|&x| image(&elems[x]) == image(e) && kernel(&elems[x]) == kernel(e))
            .collect();
        assert_eq!(ms.carrier, brute);
    }

    #[test]
    fn maximal_subgroup_errors() {
        let s = Semigroup::from_cayley(&[vec![1, 1], vec![1, 1]], None).unwrap();
        let g = compute_green(&s);
        let nonreg = g.j_class_of[0];
        assert_eq!(
            maximal_subgroup(&s, &g, nonreg, None).unwrap_err(),
            Error::NotRegular(nonreg)
        );
        let reg = g.j_class_of[1];
        assert!(matches!(
            maximal_subgroup(&s, &g, reg, Some(0)),
            Err(Error::NotIdempotentInClass(0, _))
        ));
    }

    #[test]
    fn transport_isomorphisms() {
        let s = t2();
        let g = compute_green(&s);
        let consts: Vec<Element> = g
            .j_classes
            .iter()
            .find(|c| c.elements.len() == 2 && !c.elements.contains(&s.identity().unwrap()))
            .unwrap()
            .idempotents
            .clone();
        let iso = subgroup_transport_iso(&s, &g, consts[0], consts[1]).unwrap();
        assert_eq!(iso.map, vec![(consts[0], consts[1])]);
        let same = subgroup_transport_iso(&s, &g, consts[0], consts[0]).unwrap();
        assert_eq!(same.apply(consts[0]), Some(consts[0]));

        let (t3, elems) = t3();
        let g = compute_green(&t3);
        let rank2 = g
            .j_classes
            .iter()
            .find(|c| elems[c.elements[0]].rank() == 2)
            .unwrap();
        let e = rank2.idempotents[0];
        for &f in &rank2.idempotents {
            let iso = subgroup_transport_iso(&t3, &g, e, f).unwrap();
            assert_eq!(iso.map.len(), 2);
        }
    }

    #[test]
    fn stability_holds() {
        assert!(stability_audit(&t2(), &compute_green(&t2())));
        let (t3, _) = t3();
        assert!(stability_audit(&t3, &compute_green(&t3)));
    }
}
