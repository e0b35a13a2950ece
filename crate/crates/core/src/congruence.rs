//! Generalized group mapping congruences `≡_J`, their intersection, the
//! reducible/irreducible split of regular J-classes, and the relative
//! kernels `N_J`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::green::{maximal_subgroup, GreenData, JOrder, MaxSubgroup};
use crate::group::NormalSubgroup;
use crate::semigroup::{Element, Semigroup};

/// A partition in canonical form: each element maps to the smallest member
/// of its class, so equal partitions have equal arrays.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Congruence {
    class_of: Vec<Element>,
    num_classes: usize,
}

impl Congruence {
    /// Canonicalizes arbitrary class keys.
    pub fn from_keys<K: std::hash::Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut first: HashMap<K, Element> = HashMap::new();
        let class_of: Vec<Element> = keys
            .into_iter()
            .enumerate()
            .map(|(i, k)| *first.entry(k).or_insert(i))
            .collect();
        Congruence {
            class_of,
            num_classes: first.len(),
        }
    }

    pub fn equality(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
            num_classes: n,
        }
    }

    pub fn universal(n: usize) -> Self {
        Congruence {
            class_of: vec![0; n],
            num_classes: n.min(1),
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn class_of(&self, s: Element) -> Element {
        self.class_of[s]
    }

    pub fn related(&self, s: Element, t: Element) -> bool {
        self.class_of[s] == self.class_of[t]
    }

    pub fn is_trivial(&self) -> bool {
        self.num_classes == self.class_of.len()
    }

    pub fn is_universal(&self) -> bool {
        self.num_classes <= 1
    }

    pub fn classes(&self) -> Vec<Vec<Element>> {
        let mut by_rep: Vec<Vec<Element>> = vec![Vec::new(); self.class_of.len()];
        for (s, &c) in self.class_of.iter().enumerate() {
            by_rep[c].push(s);
        }
        by_rep.into_iter().filter(|c| !c.is_empty()).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes().iter().map(Vec::len).collect()
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        self.first_unrefined_pair(other).is_none()
    }

    /// Smallest `(s, t)` with `s < t`, related here but not in `other`.
    pub fn first_unrefined_pair(&self, other: &Congruence) -> Option<(Element, Element)> {
        let mut seen: HashMap<Element, Vec<Element>> = HashMap::new();
        let mut best: Option<(Element, Element)> = None;
        for t in 0..self.len() {
            let members = seen.entry(self.class_of[t]).or_default();
            if let Some(&s) = members.iter().find(|&&s| !other.related(s, t)) {
                if best.is_none_or(|b| (s, t) < b) {
                    best = Some((s, t));
                }
            }
            members.push(t);
        }
        best
    }

    /// Left and right compatibility, checked exhaustively.
    pub fn is_congruence_on(&self, s: &Semigroup) -> bool {
        let n = s.order();
        if self.len() != n {
            return false;
        }
        for u in s.elements() {
            let mut left = vec![usize::MAX; n];
            let mut right = vec![usize::MAX; n];
            for x in s.elements() {
                let c = self.class_of[x];
                let l = self.class_of[s.mul(u, x)];
                let r = self.class_of[s.mul(x, u)];
                if left[c] == usize::MAX {
                    left[c] = l;
                    right[c] = r;
                } else if left[c] != l || right[c] != r {
                    return false;
                }
            }
        }
        true
    }
}

/// Intersection of two equivalence relations.
pub fn meet(c1: &Congruence, c2: &Congruence) -> Result<Congruence> {
    if c1.len() != c2.len() {
        return Err(Error::SizeMismatch(c1.len(), c2.len()));
    }
    Ok(Congruence::from_keys(c1.class_of.iter().zip(&c2.class_of)))
}

/// `s ≡_J t` iff for all `x, y ∈ J`, `xsy ∈ J ⇔ xty ∈ J`, and the two agree
/// whenever both lie in `J`.
///
/// Each element gets the signature `(xsy if in J else ⊥)` over `J × J`;
/// equal signatures are exactly the `≡_J` classes. This is O(n·|J|²).
// TODO: acting on R- and L-classes of J (Schützenberger representations)
// instead of on J × J would make this usable well beyond a few hundred elements.
pub fn ggm_congruence(s: &Semigroup, green: &GreenData, j: usize) -> Result<Congruence> {
    let class = green.j_class(j);
    if !class.regular {
        return Err(Error::NotRegular(j));
    }
    let in_j = |z: Element| green.j_class_of[z] == j;
    let signature = |t: Element| -> Vec<Option<Element>> {
        let mut sig = Vec::with_capacity(class.elements.len().pow(2));
        for &x in &class.elements {
            let xt = s.mul(x, t);
            for &y in &class.elements {
                let z = s.mul(xt, y);
                sig.push(in_j(z).then_some(z));
            }
        }
        sig
    };
    let c = Congruence::from_keys(s.elements().map(signature));
    if !c.is_congruence_on(s) {
        return Err(Error::Inconsistency(format!(
            "≡ for J-class {j} is not a congruence"
        )));
    }
    Ok(c)
}

/// `≡_J` for every regular J-class, keyed by class id.
#[derive(Debug, Clone)]
pub struct GgmCongruences {
    pub by_class: Vec<(usize, Congruence)>,
}

impl GgmCongruences {
    pub fn compute(s: &Semigroup, green: &GreenData) -> Result<Self> {
        let by_class = green
            .regular_classes()
            .map(|c| ggm_congruence(s, green, c.id).map(|cong| (c.id, cong)))
            .collect::<Result<_>>()?;
        Ok(GgmCongruences { by_class })
    }

    pub fn get(&self, j: usize) -> Option<&Congruence> {
        self.by_class
            .iter()
            .find(|(id, _)| *id == j)
            .map(|(_, c)| c)
    }

    /// Meet of `≡_{J'}` over regular `J' < J`; universal when there are none.
    pub fn meet_below(&self, order: &JOrder, j: usize, n: usize) -> Congruence {
        self.by_class
            .iter()
            .filter(|(id, _)| order.lt(*id, j))
            .fold(Congruence::universal(n), |acc, (_, c)| {
                meet(&acc, c).expect("same size")
            })
    }
}

/// The GGM congruence: meet of `≡_J` over all regular J.
pub fn ggm_all(s: &Semigroup, green: &GreenData) -> Result<Congruence> {
    let all = GgmCongruences::compute(s, green)?;
    Ok(fold_meet(s.order(), all.by_class.iter().map(|(_, c)| c)))
}

pub fn fold_meet<'a>(n: usize, cs: impl IntoIterator<Item = &'a Congruence>) -> Congruence {
    cs.into_iter().fold(Congruence::universal(n), |acc, c| {
        meet(&acc, c).expect("same size")
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub j: usize,
    pub irreducible: bool,
    /// For irreducible classes: `s ≢_J t` while `s ≡_{J'} t` for all regular `J' < J`.
    pub witness: Option<(Element, Element)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JClassification {
    pub verdicts: Vec<ClassVerdict>,
}

impl JClassification {
    pub fn is_irreducible(&self, j: usize) -> bool {
        self.verdicts.iter().any(|v| v.j == j && v.irreducible)
    }

    pub fn irreducible_classes(&self) -> impl Iterator<Item = usize> + '_ {
        self.verdicts.iter().filter(|v| v.irreducible).map(|v| v.j)
    }
}

/// `J` is reducible iff the meet of `≡_{J'}` over regular `J' < J` refines
/// `≡_J`.
pub fn classify_j_classes(
    s: &Semigroup,
    order: &JOrder,
    congruences: &GgmCongruences,
) -> Result<JClassification> {
    let mut verdicts = Vec::new();
    for (j, cong) in &congruences.by_class {
        let below = congruences.meet_below(order, *j, s.order());
        let witness = below.first_unrefined_pair(cong);
        if let Some((a, b)) = witness {
            let ok = !cong.related(a, b)
                && congruences
                    .by_class
                    .iter()
                    .filter(|(id, _)| order.lt(*id, *j))
                    .all(|(_, c)| c.related(a, b));
            if !ok {
                return Err(Error::Inconsistency(format!("bad witness for J-class {j}")));
            }
        }
        verdicts.push(ClassVerdict {
            j: *j,
            irreducible: witness.is_some(),
            witness,
        });
    }
    Ok(JClassification { verdicts })
}

/// `N_J` as a normal subgroup of `G_J`.
#[derive(Debug, Clone)]
pub struct RelativeKernel {
    pub j_class: usize,
    pub e: Element,
    /// Semigroup elements of `N_J`, ascending.
    pub carrier: Vec<Element>,
    /// The same set, in the local indexing of `G_J`.
    pub subgroup: NormalSubgroup,
}

/// Elements of `G_J` that are `≡_{J'}`-related to `e_J` for every regular
/// `J' < J`. The result is audited to be normal in `G_J`.
pub fn compute_n_j(
    s: &Semigroup,
    order: &JOrder,
    max_subgroup: &MaxSubgroup,
    congruences: &GgmCongruences,
) -> Result<RelativeKernel> {
    let j = max_subgroup.j_class;
    let below = congruences.meet_below(order, j, s.order());
    let g = &max_subgroup.group;
    let mut bits = FixedBitSet::with_capacity(g.order());
    for x in g.elements() {
        if below.related(g.parent_element(x), max_subgroup.e) {
            bits.insert(x);
        }
    }
    if !g.is_normal(&bits) {
        return Err(Error::Inconsistency(format!(
            "N_J for J-class {j} is not normal in G_J"
        )));
    }
    let carrier = bits.ones().map(|x| g.parent_element(x)).collect();
    Ok(RelativeKernel {
        j_class: j,
        e: max_subgroup.e,
        carrier,
        subgroup: NormalSubgroup::from_bits(bits),
    })
}

/// Everything the congruence stage produces, in one pass.
#[derive(Debug, Clone)]
pub struct CongruenceAnalysis {
    pub congruences: GgmCongruences,
    pub ggm: Congruence,
    pub classification: JClassification,
}

impl CongruenceAnalysis {
    pub fn compute(s: &Semigroup, green: &GreenData, order: &JOrder) -> Result<Self> {
        let congruences = GgmCongruences::compute(s, green)?;
        let ggm = fold_meet(s.order(), congruences.by_class.iter().map(|(_, c)| c));
        let classification = classify_j_classes(s, order, &congruences)?;
        Ok(CongruenceAnalysis {
            congruences,
            ggm,
            classification,
        })
    }

    /// The class whose `≡_J` is trivial, if any.
    pub fn distinguished_class(&self) -> Option<usize> {
        self.congruences
            .by_class
            .iter()
            .find(|(_, c)| c.is_trivial())
            .map(|(j, _)| *j)
    }
}

/// Returns the distinguished J-class if `S` is generalized group mapping.
/// For nontrivial `S`, cross-checks against "GGM trivial and exactly one
/// irreducible regular J-class".
pub fn is_generalized_group_mapping(s: &Semigroup, green: &GreenData) -> Result<Option<usize>> {
    let order = crate::green::j_order(green);
    let analysis = CongruenceAnalysis::compute(s, green, &order)?;
    let found = analysis.distinguished_class();
    if !s.is_trivial() {
        let irr: Vec<usize> = analysis.classification.irreducible_classes().collect();
        let alt = (analysis.ggm.is_trivial() && irr.len() == 1).then(|| irr[0]);
        if alt != found {
            return Err(Error::Mismatch(format!(
                "distinguished class {found:?} but GGM/irreducible criterion gives {alt:?}"
            )));
        }
        if let Some(j) = found {
            let ms = maximal_subgroup(s, green, j, None)?;
            let nj = compute_n_j(s, &order, &ms, &analysis.congruences)?;
            if nj.carrier.len() != ms.group.order() {
                return Err(Error::Mismatch(format!(
                    "N_J != G_J for distinguished class {j}"
                )));
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        boolean_poset, build_group_union_quotient, build_matrix_monoid, build_qg,
        build_semilattice, builtin_group, chain_poset, BuiltinGroup, PosetSpec,
    };
    use crate::green::{compute_green, j_order};
    use crate::group::Group;

    /// Direct evaluation of the defining condition for one pair.
    fn brute_related(s: &Semigroup, green: &GreenData, j: usize, a: Element, b: Element) -> bool {
        let cls = &green.j_class(j).elements;
        let in_j = |z: Element| green.j_class_of[z] == j;
        cls.iter().all(|&x| {
            cls.iter().all(|&y| {
                let p = s.mul_all(&[x, a, y]);
                let q = s.mul_all(&[x, b, y]);
                in_j(p) == in_j(q) && (!in_j(p) || p == q)
            })
        })
    }

    fn setup(s: &Semigroup) -> (GreenData, JOrder, CongruenceAnalysis) {
        let g = compute_green(s);
        let o = j_order(&g);
        let a = CongruenceAnalysis::compute(s, &g, &o).unwrap();
        (g, o, a)
    }

    #[test]
    fn signature_matches_definition() {
        for s in [
            build_matrix_monoid(2, 2).unwrap(),
            build_semilattice(&boolean_poset(2)).unwrap(),
            build_qg(
                &Group::from_semigroup(&builtin_group(BuiltinGroup::Cyclic(4)).unwrap()).unwrap(),
            ),
        ] {
            let (g, _, a) = setup(&s);
            for (j, c) in &a.congruences.by_class {
                for x in s.elements() {
                    for y in s.elements() {
                        assert_eq!(c.related(x, y), brute_related(&s, &g, *j, x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn group_congruence_is_equality() {
        let s = builtin_group(BuiltinGroup::Symmetric(3)).unwrap();
        let g = compute_green(&s);
        assert!(ggm_congruence(&s, &g, 0).unwrap().is_trivial());
        assert!(ggm_all(&s, &g).unwrap().is_trivial());
    }

    #[test]
    fn semilattice_congruence_splits_on_up_set() {
        let s = build_semilattice(&boolean_poset(2)).unwrap();
        let (g, _, a) = setup(&s);
        for (j, c) in &a.congruences.by_class {
            let e = g.j_class(*j).elements[0];
            let above = |x: Element| s.mul(x, e) == e;
            assert_eq!(c.num_classes(), if above(0) { 1 } else { 2 });
            for x in s.elements() {
                for y in s.elements() {
                    assert_eq!(c.related(x, y), above(x) == above(y));
                }
            }
        }
    }

    #[test]
    fn meets() {
        let c = Congruence::from_keys([0, 0, 1, 1]);
        assert_eq!(meet(&c, &Congruence::universal(4)).unwrap(), c);
        assert_eq!(
            meet(&c, &Congruence::equality(4)).unwrap(),
            Congruence::equality(4)
        );
        assert_eq!(
            meet(&c, &Congruence::equality(3)),
            Err(Error::SizeMismatch(4, 3))
        );
        // 2-antichain {a, b} over a bottom 0: ≡_{J_a} and ≡_{J_b}
        let spec = PosetSpec {
            n: 3,
            covers: vec![(0, 1), (0, 2)],
        };
        let s = build_semilattice(&spec).unwrap();
        let g = compute_green(&s);
        let ca = ggm_congruence(&s, &g, g.j_class_of[1]).unwrap();
        let cb = ggm_congruence(&s, &g, g.j_class_of[2]).unwrap();
        assert_eq!(ca.class_sizes(), vec![2, 1]);
        assert_eq!(cb.class_sizes(), vec![2, 1]);
        assert!(meet(&ca, &cb).unwrap().is_trivial());
    }

    #[test]
    fn null_semigroup_has_nontrivial_ggm() {
        let s = Semigroup::from_cayley(&[vec![0, 0], vec![0, 0]], None).unwrap();
        let g = compute_green(&s);
        let ggm = ggm_all(&s, &g).unwrap();
        assert!(ggm.is_universal() && !ggm.is_trivial());
    }

    #[test]
    fn qg_ggm_is_trivial() {
        for b in [
            BuiltinGroup::Cyclic(4),
            BuiltinGroup::Symmetric(3),
            BuiltinGroup::Klein4,
        ] {
            let g = Group::from_semigroup(&builtin_group(b).unwrap()).unwrap();
            let s = build_qg(&g);
            let (_, _, a) = setup(&s);
            assert!(a.ggm.is_trivial(), "{b:?}");
        }
    }

    #[test]
    fn semilattice_irreducible_iff_join_irreducible() {
        // chain: every non-minimum element is join irreducible
        let s = build_semilattice(&chain_poset(3)).unwrap();
        let (g, _, a) = setup(&s);
        for v in &a.classification.verdicts {
            let e = g.j_class(v.j).elements[0];
            assert_eq!(v.irreducible, e != 0, "element {e}");
        }
        // Boolean lattice on 2 atoms: the top is a join of the atoms
        let s = build_semilattice(&boolean_poset(2)).unwrap();
        let (g, _, a) = setup(&s);
        let irr: Vec<Element> = a
            .classification
            .irreducible_classes()
            .map(|j| g.j_class(j).elements[0])
            .collect();
        assert_eq!(irr, vec![1, 2]);
    }

    #[test]
    fn matrix_monoid_has_one_irreducible_class() {
        let s = build_matrix_monoid(2, 2).unwrap();
        let (g, _, a) = setup(&s);
        let irr: Vec<usize> = a.classification.irreducible_classes().collect();
        assert_eq!(irr.len(), 1);
        assert_eq!(g.j_class(irr[0]).elements.len(), 9);
        let zero = g.j_classes.iter().find(|c| c.elements.len() == 1).unwrap();
        assert!(a.congruences.get(zero.id).unwrap().is_universal());
        assert_eq!(is_generalized_group_mapping(&s, &g).unwrap(), Some(irr[0]));
    }

    #[test]
    fn empty_meet_is_universal() {
        let s = build_semilattice(&chain_poset(2)).unwrap();
        let (g, o, a) = setup(&s);
        let bottom = g.j_class_of[0];
        assert!(a.congruences.meet_below(&o, bottom, 2).is_universal());
        // ≡ at the bottom of a 2-chain is universal, so the bottom is reducible
        assert!(!a.classification.is_irreducible(bottom));
    }

    #[test]
    fn union_quotient_kernels() {
        let s = build_group_union_quotient(
            &builtin_group(BuiltinGroup::Symmetric(3)).unwrap(),
            &[0, 3, 4],
        )
        .unwrap();
        let (g, o, a) = setup(&s);
        let units = g.j_class_of[0];
        let ms = maximal_subgroup(&s, &g, units, None).unwrap();
        let nj = compute_n_j(&s, &o, &ms, &a.congruences).unwrap();
        assert_eq!(nj.carrier, vec![0, 3, 4]);
        let ideal = g.j_class_of[6];
        let ms = maximal_subgroup(&s, &g, ideal, None).unwrap();
        let nj = compute_n_j(&s, &o, &ms, &a.congruences).unwrap();
        assert_eq!(nj.carrier.len(), 2, "no regular class below: N_J = G_J");
        assert_eq!(is_generalized_group_mapping(&s, &g).unwrap(), None);
    }

    #[test]
    fn generalized_group_mapping_examples() {
        let s = builtin_group(BuiltinGroup::Cyclic(5)).unwrap();
        assert_eq!(
            is_generalized_group_mapping(&s, &compute_green(&s)).unwrap(),
            Some(0)
        );
        let s = build_semilattice(&chain_poset(3)).unwrap();
        assert_eq!(
            is_generalized_group_mapping(&s, &compute_green(&s)).unwrap(),
            None
        );
    }
}
