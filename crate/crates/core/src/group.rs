//! Table-driven finite group theory: normal closures, minimal normal
//! subgroups, the socle `A(G) × T(G)`, Sylow pieces of abelian normal
//! subgroups, p-cores and minimal numbers of normal generators.
//!
//! A [`Group`] is always a subset of some [`Semigroup`] that happens to be a
//! group under the induced product. It is re-indexed locally as `0..order`;
//! every [`NormalSubgroup`] is a bit set over those local indices.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{Element, Semigroup};

#[derive(Debug, Clone)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    parent: Vec<Element>,
    labels: Vec<String>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_closures: OnceLock<Vec<NormalSubgroup>>,
}

/// Checks that `carrier` is a group under the product of `s` and builds it.
pub fn verify_group(s: &Semigroup, carrier: &[Element]) -> Result<Group> {
    let mut elems = carrier.to_vec();
    elems.sort_unstable();
    elems.dedup();
    if elems.is_empty() {
        return Err(Error::NoIdentity);
    }
    let mut local = vec![usize::MAX; s.order()];
    for (i, &x) in elems.iter().enumerate() {
        if x >= s.order() {
            return Err(Error::ElementOutsideGroup(x));
        }
        local[x] = i;
    }
    let m = elems.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &elems {
        for &b in &elems {
            let p = s.mul(a, b);
            if local[p] == usize::MAX {
                return Err(Error::NotClosed { a, b, product: p });
            }
            table.push(local[p]);
        }
    }
    let identity = (0..m)
        .find(|&e| (0..m).all(|x| table[e * m + x] == x && table[x * m + e] == x))
        .ok_or(Error::NoIdentity)?;
    let mut inverse = Vec::with_capacity(m);
    for x in 0..m {
        let inv = (0..m)
            .find(|&y| table[x * m + y] == identity && table[y * m + x] == identity)
            .ok_or(Error::NoInverse(elems[x]))?;
        inverse.push(inv);
    }
    let labels = elems.iter().map(|&x| s.label(x).to_string()).collect();
    Ok(Group::assemble(table, identity, inverse, elems, labels))
}

impl Group {
    /// The whole semigroup, which must be a group.
    pub fn from_semigroup(s: &Semigroup) -> Result<Group> {
        let all: Vec<Element> = s.elements().collect();
        verify_group(s, &all)
    }

    fn assemble(
        table: Vec<usize>,
        identity: usize,
        inverse: Vec<usize>,
        parent: Vec<Element>,
        labels: Vec<String>,
    ) -> Group {
        let order = parent.len();
        let mut class_of = vec![usize::MAX; order];
        let mut classes = Vec::new();
        for x in 0..order {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in 0..order {
                let c = table[table[g * order + x] * order + inverse[g]];
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        Group {
            order,
            table,
            identity,
            inverse,
            parent,
            labels,
            class_of,
            classes,
            class_closures: OnceLock::new(),
        }
    }

    /// Re-expresses this group as a semigroup on `0..order`.
    pub fn to_semigroup(&self) -> Semigroup {
        Semigroup::from_flat(
            self.order,
            self.table.clone(),
            Some(self.labels.clone()),
            crate::semigroup::AssocCheck::Skip,
        )
        .expect("label count matches")
    }

    /// The subgroup on `carrier` as a group in its own right, with the
    /// embedding of its local indices into this group's.
    pub fn subgroup(&self, carrier: &FixedBitSet) -> Result<(Group, Vec<usize>)> {
        let elems: Vec<usize> = carrier.ones().collect();
        let s = self.to_semigroup();
        let mut g = verify_group(&s, &elems)?;
        g.parent = elems.iter().map(|&x| self.parent[x]).collect();
        Ok((g, elems))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `g x g⁻¹`
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The semigroup element behind a local index.
    pub fn parent_element(&self, x: usize) -> Element {
        self.parent[x]
    }

    pub fn parent_elements(&self) -> &[Element] {
        &self.parent
    }

    /// Local index of a semigroup element, if it lies in the group.
    pub fn local_index(&self, e: Element) -> Option<usize> {
        self.parent.iter().position(|&p| p == e)
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn conjugacy_class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian_subset(&self.whole().carrier)
    }

    pub fn is_abelian_subset(&self, set: &FixedBitSet) -> bool {
        set.ones()
            .all(|a| set.ones().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_subgroup(&self, set: &FixedBitSet) -> bool {
        set.contains(self.identity)
            && set.ones().all(|a| set.contains(self.inverse[a]))
            && set
                .ones()
                .all(|a| set.ones().all(|b| set.contains(self.mul(a, b))))
    }

    /// Subgroup and closed under conjugation by every element.
    pub fn is_normal(&self, set: &FixedBitSet) -> bool {
        set.len() == self.order
            && self.is_subgroup(set)
            && set.ones().all(|x| {
                self.classes[self.class_of[x]]
                    .iter()
                    .all(|&c| set.contains(c))
            })
    }

    pub fn trivial(&self) -> NormalSubgroup {
        let mut carrier = FixedBitSet::with_capacity(self.order);
        carrier.insert(self.identity);
        NormalSubgroup { carrier }
    }

    pub fn whole(&self) -> NormalSubgroup {
        let mut carrier = FixedBitSet::with_capacity(self.order);
        carrier.insert_range(..);
        NormalSubgroup { carrier }
    }

    /// Wraps a subset after checking it is a normal subgroup.
    pub fn normal_subgroup(&self, elems: &[usize]) -> Result<NormalSubgroup> {
        let mut carrier = FixedBitSet::with_capacity(self.order);
        for &x in elems {
            if x >= self.order {
                return Err(Error::ElementOutsideGroup(x));
            }
            carrier.insert(x);
        }
        if !self.is_normal(&carrier) {
            return Err(Error::NotNormal);
        }
        Ok(NormalSubgroup { carrier })
    }

    /// Subgroup generated by `gens`, by breadth-first right multiplication.
    pub fn generated_subgroup(&self, gens: &[usize]) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.order);
        seen.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen.put(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Smallest normal subgroup containing `xs`: the subgroup generated by
    /// the conjugacy classes of the `xs`.
    pub fn normal_closure(&self, xs: &[usize]) -> Result<NormalSubgroup> {
        let mut acc = self.trivial();
        for &x in xs {
            if x >= self.order {
                return Err(Error::ElementOutsideGroup(x));
            }
            if !acc.contains(x) {
                acc = self.join(&acc, self.element_closure(x));
            }
        }
        Ok(acc)
    }

    /// Cached normal closure of a single element.
    pub fn element_closure(&self, x: usize) -> &NormalSubgroup {
        let closures = self.class_closures.get_or_init(|| {
            self.classes
                .iter()
                .map(|class| NormalSubgroup {
                    carrier: self.generated_subgroup(class),
                })
                .collect()
        });
        &closures[self.class_of[x]]
    }

    /// `AB` for normal subgroups `A`, `B`, which is again normal.
    pub fn join(&self, a: &NormalSubgroup, b: &NormalSubgroup) -> NormalSubgroup {
        if a.carrier.is_subset(&b.carrier) {
            return b.clone();
        }
        if b.carrier.is_subset(&a.carrier) {
            return a.clone();
        }
        let mut carrier = FixedBitSet::with_capacity(self.order);
        for x in a.carrier.ones() {
            for y in b.carrier.ones() {
                carrier.insert(self.mul(x, y));
            }
        }
        NormalSubgroup { carrier }
    }

    pub fn join_all<'a>(
        &self,
        parts: impl IntoIterator<Item = &'a NormalSubgroup>,
    ) -> NormalSubgroup {
        parts
            .into_iter()
            .fold(self.trivial(), |acc, n| self.join(&acc, n))
    }

    /// Every normal subgroup, sorted by order then carrier.
    pub fn normal_subgroups(&self) -> Vec<NormalSubgroup> {
        let reps: Vec<usize> = self.classes.iter().map(|c| c[0]).collect();
        let mut seen: HashSet<NormalSubgroup> = HashSet::new();
        let start = self.trivial();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(n) = queue.pop_front() {
            for &x in &reps {
                if n.contains(x) {
                    continue;
                }
                let bigger = self.join(&n, self.element_closure(x));
                if seen.insert(bigger.clone()) {
                    queue.push_back(bigger);
                }
            }
        }
        let mut all: Vec<NormalSubgroup> = seen.into_iter().collect();
        all.sort();
        all
    }

    /// Minimal elements, under inclusion, of the normal closures of the
    /// nontrivial elements. A minimal normal subgroup is the normal closure
    /// of each of its nontrivial elements, so nothing is missed.
    pub fn minimal_normal_subgroups(&self) -> Vec<MinimalNormal> {
        let mut candidates: Vec<&NormalSubgroup> = self
            .classes
            .iter()
            .filter(|c| c[0] != self.identity)
            .map(|c| self.element_closure(c[0]))
            .collect();
        candidates.sort();
        candidates.dedup();
        let mut out: Vec<MinimalNormal> = candidates
            .iter()
            .filter(|m| {
                !candidates
                    .iter()
                    .any(|other| other.order() < m.order() && other.carrier.is_subset(&m.carrier))
            })
            .map(|&m| MinimalNormal {
                abelian: self.is_abelian_subset(&m.carrier),
                subgroup: m.clone(),
            })
            .collect();
        out.sort_by(|a, b| a.subgroup.cmp(&b.subgroup));
        out
    }

    /// `Z(H) ∩ H` for a subgroup `H`.
    pub fn center_of(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut z = FixedBitSet::with_capacity(self.order);
        for a in set.ones() {
            if set.ones().all(|b| self.mul(a, b) == self.mul(b, a)) {
                z.insert(a);
            }
        }
        z
    }

    /// `A(G)`, `T(G)` and `S(G) = A(G) × T(G)`, with the direct product
    /// structure audited.
    pub fn socle_data(&self) -> Result<SocleData> {
        let minimal_normals = self.minimal_normal_subgroups();
        let a = self.join_all(
            minimal_normals
                .iter()
                .filter(|m| m.abelian)
                .map(|m| &m.subgroup),
        );
        let t = self.join_all(
            minimal_normals
                .iter()
                .filter(|m| !m.abelian)
                .map(|m| &m.subgroup),
        );
        let socle = self.join(&a, &t);
        let data = SocleData {
            minimal_normals,
            a,
            t,
            socle,
        };
        self.audit_socle(&data)?;
        Ok(data)
    }

    fn audit_socle(&self, d: &SocleData) -> Result<()> {
        let fail = |msg: &str| Err(Error::Inconsistency(format!("socle audit: {msg}")));
        if !d.a.intersection(&d.t).is_trivial() {
            return fail("A(G) and T(G) intersect nontrivially");
        }
        if d.socle.order() != d.a.order() * d.t.order() {
            return fail("|S(G)| != |A(G)|·|T(G)|");
        }
        if !self.is_abelian_subset(&d.a.carrier) {
            return fail("A(G) is not abelian");
        }
        if self.center_of(&d.t.carrier).count_ones(..) != 1 {
            return fail("Z(T(G)) is nontrivial");
        }
        for m in &d.minimal_normals {
            let home = if m.abelian { &d.a } else { &d.t };
            let other = if m.abelian { &d.t } else { &d.a };
            if !m.subgroup.is_subset(home) || !m.subgroup.intersection(other).is_trivial() {
                return fail("minimal normal subgroup outside its part");
            }
        }
        Ok(())
    }

    /// `A(G)∩N`, `T(G)∩N`, `S(G)∩N`, checking that the last is the direct
    /// product of the first two and that `T(G)∩N` is a product of nonabelian
    /// minimal normal subgroups of `G`.
    pub fn intersect_with_normal(
        &self,
        socle: &SocleData,
        n: &NormalSubgroup,
    ) -> Result<SocleIntersection> {
        if !self.is_normal(&n.carrier) {
            return Err(Error::NotNormal);
        }
        let a = socle.a.intersection(n);
        let t = socle.t.intersection(n);
        let s = socle.socle.intersection(n);
        let fail = |msg: &str| Err(Error::Inconsistency(format!("socle ∩ N audit: {msg}")));
        if !a.intersection(&t).is_trivial() || self.join(&a, &t) != s {
            return fail("S(G)∩N is not (A(G)∩N) × (T(G)∩N)");
        }
        let inside = socle
            .minimal_normals
            .iter()
            .filter(|m| !m.abelian && m.subgroup.is_subset(n))
            .map(|m| &m.subgroup);
        if self.join_all(inside) != t {
            return fail("T(G)∩N is not a product of minimal normal subgroups");
        }
        Ok(SocleIntersection { a, t, s })
    }

    /// Splits an abelian subgroup into its Sylow pieces; each must be
    /// elementary abelian.
    pub fn sylow_decompose(&self, a: &NormalSubgroup) -> Result<Vec<SylowPiece>> {
        if !self.is_abelian_subset(&a.carrier) {
            return Err(Error::NotAbelian);
        }
        let mut pieces = Vec::new();
        for p in prime_factors(a.order() as u64) {
            let mut carrier = FixedBitSet::with_capacity(self.order);
            for x in a.elements() {
                let o = self.element_order(x);
                if is_power_of(o as u64, p) {
                    if o != 1 && o as u64 != p {
                        return Err(Error::NotElementaryAbelian { p, order: o });
                    }
                    carrier.insert(x);
                }
            }
            pieces.push(SylowPiece {
                p,
                carrier: NormalSubgroup { carrier },
            });
        }
        Ok(pieces)
    }

    /// `O_p(G)`: the join of the normal closures that are p-groups.
    pub fn p_core(&self, p: u64) -> NormalSubgroup {
        let mut core = self.trivial();
        loop {
            let mut grown = core.clone();
            for class in &self.classes {
                let c = self.element_closure(class[0]);
                if is_power_of(c.order() as u64, p) && !c.is_subset(&grown) {
                    grown = self.join(&grown, c);
                }
            }
            if grown == core {
                return core;
            }
            core = grown;
        }
    }

    /// `O_p(N)` for `N ⊴ G`, as a subset of `G`.
    pub fn p_core_of(&self, n: &NormalSubgroup, p: u64) -> Result<NormalSubgroup> {
        if !self.is_normal(&n.carrier) {
            return Err(Error::NotNormal);
        }
        let (sub, embed) = self.subgroup(&n.carrier)?;
        let core = sub.p_core(p);
        let mut carrier = FixedBitSet::with_capacity(self.order);
        for x in core.elements() {
            carrier.insert(embed[x]);
        }
        Ok(NormalSubgroup { carrier })
    }

    /// Smallest `k` such that `M` is the normal closure of `k` elements.
    ///
    /// Iterative deepening; the first coordinate runs over conjugacy class
    /// representatives, later ones over elements outside the partial closure.
    /// States that already failed at a given remaining depth are memoized.
    /// The witness is the lexicographically smallest generating tuple.
    pub fn min_normal_generators(&self, m: &NormalSubgroup) -> Result<Generation> {
        if !self.is_normal(&m.carrier) {
            return Err(Error::NotNormal);
        }
        if m.is_trivial() {
            return Ok(Generation {
                k: 0,
                witness: Vec::new(),
            });
        }
        let reps: Vec<usize> = self
            .classes
            .iter()
            .map(|c| c[0])
            .filter(|&x| x != self.identity && m.contains(x))
            .collect();
        let mut reps_sorted = reps;
        reps_sorted.sort_unstable();
        let elems: Vec<usize> = m.elements().filter(|&x| x != self.identity).collect();
        for k in 1..=elems.len() {
            let mut search = Search {
                group: self,
                target: m,
                elems: &elems,
                failed: HashSet::new(),
            };
            for &x in &reps_sorted {
                let mut tuple = vec![x];
                if search.extend(k - 1, self.element_closure(x).clone(), &mut tuple) {
                    return Ok(Generation { k, witness: tuple });
                }
            }
        }
        Err(Error::Inconsistency(
            "normal subgroup not generated by its elements".into(),
        ))
    }

    /// The same count as `min_normal_generators(G, S(G)∩N)`, computed as the
    /// maximum over the Sylow pieces of `A(G)∩N`, raised to 1 when only the
    /// nonabelian part is present.
    pub fn min_normal_generators_reduced(
        &self,
        socle: &SocleData,
        n: &NormalSubgroup,
    ) -> Result<usize> {
        let parts = self.intersect_with_normal(socle, n)?;
        let mut k = 0;
        for piece in self.sylow_decompose(&parts.a)? {
            k = k.max(self.min_normal_generators(&piece.carrier)?.k);
        }
        if k == 0 && !parts.t.is_trivial() {
            k = 1;
        }
        Ok(k)
    }
}

struct Search<'a> {
    group: &'a Group,
    target: &'a NormalSubgroup,
    elems: &'a [usize],
    failed: HashSet<(usize, NormalSubgroup)>,
}

impl Search<'_> {
    fn extend(
        &mut self,
        remaining: usize,
        closure: NormalSubgroup,
        tuple: &mut Vec<usize>,
    ) -> bool {
        if closure == *self.target {
            return true;
        }
        if remaining == 0 || self.failed.contains(&(remaining, closure.clone())) {
            return false;
        }
        for &y in self.elems {
            if closure.contains(y) {
                continue;
            }
            let next = self.group.join(&closure, self.group.element_closure(y));
            tuple.push(y);
            if self.extend(remaining - 1, next, tuple) {
                return true;
            }
            tuple.pop();
        }
        self.failed.insert((remaining, closure));
        false
    }
}

/// A normal subgroup as a set of local indices of its group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalSubgroup {
    carrier: FixedBitSet,
}

impl NormalSubgroup {
    pub(crate) fn from_bits(carrier: FixedBitSet) -> Self {
        NormalSubgroup { carrier }
    }

    pub fn carrier(&self) -> &FixedBitSet {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.count_ones(..)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.carrier.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.carrier.ones()
    }

    pub fn is_subset(&self, other: &NormalSubgroup) -> bool {
        self.carrier.is_subset(&other.carrier)
    }

    pub fn intersection(&self, other: &NormalSubgroup) -> NormalSubgroup {
        let mut carrier = self.carrier.clone();
        carrier.intersect_with(&other.carrier);
        NormalSubgroup { carrier }
    }
}

impl PartialOrd for NormalSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Smaller subgroups first, then by the sorted element lists.
impl Ord for NormalSubgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.carrier.ones().cmp(other.carrier.ones()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalNormal {
    pub subgroup: NormalSubgroup,
    pub abelian: bool,
}

#[derive(Debug, Clone)]
pub struct SocleData {
    pub minimal_normals: Vec<MinimalNormal>,
    pub a: NormalSubgroup,
    pub t: NormalSubgroup,
    pub socle: NormalSubgroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleIntersection {
    pub a: NormalSubgroup,
    pub t: NormalSubgroup,
    pub s: NormalSubgroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowPiece {
    pub p: u64,
    pub carrier: NormalSubgroup,
}

/// A minimal normal generating tuple, in local indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generation {
    pub k: usize,
    pub witness: Vec<usize>,
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Distinct prime divisors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `n = p^j` for some `j ≥ 0`.
pub fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
