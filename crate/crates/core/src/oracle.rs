//! Brute-force verifiers. Nothing here reuses the optimized search in
//! [`crate::group`]: closures are recomputed by repeated multiplication and
//! generator counts by enumerating every tuple.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::analyze::analyze;
use crate::congruence::{compute_n_j, CongruenceAnalysis};
use crate::constructions::{build_qg_with_cosets, parse_builtin};
use crate::error::{Error, Result};
use crate::green::{
    compute_green, j_order, maximal_subgroup, stability_audit, subgroup_transport_iso,
};
use crate::group::{is_power_of, prime_factors, Group, NormalSubgroup};
use crate::semigroup::{Element, Semigroup};
use crate::zmud::zmud_number;

pub const DEFAULT_GROUP_LIMIT: usize = 200;
pub const TUPLE_LIMIT: u64 = 10_000_000;

fn bits(n: usize, xs: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.extend(xs);
    b
}

/// Subgroup generated by `set`, by multiplying until nothing new appears.
fn close(g: &Group, set: &FixedBitSet) -> FixedBitSet {
    let mut out = bits(g.order(), [g.identity()]);
    out.union_with(set);
    loop {
        let current: Vec<usize> = out.ones().collect();
        let before = current.len();
        for &a in &current {
            for &b in &current {
                out.insert(g.mul(a, b));
            }
        }
        if out.count_ones(..) == before {
            return out;
        }
    }
}

fn conjugates(g: &Group, x: usize) -> FixedBitSet {
    bits(
        g.order(),
        g.elements().map(|h| g.mul(g.mul(g.inv(h), x), h)),
    )
}

fn naive_is_normal(g: &Group, set: &FixedBitSet) -> bool {
    set.ones().all(|x| conjugates(g, x).is_subset(set))
}

fn naive_abelian(g: &Group, set: &FixedBitSet) -> bool {
    set.ones()
        .all(|a| set.ones().all(|b| g.mul(a, b) == g.mul(b, a)))
}

/// The lattice of normal subgroups, sorted by order then elements.
#[derive(Debug, Clone)]
pub struct NormalLattice {
    pub normals: Vec<NormalSubgroup>,
}

pub fn all_normal_subgroups(g: &Group, limit: usize) -> Result<NormalLattice> {
    if g.order() > limit {
        return Err(Error::TooLarge {
            what: "group order",
            size: g.order() as u64,
            limit: limit as u64,
        });
    }
    let closures: Vec<FixedBitSet> = g.elements().map(|x| close(g, &conjugates(g, x))).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![bits(g.order(), [g.identity()])];
    found.insert(vec![g.identity()]);
    while let Some(n) = frontier.pop() {
        for c in &closures {
            let mut u = n.clone();
            u.union_with(c);
            let joined = close(g, &u);
            if found.insert(joined.ones().collect()) {
                frontier.push(joined);
            }
        }
    }
    let mut normals = Vec::new();
    for elems in found {
        let b = bits(g.order(), elems);
        if !naive_is_normal(g, &b) {
            return Err(Error::Inconsistency(
                "join of normal closures is not normal".into(),
            ));
        }
        normals.push(NormalSubgroup::from_bits(b));
    }
    normals.sort();
    Ok(NormalLattice { normals })
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.normals[i].is_subset(&self.normals[j])
    }

    /// Index of the least strict over-group, when there is exactly one.
    pub fn unique_cover(&self, i: usize) -> Option<usize> {
        let overs: Vec<usize> = (0..self.len()).filter(|&j| self.lt(i, j)).collect();
        overs
            .iter()
            .copied()
            .find(|&m| overs.iter().all(|&o| o == m || self.lt(m, o)))
    }

    /// Index of the greatest strict sub-group, when there is exactly one.
    pub fn unique_subcover(&self, i: usize) -> Option<usize> {
        let unders: Vec<usize> = (0..self.len()).filter(|&j| self.lt(j, i)).collect();
        unders
            .iter()
            .copied()
            .find(|&m| unders.iter().all(|&u| u == m || self.lt(u, m)))
    }

    /// Pairs `(M, M̄)` of meet irreducible normals and their unique covers.
    pub fn meet_irreducibles(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter_map(|i| self.unique_cover(i).map(|c| (i, c)))
            .collect()
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.unique_subcover(i).is_some())
            .collect()
    }

    /// Atoms of the lattice.
    pub fn minimal(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| (1..self.len()).all(|j| !self.lt(j, i)))
            .collect()
    }
}

pub fn meet_irreducible_normals(g: &Group) -> Result<Vec<(NormalSubgroup, NormalSubgroup)>> {
    let lattice = all_normal_subgroups(g, DEFAULT_GROUP_LIMIT)?;
    Ok(lattice
        .meet_irreducibles()
        .into_iter()
        .map(|(m, c)| (lattice.normals[m].clone(), lattice.normals[c].clone()))
        .collect())
}

/// Same count of meet- and join-irreducibles in the normal subgroup lattice.
pub fn dilworth_check(g: &Group) -> Result<bool> {
    let lattice = all_normal_subgroups(g, DEFAULT_GROUP_LIMIT)?;
    Ok(lattice.meet_irreducibles().len() == lattice.join_irreducibles().len())
}

/// Elements `e` of a semilattice for which the join of everything strictly
/// below `e` is missing or different from `e`.
pub fn join_irreducibles(s: &Semigroup) -> Result<Vec<Element>> {
    if !s.is_commutative() || !s.elements().all(|x| s.is_idempotent(x)) {
        return Err(Error::NotASemilattice);
    }
    let le = |x: Element, y: Element| s.mul(x, y) == x;
    let lub = |set: &[Element]| {
        let upper: Vec<Element> = s
            .elements()
            .filter(|&u| set.iter().all(|&x| le(x, u)))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&u| upper.iter().all(|&v| le(u, v)))
    };
    Ok(s.elements()
        .filter(|&e| {
            let below: Vec<Element> = s.elements().filter(|&x| x != e && le(x, e)).collect();
            lub(&below) != Some(e)
        })
        .collect())
}

/// Smallest `k` such that some `k`-tuple of elements of `M` has normal
/// closure `M`, by enumerating all tuples.
pub fn exhaustive_min_normal_gen(g: &Group, m: &NormalSubgroup) -> Result<usize> {
    if !naive_is_normal(g, m.carrier()) || close(g, m.carrier()) != *m.carrier() {
        return Err(Error::NotNormal);
    }
    let elems: Vec<usize> = m.elements().collect();
    let closures: Vec<FixedBitSet> = elems.iter().map(|&x| conjugates(g, x)).collect();
    let mut budget = TUPLE_LIMIT;
    for k in 0..=elems.len() {
        let count = (elems.len() as u64)
            .checked_pow(k as u32)
            .unwrap_or(u64::MAX);
        if count > budget {
            return Err(Error::TooLarge {
                what: "generator tuples",
                size: count,
                limit: TUPLE_LIMIT,
            });
        }
        budget -= count;
        let mut idx = vec![0usize; k];
        loop {
            let mut union = FixedBitSet::with_capacity(g.order());
            for &i in &idx {
                union.union_with(&closures[i]);
            }
            if close(g, &union) == *m.carrier() {
                return Ok(k);
            }
            // odometer increment
            let mut pos = 0;
            while pos < k {
                idx[pos] += 1;
                if idx[pos] < elems.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    Err(Error::Inconsistency("no generating tuple found".into()))
}

/// Socle pieces recomputed from the lattice atoms.
struct NaiveSocle {
    a: FixedBitSet,
    t: FixedBitSet,
    s: FixedBitSet,
}

fn naive_socle(g: &Group, lattice: &NormalLattice) -> NaiveSocle {
    let mut a = FixedBitSet::with_capacity(g.order());
    let mut t = FixedBitSet::with_capacity(g.order());
    for i in lattice.minimal() {
        let m = lattice.normals[i].carrier();
        if naive_abelian(g, m) {
            a.union_with(m);
        } else {
            t.union_with(m);
        }
    }
    let (a, t) = (close(g, &a), close(g, &t));
    let mut both = a.clone();
    both.union_with(&t);
    NaiveSocle {
        s: close(g, &both),
        a,
        t,
    }
}

fn normal(g: &Group, b: FixedBitSet) -> NormalSubgroup {
    debug_assert!(naive_is_normal(g, &b));
    NormalSubgroup::from_bits(b)
}

fn cap(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut c = a.clone();
    c.intersect_with(b);
    c
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub k: usize,
    pub a_cap_n_order: usize,
    pub exists: bool,
}

/// Recomputes, independently, the generator count of `S(G)∩N` three ways
/// and the existence criterion two ways, then compares with the fast path.
pub fn crosscheck_equivalences(g: &Group, n: &NormalSubgroup, p: u64) -> Result<CrosscheckReport> {
    let lattice = all_normal_subgroups(g, DEFAULT_GROUP_LIMIT)?;
    if !lattice.normals.contains(n) {
        return Err(Error::NotNormal);
    }
    let soc = naive_socle(g, &lattice);
    let s_n = normal(g, cap(&soc.s, n.carrier()));
    let a_n = normal(g, cap(&soc.a, n.carrier()));
    let t_n = cap(&soc.t, n.carrier());
    let floor = |k: usize| {
        if k == 0 && t_n.count_ones(..) > 1 {
            1
        } else {
            k
        }
    };

    let k_socle = exhaustive_min_normal_gen(g, &s_n)?;
    let k_abelian = floor(exhaustive_min_normal_gen(g, &a_n)?);
    let mut k_sylow = 0;
    for q in prime_factors(a_n.order() as u64) {
        let piece = bits(
            g.order(),
            a_n.elements()
                .filter(|&x| is_power_of(g.element_order(x) as u64, q)),
        );
        k_sylow = k_sylow.max(exhaustive_min_normal_gen(g, &normal(g, piece))?);
    }
    let k_sylow = floor(k_sylow);
    if k_socle != k_abelian || k_socle != k_sylow {
        return Err(Error::Mismatch(format!(
            "generator counts: S∩N {k_socle}, A∩N {k_abelian}, Sylow max {k_sylow}"
        )));
    }

    let by_order = p == 0 || !(a_n.order() as u64).is_multiple_of(p);
    let by_core = p == 0 || {
        let (sub, _) = g.subgroup(n.carrier())?;
        let sub_lattice = all_normal_subgroups(&sub, DEFAULT_GROUP_LIMIT)?;
        sub_lattice
            .normals
            .iter()
            .all(|m| m.is_trivial() || !is_power_of(m.order() as u64, p))
    };
    if by_order != by_core {
        return Err(Error::Mismatch(format!(
            "p = {p}: |A(G)∩N| = {} disagrees with O_p(N)",
            a_n.order()
        )));
    }

    let fast = zmud_number(g, n, p)?;
    let fast_k = zmud_number(g, n, 0)?.k;
    if fast.exists != by_order || fast_k != Some(k_socle) {
        return Err(Error::Mismatch(format!(
            "fast path gives exists = {}, k = {fast_k:?}; oracle gives {by_order}, {k_socle}",
            fast.exists
        )));
    }
    Ok(CrosscheckReport {
        k: k_socle,
        a_cap_n_order: a_n.order(),
        exists: by_order,
    })
}

/// `≡_J` straight from its definition, pair by pair, over all `x, y ∈ J`.
fn brute_ggm_related(s: &Semigroup, in_j: &[bool], a: Element, b: Element) -> bool {
    let j: Vec<Element> = s.elements().filter(|&x| in_j[x]).collect();
    j.iter().all(|&x| {
        j.iter().all(|&y| {
            let (u, v) = (s.mul_all(&[x, a, y]), s.mul_all(&[x, b, y]));
            match (in_j[u], in_j[v]) {
                (true, true) => u == v,
                (false, false) => true,
                _ => false,
            }
        })
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditCounts {
    pub regular_classes: usize,
    pub idempotent_pairs: usize,
    pub normal_pairs: usize,
}

/// Stability, congruence, socle, complement and `N_J` audits for one
/// semigroup.
pub fn structural_audit(s: &Semigroup) -> Result<AuditCounts> {
    let fail = |msg: String| Err(Error::Inconsistency(msg));
    let green = compute_green(s);
    if !stability_audit(s, &green) {
        return fail("stability".into());
    }
    let order = j_order(&green);
    let cong = CongruenceAnalysis::compute(s, &green, &order)?;
    if !cong.ggm.is_congruence_on(s) {
        return fail("GGM relation is not a congruence".into());
    }
    let mut counts = AuditCounts::default();
    for (j, c) in &cong.congruences.by_class {
        if !c.is_congruence_on(s) {
            return fail(format!("≡ for J-class {j} is not a congruence"));
        }
        let in_j: Vec<bool> = s.elements().map(|x| green.j_class_of[x] == *j).collect();
        for a in s.elements() {
            for b in a + 1..s.order() {
                if c.related(a, b) != brute_ggm_related(s, &in_j, a, b) {
                    return fail(format!("≡ for J-class {j} wrong on ({a}, {b})"));
                }
            }
        }
    }
    for class in green.regular_classes() {
        counts.regular_classes += 1;
        let ms = maximal_subgroup(s, &green, class.id, None)?;
        let nj = compute_n_j(s, &order, &ms, &cong.congruences)?;
        for &f in &class.idempotents[1..] {
            counts.idempotent_pairs += 1;
            let other = maximal_subgroup(s, &green, class.id, Some(f))?;
            let nf = compute_n_j(s, &order, &other, &cong.congruences)?;
            let iso = subgroup_transport_iso(s, &green, ms.e, f)?;
            let mut image: Vec<Element> = nj
                .carrier
                .iter()
                .map(|&x| iso.apply(x).expect("in G_e"))
                .collect();
            image.sort_unstable();
            if image != nf.carrier {
                return fail(format!(
                    "N_J depends on the idempotent in J-class {}",
                    class.id
                ));
            }
        }
        counts.normal_pairs += group_audit(&ms.group)?;
    }
    Ok(counts)
}

/// Socle audit, plus: every minimal normal `M` and normal `N` satisfy
/// `M ⊆ N` or `M ∩ N = 1`, and abelian minimal normals are elementary
/// abelian p-groups. Returns the number of `(M, N)` pairs checked.
pub fn group_audit(g: &Group) -> Result<usize> {
    let socle = g.socle_data()?;
    let normals = g.normal_subgroups();
    let mut pairs = 0;
    for m in &socle.minimal_normals {
        if m.abelian {
            let primes = prime_factors(m.subgroup.order() as u64);
            let ok = primes.len() == 1
                && m.subgroup
                    .elements()
                    .all(|x| x == g.identity() || g.element_order(x) as u64 == primes[0]);
            if !ok {
                return Err(Error::Inconsistency(
                    "abelian minimal normal is not elementary".into(),
                ));
            }
        }
        for n in &normals {
            pairs += 1;
            if !m.subgroup.is_subset(n) && !m.subgroup.intersection(n).is_trivial() {
                return Err(Error::Inconsistency(
                    "minimal normal meets a normal subgroup partially".into(),
                ));
            }
        }
    }
    Ok(pairs)
}

const GROUP_EXPRS: &[&str] = &[
    "symmetric(3)",
    "symmetric(4)",
    "alternating(4)",
    "klein4",
    "quaternion8",
    "elementary_abelian(2,3)",
    "elementary_abelian(2,4)",
    "elementary_abelian(3,2)",
    "product(klein4, cyclic(3))",
    "product(cyclic(2), symmetric(3))",
    "product(cyclic(3), symmetric(3))",
];

/// Named groups up to `max_order`: cyclic, dihedral and the fixed list above.
pub fn corpus_groups(max_order: usize) -> Result<Vec<(String, Group)>> {
    let mut exprs: Vec<String> = (1..=max_order).map(|m| format!("cyclic({m})")).collect();
    exprs.extend((2..=max_order / 2).map(|m| format!("dihedral({m})")));
    exprs.extend(GROUP_EXPRS.iter().map(ToString::to_string));
    let mut out = Vec::new();
    for e in exprs {
        let g = Group::from_semigroup(&parse_builtin(&e)?)?;
        if g.order() <= max_order {
            out.push((e, g));
        }
    }
    Ok(out)
}

/// Chains, Boolean lattices and three random meet-closed posets.
pub fn corpus_semilattices(seed: u64) -> Result<Vec<(String, Semigroup)>> {
    let mut exprs: Vec<String> = (1..=7).map(|n| format!("chain({n})")).collect();
    exprs.extend((0..=3).map(|k| format!("boolean({k})")));
    exprs.extend((0..3).map(|i| format!("random_semilattice({}, 12)", seed + i)));
    exprs
        .into_iter()
        .map(|e| Ok((e.clone(), parse_builtin(&e)?)))
        .collect()
}

const SEMIGROUP_EXPRS: &[&str] = &[
    "trivial",
    "M(1,2)",
    "M(1,3)",
    "M(1,4)",
    "M(1,5)",
    "M(2,2)",
    "T(2)",
    "T(3)",
    "QG(cyclic(2))",
    "QG(cyclic(4))",
    "QG(cyclic(6))",
    "QG(symmetric(3))",
    "QG(klein4)",
    "QG(dihedral(4))",
    "QG(quaternion8)",
    "union_quotient(symmetric(3), alternating(3))",
    "union_quotient(cyclic(4), cyclic(2))",
    "union_quotient(dihedral(4), cyclic(2))",
    "union_quotient(quaternion8, cyclic(2))",
    "union_quotient(alternating(4), klein4)",
    "union_quotient(cyclic(6), cyclic(3))",
    "null(3)",
    "left_zero(3)",
    "monoid(left_zero(2))",
    "monoid(null(2))",
    "product(chain(2), cyclic(3))",
    "product(boolean(1), symmetric(3))",
    "product(left_zero(2), cyclic(2))",
    "monoid(product(cyclic(2), cyclic(2)))",
];

/// Every corpus semigroup of order at most 30, groups included.
pub fn corpus_semigroups(seed: u64) -> Result<Vec<(String, Semigroup)>> {
    let mut out = corpus_semilattices(seed)?;
    for e in SEMIGROUP_EXPRS {
        out.push((e.to_string(), parse_builtin(e)?));
    }
    for (name, g) in corpus_groups(24)? {
        out.push((name, g.to_semigroup()));
    }
    out.retain(|(_, s)| s.order() <= 30);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    fn record(&mut self, name: impl Into<String>, outcome: Result<String>) {
        let (ok, detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(CheckLine {
            name: name.into(),
            ok,
            detail,
        });
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.ok).count()
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Mismatch(msg()))
    }
}

/// Normal-subgroup lattice, generator counts and existence criteria for one group.
pub fn check_group(g: &Group) -> Result<String> {
    let lattice = all_normal_subgroups(g, DEFAULT_GROUP_LIMIT)?;
    let fast = g.normal_subgroups();
    expect(fast == lattice.normals, || {
        "normal subgroup lists differ".into()
    })?;
    let atoms: Vec<NormalSubgroup> = lattice
        .minimal()
        .into_iter()
        .map(|i| lattice.normals[i].clone())
        .collect();
    let fast_atoms: Vec<NormalSubgroup> = g
        .minimal_normal_subgroups()
        .into_iter()
        .map(|m| m.subgroup)
        .collect();
    expect(atoms == fast_atoms, || {
        "minimal normal subgroups differ".into()
    })?;
    expect(dilworth_check(g)?, || "Dilworth counts differ".into())?;
    group_audit(g)?;
    let mut primes = vec![0];
    primes.extend(prime_factors(g.order() as u64));
    let socle = g.socle_data()?;
    let mut ks = Vec::new();
    for n in &lattice.normals {
        for &p in &primes {
            crosscheck_equivalences(g, n, p)?;
        }
        let direct = g
            .min_normal_generators(&g.intersect_with_normal(&socle, n)?.s)?
            .k;
        let reduced = g.min_normal_generators_reduced(&socle, n)?;
        expect(direct == reduced, || {
            format!("direct {direct} vs reduced {reduced}")
        })?;
        ks.push(direct);
    }
    for (i, a) in lattice.normals.iter().enumerate() {
        for (j, b) in lattice.normals.iter().enumerate() {
            if a.is_subset(b) && ks[i] > ks[j] {
                return Err(Error::Mismatch(format!(
                    "monotonicity: normal of order {} needs {} generators, containing one of order {} needs {}",
                    a.order(),
                    ks[i],
                    b.order(),
                    ks[j]
                )));
            }
        }
    }
    Ok(format!(
        "order {}, {} normal subgroups",
        g.order(),
        lattice.len()
    ))
}

/// `Q(G)`: idempotents are the normal subgroups, irreducible classes are
/// the meet irreducible normals, and `k_total` counts them.
pub fn check_qg(g: &Group) -> Result<String> {
    let (q, cosets) = build_qg_with_cosets(g);
    let lattice = all_normal_subgroups(g, DEFAULT_GROUP_LIMIT)?;
    let idempotent_sets: BTreeSet<Vec<usize>> = q
        .idempotents()
        .iter()
        .map(|&e| cosets[e].ones().collect())
        .collect();
    let normal_sets: BTreeSet<Vec<usize>> = lattice
        .normals
        .iter()
        .map(|n| n.elements().collect())
        .collect();
    expect(idempotent_sets == normal_sets, || {
        "idempotents of Q(G) are not the normal subgroups".into()
    })?;

    let green = compute_green(&q);
    let order = j_order(&green);
    let cong = CongruenceAnalysis::compute(&q, &green, &order)?;
    let irreducible: BTreeSet<Vec<usize>> = cong
        .classification
        .irreducible_classes()
        .map(|j| cosets[green.j_class(j).idempotents[0]].ones().collect())
        .collect();
    let meet_irr = lattice.meet_irreducibles();
    let meet_sets: BTreeSet<Vec<usize>> = meet_irr
        .iter()
        .map(|&(m, _)| lattice.normals[m].elements().collect())
        .collect();
    expect(irreducible == meet_sets, || {
        "irreducible classes differ from meet irreducibles".into()
    })?;

    let report = analyze(&q, 0)?;
    expect(report.k_total == Some(meet_irr.len()), || {
        format!(
            "k_total {:?}, meet irreducibles {}",
            report.k_total,
            meet_irr.len()
        )
    })?;
    Ok(format!(
        "|Q(G)| = {}, k_total = {}",
        q.order(),
        meet_irr.len()
    ))
}

pub fn check_semilattice(s: &Semigroup) -> Result<String> {
    let irr = join_irreducibles(s)?;
    let k = analyze(s, 0)?.k_total;
    expect(k == Some(irr.len()), || {
        format!("k_total {k:?}, join irreducibles {}", irr.len())
    })?;
    Ok(format!("k_total = {}", irr.len()))
}

/// Every cross-check over the built-in corpus, restricted to groups of
/// order at most `max_order`.
pub fn run_suite(max_order: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let groups = corpus_groups(max_order)?;
    for (name, g) in &groups {
        report.record(format!("group {name}"), check_group(g));
    }
    for (name, g) in groups.iter().filter(|(_, g)| g.order() <= 8) {
        report.record(format!("Q({name})"), check_qg(g));
    }
    for (name, s) in corpus_semilattices(seed)? {
        report.record(format!("semilattice {name}"), check_semilattice(&s));
    }
    for (name, s) in corpus_semigroups(seed)? {
        if s.order() <= max_order.max(30) {
            report.record(
                format!("audit {name}"),
                structural_audit(&s).map(|c| format!("{} regular classes", c.regular_classes)),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_group, BuiltinGroup};

    fn group(b: BuiltinGroup) -> Group {
        Group::from_semigroup(&builtin_group(b).unwrap()).unwrap()
    }

    #[test]
    fn lattices() {
        assert_eq!(
            all_normal_subgroups(&group(BuiltinGroup::Cyclic(4)), 200)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            all_normal_subgroups(&group(BuiltinGroup::Symmetric(3)), 200)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            all_normal_subgroups(&group(BuiltinGroup::Klein4), 200)
                .unwrap()
                .len(),
            5
        );
        assert!(matches!(
            all_normal_subgroups(&group(BuiltinGroup::Symmetric(4)), 10),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn meet_irreducible_counts() {
        let z4 = meet_irreducible_normals(&group(BuiltinGroup::Cyclic(4))).unwrap();
        assert_eq!(
            z4.iter()
                .map(|(m, c)| (m.order(), c.order()))
                .collect::<Vec<_>>(),
            vec![(1, 2), (2, 4)]
        );
        let v4 = meet_irreducible_normals(&group(BuiltinGroup::Klein4)).unwrap();
        assert_eq!(v4.len(), 3);
        assert!(v4.iter().all(|(m, c)| m.order() == 2 && c.order() == 4));
        let a5 = Group::from_semigroup(&parse_builtin("alternating(5)").unwrap()).unwrap();
        let simple = meet_irreducible_normals(&a5).unwrap();
        assert_eq!(simple.len(), 1);
        assert!(simple[0].0.is_trivial());
        for b in [
            BuiltinGroup::Cyclic(4),
            BuiltinGroup::Klein4,
            BuiltinGroup::Dihedral(4),
        ] {
            assert!(dilworth_check(&group(b)).unwrap());
        }
    }

    #[test]
    fn semilattice_irreducibles() {
        assert_eq!(
            join_irreducibles(&parse_builtin("chain(3)").unwrap()).unwrap(),
            vec![1, 2]
        );
        assert_eq!(
            join_irreducibles(&parse_builtin("boolean(2)").unwrap()).unwrap(),
            vec![1, 2]
        );
        assert!(join_irreducibles(&parse_builtin("chain(1)").unwrap())
            .unwrap()
            .is_empty());
        assert_eq!(
            join_irreducibles(&parse_builtin("cyclic(2)").unwrap()),
            Err(Error::NotASemilattice)
        );
    }

    #[test]
    fn exhaustive_generators() {
        let v4 = group(BuiltinGroup::Klein4);
        assert_eq!(exhaustive_min_normal_gen(&v4, &v4.whole()).unwrap(), 2);
        assert_eq!(exhaustive_min_normal_gen(&v4, &v4.trivial()).unwrap(), 0);
        let s3 = group(BuiltinGroup::Symmetric(3));
        let a3 = s3.normal_subgroup(&[0, 3, 4]).unwrap();
        assert_eq!(exhaustive_min_normal_gen(&s3, &a3).unwrap(), 1);
    }

    #[test]
    fn crosschecks() {
        let s4 = group(BuiltinGroup::Symmetric(4));
        let v4 = s4.socle_data().unwrap().socle;
        assert_eq!(v4.order(), 4);
        assert_eq!(crosscheck_equivalences(&s4, &v4, 0).unwrap().k, 1);
        let s3 = group(BuiltinGroup::Symmetric(3));
        let a3 = s3.normal_subgroup(&[0, 3, 4]).unwrap();
        assert!(!crosscheck_equivalences(&s3, &a3, 3).unwrap().exists);
        let a5 = Group::from_semigroup(&parse_builtin("alternating(5)").unwrap()).unwrap();
        for p in [0, 2, 3, 5] {
            let r = crosscheck_equivalences(&a5, &a5.whole(), p).unwrap();
            assert_eq!((r.k, r.a_cap_n_order, r.exists), (1, 1, true));
        }
    }

    #[test]
    fn audits_small_semigroups() {
        for e in [
            "M(2,2)",
            "QG(klein4)",
            "union_quotient(symmetric(3), alternating(3))",
            "T(3)",
        ] {
            structural_audit(&parse_builtin(e).unwrap()).unwrap();
        }
    }
}
