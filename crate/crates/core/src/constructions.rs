//! Builders for standard groups and for the example families: meet
//! semilattices, coset monoids `Q(G)`, `G ∪ G/N`, and full matrix monoids
//! over small fields.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{is_prime, verify_group, Group, NormalSubgroup};
use crate::semigroup::{
    closure_from_transformations, full_transformation_generators, AssocCheck, Element, Semigroup,
};

/// A finite poset given by cover pairs `(lower, upper)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetSpec {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
}

impl PosetSpec {
    /// Reflexive-transitive closure as `leq[x][y] = x ≤ y`.
    #[allow(clippy::needless_range_loop)]
    pub fn order_matrix(&self) -> Result<Vec<Vec<bool>>> {
        let n = self.n;
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(lo, hi) in &self.covers {
            if lo >= n || hi >= n {
                return Err(Error::IndexOutOfRange {
                    row: lo,
                    col: hi,
                    value: lo.max(hi),
                    n,
                });
            }
            leq[lo][hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            if let Some(y) = (0..n).find(|&y| y != x && leq[x][y] && leq[y][x]) {
                return Err(Error::CyclicPoset(x.min(y)));
            }
        }
        Ok(leq)
    }
}

pub fn chain_poset(n: usize) -> PosetSpec {
    PosetSpec {
        n,
        covers: (1..n).map(|i| (i - 1, i)).collect(),
    }
}

/// Subsets of `{0..k}` ordered by inclusion; element `i` is the bitmask `i`.
pub fn boolean_poset(k: usize) -> PosetSpec {
    let n = 1 << k;
    let covers = (0..n)
        .flat_map(|x| {
            (0..k)
                .filter(move |b| x & (1 << b) == 0)
                .map(move |b| (x, x | (1 << b)))
        })
        .collect();
    PosetSpec { n, covers }
}

/// A random intersection-closed family of subsets of a 4-element set, with
/// at most `max_size` members, ordered by inclusion.
pub fn random_meet_poset(seed: u64, max_size: usize) -> PosetSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let picks = rng.gen_range(2..=5);
        let mut family: Vec<u32> = vec![0b1111];
        for _ in 0..picks {
            family.push(rng.gen_range(0..16));
        }
        family.sort_unstable();
        family.dedup();
        loop {
            let mut grown = family.clone();
            for &a in &family {
                for &b in &family {
                    grown.push(a & b);
                }
            }
            grown.sort_unstable();
            grown.dedup();
            if grown.len() == family.len() {
                break;
            }
            family = grown;
        }
        if family.len() > max_size {
            continue;
        }
        family.sort_by_key(|s| (s.count_ones(), *s));
        let below = |a: u32, b: u32| a != b && a & b == a;
        let mut covers = Vec::new();
        for (i, &a) in family.iter().enumerate() {
            for (j, &b) in family.iter().enumerate() {
                if below(a, b) && !family.iter().any(|&c| below(a, c) && below(c, b)) {
                    covers.push((i, j));
                }
            }
        }
        return PosetSpec {
            n: family.len(),
            covers,
        };
    }
}

/// The meet semilattice of a poset in which every pair has a greatest lower
/// bound.
pub fn build_semilattice(spec: &PosetSpec) -> Result<Semigroup> {
    let leq = spec.order_matrix()?;
    let n = spec.n;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
            let glb = lower
                .iter()
                .copied()
                .find(|&z| lower.iter().all(|&w| leq[w][z]))
                .ok_or(Error::NoMeet(x, y))?;
            table.push(glb);
        }
    }
    Semigroup::from_flat(n, table, None, AssocCheck::Skip)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinGroup {
    Cyclic(usize),
    /// Symmetries of a regular `m`-gon, of order `2m`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(u64, u32),
    Quaternion8,
    Klein4,
}

/// Cayley table of a named group. The identity is always element 0.
pub fn builtin_group(which: BuiltinGroup) -> Result<Semigroup> {
    let too_large = |what, size: u64, limit| Err(Error::TooLarge { what, size, limit });
    match which {
        BuiltinGroup::Cyclic(m) => {
            if m == 0 {
                return Err(Error::UnknownName("cyclic(0)".into()));
            }
            let table = (0..m * m).map(|i| (i / m + i % m) % m).collect();
            Semigroup::from_flat(m, table, None, AssocCheck::Skip)
        }
        BuiltinGroup::Dihedral(m) => {
            if m == 0 {
                return Err(Error::UnknownName("dihedral(0)".into()));
            }
            let n = 2 * m;
            let mut table = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let (i, s) = (a % m, a / m);
                    let (k, t) = (b % m, b / m);
                    let rot = if s == 0 { (i + k) % m } else { (i + m - k) % m };
                    table.push(rot + m * ((s + t) % 2));
                }
            }
            let labels = (0..n)
                .map(|a| match (a % m, a / m) {
                    (0, 0) => "1".to_string(),
                    (0, _) => "s".to_string(),
                    (1, 0) => "r".to_string(),
                    (1, _) => "rs".to_string(),
                    (i, 0) => format!("r^{i}"),
                    (i, _) => format!("r^{i}s"),
                })
                .collect();
            Semigroup::from_flat(n, table, Some(labels), AssocCheck::Skip)
        }
        BuiltinGroup::Symmetric(m) | BuiltinGroup::Alternating(m) => {
            if m > 5 {
                return too_large("symmetric degree", m as u64, 5);
            }
            let even_only = matches!(which, BuiltinGroup::Alternating(_));
            let perms: Vec<Vec<usize>> = permutations(m)
                .into_iter()
                .filter(|p| !even_only || is_even(p))
                .collect();
            let index: HashMap<&Vec<usize>, usize> =
                perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut table = Vec::with_capacity(perms.len().pow(2));
            for p in &perms {
                for q in &perms {
                    let pq: Vec<usize> = p.iter().map(|&x| q[x]).collect();
                    table.push(index[&pq]);
                }
            }
            let labels = perms.iter().map(|p| cycle_notation(p)).collect();
            Semigroup::from_flat(perms.len(), table, Some(labels), AssocCheck::Skip)
        }
        BuiltinGroup::ElementaryAbelian(p, k) => {
            if !is_prime(p) {
                return Err(Error::NotPrimeOrZero(p));
            }
            let n = p.checked_pow(k).filter(|&n| n <= 4096);
            let Some(n) = n else {
                return too_large("elementary abelian order", p.saturating_pow(k), 4096);
            };
            let n = n as usize;
            let p = p as usize;
            let digits = |mut x: usize| {
                let mut d = vec![0; k as usize];
                for slot in d.iter_mut().rev() {
                    *slot = x % p;
                    x /= p;
                }
                d
            };
            let mut table = Vec::with_capacity(n * n);
            for a in 0..n {
                let da = digits(a);
                for b in 0..n {
                    let db = digits(b);
                    table.push(
                        da.iter()
                            .zip(&db)
                            .fold(0, |acc, (x, y)| acc * p + (x + y) % p),
                    );
                }
            }
            let labels = (0..n)
                .map(|a| {
                    let d: Vec<String> = digits(a).iter().map(ToString::to_string).collect();
                    format!("({})", d.join(","))
                })
                .collect();
            Semigroup::from_flat(n, table, Some(labels), AssocCheck::Skip)
        }
        BuiltinGroup::Quaternion8 => {
            // units 1, i, j, k as 0..4; sign bit adds 4
            const UNIT: [[(usize, bool); 4]; 4] = [
                [(0, false), (1, false), (2, false), (3, false)],
                [(1, false), (0, true), (3, false), (2, true)],
                [(2, false), (3, true), (0, true), (1, false)],
                [(3, false), (2, false), (1, true), (0, true)],
            ];
            let mut table = Vec::with_capacity(64);
            for a in 0..8 {
                for b in 0..8 {
                    let (u, neg) = UNIT[a % 4][b % 4];
                    let sign = neg ^ (a >= 4) ^ (b >= 4);
                    table.push(u + if sign { 4 } else { 0 });
                }
            }
            let labels = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
                .iter()
                .map(ToString::to_string)
                .collect();
            Semigroup::from_flat(8, table, Some(labels), AssocCheck::Skip)
        }
        BuiltinGroup::Klein4 => {
            let table = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
            let labels = ["e", "a", "b", "c"]
                .iter()
                .map(ToString::to_string)
                .collect();
            Semigroup::from_flat(4, table, Some(labels), AssocCheck::Skip)
        }
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j]);
    inversions.count() % 2 == 0
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// `Q(G)`: all cosets `gN` over normal subgroups `N`, under setwise product.
/// Cosets of the trivial subgroup come first in group order, so the identity
/// is element 0.
pub fn build_qg(g: &Group) -> Semigroup {
    build_qg_with_cosets(g).0
}

/// `Q(G)` along with the coset (a subset of `G`) behind each element.
pub fn build_qg_with_cosets(g: &Group) -> (Semigroup, Vec<FixedBitSet>) {
    let normals = g.normal_subgroups();
    let mut cosets: Vec<FixedBitSet> = Vec::new();
    let mut labels = Vec::new();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    for (ni, n) in normals.iter().enumerate() {
        let mut covered = FixedBitSet::with_capacity(g.order());
        for x in g.elements() {
            if covered.contains(x) {
                continue;
            }
            let mut coset = FixedBitSet::with_capacity(g.order());
            for y in n.elements() {
                coset.insert(g.mul(x, y));
            }
            covered.union_with(&coset);
            index.insert(coset.clone(), cosets.len());
            cosets.push(coset);
            labels.push(if ni == 0 {
                g.label(x).to_string()
            } else {
                format!("{}·N{ni}", g.label(x))
            });
        }
    }
    let k = cosets.len();
    let mut table = Vec::with_capacity(k * k);
    for a in &cosets {
        for b in &cosets {
            let mut prod = FixedBitSet::with_capacity(g.order());
            for x in a.ones() {
                for y in b.ones() {
                    prod.insert(g.mul(x, y));
                }
            }
            table.push(index[&prod]);
        }
    }
    let s = Semigroup::from_flat(k, table, Some(labels), AssocCheck::Skip)
        .expect("label count matches");
    (s, cosets)
}

/// `G ∪ G/N` with `G/N` an ideal: `g·hN = ghN`, `hN·g = hgN`. Group
/// elements keep their indices; cosets follow, ordered by smallest member.
pub fn build_group_union_quotient(group: &Semigroup, normal: &[Element]) -> Result<Semigroup> {
    let g = Group::from_semigroup(group)?;
    let locals: Vec<usize> = normal
        .iter()
        .map(|&x| g.local_index(x).ok_or(Error::ElementOutsideGroup(x)))
        .collect::<Result<_>>()?;
    let n = g.normal_subgroup(&locals)?;
    union_quotient_of(&g, &n)
}

pub fn union_quotient_of(g: &Group, n: &NormalSubgroup) -> Result<Semigroup> {
    if n.is_trivial() || n.order() == g.order() {
        return Err(Error::NotProperNontrivial);
    }
    let m = g.order();
    let mut coset_of = vec![usize::MAX; m];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for y in n.elements() {
            coset_of[g.mul(x, y)] = reps.len();
        }
        reps.push(x);
    }
    let total = m + reps.len();
    let group_of = |a: usize| if a < m { a } else { reps[a - m] };
    let mut table = Vec::with_capacity(total * total);
    for a in 0..total {
        for b in 0..total {
            let prod = g.mul(group_of(a), group_of(b));
            table.push(if a < m && b < m {
                prod
            } else {
                m + coset_of[prod]
            });
        }
    }
    let mut labels: Vec<String> = g.elements().map(|x| g.label(x).to_string()).collect();
    labels.extend(reps.iter().map(|&r| format!("{}·N", g.label(r))));
    Semigroup::from_flat(total, table, Some(labels), AssocCheck::Skip)
}

/// Arithmetic of `F_q` for `q` prime or `q = 4`.
struct SmallField {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    names: Vec<String>,
}

impl SmallField {
    fn new(q: u64) -> Result<Self> {
        let qu = q as usize;
        if q == 4 {
            // a + bx with x² = x + 1, encoded as a | b << 1
            let mul_poly = |a: usize, b: usize| {
                let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
                let c0 = (a0 & b0) ^ (a1 & b1);
                let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
                c0 | c1 << 1
            };
            let add = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
            let mul = (0..16).map(|i| mul_poly(i / 4, i % 4)).collect();
            let names = ["0", "1", "x", "x+1"]
                .iter()
                .map(ToString::to_string)
                .collect();
            return Ok(SmallField {
                q: 4,
                add,
                mul,
                names,
            });
        }
        if !is_prime(q) {
            return Err(Error::UnsupportedFieldSize(q));
        }
        let add = (0..qu * qu).map(|i| (i / qu + i % qu) % qu).collect();
        let mul = (0..qu * qu).map(|i| (i / qu) * (i % qu) % qu).collect();
        let names = (0..qu).map(|i| i.to_string()).collect();
        Ok(SmallField {
            q: qu,
            add,
            mul,
            names,
        })
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }
}

pub const MATRIX_MONOID_LIMIT: u64 = 10_000;

/// All `n × n` matrices over `F_q` under multiplication, in lexicographic
/// order of their entries (so the zero matrix is element 0).
pub fn build_matrix_monoid(n: usize, q: u64) -> Result<Semigroup> {
    let field = SmallField::new(q)?;
    if n == 0 {
        return Err(Error::UnknownName("M(0, q)".into()));
    }
    let size = q
        .checked_pow((n * n) as u32)
        .filter(|&s| s <= MATRIX_MONOID_LIMIT);
    let Some(size) = size else {
        return Err(Error::TooLarge {
            what: "matrix monoid order",
            size: q.saturating_pow((n * n) as u32),
            limit: MATRIX_MONOID_LIMIT,
        });
    };
    let size = size as usize;
    let qq = field.q;
    let entries = |mut code: usize| {
        let mut e = vec![0; n * n];
        for slot in e.iter_mut().rev() {
            *slot = code % qq;
            code /= qq;
        }
        e
    };
    let matrices: Vec<Vec<usize>> = (0..size).map(entries).collect();
    let encode = |m: &[usize]| m.iter().fold(0, |acc, &x| acc * qq + x);
    let mut table = Vec::with_capacity(size * size);
    for a in &matrices {
        for b in &matrices {
            let mut c = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    c[i * n + j] = (0..n).fold(0, |acc, k| {
                        field.add(acc, field.mul(a[i * n + k], b[k * n + j]))
                    });
                }
            }
            table.push(encode(&c));
        }
    }
    let labels = matrices
        .iter()
        .map(|m| {
            let rows: Vec<String> = m
                .chunks(n)
                .map(|r| {
                    r.iter()
                        .map(|&x| field.names[x].as_str())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            format!("[{}]", rows.join("; "))
        })
        .collect();
    Semigroup::from_flat(size, table, Some(labels), AssocCheck::Skip)
}

/// Finds a normal subgroup of `g` isomorphic to `h`, scanning normal
/// subgroups in canonical order.
pub fn find_normal_isomorphic(g: &Group, h: &Group) -> Result<NormalSubgroup> {
    for n in g.normal_subgroups() {
        if n.order() != h.order() {
            continue;
        }
        let (sub, _) = g.subgroup(n.carrier())?;
        if are_isomorphic(&sub, h) {
            return Ok(n);
        }
    }
    Err(Error::NoSuchNormalSubgroup)
}

/// Backtracking search for an isomorphism, assigning images to a greedy
/// generating set of `b` and extending multiplicatively.
pub fn are_isomorphic(a: &Group, b: &Group) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let mut gens = Vec::new();
    let mut span = b.generated_subgroup(&gens);
    for x in b.elements() {
        if !span.contains(x) {
            gens.push(x);
            span = b.generated_subgroup(&gens);
        }
    }
    let mut images = Vec::new();
    assign(a, b, &gens, &mut images)
}

fn assign(a: &Group, b: &Group, gens: &[usize], images: &mut Vec<usize>) -> bool {
    if images.len() == gens.len() {
        return extends_to_isomorphism(a, b, gens, images);
    }
    let want = b.element_order(gens[images.len()]);
    for y in a.elements() {
        if a.element_order(y) == want && !images.contains(&y) {
            images.push(y);
            if assign(a, b, gens, images) {
                return true;
            }
            images.pop();
        }
    }
    false
}

fn extends_to_isomorphism(a: &Group, b: &Group, gens: &[usize], images: &[usize]) -> bool {
    let mut phi = vec![usize::MAX; b.order()];
    phi[b.identity()] = a.identity();
    let mut queue = std::collections::VecDeque::from([b.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = b.mul(x, g);
            let fy = a.mul(phi[x], img);
            if phi[y] == usize::MAX {
                phi[y] = fy;
                queue.push_back(y);
            } else if phi[y] != fy {
                return false;
            }
        }
    }
    let mut seen = vec![false; a.order()];
    if phi
        .iter()
        .any(|&v| v == usize::MAX || std::mem::replace(&mut seen[v], true))
    {
        return false;
    }
    b.elements().all(|x| {
        b.elements()
            .all(|y| phi[b.mul(x, y)] == a.mul(phi[x], phi[y]))
    })
}

/// Parses and builds a builtin expression such as `QG(cyclic(4))`,
/// `union_quotient(symmetric(3), alternating(3))` or `M(2,2)`.
pub fn parse_builtin(expr: &str) -> Result<Semigroup> {
    let ast = Parser {
        src: expr.as_bytes(),
        pos: 0,
    }
    .parse_all()?;
    eval(&ast)
}

#[derive(Debug, Clone, PartialEq)]
enum Ast {
    Int(u64),
    Call(String, Vec<Ast>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: 1,
            msg: format!("{msg} at column {}", self.pos + 1),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn parse_all(mut self) -> Result<Ast> {
        let ast = self.parse_expr()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(ast)
    }

    fn parse_expr(&mut self) -> Result<Ast> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a name or number"));
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if let Ok(v) = word.parse::<u64>() {
            return Ok(Ast::Int(v));
        }
        self.skip_ws();
        let mut args = Vec::new();
        if self.src.get(self.pos) == Some(&b'(') {
            self.pos += 1;
            self.skip_ws();
            if self.src.get(self.pos) == Some(&b')') {
                self.pos += 1;
            } else {
                loop {
                    args.push(self.parse_expr()?);
                    self.skip_ws();
                    match self.src.get(self.pos) {
                        Some(b',') => self.pos += 1,
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.err("expected ',' or ')'")),
                    }
                }
            }
        }
        Ok(Ast::Call(word.to_string(), args))
    }
}

fn eval(ast: &Ast) -> Result<Semigroup> {
    let Ast::Call(name, args) = ast else {
        return Err(Error::UnknownName(format!("{ast:?}")));
    };
    let bad = || Error::UnknownName(format!("{name} with {} argument(s)", args.len()));
    let int = |i: usize| match args.get(i) {
        Some(Ast::Int(v)) => Ok(*v),
        _ => Err(bad()),
    };
    let sub = |i: usize| args.get(i).ok_or_else(bad).and_then(eval);
    let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
    let as_group = |s: Semigroup| Group::from_semigroup(&s);
    match name.to_ascii_lowercase().as_str() {
        "trivial" => {
            arity(0)?;
            builtin_group(BuiltinGroup::Cyclic(1))
        }
        "cyclic" | "z" => {
            arity(1)?;
            builtin_group(BuiltinGroup::Cyclic(int(0)? as usize))
        }
        "dihedral" | "d" => {
            arity(1)?;
            builtin_group(BuiltinGroup::Dihedral(int(0)? as usize))
        }
        "symmetric" | "s" => {
            arity(1)?;
            builtin_group(BuiltinGroup::Symmetric(int(0)? as usize))
        }
        "alternating" | "a" => {
            arity(1)?;
            builtin_group(BuiltinGroup::Alternating(int(0)? as usize))
        }
        "elementary_abelian" => {
            arity(2)?;
            builtin_group(BuiltinGroup::ElementaryAbelian(int(0)?, int(1)? as u32))
        }
        "quaternion8" | "q8" => {
            arity(0)?;
            builtin_group(BuiltinGroup::Quaternion8)
        }
        "klein4" | "v4" => {
            arity(0)?;
            builtin_group(BuiltinGroup::Klein4)
        }
        "qg" => {
            arity(1)?;
            Ok(build_qg(&as_group(sub(0)?)?))
        }
        "union_quotient" => {
            arity(2)?;
            let g = as_group(sub(0)?)?;
            let h = as_group(sub(1)?)?;
            let n = find_normal_isomorphic(&g, &h)?;
            union_quotient_of(&g, &n)
        }
        "m" | "matrix" => {
            arity(2)?;
            build_matrix_monoid(int(0)? as usize, int(1)?)
        }
        "t" | "full_transformation" => {
            arity(1)?;
            let m = int(0)? as usize;
            if m == 0 || m > 5 {
                return Err(Error::TooLarge {
                    what: "transformation degree",
                    size: m as u64,
                    limit: 5,
                });
            }
            closure_from_transformations(&full_transformation_generators(m))
        }
        "chain" => {
            arity(1)?;
            build_semilattice(&chain_poset(int(0)? as usize))
        }
        "boolean" => {
            arity(1)?;
            let k = int(0)? as usize;
            if k > 6 {
                return Err(Error::TooLarge {
                    what: "boolean lattice rank",
                    size: k as u64,
                    limit: 6,
                });
            }
            build_semilattice(&boolean_poset(k))
        }
        "random_semilattice" => {
            arity(2)?;
            build_semilattice(&random_meet_poset(int(0)?, int(1)?.max(1) as usize))
        }
        "null" => {
            arity(1)?;
            null_semigroup(int(0)? as usize)
        }
        "left_zero" => {
            arity(1)?;
            let n = int(0)? as usize;
            Semigroup::from_flat(
                n,
                (0..n * n).map(|i| i / n.max(1)).collect(),
                None,
                AssocCheck::Skip,
            )
        }
        "product" => {
            arity(2)?;
            Ok(sub(0)?.direct_product(&sub(1)?))
        }
        "monoid" | "adjoin_identity" => {
            arity(1)?;
            Ok(sub(0)?.adjoin_identity())
        }
        _ => Err(Error::UnknownName(name.clone())),
    }
}

/// `n` elements, every product equal to element 0.
pub fn null_semigroup(n: usize) -> Result<Semigroup> {
    if n == 0 {
        return Err(Error::UnknownName("null(0)".into()));
    }
    Semigroup::from_flat(n, vec![0; n * n], None, AssocCheck::Skip)
}

/// `verify_group` over every element, with a clearer error for semigroups
/// that are not groups.
pub fn group_of(s: &Semigroup) -> Result<Group> {
    let all: Vec<Element> = s.elements().collect();
    verify_group(s, &all)
}
