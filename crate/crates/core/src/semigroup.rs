//! Finite semigroups stored as dense multiplication tables.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Elements are dense indices into the multiplication table.
pub type Element = usize;

/// Whether to run the O(n³) associativity audit when building from a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocCheck {
    Verify,
    Skip,
}

/// A finite semigroup given by its Cayley table.
///
/// Values are immutable once built. Labels are metadata and play no role in
/// any computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    n: usize,
    table: Vec<Element>,
    labels: Vec<String>,
    identity: Option<Element>,
}

impl Semigroup {
    /// Builds a semigroup from table rows, validating shape, range and
    /// associativity.
    pub fn from_cayley(rows: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        Self::from_cayley_with(rows, labels, AssocCheck::Verify)
    }

    pub fn from_cayley_with(
        rows: &[Vec<usize>],
        labels: Option<Vec<String>>,
        check: AssocCheck,
    ) -> Result<Self> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::IndexOutOfRange { row, col, value, n });
                }
                table.push(value);
            }
        }
        Self::from_flat(n, table, labels, check)
    }

    /// Builds from a row-major flat table. Entries must already be in range.
    pub(crate) fn from_flat(
        n: usize,
        table: Vec<Element>,
        labels: Option<Vec<String>>,
        check: AssocCheck,
    ) -> Result<Self> {
        debug_assert_eq!(table.len(), n * n);
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::LabelCount {
                    expected: n,
                    got: l.len(),
                })
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let mut s = Semigroup {
            n,
            table,
            labels,
            identity: None,
        };
        if check == AssocCheck::Verify {
            s.check_associativity()?;
        }
        s.identity = s.find_identity();
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.n + b]
    }

    /// Product of a nonempty sequence, left to right.
    pub fn mul_all(&self, elems: &[Element]) -> Element {
        let (&first, rest) = elems.split_first().expect("empty product");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    pub fn row(&self, a: Element) -> &[Element] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Element) -> &str {
        &self.labels[a]
    }

    pub fn identity(&self) -> Option<Element> {
        self.identity
    }

    pub fn is_idempotent(&self, e: Element) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Full triple-loop audit; returns the first failing triple.
    pub fn check_associativity(&self) -> Result<()> {
        for a in 0..self.n {
            for b in 0..self.n {
                let ab = self.mul(a, b);
                for c in 0..self.n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    fn find_identity(&self) -> Option<Element> {
        self.elements().find(|&e| {
            self.elements()
                .all(|s| self.mul(e, s) == s && self.mul(s, e) == s)
        })
    }

    /// `S¹`: a fresh identity is always adjoined, even if `S` is a monoid.
    /// The new element has index `n`.
    pub fn adjoin_identity(&self) -> Semigroup {
        let n = self.n + 1;
        let one = self.n;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(if a == one {
                    b
                } else if b == one {
                    a
                } else {
                    self.mul(a, b)
                });
            }
        }
        let mut label = String::from("1");
        while self.labels.contains(&label) {
            label.push('\'');
        }
        let mut labels = self.labels.clone();
        labels.push(label);
        Semigroup {
            n,
            table,
            labels,
            identity: Some(one),
        }
    }

    /// Componentwise product; `(s, t)` has index `s * |T| + t`.
    pub fn direct_product(&self, other: &Semigroup) -> Semigroup {
        let m = other.n;
        let n = self.n * m;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                table.push(self.mul(a1, b1) * m + other.mul(a2, b2));
            }
        }
        let labels = (0..n)
            .map(|i| format!("({},{})", self.labels[i / m], other.labels[i % m]))
            .collect();
        let identity = match (self.identity, other.identity) {
            (Some(e), Some(f)) => Some(e * m + f),
            _ => None,
        };
        Semigroup {
            n,
            table,
            labels,
            identity,
        }
    }

    /// Subsemigroup on `carrier`, re-indexed in the order given. The caller
    /// guarantees closure.
    #[cfg(test)]
    pub(crate) fn restrict(&self, carrier: &[Element]) -> Semigroup {
        let index: HashMap<Element, usize> =
            carrier.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let k = carrier.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in carrier {
            for &b in carrier {
                table.push(index[&self.mul(a, b)]);
            }
        }
        let labels = carrier.iter().map(|&x| self.labels[x].clone()).collect();
        Semigroup::from_flat(k, table, Some(labels), AssocCheck::Skip).expect("label count matches")
    }

    /// Serializes in the Cayley text format. The `labels:` block is written
    /// only when some label differs from its index.
    pub fn to_cayley_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.n).unwrap();
        for a in 0..self.n {
            let row: Vec<String> = self.row(a).iter().map(ToString::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        let default = self
            .labels
            .iter()
            .enumerate()
            .all(|(i, l)| *l == i.to_string());
        if !default {
            out.push_str("labels:\n");
            for l in &self.labels {
                writeln!(out, "{l}").unwrap();
            }
        }
        out
    }

    pub fn parse_cayley_text(text: &str, check: AssocCheck) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, first) =
            lines
                .by_ref()
                .find(|(_, l)| !l.trim().is_empty())
                .ok_or(Error::Parse {
                    line: 1,
                    msg: "empty input".into(),
                })?;
        let n: usize = first.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("bad order {first:?}"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (i, line) = lines.next().ok_or(Error::Parse {
                line: n + 1,
                msg: "missing table rows".into(),
            })?;
            rows.push(parse_indices(line, i + 1)?);
        }
        let mut labels = None;
        while let Some((i, line)) = lines.next() {
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            if t != "labels:" {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("unexpected {t:?}"),
                });
            }
            let ls: Vec<String> = lines.by_ref().take(n).map(|(_, l)| l.to_string()).collect();
            labels = Some(ls);
            break;
        }
        Self::from_cayley_with(&rows, labels, check)
    }
}

fn parse_indices(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad index {tok:?}"),
            })
        })
        .collect()
}

/// A total map on `{0, …, m-1}`. Composition acts on the right: in the
/// product `s·t`, `s` is applied first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(Vec<usize>);

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        if let Some(&image) = images.iter().find(|&&x| x >= m) {
            return Err(Error::BadTransformation { image, degree: m });
        }
        Ok(Transformation(images))
    }

    pub fn identity(m: usize) -> Self {
        Transformation((0..m).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        self.0
            .iter()
            .filter(|&&x| !std::mem::replace(&mut seen[x], true))
            .count()
    }
}

/// Generator names: `a`…`z`, then `g26`, `g27`, …
fn generator_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("g{i}")
    }
}

/// The semigroup generated by `gens`, enumerated breadth-first: generators
/// first, then right multiples in discovery order. Each label is a shortest
/// word in the generator names.
pub fn closure_from_transformations(gens: &[Transformation]) -> Result<Semigroup> {
    closure_with_elements(gens).map(|(s, _)| s)
}

/// As [`closure_from_transformations`], also returning the transformation
/// behind each element index.
pub fn closure_with_elements(gens: &[Transformation]) -> Result<(Semigroup, Vec<Transformation>)> {
    let first = gens.first().ok_or(Error::EmptyGeneratorSet)?;
    let m = first.degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != m) {
        return Err(Error::DegreeMismatch(m, g.degree()));
    }
    let mut elems: Vec<Transformation> = Vec::new();
    let mut words: Vec<String> = Vec::new();
    let mut index: HashMap<Transformation, usize> = HashMap::new();
    // each distinct generator, with the name of its first occurrence
    let mut gen_ids = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if !index.contains_key(g) {
            index.insert(g.clone(), elems.len());
            elems.push(g.clone());
            words.push(generator_name(i));
        }
        gen_ids.push(index[g]);
    }
    let mut queue: VecDeque<usize> = (0..elems.len()).collect();
    while let Some(i) = queue.pop_front() {
        for (gi, &g) in gen_ids.iter().enumerate() {
            let prod = elems[i].then(&elems[g]);
            if !index.contains_key(&prod) {
                let j = elems.len();
                index.insert(prod.clone(), j);
                elems.push(prod);
                words.push(format!("{}{}", words[i], generator_name(gi)));
                queue.push_back(j);
            }
        }
    }
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            table.push(index[&a.then(b)]);
        }
    }
    let s = Semigroup::from_flat(n, table, Some(words), AssocCheck::Skip)?;
    Ok((s, elems))
}

/// Parses the transformation format: degree on the first line, then one
/// generator per line.
pub fn parse_transformations(text: &str) -> Result<Vec<Transformation>> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let m: usize = first.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        msg: format!("bad degree {first:?}"),
    })?;
    let mut gens = Vec::new();
    for (i, line) in lines {
        let images = parse_indices(line, i + 1)?;
        if images.len() != m {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("expected {m} images, got {}", images.len()),
            });
        }
        gens.push(Transformation::new(images)?);
    }
    Ok(gens)
}

/// All maps on `m` points.
pub fn full_transformation_generators(m: usize) -> Vec<Transformation> {
    let mut out = Vec::new();
    let total = m.pow(m as u32);
    for mut code in 0..total {
        let mut images = vec![0; m];
        for slot in images.iter_mut().rev() {
            *slot = code % m;
            code /= m;
        }
        out.push(Transformation(images));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[usize]) -> Transformation {
        Transformation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn left_zero_is_valid_without_identity() {
        let s = Semigroup::from_cayley(&[vec![0, 0], vec![1, 1]], None).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.identity(), None);
    }

    #[test]
    fn z2_has_identity_zero() {
        let s = Semigroup::from_cayley(&[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn nonassociative_table_rejected() {
        // brute-force oracle over all 8 triples
        let rows = [vec![0, 1], vec![0, 0]];
        let m = |a: usize, b: usize| rows[a][b];
        let bad: Vec<_> = (0..8)
            .map(|i| (i >> 2, (i >> 1) & 1, i & 1))
            .filter(|&(a, b, c)| m(m(a, b), c) != m(a, m(b, c)))
            .collect();
        assert!(!bad.is_empty());
        let (a, b, c) = bad[0];
        assert_eq!(
            Semigroup::from_cayley(&rows, None),
            Err(Error::NonAssociative { a, b, c })
        );
    }

    #[test]
    fn bad_shape_and_range() {
        assert!(matches!(
            Semigroup::from_cayley(&[vec![0, 1], vec![0]], None),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            Semigroup::from_cayley(&[vec![0, 2], vec![0, 0]], None),
            Err(Error::IndexOutOfRange { value: 2, .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let t2 = closure_from_transformations(&full_transformation_generators(2)).unwrap();
        assert_eq!(t2.order(), 4);
        let t3 =
            closure_from_transformations(&[t(&[1, 2, 0]), t(&[1, 0, 2]), t(&[0, 0, 2])]).unwrap();
        assert_eq!(t3.order(), 27);
        t3.check_associativity().unwrap();
        let one = closure_from_transformations(&[t(&[0, 1, 2])]).unwrap();
        assert_eq!(one.order(), 1);
        assert_eq!(
            closure_from_transformations(&[]),
            Err(Error::EmptyGeneratorSet)
        );
    }

    #[test]
    fn closure_labels_are_shortest_words() {
        let s = closure_from_transformations(&[t(&[1, 2, 0])]).unwrap();
        assert_eq!(s.labels(), &["a", "aa", "aaa"]);
    }

    #[test]
    fn adjoin_identity_is_fresh() {
        let z2 = Semigroup::from_cayley(&[vec![0, 1], vec![1, 0]], None).unwrap();
        let m = z2.adjoin_identity();
        assert_eq!(m.order(), 3);
        assert_eq!(m.identity(), Some(2));
        assert_eq!(m.mul(2, 0), 0);
        assert_eq!(m.mul(1, 2), 1);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(m.mul(a, b), z2.mul(a, b));
            }
        }
        let trivial = Semigroup::from_cayley(&[vec![0]], None).unwrap();
        assert_eq!(trivial.adjoin_identity().order(), 2);
    }

    #[test]
    fn direct_products() {
        let z2 = Semigroup::from_cayley(&[vec![0, 1], vec![1, 0]], None).unwrap();
        let v4 = z2.direct_product(&z2);
        assert_eq!(v4.order(), 4);
        assert!(v4.is_commutative());
        assert!(v4.elements().all(|x| v4.mul(x, x) == 0));
        v4.check_associativity().unwrap();
    }

    #[test]
    fn cayley_text_round_trip() {
        let s = closure_from_transformations(&full_transformation_generators(2)).unwrap();
        let text = s.to_cayley_text();
        let back = Semigroup::parse_cayley_text(&text, AssocCheck::Verify).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_cayley_text(), text);
    }

    #[test]
    fn transformation_format() {
        let gens = parse_transformations("3\n1 2 0\n0 0 1\n").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_transformations("3\n1 2\n").is_err());
        assert!(parse_transformations("2\n0 5\n").is_err());
    }
}
