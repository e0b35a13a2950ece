use thiserror::Error;

use crate::semigroup::Element;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is out of range for order {n}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: Element, b: Element, c: Element },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("empty generator set")]
    EmptyGeneratorSet,
    #[error("transformation image {image} out of range for degree {degree}")]
    BadTransformation { image: usize, degree: usize },
    #[error("generators act on different numbers of points ({0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("J-class {0} is not regular")]
    NotRegular(usize),
    #[error("element {0} is not an idempotent of J-class {1}")]
    NotIdempotentInClass(Element, usize),
    #[error("no linking pair between idempotents {0} and {1}")]
    NoLinkingPair(Element, Element),

    #[error("partitions have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),

    #[error("subset is not closed: {a}*{b} = {product} leaves it")]
    NotClosed {
        a: Element,
        b: Element,
        product: Element,
    },
    #[error("subset has no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse in the subset")]
    NoInverse(Element),
    #[error("element {0} is not in the group")]
    ElementOutsideGroup(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("{p}-part of an abelian subgroup has an element of order {order}")]
    NotElementaryAbelian { p: u64, order: usize },
    #[error("{0} is neither 0 nor a prime")]
    NotPrimeOrZero(u64),

    #[error("normal subgroup must be proper and nontrivial")]
    NotProperNontrivial,
    #[error("elements {0} and {1} have no meet")]
    NoMeet(usize, usize),
    #[error("cover relation contains a cycle through {0}")]
    CyclicPoset(usize),
    #[error("{what} of size {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u64,
        limit: u64,
    },
    #[error("unsupported field size {0}")]
    UnsupportedFieldSize(u64),
    #[error("unknown builtin: {0}")]
    UnknownName(String),
    #[error("not a semilattice")]
    NotASemilattice,
    #[error("no normal subgroup isomorphic to the requested group")]
    NoSuchNormalSubgroup,

    #[error("cross-check failed: {0}")]
    Mismatch(String),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}
