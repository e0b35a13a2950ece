//! Existence and minimum length of completely reducible representations of
//! a group that are faithful on a normal subgroup.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{is_prime, Group, NormalSubgroup, SocleData, SocleIntersection};
use crate::semigroup::Element;

/// `p = 0` stands for characteristic zero.
pub fn check_characteristic(p: u64) -> Result<()> {
    if p == 0 || is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrimeOrZero(p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZmudResult {
    pub p: u64,
    pub exists: bool,
    pub k: Option<usize>,
    /// Normal generators of `S(G)∩N`, as elements of the ambient semigroup.
    pub witness: Option<Vec<Element>>,
    pub obstruction: Option<u64>,
}

/// Socle of `G` together with its intersection with `N`.
pub fn socle_relative(g: &Group, n: &NormalSubgroup) -> Result<(SocleData, SocleIntersection)> {
    let socle = g.socle_data()?;
    let parts = g.intersect_with_normal(&socle, n)?;
    Ok((socle, parts))
}

fn divides(p: u64, order: usize) -> bool {
    p != 0 && (order as u64).is_multiple_of(p)
}

/// Decides existence from `|A(G)∩N|` and confirms it with `O_p(N)`.
pub fn faithful_cr_exists(g: &Group, n: &NormalSubgroup, p: u64) -> Result<bool> {
    check_characteristic(p)?;
    let (_, parts) = socle_relative(g, n)?;
    exists_checked(g, n, &parts, p)
}

fn exists_checked(
    g: &Group,
    n: &NormalSubgroup,
    parts: &SocleIntersection,
    p: u64,
) -> Result<bool> {
    if p == 0 {
        return Ok(true);
    }
    let by_order = !divides(p, parts.a.order());
    let by_core = g.p_core_of(n, p)?.is_trivial();
    if by_order != by_core {
        return Err(Error::Mismatch(format!(
            "p = {p}: |A(G)∩N| = {} but |O_p(N)| = {}",
            parts.a.order(),
            g.p_core_of(n, p)?.order()
        )));
    }
    Ok(by_order)
}

/// Minimum number of irreducible constituents of a completely reducible
/// representation of `G` in characteristic `p` that is faithful on `N`.
pub fn zmud_number(g: &Group, n: &NormalSubgroup, p: u64) -> Result<ZmudResult> {
    check_characteristic(p)?;
    let (socle, parts) = socle_relative(g, n)?;
    if !exists_checked(g, n, &parts, p)? {
        return Ok(ZmudResult {
            p,
            exists: false,
            k: None,
            witness: None,
            obstruction: Some(p),
        });
    }
    let gen = g.min_normal_generators(&parts.s)?;
    let reduced = g.min_normal_generators_reduced(&socle, n)?;
    if gen.k != reduced {
        return Err(Error::Mismatch(format!(
            "direct search gives {} normal generators, Sylow reduction gives {reduced}",
            gen.k
        )));
    }
    let witness = gen.witness.iter().map(|&x| g.parent_element(x)).collect();
    Ok(ZmudResult {
        p,
        exists: true,
        k: Some(gen.k),
        witness: Some(witness),
        obstruction: None,
    })
}

/// Whether `G` has a faithful irreducible representation in characteristic `p`.
pub fn gaschutz_check(g: &Group, p: u64) -> Result<bool> {
    if g.is_trivial() {
        return Ok(true);
    }
    let r = zmud_number(g, &g.whole(), p)?;
    Ok(r.exists && r.k.is_some_and(|k| k <= 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_group, parse_builtin, BuiltinGroup};

    fn group(b: BuiltinGroup) -> Group {
        Group::from_semigroup(&builtin_group(b).unwrap()).unwrap()
    }

    #[test]
    fn existence() {
        let s3 = group(BuiltinGroup::Symmetric(3));
        let a3 = s3.normal_subgroup(&[0, 3, 4]).unwrap();
        assert!(faithful_cr_exists(&s3, &a3, 2).unwrap());
        assert!(!faithful_cr_exists(&s3, &a3, 3).unwrap());
        assert!(faithful_cr_exists(&s3, &a3, 0).unwrap());
        let z6 = group(BuiltinGroup::Cyclic(6));
        assert!(!faithful_cr_exists(&z6, &z6.whole(), 2).unwrap());
        assert_eq!(
            faithful_cr_exists(&z6, &z6.whole(), 4),
            Err(Error::NotPrimeOrZero(4))
        );
    }

    #[test]
    fn counts() {
        let s3 = group(BuiltinGroup::Symmetric(3));
        let a3 = s3.normal_subgroup(&[0, 3, 4]).unwrap();
        assert_eq!(zmud_number(&s3, &a3, 0).unwrap().k, Some(1));
        let v4 = group(BuiltinGroup::Klein4);
        let r = zmud_number(&v4, &v4.whole(), 0).unwrap();
        assert_eq!((r.k, r.witness.map(|w| w.len())), (Some(2), Some(2)));
        let r = zmud_number(&v4, &v4.trivial(), 2).unwrap();
        assert_eq!(r.k, Some(0));
        let r = zmud_number(&v4, &v4.whole(), 2).unwrap();
        assert_eq!((r.exists, r.k, r.obstruction), (false, None, Some(2)));
    }

    #[test]
    fn gaschutz() {
        let s3 = group(BuiltinGroup::Symmetric(3));
        assert!(gaschutz_check(&s3, 0).unwrap());
        assert!(!gaschutz_check(&s3, 3).unwrap());
        assert!(!gaschutz_check(&group(BuiltinGroup::Klein4), 0).unwrap());
        assert!(gaschutz_check(&group(BuiltinGroup::Cyclic(1)), 7).unwrap());
        let a5 = Group::from_semigroup(&parse_builtin("alternating(5)").unwrap()).unwrap();
        for p in [0, 2, 3, 5] {
            assert!(gaschutz_check(&a5, p).unwrap());
        }
    }
}
