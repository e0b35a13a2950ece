//! The full pipeline: Green structure, congruences, and per-class group
//! theory, assembled into an existence verdict and the minimum number of
//! irreducible constituents of a faithful completely reducible
//! representation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::congruence::{compute_n_j, is_generalized_group_mapping, CongruenceAnalysis};
use crate::error::{Error, Result};
use crate::green::{compute_green, j_order, maximal_subgroup};
use crate::group::prime_factors;
use crate::semigroup::{Element, Semigroup};
use crate::zmud::{check_characteristic, gaschutz_check, socle_relative, zmud_number};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub j: usize,
    pub irreducible: bool,
    pub gj_order: usize,
    pub nj_order: usize,
    pub a_cap_n_order: usize,
    pub obstruction: bool,
    pub k_j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub ggm_trivial: bool,
    /// Two distinct elements identified by the GGM congruence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ggm_witness: Option<(Element, Element)>,
    pub rows: Vec<ReportRow>,
    pub exists: bool,
    pub k_total: Option<usize>,
    /// Every prime characteristic that is obstructed by some irreducible
    /// class, whether or not it is the one analyzed.
    pub obstruction_primes: Vec<u64>,
}

pub fn analyze(s: &Semigroup, p: u64) -> Result<AnalysisReport> {
    check_characteristic(p)?;
    let green = compute_green(s);
    let order = j_order(&green);
    let cong = CongruenceAnalysis::compute(s, &green, &order)?;
    let ggm_witness = cong
        .ggm
        .classes()
        .into_iter()
        .find(|c| c.len() > 1)
        .map(|c| (c[0], c[1]));
    let mut rows = Vec::new();
    let mut primes = BTreeSet::new();
    for class in green.regular_classes() {
        let j = class.id;
        let irreducible = cong.classification.is_irreducible(j);
        let ms = maximal_subgroup(s, &green, j, None)?;
        let nj = compute_n_j(s, &order, &ms, &cong.congruences)?;
        let g = &ms.group;
        let (_, parts) = socle_relative(g, &nj.subgroup)?;
        let a_cap_n = parts.a.order();
        let mut k_j = 0;
        let mut obstruction = false;
        if irreducible {
            primes.extend(prime_factors(a_cap_n as u64));
            obstruction = p != 0 && (a_cap_n as u64).is_multiple_of(p);
            k_j = if nj.subgroup.is_trivial() {
                1
            } else {
                let k = zmud_number(g, &nj.subgroup, 0)?
                    .k
                    .expect("characteristic zero always exists");
                k.max(1)
            };
        }
        rows.push(ReportRow {
            j,
            irreducible,
            gj_order: g.order(),
            nj_order: nj.subgroup.order(),
            a_cap_n_order: a_cap_n,
            obstruction,
            k_j,
        });
    }
    let ggm_trivial = ggm_witness.is_none();
    let exists = ggm_trivial && !rows.iter().any(|r| r.obstruction);
    let k_total = exists.then(|| rows.iter().map(|r| r.k_j).sum());
    Ok(AnalysisReport {
        characteristic: p,
        ggm_trivial,
        ggm_witness,
        rows,
        exists,
        k_total,
        obstruction_primes: primes.into_iter().collect(),
    })
}

/// `None` when no faithful completely reducible representation exists.
pub fn min_faithful_cr_length(s: &Semigroup, p: u64) -> Result<Option<usize>> {
    Ok(analyze(s, p)?.k_total)
}

/// Whether `S` has a faithful irreducible representation in characteristic
/// `p`: `S` must be generalized group mapping and its distinguished maximal
/// subgroup must have a socle that is one normal generator away from
/// itself, with `p` not dividing the abelian part.
pub fn rhodes_irreducible_check(s: &Semigroup, p: u64) -> Result<bool> {
    check_characteristic(p)?;
    if s.is_trivial() {
        return Ok(true);
    }
    let green = compute_green(s);
    let verdict = match is_generalized_group_mapping(s, &green)? {
        Some(j) => gaschutz_check(&maximal_subgroup(s, &green, j, None)?.group, p)?,
        None => false,
    };
    let report = analyze(s, p)?;
    let by_count = report.exists && report.k_total == Some(1);
    if verdict != by_count {
        return Err(Error::Mismatch(format!(
            "Rhodes criterion says {verdict}, analysis gives exists = {} with k_total = {:?}",
            report.exists, report.k_total
        )));
    }
    Ok(verdict)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstructions {
    /// The GGM congruence is nontrivial, so no characteristic works.
    AllPrimes,
    Primes(BTreeSet<u64>),
}

pub fn obstruction_primes(s: &Semigroup) -> Result<Obstructions> {
    let report = analyze(s, 0)?;
    if !report.ggm_trivial {
        return Ok(Obstructions::AllPrimes);
    }
    Ok(Obstructions::Primes(
        report.obstruction_primes.into_iter().collect(),
    ))
}
