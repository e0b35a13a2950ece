//! Plain-text tables for the human-readable output modes.

use std::fmt::Write;

use serde::Serialize;

use semirep::analyze::AnalysisReport;
use semirep::green::GreenData;
use semirep::oracle::SuiteReport;
use semirep::{Element, Group, NormalSubgroup, Result, Semigroup};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn green(
    s: &Semigroup,
    green: &GreenData,
    groups: &[Option<usize>],
    covers: &[(usize, usize)],
) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "order {}, {} J-classes",
        s.order(),
        green.j_classes.len()
    )
    .unwrap();
    writeln!(
        out,
        "{:>4} {:>6} {:>8} {:>12} {:>6}",
        "J", "size", "regular", "idempotents", "|G_J|"
    )
    .unwrap();
    for (c, g) in green.j_classes.iter().zip(groups) {
        let g = g.map_or("-".to_string(), |o| o.to_string());
        writeln!(
            out,
            "{:>4} {:>6} {:>8} {:>12} {:>6}",
            c.id,
            c.elements.len(),
            yes(c.regular),
            c.idempotents.len(),
            g
        )
        .unwrap();
    }
    writeln!(out, "J-order covers (lower upper):").unwrap();
    for (lo, hi) in covers {
        writeln!(out, "{lo} {hi}").unwrap();
    }
    out
}

#[derive(Debug, Serialize)]
pub struct CongruenceRow {
    pub j: usize,
    pub class_sizes: Vec<usize>,
    pub trivial: bool,
    pub irreducible: bool,
    pub witness: Option<(Element, Element)>,
    pub gj_order: usize,
    pub nj_order: usize,
}

pub fn congruence(ggm_trivial: bool, rows: &[CongruenceRow]) -> String {
    let mut out = String::new();
    writeln!(out, "GGM congruence trivial: {}", yes(ggm_trivial)).unwrap();
    writeln!(
        out,
        "{:>4} {:>8} {:>8} {:>12} {:>6} {:>6}  class sizes",
        "J", "classes", "trivial", "irreducible", "|G_J|", "|N_J|"
    )
    .unwrap();
    for r in rows {
        let sizes: Vec<String> = r.class_sizes.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "{:>4} {:>8} {:>8} {:>12} {:>6} {:>6}  {}",
            r.j,
            r.class_sizes.len(),
            yes(r.trivial),
            yes(r.irreducible),
            r.gj_order,
            r.nj_order,
            sizes.join(" ")
        )
        .unwrap();
    }
    out
}

#[derive(Debug, Serialize)]
pub struct MinimalNormalInfo {
    pub order: usize,
    pub abelian: bool,
    pub elements: Vec<Element>,
}

#[derive(Debug, Serialize)]
pub struct SylowLine {
    pub p: u64,
    pub order: usize,
    pub normal_generators: usize,
}

#[derive(Debug, Serialize)]
pub struct SocleSummary {
    pub order: usize,
    pub minimal_normals: Vec<MinimalNormalInfo>,
    pub a_order: usize,
    pub t_order: usize,
    pub socle_order: usize,
    pub normal_order: usize,
    pub a_cap_n_order: usize,
    pub t_cap_n_order: usize,
    pub sylow_pieces: Vec<SylowLine>,
    pub k: usize,
    pub witness: Vec<Element>,
}

impl SocleSummary {
    pub fn compute(g: &Group, n: &NormalSubgroup) -> Result<Self> {
        let socle = g.socle_data()?;
        let parts = g.intersect_with_normal(&socle, n)?;
        let gens = g.min_normal_generators(&parts.s)?;
        let mut sylow_pieces = Vec::new();
        for piece in g.sylow_decompose(&parts.a)? {
            sylow_pieces.push(SylowLine {
                p: piece.p,
                order: piece.carrier.order(),
                normal_generators: g.min_normal_generators(&piece.carrier)?.k,
            });
        }
        let parent = |m: &NormalSubgroup| m.elements().map(|x| g.parent_element(x)).collect();
        Ok(SocleSummary {
            order: g.order(),
            minimal_normals: socle
                .minimal_normals
                .iter()
                .map(|m| MinimalNormalInfo {
                    order: m.subgroup.order(),
                    abelian: m.abelian,
                    elements: parent(&m.subgroup),
                })
                .collect(),
            a_order: socle.a.order(),
            t_order: socle.t.order(),
            socle_order: socle.socle.order(),
            normal_order: n.order(),
            a_cap_n_order: parts.a.order(),
            t_cap_n_order: parts.t.order(),
            sylow_pieces,
            k: gens.k,
            witness: gens.witness.iter().map(|&x| g.parent_element(x)).collect(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "group of order {}", self.order).unwrap();
        writeln!(out, "minimal normal subgroups:").unwrap();
        for m in &self.minimal_normals {
            let tag = if m.abelian { "abelian" } else { "nonabelian" };
            writeln!(out, "  order {:<4} {:<11} {:?}", m.order, tag, m.elements).unwrap();
        }
        writeln!(
            out,
            "|A(G)| = {}, |T(G)| = {}, |S(G)| = {}",
            self.a_order, self.t_order, self.socle_order
        )
        .unwrap();
        writeln!(
            out,
            "N of order {}: |A(G)∩N| = {}, |T(G)∩N| = {}",
            self.normal_order, self.a_cap_n_order, self.t_cap_n_order
        )
        .unwrap();
        for s in &self.sylow_pieces {
            writeln!(
                out,
                "  Sylow {}-piece of A(G)∩N: order {}, {} normal generator(s)",
                s.p, s.order, s.normal_generators
            )
            .unwrap();
        }
        writeln!(
            out,
            "S(G)∩N needs {} normal generator(s): {:?}",
            self.k, self.witness
        )
        .unwrap();
        out
    }
}

pub fn report(r: &AnalysisReport) -> String {
    let mut out = String::new();
    writeln!(out, "characteristic {}", r.characteristic).unwrap();
    write!(out, "GGM congruence trivial: {}", yes(r.ggm_trivial)).unwrap();
    if let Some((s, t)) = r.ggm_witness {
        write!(out, " (identifies {s} and {t})").unwrap();
    }
    out.push('\n');
    writeln!(
        out,
        "{:>4} {:>12} {:>6} {:>6} {:>9} {:>11} {:>4}",
        "J", "irreducible", "|G_J|", "|N_J|", "|A∩N_J|", "obstructed", "k_J"
    )
    .unwrap();
    for row in &r.rows {
        writeln!(
            out,
            "{:>4} {:>12} {:>6} {:>6} {:>9} {:>11} {:>4}",
            row.j,
            yes(row.irreducible),
            row.gj_order,
            row.nj_order,
            row.a_cap_n_order,
            yes(row.obstruction),
            row.k_j
        )
        .unwrap();
    }
    match r.k_total {
        Some(k) => writeln!(
            out,
            "faithful completely reducible representation: exists, minimum length {k}"
        ),
        None => writeln!(out, "faithful completely reducible representation: none"),
    }
    .unwrap();
    let primes: Vec<String> = r
        .obstruction_primes
        .iter()
        .map(ToString::to_string)
        .collect();
    let primes = if primes.is_empty() {
        "none".to_string()
    } else {
        primes.join(", ")
    };
    writeln!(out, "obstructing characteristics: {primes}").unwrap();
    out
}

pub fn suite(r: &SuiteReport, seed: u64) -> String {
    let mut out = String::new();
    writeln!(out, "seed {seed}").unwrap();
    for c in &r.checks {
        writeln!(
            out,
            "{} {:<50} {}",
            if c.ok { "ok  " } else { "FAIL" },
            c.name,
            c.detail
        )
        .unwrap();
    }
    writeln!(out, "{} checks, {} failed", r.checks.len(), r.failures()).unwrap();
    out
}
