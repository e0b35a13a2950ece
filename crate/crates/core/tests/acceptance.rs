//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the pass/fail lines always reach the output.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use semirep::analyze::{analyze, obstruction_primes, rhodes_irreducible_check, Obstructions};
use semirep::constructions::{build_qg, find_normal_isomorphic, parse_builtin};
use semirep::oracle::{
    check_qg, check_semilattice, corpus_groups, corpus_semigroups, corpus_semilattices,
    crosscheck_equivalences, dilworth_check, exhaustive_min_normal_gen, group_audit,
    structural_audit,
};
use semirep::zmud::{faithful_cr_exists, zmud_number};
use semirep::{Group, NormalSubgroup, Semigroup};

const SEED: u64 = 1;

fn sg(expr: &str) -> Semigroup {
    parse_builtin(expr).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

fn grp(expr: &str) -> Group {
    Group::from_semigroup(&sg(expr)).unwrap()
}

fn normal_like(g: &Group, expr: &str) -> NormalSubgroup {
    find_normal_isomorphic(g, &grp(expr)).unwrap()
}

fn matrix_family() -> String {
    let m = sg("M(2,2)");
    for p in [0, 2, 3, 5, 7] {
        let r = analyze(&m, p).unwrap();
        assert!(r.exists, "p = {p}");
        assert_eq!(r.k_total, Some(1), "p = {p}");
        assert!(rhodes_irreducible_check(&m, p).unwrap(), "p = {p}");
    }
    "k_total = 1 for p = 0, 2, 3, 5, 7".into()
}

fn zmud_groups() -> String {
    let mut checked = 0;
    for (name, g) in corpus_groups(24).unwrap() {
        let k = zmud_number(&g, &g.whole(), 0).unwrap().k.unwrap();
        let socle = g.socle_data().unwrap().socle;
        assert_eq!(k, exhaustive_min_normal_gen(&g, &socle).unwrap(), "{name}");
        assert_eq!(
            k,
            crosscheck_equivalences(&g, &g.whole(), 0).unwrap().k,
            "{name}"
        );
        checked += 1;
    }
    assert!(checked >= 40, "only {checked} groups");
    for (expr, k) in [
        ("klein4", 2),
        ("elementary_abelian(2,3)", 3),
        ("symmetric(3)", 1),
        ("quaternion8", 1),
    ] {
        let g = grp(expr);
        assert_eq!(zmud_number(&g, &g.whole(), 0).unwrap().k, Some(k), "{expr}");
    }
    format!("{checked} groups")
}

fn relativized() -> String {
    for (gexpr, nexpr, k) in [
        ("symmetric(3)", "cyclic(3)", 1),
        ("symmetric(4)", "klein4", 1),
        ("product(klein4, cyclic(3))", "klein4", 2),
    ] {
        let g = grp(gexpr);
        let n = normal_like(&g, nexpr);
        let r = zmud_number(&g, &n, 0).unwrap();
        assert_eq!(r.k, Some(k), "{gexpr} / {nexpr}");
        let (_, parts) = semirep::zmud::socle_relative(&g, &n).unwrap();
        assert_eq!(exhaustive_min_normal_gen(&g, &parts.s).unwrap(), k);
        assert_eq!(crosscheck_equivalences(&g, &n, 0).unwrap().k, k);
    }
    "k = 1, 1, 2".into()
}

fn obstructions() -> String {
    let z6 = grp("cyclic(6)");
    let s3 = grp("symmetric(3)");
    let a3 = normal_like(&s3, "cyclic(3)");
    for (g, n, p, expected) in [
        (&z6, z6.whole(), 2, false),
        (&s3, a3.clone(), 3, false),
        (&s3, a3, 2, true),
    ] {
        assert_eq!(faithful_cr_exists(g, &n, p).unwrap(), expected);
        let (_, parts) = semirep::zmud::socle_relative(g, &n).unwrap();
        assert_eq!(!(parts.a.order() as u64).is_multiple_of(p), expected);
        assert_eq!(g.p_core_of(&n, p).unwrap().is_trivial(), expected);
        assert_eq!(crosscheck_equivalences(g, &n, p).unwrap().exists, expected);
    }
    "false, false, true".into()
}

fn semilattices() -> String {
    let corpus = corpus_semilattices(SEED).unwrap();
    assert_eq!(corpus.len(), 14);
    let mut largest = 0;
    for (name, s) in &corpus {
        check_semilattice(s).unwrap_or_else(|e| panic!("{name}: {e}"));
        largest = largest.max(s.order());
    }
    format!("{} semilattices, largest of order {largest}", corpus.len())
}

fn qg_family() -> String {
    for expr in [
        "cyclic(4)",
        "cyclic(6)",
        "symmetric(3)",
        "klein4",
        "dihedral(4)",
        "quaternion8",
    ] {
        let g = grp(expr);
        check_qg(&g).unwrap_or_else(|e| panic!("Q({expr}): {e}"));
        assert!(dilworth_check(&g).unwrap(), "{expr}");
    }
    assert!(!analyze(&build_qg(&grp("cyclic(4)")), 2).unwrap().exists);
    "6 groups".into()
}

fn motivating_example() -> String {
    let u = sg("union_quotient(symmetric(3), alternating(3))");
    let r = analyze(&u, 0).unwrap();
    assert!(r.exists);
    assert_eq!(r.k_total, Some(2));
    assert_eq!(
        obstruction_primes(&u).unwrap(),
        Obstructions::Primes([2, 3].into())
    );
    let r5 = analyze(&u, 5).unwrap();
    assert!(r5.exists);
    assert_eq!(r5.k_total, Some(2));
    "k_total = 2, obstruction primes {2, 3}".into()
}

fn structural() -> String {
    let semigroups = corpus_semigroups(SEED).unwrap();
    assert!(semigroups.len() > 80);
    let mut regular = 0;
    for (name, s) in &semigroups {
        regular += structural_audit(s)
            .unwrap_or_else(|e| panic!("{name}: {e}"))
            .regular_classes;
    }
    let mut groups = corpus_groups(24).unwrap();
    groups.push(("alternating(5)".into(), grp("alternating(5)")));
    groups.push(("symmetric(5)".into(), grp("symmetric(5)")));
    for (name, g) in &groups {
        group_audit(g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    format!(
        "{} semigroups ({regular} regular J-classes), {} groups",
        semigroups.len(),
        groups.len()
    )
}

fn reduction() -> String {
    let mut pairs = 0;
    for (name, g) in corpus_groups(24).unwrap() {
        let socle = g.socle_data().unwrap();
        for n in g.normal_subgroups() {
            let s_n = g.intersect_with_normal(&socle, &n).unwrap().s;
            let direct = g.min_normal_generators(&s_n).unwrap().k;
            let reduced = g.min_normal_generators_reduced(&socle, &n).unwrap();
            assert_eq!(direct, reduced, "{name}, |N| = {}", n.order());
            pairs += 1;
        }
    }
    assert!(pairs > 200, "only {pairs} pairs");
    format!("{pairs} pairs")
}

type Criterion = (&'static str, fn() -> String, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "matrix monoid M_2(F_2) has a faithful irreducible representation",
            matrix_family,
            Duration::from_secs(1),
        ),
        (
            "group generator counts match the exhaustive oracle",
            zmud_groups,
            Duration::from_secs(30),
        ),
        (
            "relative generator counts",
            relativized,
            Duration::from_secs(5),
        ),
        (
            "characteristic obstructions",
            obstructions,
            Duration::from_secs(1),
        ),
        (
            "semilattices: k_total = join irreducibles",
            semilattices,
            Duration::from_secs(10),
        ),
        (
            "Q(G): k_total = meet irreducible normals",
            qg_family,
            Duration::from_secs(30),
        ),
        ("S_3 ∪ S_3/A_3", motivating_example, Duration::from_secs(2)),
        (
            "structural audits over the corpus",
            structural,
            Duration::from_secs(60),
        ),
        (
            "direct and Sylow-reduced generator counts agree",
            reduction,
            Duration::from_secs(30),
        ),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(summary) if elapsed <= *limit => format!("PASS ({summary})"),
            Ok(_) => format!("FAIL (over the {limit:?} limit)"),
            Err(payload) => {
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL: {msg}")
            }
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!(
            "criterion {}: {verdict} [{:.3}s] {name}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
