use proptest::prelude::*;

use semirep::analyze::analyze;
use semirep::congruence::{fold_meet, CongruenceAnalysis};
use semirep::constructions::{build_semilattice, random_meet_poset};
use semirep::green::{compute_green, j_order, stability_audit};
use semirep::group::prime_factors;
use semirep::oracle::{exhaustive_min_normal_gen, join_irreducibles, structural_audit};
use semirep::semigroup::closure_from_transformations;
use semirep::zmud::{faithful_cr_exists, zmud_number};
use semirep::{AssocCheck, Group, Semigroup, Transformation};

fn transformations(
    max_degree: usize,
    max_gens: usize,
) -> impl Strategy<Value = Vec<Transformation>> {
    (2..=max_degree).prop_flat_map(move |m| {
        prop::collection::vec(prop::collection::vec(0..m, m), 1..=max_gens).prop_map(|gens| {
            gens.into_iter()
                .map(|g| Transformation::new(g).unwrap())
                .collect()
        })
    })
}

fn permutations(max_degree: usize) -> impl Strategy<Value = Vec<Transformation>> {
    (2..=max_degree).prop_flat_map(|m| {
        prop::collection::vec(Just((0..m).collect::<Vec<_>>()).prop_shuffle(), 1..=2).prop_map(
            |gens| {
                gens.into_iter()
                    .map(|g| Transformation::new(g).unwrap())
                    .collect()
            },
        )
    })
}

fn small_semigroup() -> impl Strategy<Value = Semigroup> {
    transformations(4, 3)
        .prop_map(|gens| closure_from_transformations(&gens).unwrap())
        .prop_filter("at most 60 elements", |s| s.order() <= 60)
}

fn small_group() -> impl Strategy<Value = Group> {
    permutations(5)
        .prop_map(|gens| {
            Group::from_semigroup(&closure_from_transformations(&gens).unwrap()).unwrap()
        })
        .prop_filter("at most 24 elements", |g| g.order() <= 24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_associative_and_round_trips(s in small_semigroup()) {
        s.check_associativity().unwrap();
        let text = s.to_cayley_text();
        let back = Semigroup::parse_cayley_text(&text, AssocCheck::Verify).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn structure_audits_pass(s in small_semigroup()) {
        let green = compute_green(&s);
        prop_assert!(stability_audit(&s, &green));
        structural_audit(&s).unwrap();
    }

    #[test]
    fn ggm_is_fold_order_independent(s in small_semigroup()) {
        let green = compute_green(&s);
        let order = j_order(&green);
        let cong = CongruenceAnalysis::compute(&s, &green, &order).unwrap();
        let reversed = fold_meet(s.order(), cong.congruences.by_class.iter().rev().map(|(_, c)| c));
        prop_assert_eq!(&reversed, &cong.ggm);
        prop_assert!(cong.ggm.is_congruence_on(&s));
    }

    #[test]
    fn report_invariants(s in small_semigroup(), p in prop::sample::select(vec![0u64, 2, 3, 5])) {
        let r = analyze(&s, p).unwrap();
        let obstructed = r.rows.iter().any(|row| row.obstruction);
        prop_assert_eq!(r.exists, r.ggm_trivial && !obstructed);
        prop_assert_eq!(r.k_total.is_some(), r.exists);
        if let Some(k) = r.k_total {
            prop_assert_eq!(k, r.rows.iter().map(|row| row.k_j).sum::<usize>());
        }
        for row in &r.rows {
            prop_assert_eq!(row.k_j == 0, !row.irreducible);
            prop_assert!(row.nj_order <= row.gj_order && row.gj_order % row.nj_order == 0);
        }
        let json = serde_json::to_string(&r).unwrap();
        let again: semirep::AnalysisReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(serde_json::to_string(&again).unwrap(), json);
    }

    #[test]
    fn generator_counts_agree(g in small_group()) {
        let socle = g.socle_data().unwrap();
        let normals = g.normal_subgroups();
        let mut ks = Vec::new();
        for n in &normals {
            let s_n = g.intersect_with_normal(&socle, n).unwrap().s;
            let direct = g.min_normal_generators(&s_n).unwrap();
            prop_assert_eq!(direct.k, g.min_normal_generators_reduced(&socle, n).unwrap());
            prop_assert_eq!(direct.k, exhaustive_min_normal_gen(&g, &s_n).unwrap());
            prop_assert_eq!(g.normal_closure(&direct.witness).unwrap(), s_n);
            ks.push(direct.k);
        }
        for (i, a) in normals.iter().enumerate() {
            for (j, b) in normals.iter().enumerate() {
                if a.is_subset(b) {
                    prop_assert!(ks[i] <= ks[j]);
                }
            }
        }
    }

    #[test]
    fn existence_matches_abelian_part(g in small_group()) {
        let socle = g.socle_data().unwrap();
        for n in g.normal_subgroups() {
            let a = g.intersect_with_normal(&socle, &n).unwrap().a.order() as u64;
            for p in prime_factors(g.order() as u64) {
                prop_assert_eq!(faithful_cr_exists(&g, &n, p).unwrap(), !a.is_multiple_of(p));
            }
        }
    }

    #[test]
    fn groups_analyze_to_their_own_count(g in small_group()) {
        prop_assume!(!g.is_trivial());
        let r = analyze(&g.to_semigroup(), 0).unwrap();
        let k = zmud_number(&g, &g.whole(), 0).unwrap().k.unwrap();
        prop_assert_eq!(r.rows.len(), 1);
        prop_assert_eq!(r.k_total, Some(k.max(1)));
    }

    #[test]
    fn semilattice_count_is_join_irreducibles(seed in any::<u64>()) {
        let s = build_semilattice(&random_meet_poset(seed, 12)).unwrap();
        prop_assert_eq!(analyze(&s, 0).unwrap().k_total, Some(join_irreducibles(&s).unwrap().len()));
    }
}
