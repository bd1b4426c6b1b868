mod common;

use hyperexp::extraction::{full_subgraph, is_full, select_disjoint_augmented, AugmentedFamily};
use hyperexp::io::{format_graph, format_triple_system, parse_graph, parse_triple_system};
use hyperexp::ramsey::{
    build_list_assignment, extract_multicoloring, find_classified_subgrid, GridColoring,
};
use hyperexp::search::{contains, contains_expansion, lower_bound_construction, turan_number};
use hyperexp::structure::{
    complete_forest_to_tree, expand, sigma_expansion_with, sigma_hypergraph, SigmaMethod,
};
use hyperexp::{Budget, Graph, VertexSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn codegrees_count_each_edge_three_times(seed: u64, n in 3usize..10, p in 0.0f64..1.0) {
        let h = common::random_triple_system(&mut rng(seed), n, p);
        let codeg = h.codegrees();
        prop_assert_eq!(codeg.values().sum::<usize>(), 3 * h.len());
        prop_assert_eq!(codeg.len(), h.shadow().edge_count());
        for (&(x, y), &c) in &codeg {
            prop_assert_eq!(h.neighborhood(&[x, y]).unwrap().len(), c);
        }
        prop_assert_eq!((0..n).map(|v| h.degree(v)).sum::<usize>(), 3 * h.len());
    }

    #[test]
    fn sigma_solvers_agree_on_forests(seed: u64, n in 1usize..11, p in 0.3f64..1.0) {
        let f = common::random_forest(&mut rng(seed), n, p);
        let bnb = sigma_expansion_with(&f, SigmaMethod::BranchAndBound).unwrap();
        let dp = sigma_expansion_with(&f, SigmaMethod::ForestDp).unwrap();
        prop_assert_eq!(&bnb, &dp);
        let (w, size) = common::sigma_pair_key(&f);
        prop_assert_eq!(bnb.0, w);
        prop_assert_eq!(bnb.1.independent.len(), size);
        prop_assert!(f.is_independent(&bnb.1.independent));
    }

    #[test]
    fn sigma_on_general_graphs(seed: u64, n in 1usize..9, p in 0.0f64..0.8) {
        let g = common::random_graph(&mut rng(seed), n, p);
        let (sigma, pair) = sigma_expansion_with(&g, SigmaMethod::BranchAndBound).unwrap();
        prop_assert_eq!((sigma, pair.independent.len()), common::sigma_pair_key(&g));
        prop_assert_eq!(pair.weight, sigma);
    }

    #[test]
    fn hypergraph_sigma_matches_brute_force(seed: u64, n in 3usize..9, p in 0.0f64..0.4) {
        let h = common::random_triple_system(&mut rng(seed), n, p);
        let lib = sigma_hypergraph(&h);
        prop_assert_eq!(lib.as_ref().map(|x| x.0), common::crosscut_size(&h));
        if let Some((_, w)) = lib {
            prop_assert!(w.is_valid_for(&h));
        }
    }

    #[test]
    fn expansion_sigma_is_the_pair_optimum(seed: u64, n in 1usize..7, p in 0.0f64..0.7) {
        let g = common::random_graph(&mut rng(seed), n, p);
        let x = expand(&g).triples;
        let direct = sigma_hypergraph(&x).map(|s| s.0).unwrap_or(0);
        prop_assert_eq!(direct, common::sigma_pair_key(&g).0);
    }

    #[test]
    fn forest_completion_keeps_sigma(seed: u64, n in 2usize..10, p in 0.0f64..1.0) {
        let f = common::random_forest(&mut rng(seed), n, p);
        match complete_forest_to_tree(&f) {
            Err(_) => prop_assert_eq!(f.edge_count(), 0),
            Ok(t) => {
                prop_assert!(t.is_tree());
                prop_assert_eq!(common::sigma_pair_key(&t).0, common::sigma_pair_key(&f).0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn containment_matches_brute_force(seed: u64, fn_ in 3usize..7, hn in 3usize..8, pf in 0.05f64..0.5, ph in 0.1f64..0.9) {
        let mut r = rng(seed);
        let f = common::random_triple_system(&mut r, fn_, pf);
        let h = common::random_triple_system(&mut r, hn, ph);
        let cert = contains(&h, &f);
        prop_assert_eq!(cert.is_some(), common::contains(&h, &f));
        if let Some(c) = cert {
            prop_assert!(c.validate(&f, &h));
        }
    }

    #[test]
    fn expansion_containment_matches_generic(seed: u64, gn in 2usize..6, hn in 3usize..9, pg in 0.2f64..0.8, ph in 0.1f64..0.9) {
        let mut r = rng(seed);
        let g = common::random_graph(&mut r, gn, pg);
        let h = common::random_triple_system(&mut r, hn, ph);
        let x = expand(&g).triples;
        let direct = contains_expansion(&h, &g);
        prop_assert_eq!(direct.is_some(), contains(&h, &x).is_some());
        if let Some(c) = direct {
            prop_assert!(c.validate(&x, &h));
        }
    }

    #[test]
    fn full_subgraph_bounds(seed: u64, n in 3usize..11, p in 0.0f64..1.0, d in 1usize..5) {
        let h = common::random_triple_system(&mut rng(seed), n, p);
        let out = full_subgraph(&h, d).unwrap();
        prop_assert!(is_full(&out, d + 1));
        prop_assert!(out.len() + d * h.shadow().edge_count() >= h.len());
    }

    #[test]
    fn augmented_selection(seed: u64, m in 0usize..60) {
        let mut r = rng(seed);
        let mut next = 0;
        let mut sets = Vec::new();
        for _ in 0..m {
            let len = r.gen_range(0..4);
            sets.push(VertexSet::from_iter(next..next + len));
            next += len;
        }
        let mut points: Vec<usize> = (0..next + m).collect();
        points.shuffle(&mut r);
        let fam = AugmentedFamily::new(sets.into_iter().zip(points).collect()).unwrap();
        let chosen = select_disjoint_augmented(&fam);
        prop_assert!(chosen.len() >= m.div_ceil(3));
        prop_assert!(chosen.windows(2).all(|w| w[0] < w[1]));
        for (a, &i) in chosen.iter().enumerate() {
            for &j in &chosen[a + 1..] {
                prop_assert!(fam.augmented(i).is_disjoint(&fam.augmented(j)));
            }
        }
    }

    #[test]
    fn subgrid_search_matches_brute_force(seed: u64, a in 2usize..5, b in 2usize..5, colours in 1usize..5, s in 1usize..3) {
        let mut r = rng(seed);
        let c = GridColoring::from_fn(a, b, |_, _| r.gen_range(0..colours)).unwrap();
        let found = find_classified_subgrid(&c, s).unwrap();
        prop_assert_eq!(found.is_some(), common::has_classified_subgrid(&c, s));
    }

    #[test]
    fn multicolouring_exists_iff_lists_are_long_enough(seed: u64, n in 5usize..10, p in 0.2f64..1.0, m in 1usize..4) {
        let h = common::random_triple_system(&mut rng(seed), n, p);
        let la = build_list_assignment(&h, &[0, 1], &[2, 3]);
        if let Ok(la) = la {
            let mc = extract_multicoloring(&la, m).unwrap();
            prop_assert_eq!(mc.is_some(), la.min_list_size() >= m);
            if let Some(mc) = mc {
                prop_assert!(mc.is_valid_for(&la));
            }
        }
    }

    #[test]
    fn text_formats_round_trip(seed: u64, n in 1usize..12, p in 0.0f64..1.0) {
        let mut r = rng(seed);
        let g = common::random_graph(&mut r, n, p);
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
        let h = common::random_triple_system(&mut r, n.max(3), p / 2.0);
        prop_assert_eq!(parse_triple_system(&format_triple_system(&h)).unwrap(), h);
    }
}

#[test]
fn construction_counts_and_freeness() {
    for t in (2..=5).flat_map(hyperexp::generate::trees) {
        let sigma = common::sigma_pair_key(&t).0;
        let c = sigma - 1;
        for n in c.max(3)..=8 {
            let h = lower_bound_construction(n, c).unwrap();
            assert_eq!(h.len(), c * (n - c) * (n - c).saturating_sub(1) / 2);
            assert!(
                contains_expansion(&h, &t).is_none(),
                "{t:?} in construction at n = {n}"
            );
        }
    }
}

#[test]
fn turan_values_are_monotone_and_match_brute_force() {
    let patterns = [
        expand(&Graph::path(3)).triples,
        hyperexp::TripleSystem::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap(),
        hyperexp::TripleSystem::new(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3]]).unwrap(),
    ];
    for f in &patterns {
        let mut last = 0;
        for n in 3..=6 {
            let r = turan_number(n, f, Budget::unlimited(), 2).unwrap();
            assert!(r.exact);
            assert!(r.value >= last, "{f:?}: ex({n}) = {} < {last}", r.value);
            assert!(!common::contains(&r.witness, f));
            if n <= 5 {
                assert_eq!(r.value, common::turan(n, f), "{f:?} at n = {n}");
            }
            last = r.value;
        }
    }
}

#[test]
fn turan_is_at_least_the_construction() {
    let t = Graph::path(4);
    let c = common::sigma_pair_key(&t).0 - 1;
    let f = expand(&t).triples;
    for n in 7..=7 {
        let r = turan_number(n, &f, Budget::unlimited(), 4).unwrap();
        assert!(r.exact);
        assert!(r.value >= lower_bound_construction(n, c).unwrap().len());
    }
}
