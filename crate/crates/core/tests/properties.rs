mod common;

use pathpair_core::caps::Caps;
use pathpair_core::conditions::{cut_condition, faudree_consistency, CutCondition};
use pathpair_core::constructions::{triangle_hub, Role};
use pathpair_core::graph::{edge_cut, induced_edge_count, SimpleGraph, VertexSet};
use pathpair_core::io::{emit_graph, parse_graph};
use pathpair_core::lemma::random::{
    random_bipartite_planar, random_dirac_graph, random_graph, random_planar_graph,
    random_planar_multigraph, rng_from_seed,
};
use pathpair_core::lemma::{
    build_auxiliary_pairing_graph, extract_matching, hub_multigraph, lemma5_check,
    weak_reachability,
};
use pathpair_core::minor::has_clique_minor;
use pathpair_core::multigraph::contract_matching;
use pathpair_core::pairings::random_full_pairing;
use pathpair_core::paths::Pairing;
use pathpair_core::planarity::{is_planar, planar, Planarity};
use pathpair_core::router::{route, route_with};
use pathpair_core::solver::{find_disjoint_paths, Routing, DEFAULT_BUDGET};
use pathpair_core::verifier::{is_k_path_pairable, is_path_pairable, VerifyOptions};
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn opts(orbits: bool) -> VerifyOptions {
    VerifyOptions {
        orbits,
        caps: Caps::default(),
        ..VerifyOptions::default()
    }
}

#[test]
fn planarity_exhaustive_up_to_six_vertices() {
    for n in 0..=6 {
        for g in graphs_up_to_iso(n, 15) {
            match is_planar(&g) {
                Planarity::Planar(emb) => {
                    assert!(!small_nonplanar(&g), "{}", emit_graph(&g));
                    assert!(emb.verify(&g));
                }
                Planarity::NonPlanar(w) => {
                    assert!(small_nonplanar(&g), "{}", emit_graph(&g));
                    assert!(w.verify(&g));
                }
            }
        }
    }
}

#[test]
fn iso_class_counts() {
    // numbers of unlabelled graphs on n vertices
    let counts: Vec<usize> = (1..=6).map(|n| graphs_up_to_iso(n, 15).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}

#[test]
fn router_on_random_pairings() {
    for k in 1..=6 {
        let th = triangle_hub(k).unwrap();
        let mut rng = rng_from_seed(k as u64);
        for _ in 0..10_000 {
            let p = random_full_pairing(th.n(), &mut rng);
            let ps = route(&th, &p).unwrap();
            assert!(valid_system(th.graph(), p.pairs(), ps.paths()));
            for path in ps.paths() {
                assert!(path.len() == 2 || (path.len() == 3 && th.role(path[1]).is_hub()));
            }
        }
    }
}

#[test]
fn router_either_case4_hub_works() {
    let th = triangle_hub(2).unwrap();
    let mut rng = rng_from_seed(77);
    for _ in 0..2000 {
        let p = random_full_pairing(th.n(), &mut rng);
        let ps = route_with(&th, &p, |_, class| {
            let hubs = class.serving_hubs().unwrap();
            if rng.gen_bool(0.5) {
                hubs[0]
            } else {
                hubs[1]
            }
        })
        .unwrap();
        assert!(valid_system(th.graph(), p.pairs(), ps.paths()));
    }
    assert!(Role::HUBS.iter().all(|r| r.is_hub()));
}

#[test]
fn router_and_solver_agree_on_triangle_hub_1() {
    let th = triangle_hub(1).unwrap();
    for pairs in pairings_of_size(6, 3) {
        let p = Pairing::new(pairs).unwrap();
        assert!(route(&th, &p).is_ok());
        assert!(find_disjoint_paths(th.graph(), &p, DEFAULT_BUDGET)
            .unwrap()
            .routing
            .is_feasible());
    }
}

#[test]
fn pairable_small_graphs_meet_necessary_conditions() {
    for n in [2, 4, 6] {
        for g in graphs_up_to_iso(n, 15) {
            let rep = is_path_pairable(&g, &opts(false)).unwrap();
            if rep.is_pairable() {
                assert!(cut_condition_holds(&g));
                assert!(cut_condition(&g).unwrap().holds());
                assert!(faudree_oracle(n, g.max_degree()));
                assert!(faudree_consistency(n, g.max_degree()));
            }
        }
    }
}

fn seeded_graph(seed: u64, n: usize) -> SimpleGraph {
    let mut rng = rng_from_seed(seed);
    let p = rng.gen_range(0.2..0.9);
    random_graph(n, p, &mut rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(seed in any::<u64>(), n in 0usize..30) {
        let g = seeded_graph(seed, n);
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn cut_condition_monotone(seed in any::<u64>(), n in 2usize..11) {
        let g = seeded_graph(seed, n);
        let before = cut_condition(&g).unwrap();
        if let CutCondition::Violated { set, cut } = &before {
            prop_assert_eq!(edge_cut(&g, set).unwrap(), *cut);
            prop_assert!(*cut < set.len() && 2 * set.len() <= n);
        }
        prop_assert_eq!(before.holds(), cut_condition_holds(&g));
        if before.holds() {
            let mut rng = rng_from_seed(seed ^ 1);
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !g.has_edge(u, v) {
                prop_assert!(cut_condition(&g.with_edge(u, v).unwrap()).unwrap().holds());
            }
        }
    }

    #[test]
    fn pairability_descends_in_k(seed in any::<u64>(), n in 4usize..7) {
        let g = seeded_graph(seed, n);
        for k in 2..=n / 2 {
            if is_k_path_pairable(&g, k, &opts(false)).unwrap().is_pairable() {
                prop_assert!(is_k_path_pairable(&g, k - 1, &opts(false)).unwrap().is_pairable());
            }
        }
    }

    #[test]
    fn orbit_reduction_agrees(seed in any::<u64>(), half in 2usize..5) {
        let g = seeded_graph(seed, 2 * half);
        let plain = is_path_pairable(&g, &opts(false)).unwrap();
        let reduced = is_path_pairable(&g, &opts(true)).unwrap();
        prop_assert_eq!(plain.verdict, reduced.verdict);
    }

    #[test]
    fn solver_matches_naive(seed in any::<u64>(), n in 2usize..8, k in 1usize..4) {
        let g = seeded_graph(seed, n);
        let k = k.min(n / 2);
        let mut rng = rng_from_seed(seed);
        let p = random_full_pairing(n, &mut rng);
        let pairs: Vec<_> = p.pairs()[..k].to_vec();
        let sol = find_disjoint_paths(&g, &Pairing::new(pairs.clone()).unwrap(), DEFAULT_BUDGET).unwrap();
        match &sol.routing {
            Routing::Feasible(ps) => prop_assert!(valid_system(&g, &pairs, ps.paths())),
            Routing::Infeasible => prop_assert!(!naive_feasible(&g, &pairs)),
            Routing::BudgetExceeded => prop_assert!(false, "budget"),
        }
        prop_assert_eq!(sol.routing.is_feasible(), naive_feasible(&g, &pairs));
    }

    #[test]
    fn planar_graphs_are_sparse_and_k5_free(seed in any::<u64>(), n in 1usize..13) {
        let g = random_planar_graph(n, 0.8, &mut rng_from_seed(seed));
        prop_assert!(planar(&g));
        prop_assert!(!has_clique_minor(&g, 5).unwrap());
        let mut rng = rng_from_seed(seed ^ 7);
        let x = VertexSet::new((0..n).filter(|_| rng.gen_bool(0.5))).unwrap();
        if x.len() >= 3 {
            prop_assert!(induced_edge_count(&g, &x).unwrap() + 6 <= 3 * x.len());
        }
    }

    #[test]
    fn contraction_keeps_planarity(seed in any::<u64>(), n in 2usize..12, m in 1usize..25) {
        let mg = random_planar_multigraph(n, m, seed).unwrap();
        let mut used = vec![false; n];
        let mut matching = Vec::new();
        for e in mg.multiedges() {
            if !used[e.u] && !used[e.v] {
                used[e.u] = true;
                used[e.v] = true;
                matching.push(e.id);
            }
        }
        let c = contract_matching(&mg, &matching).unwrap();
        prop_assert_eq!(c.multiedge_count(), m - matching.len());
        prop_assert_eq!(c.n(), n - matching.len());
        prop_assert!(planar(&c.underlying_simple()));
    }

    #[test]
    fn hub_multigraph_of_bipartite_planar_is_planar(seed in any::<u64>()) {
        let (g, a, b) = random_bipartite_planar(30, &mut rng_from_seed(seed));
        let y = VertexSet::new(a.iter().copied().filter(|&v| g.degree_into(v, &b) == 2)).unwrap();
        let h = hub_multigraph(&g, &y, &b).unwrap();
        prop_assert_eq!(h.multigraph.multiedge_count(), y.len());
        prop_assert!(planar(&h.multigraph.underlying_simple()));
        prop_assert!(lemma5_check(&g, &a, &b).unwrap().all_hold());
    }

    #[test]
    fn weak_reachability_is_symmetric(seed in any::<u64>(), n in 2usize..14, radius in 0usize..5) {
        let g = random_planar_graph(n, 0.7, &mut rng_from_seed(seed));
        let mut rng = rng_from_seed(seed ^ 3);
        let a = VertexSet::new((0..n).filter(|_| rng.gen_bool(0.6))).unwrap();
        let b = a.complement(n);
        let reach: Vec<_> = a.iter().map(|&x| weak_reachability(&g, &a, &b, x, radius).unwrap()).collect();
        for w in &reach {
            prop_assert!(w.verify(&g));
            for &y in w.reachable.iter() {
                let back = reach.iter().find(|r| r.x == y).unwrap();
                prop_assert!(back.reachable.contains(w.x));
            }
        }
        let h = build_auxiliary_pairing_graph(&g, &a, &a, radius).unwrap();
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in a.iter().enumerate() {
                if i != j {
                    prop_assert_eq!(h.has_edge(i, j), !reach[i].close.contains(y));
                    prop_assert_eq!(h.has_edge(i, j), !reach[j].close.contains(x));
                }
            }
        }
    }

    #[test]
    fn dirac_graphs_have_perfect_matchings(seed in any::<u64>(), half in 1usize..16) {
        let g = random_dirac_graph(2 * half, 0.1, &mut rng_from_seed(seed));
        let m = extract_matching(&g).unwrap();
        prop_assert_eq!(m.len(), half);
    }
}
