use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use greedy_edge::bipartite_order::connected_optimal_ordering;
use greedy_edge::chromatic::{bipartite_colour, exact_chromatic_index, vizing_colour};
use greedy_edge::colouring::ChainSeed;
use greedy_edge::generate::{connected_bipartite, connected_bounded_degree, connected_subcubic};
use greedy_edge::greedy::{greedy_colour, is_connected_ordering};
use greedy_edge::io::{graph_from_json, graph_to_json};
use greedy_edge::oracle::{connected_chromatic_index, enumerate_proper_colourings, CgcQuery};
use greedy_edge::subcubic_order::subcubic_ordering;
use greedy_edge::{Budget, Decided, EdgeColouring, Graph};

const BUDGET: Budget = Budget(10_000_000);

fn graph(max_edges: usize, max_degree: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 1..=max_edges)
        .prop_map(move |(seed, m)| connected_bounded_degree(&mut ChaCha8Rng::seed_from_u64(seed), m, max_degree))
}

/// A uniformly random frontier edge at every step.
fn random_connected_ordering(g: &Graph, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut touched = vec![false; g.vertex_count()];
    let mut used = vec![false; g.edge_count()];
    let first = rng.gen_range(0..g.edge_count());
    let mut order = Vec::with_capacity(g.edge_count());
    let mut take = |e: usize, order: &mut Vec<usize>, touched: &mut Vec<bool>| {
        let (a, b) = g.endpoints(e);
        used[e] = true;
        touched[a] = true;
        touched[b] = true;
        order.push(e);
    };
    take(first, &mut order, &mut touched);
    while order.len() < g.edge_count() {
        let frontier: Vec<usize> = (0..g.edge_count())
            .filter(|&e| !order.contains(&e))
            .filter(|&e| {
                let (a, b) = g.endpoints(e);
                touched[a] || touched[b]
            })
            .collect();
        let e = frontier[rng.gen_range(0..frontier.len())];
        take(e, &mut order, &mut touched);
    }
    order
}

fn brute_force_count(g: &Graph, k: usize) -> u64 {
    fn go(g: &Graph, k: usize, e: usize, colours: &mut Vec<usize>) -> u64 {
        if e == g.edge_count() {
            return 1;
        }
        let (a, b) = g.endpoints(e);
        let mut total = 0;
        for c in 1..=k {
            let clash = (0..e).any(|f| {
                let (p, q) = g.endpoints(f);
                colours[f] == c && (p == a || p == b || q == a || q == b)
            });
            if !clash {
                colours[e] = c;
                total += go(g, k, e + 1, colours);
                colours[e] = 0;
            }
        }
        total
    }
    go(g, k, 0, &mut vec![0; g.edge_count()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn greedy_on_connected_orderings_is_proper(g in graph(25, 5), seed in any::<u64>()) {
        let order = random_connected_ordering(&g, seed);
        prop_assert!(is_connected_ordering(&g, &order));
        let r = greedy_colour(&g, &order).unwrap();
        prop_assert!(r.colouring.is_total() && r.colouring.is_proper(&g));
        prop_assert!(r.colours_used < 2 * g.max_degree());
        prop_assert!(r.colours_used >= g.max_degree());
    }

    #[test]
    fn vizing_and_konig_bounds(g in graph(30, 6)) {
        let alpha = vizing_colour(&g);
        prop_assert!(alpha.is_total() && alpha.is_proper(&g));
        prop_assert!(alpha.max_colour() <= g.max_degree() + 1);
        if g.bipartition().is_bipartite() {
            let beta = bipartite_colour(&g).unwrap();
            prop_assert!(beta.is_proper(&g));
            prop_assert_eq!(beta.max_colour(), g.max_degree());
        }
    }

    #[test]
    fn kempe_switch_is_an_involution(g in graph(25, 5), pick in any::<(usize, usize)>()) {
        let alpha = vizing_colour(&g);
        let palette = alpha.max_colour() + 1;
        let e = pick.0 % g.edge_count();
        let i = alpha.colour(e);
        let j = (1..=palette).filter(|&c| c != i).nth(pick.1 % (palette - 1)).unwrap();
        let chain = alpha.kempe_chain(&g, ChainSeed::Edge(e), i, j).unwrap();
        let once = alpha.kempe_switch(&chain).unwrap();
        prop_assert!(once.is_proper(&g));
        prop_assert_eq!(once.kempe_switch(&chain).unwrap(), alpha.clone());
        let chain_edges = |f| {
            let mut edges = alpha.kempe_chain(&g, ChainSeed::Edge(f), i, j).unwrap().edges;
            edges.sort_unstable();
            edges
        };
        for f in (0..g.edge_count()).filter(|&f| alpha.colour(f) == i || alpha.colour(f) == j) {
            let own = chain_edges(f);
            prop_assert!(own.contains(&f));
            for &h in &own {
                prop_assert_eq!(&chain_edges(h), &own);
            }
        }
    }

    #[test]
    fn bipartite_orderings_use_max_degree(seed in any::<u64>(), start in any::<usize>()) {
        let g = connected_bipartite(&mut ChaCha8Rng::seed_from_u64(seed), 30);
        let v = start % g.vertex_count();
        let r = connected_optimal_ordering(&g, v).unwrap();
        prop_assert_eq!(r.greedy.colours_used, g.max_degree());
        prop_assert!(g.incident(v).iter().any(|&(_, e)| e == r.ordering.edges()[0]));
    }

    #[test]
    fn subcubic_orderings_use_at_most_four(seed in any::<u64>(), start in any::<usize>()) {
        let g = connected_subcubic(&mut ChaCha8Rng::seed_from_u64(seed), 40);
        let v = start % g.vertex_count();
        let r = subcubic_ordering(&g, v).unwrap();
        prop_assert!(r.greedy.colours_used <= 4);
        prop_assert_eq!(&r.greedy.colouring, &r.colouring);
    }

    #[test]
    fn graph_json_round_trips(g in graph(30, 6)) {
        prop_assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn connected_index_within_one_of_chromatic_index(g in graph(9, 4)) {
        let chi = exact_chromatic_index(&g, BUDGET).expect("small graph");
        let (chi_c, w) = connected_chromatic_index(&g, BUDGET).unwrap().expect("small graph");
        prop_assert!(chi <= chi_c && chi_c <= chi + 1);
        let replay = greedy_colour(&g, w.ordering.edges()).unwrap();
        prop_assert_eq!(replay.colouring, w.colouring);
        prop_assert_eq!(replay.colours_used, chi_c);
    }

    #[test]
    fn memo_does_not_change_answers(g in graph(10, 4), pick in any::<(usize, usize)>()) {
        let k = exact_chromatic_index(&g, BUDGET).expect("small graph");
        let e = pick.0 % g.edge_count();
        let c = 1 + pick.1 % k;
        let ask = |memo| match CgcQuery::new(k).start(e).precolour(c).budget(BUDGET).memo(memo).run(&g).unwrap() {
            Decided::Value(w) => w.is_some(),
            Decided::Indeterminate { .. } => panic!("budget exhausted on a 10-edge graph"),
        };
        prop_assert_eq!(ask(true), ask(false));
    }

    #[test]
    fn enumeration_matches_brute_force(g in graph(7, 3), k in 2usize..=4) {
        let mut seen = Vec::new();
        let count = enumerate_proper_colourings(&g, k, BUDGET, |a: &EdgeColouring| seen.push(a.clone()))
            .expect("small graph");
        prop_assert_eq!(count, brute_force_count(&g, k));
        prop_assert!(seen.iter().all(|a| a.is_proper(&g) && a.max_colour() <= k));
        seen.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
        seen.dedup();
        prop_assert_eq!(seen.len() as u64, count);
    }
}
