//! Seeded random graph families used by the test suites and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

/// Random connected bipartite graph with at most `max_edges` edges.
///
/// A random spanning tree across the two sides is grown first, then random
/// cross edges are added until the edge target is met or the sides are full.
pub fn connected_bipartite<R: Rng>(rng: &mut R, max_edges: usize) -> Graph {
    assert!(max_edges >= 1);
    let max_vertices = (max_edges + 1).min(24);
    let n = rng.gen_range(2..=max_vertices);
    let left = rng.gen_range(1..n);
    let side = |v: Vertex| v < left;

    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    // make the first two vertices lie on opposite sides
    let first_other = order.iter().position(|&v| side(v) != side(order[0])).unwrap();
    order.swap(1, first_other);

    let mut edges = Vec::new();
    let mut present = std::collections::HashSet::new();
    for i in 1..n {
        let v = order[i];
        let candidates: Vec<Vertex> = order[..i].iter().copied().filter(|&u| side(u) != side(v)).collect();
        let u = *candidates.choose(rng).expect("order[0] and order[1] lie on opposite sides");
        edges.push((u, v));
        present.insert((u.min(v), u.max(v)));
    }

    let capacity = left * (n - left);
    let target = rng.gen_range(edges.len()..=max_edges.max(edges.len())).min(capacity);
    while edges.len() < target {
        let u = rng.gen_range(0..left);
        let v = rng.gen_range(left..n);
        if present.insert((u, v)) {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).expect("generator keeps the graph simple")
}

/// Random connected graph of maximum degree ≤ 3 with at most `max_edges` edges.
pub fn connected_subcubic<R: Rng>(rng: &mut R, max_edges: usize) -> Graph {
    connected_bounded_degree(rng, max_edges, 3)
}

/// Random connected graph with maximum degree ≤ `max_degree`.
pub fn connected_bounded_degree<R: Rng>(rng: &mut R, max_edges: usize, max_degree: usize) -> Graph {
    assert!(max_edges >= 1 && max_degree >= 2);
    let max_vertices = (max_edges + 1).min(40);
    let n = rng.gen_range(2..=max_vertices);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    let mut present = std::collections::HashSet::new();
    for v in 1..n {
        let candidates: Vec<Vertex> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        let u = *candidates.choose(rng).expect("a tree of bounded degree ≥ 2 always has a free vertex");
        edges.push((u, v));
        present.insert((u, v));
        degree[u] += 1;
        degree[v] += 1;
    }
    let target = rng.gen_range(edges.len()..=max_edges.max(edges.len()));
    let mut attempts = 0;
    while edges.len() < target && attempts < 50 * max_edges {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || degree[u] >= max_degree || degree[v] >= max_degree {
            continue;
        }
        if present.insert((u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    Graph::build(n, &edges).expect("generator keeps the graph simple")
}

/// Arbitrary random simple graph on `n` vertices with edge probability `p`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}
