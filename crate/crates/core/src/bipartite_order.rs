//! Connected orderings that greedily colour a bipartite graph with `Δ` colours.
//!
//! Given a `k`-edge colouring `α`, vertex `u` *strongly reaches* a neighbour
//! `w` when `α(uw) < k` or `deg(u) = k`; *reach* is the transitive closure.
//! Kempe changes grow the set reached from the root until it is everything.
//! The graph then splits into the components `C_1, …, C_ℓ` left after
//! deleting colour `k`: each is ordered recursively with `k − 1` colours, the
//! components are stitched together along strong-reach edges (which greedily
//! receive colour `k`), and the remaining colour-`k` edges are appended last.

use std::collections::VecDeque;

use thiserror::Error;

use crate::chromatic::{bipartite_colour, ChromaticError};
use crate::colouring::{ChainSeed, Colour, EdgeColouring};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::greedy::{greedy_colour, ConnectedOrdering, GreedyResult, OrderingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReachError {
    #[error("the root already reaches every vertex")]
    AlreadySaturated,
    #[error("colouring must be total, proper and use colours in [{0}]")]
    BadColouring(Colour),
    #[error("vertex {0} does not exist")]
    BadStart(Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error(transparent)]
    NotBipartite(#[from] ChromaticError),
    #[error("invariant violated: the (x,y)-chain at {s_prime} reaches {s}, which needs an odd cycle")]
    OddCycle { s: Vertex, s_prime: Vertex },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Ordering(#[from] OrderingError),
}

/// The set reached from `root` in `colouring` at level `level`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachState {
    pub root: Vertex,
    pub level: Colour,
    pub colouring: EdgeColouring,
    pub reachable: Vec<bool>,
}

impl ReachState {
    pub fn reached(&self) -> Vec<Vertex> {
        (0..self.reachable.len()).filter(|&v| self.reachable[v]).collect()
    }

    pub fn unreached(&self) -> Vec<Vertex> {
        (0..self.reachable.len()).filter(|&v| !self.reachable[v]).collect()
    }

    pub fn size(&self) -> usize {
        self.reachable.iter().filter(|&&r| r).count()
    }

    pub fn is_saturated(&self) -> bool {
        self.reachable.iter().all(|&r| r)
    }
}

/// Whether `from` strongly reaches the other end of `e` at level `k`.
pub fn strongly_reaches(g: &Graph, alpha: &EdgeColouring, from: Vertex, e: EdgeId, k: Colour) -> bool {
    alpha.colour(e) < k || g.degree(from) == k
}

pub fn strong_reach_closure(g: &Graph, alpha: &EdgeColouring, v: Vertex, k: Colour) -> ReachState {
    let mut reachable = vec![false; g.vertex_count()];
    reachable[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &(w, e) in g.incident(x) {
            if !reachable[w] && strongly_reaches(g, alpha, x, e, k) {
                reachable[w] = true;
                queue.push_back(w);
            }
        }
    }
    ReachState {
        root: v,
        level: k,
        colouring: alpha.clone(),
        reachable,
    }
}

fn check_colouring(g: &Graph, alpha: &EdgeColouring, k: Colour) -> Result<(), ReachError> {
    if alpha.len() != g.edge_count() || !alpha.is_total() || !alpha.is_proper(g) || alpha.max_colour() > k
    {
        return Err(ReachError::BadColouring(k));
    }
    Ok(())
}

/// One round of Kempe changes that strictly enlarges the reached set.
///
/// `g` must be connected and bipartite; the state's colouring uses `[k]`.
pub fn improve_reachability(g: &Graph, state: &ReachState) -> Result<EdgeColouring, ReachError> {
    let k = state.level;
    let in_a = &state.reachable;
    if state.is_saturated() {
        return Err(ReachError::AlreadySaturated);
    }
    let mut alpha = state.colouring.clone();

    let (su, s, u) = (0..g.edge_count())
        .find_map(|e| {
            let (a, b) = g.endpoints(e);
            match (in_a[a], in_a[b]) {
                (true, false) => Some((e, a, b)),
                (false, true) => Some((e, b, a)),
                _ => None,
            }
        })
        .ok_or(ReachError::Disconnected)?;
    if alpha.colour(su) != k || g.degree(s) >= k {
        return Err(ReachError::Invariant(format!(
            "edge {su} leaves the reached set but is strongly reachable"
        )));
    }
    let x = alpha
        .smallest_missing(g, s, k - 1)
        .ok_or_else(|| ReachError::Invariant(format!("vertex {s} of degree < {k} misses no colour below {k}")))?;

    let switch_su_to_x = |alpha: &mut EdgeColouring| -> Result<(), ReachError> {
        let chain = alpha.kempe_chain(g, ChainSeed::Edge(su), x, k).expect("su is coloured k");
        if chain.len() != 1 {
            return Err(ReachError::Invariant(format!("({x},{k})-chain of {su} is not a single edge")));
        }
        alpha.switch_in_place(&chain).expect("fresh chain");
        Ok(())
    };

    if g.degree(u) < k {
        if alpha.has_colour_at(g, u, x) {
            let y = alpha
                .smallest_missing(g, u, k)
                .expect("degree below k leaves a colour free");
            let chain = alpha.chain_at(g, u, x, y);
            if chain.vertices.iter().any(|&w| in_a[w]) {
                return Err(ReachError::Invariant(format!("({x},{y})-chain at {u} enters the reached set")));
            }
            alpha.switch_in_place(&chain).expect("fresh chain");
        }
        switch_su_to_x(&mut alpha)?;
    } else {
        let e = alpha.edge_with(g, u, x).expect("vertex of degree k carries every colour");
        let mut path = alpha.kempe_chain(g, ChainSeed::Edge(e), x, k).expect("e is coloured x");
        if path.vertices[0] != s {
            path.vertices.reverse();
            path.edges.reverse();
        }
        if path.vertices[0] != s {
            return Err(ReachError::Invariant(format!("({x},{k})-path through {su} does not end at {s}")));
        }
        match path.vertices.iter().skip(1).position(|&w| in_a[w]) {
            None => alpha.switch_in_place(&path).expect("fresh chain"),
            Some(offset) => {
                let s_prime = path.vertices[offset + 1];
                if alpha.has_colour_at(g, s_prime, x) {
                    let y = alpha.smallest_missing(g, s_prime, k - 1).ok_or_else(|| {
                        ReachError::Invariant(format!("{s_prime} has an edge to the unreached side but misses nothing"))
                    })?;
                    let side = alpha.chain_at(g, s_prime, x, y);
                    if side.contains_vertex(s) {
                        return Err(ReachError::OddCycle { s, s_prime });
                    }
                    if side.vertices.iter().any(|&w| !in_a[w]) {
                        return Err(ReachError::Invariant(format!(
                            "({x},{y})-chain at {s_prime} leaves the reached set"
                        )));
                    }
                    alpha.switch_in_place(&side).expect("fresh chain");
                }
                let segment = alpha.kempe_chain(g, ChainSeed::Edge(su), x, k).expect("su is coloured k");
                let (p, q) = segment.ends().expect("chains through a vertex missing x are paths");
                if !((p == s && q == s_prime) || (p == s_prime && q == s)) {
                    return Err(ReachError::Invariant(format!(
                        "segment from {s} does not stop at {s_prime}"
                    )));
                }
                alpha.switch_in_place(&segment).expect("fresh chain");
            }
        }
    }

    let next = strong_reach_closure(g, &alpha, state.root, k);
    if !(next.size() > state.size() && in_a.iter().zip(&next.reachable).all(|(&a, &b)| !a || b)) {
        return Err(ReachError::Invariant("reached set did not strictly grow".into()));
    }
    Ok(alpha)
}

/// A colouring in which the root reaches every vertex, with the number of
/// improvement rounds it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub colouring: EdgeColouring,
    pub rounds: usize,
}

pub fn saturate_reachability(
    g: &Graph,
    alpha: &EdgeColouring,
    v: Vertex,
    k: Colour,
) -> Result<Saturation, ReachError> {
    if v >= g.vertex_count() {
        return Err(ReachError::BadStart(v));
    }
    check_colouring(g, alpha, k)?;
    if !g.is_connected() {
        return Err(ReachError::Disconnected);
    }
    let mut state = strong_reach_closure(g, alpha, v, k);
    let mut rounds = 0;
    while !state.is_saturated() {
        let next = improve_reachability(g, &state)?;
        debug_assert!(next.is_proper(g) && next.max_colour() <= k);
        rounds += 1;
        state = strong_reach_closure(g, &next, v, k);
    }
    if rounds > g.vertex_count() {
        return Err(ReachError::Invariant(format!("{rounds} rounds on {} vertices", g.vertex_count())));
    }
    Ok(Saturation {
        colouring: state.colouring,
        rounds,
    })
}

/// Output of [`connected_optimal_ordering`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteOrder {
    pub ordering: ConnectedOrdering,
    pub greedy: GreedyResult,
    /// `(rounds, vertex count)` of every saturation run, outermost first.
    pub saturations: Vec<(usize, usize)>,
}

/// Connected ordering starting at `v` whose greedy colouring uses `Δ(g)` colours.
pub fn connected_optimal_ordering(g: &Graph, v: Vertex) -> Result<BipartiteOrder, ReachError> {
    if v >= g.vertex_count() {
        return Err(ReachError::BadStart(v));
    }
    if !g.is_connected() {
        return Err(ReachError::Disconnected);
    }
    let alpha = bipartite_colour(g)?;
    let k = g.max_degree();
    let identity: Vec<EdgeId> = (0..g.edge_count()).collect();
    let mut ctx = Assembly::default();
    let order = order_level(g, &alpha, v, k, &identity, &mut ctx)?;

    let greedy = greedy_colour(g, &order)?;
    if greedy.colours_used != k {
        return Err(ReachError::Invariant(format!(
            "greedy used {} colours, expected {k}",
            greedy.colours_used
        )));
    }
    if let Some(&first) = order.first() {
        let (a, b) = g.endpoints(first);
        if a != v && b != v {
            return Err(ReachError::Invariant(format!("ordering does not start at {v}")));
        }
    }
    for (edges, bound) in &ctx.component_bounds {
        if let Some(&e) = edges.iter().find(|&&e| greedy.colouring.colour(e) > *bound) {
            return Err(ReachError::Invariant(format!(
                "component edge {e} coloured {} above its level {bound}",
                greedy.colouring.colour(e)
            )));
        }
    }
    Ok(BipartiteOrder {
        ordering: ConnectedOrdering::new(g, order)?,
        greedy,
        saturations: ctx.saturations,
    })
}

#[derive(Default)]
struct Assembly {
    saturations: Vec<(usize, usize)>,
    // internal edges (top-level ids) of every component and their colour bound
    component_bounds: Vec<(Vec<EdgeId>, Colour)>,
}

/// Orders the edges of the connected graph `g` (a piece of the original,
/// whose edge `i` is `to_top[i]` there) starting at `v`, given a proper
/// colouring with colours in `[k]`. Returns local edge ids.
fn order_level(
    g: &Graph,
    alpha: &EdgeColouring,
    v: Vertex,
    k: Colour,
    to_top: &[EdgeId],
    ctx: &mut Assembly,
) -> Result<Vec<EdgeId>, ReachError> {
    if g.edge_count() == 0 {
        return Ok(Vec::new());
    }
    if k == 1 {
        if g.edge_count() != 1 {
            return Err(ReachError::Invariant("a 1-edge-colourable connected graph is one edge".into()));
        }
        return Ok(vec![0]);
    }

    let sat = saturate_reachability(g, alpha, v, k)?;
    ctx.saturations.push((sat.rounds, g.vertex_count()));
    let alpha = sat.colouring;

    let below: Vec<Colour> = (1..k).collect();
    let comps = alpha.components_keeping(g, &below);
    let mut comp_of = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &w in c {
            comp_of[w] = i;
        }
    }

    // discovery order over components along strong-reach edges of colour k
    let mut visited = vec![false; comps.len()];
    let mut sequence: Vec<(usize, Vertex, Option<EdgeId>)> = vec![(comp_of[v], v, None)];
    visited[comp_of[v]] = true;
    let mut head = 0;
    while head < sequence.len() {
        let (ci, _, _) = sequence[head];
        head += 1;
        for &s in &comps[ci] {
            for &(w, e) in g.incident(s) {
                if alpha.colour(e) == k && g.degree(s) == k && !visited[comp_of[w]] {
                    visited[comp_of[w]] = true;
                    sequence.push((comp_of[w], w, Some(e)));
                }
            }
        }
    }
    if visited.iter().any(|&seen| !seen) {
        return Err(ReachError::Invariant("root reaches everything but a component was not discovered".into()));
    }

    let mut order = Vec::with_capacity(g.edge_count());
    let mut emitted = vec![false; g.edge_count()];
    for &(ci, entry, stitch) in &sequence {
        if let Some(e) = stitch {
            emitted[e] = true;
            order.push(e);
        }
        let members = &comps[ci];
        let internal: Vec<EdgeId> = (0..g.edge_count())
            .filter(|&e| {
                let (a, b) = g.endpoints(e);
                alpha.colour(e) < k && comp_of[a] == ci && comp_of[b] == ci
            })
            .collect();
        if internal.is_empty() {
            continue;
        }
        let (sub, back) = g.subgraph(members, &internal);
        let sub_alpha = EdgeColouring::from_total(back.iter().map(|&e| alpha.colour(e)).collect())
            .expect("restriction of a proper colouring");
        let local_entry = members.binary_search(&entry).expect("entry lies in its component");
        let sub_top: Vec<EdgeId> = back.iter().map(|&e| to_top[e]).collect();
        ctx.component_bounds.push((sub_top.clone(), k - 1));
        let sub_order = order_level(&sub, &sub_alpha, local_entry, k - 1, &sub_top, ctx)?;
        for le in sub_order {
            let e = back[le];
            emitted[e] = true;
            order.push(e);
        }
    }
    // everything left is coloured k; colour k stays free for all of them
    order.extend((0..g.edge_count()).filter(|&e| !emitted[e]));
    Ok(order)
}
