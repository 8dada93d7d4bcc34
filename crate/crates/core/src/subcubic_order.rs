//! `Δ`-reach in `(Δ + 1)`-edge colourings and connected orderings with at
//! most four colours on graphs of maximum degree 3.
//!
//! A vertex `a` may step to a neighbour `b` at level `i` when `α(ab) < i` or
//! `a` carries every colour `1, …, α(ab)`. Kempe changes make the root reach
//! everything at level `Δ`; for subcubic graphs the `(1,2)`-components are
//! then chained together along colour-3 edges, after which the colour-3 and
//! colour-4 edges are appended.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bipartite_order::Saturation;
use crate::chromatic::vizing_colour;
use crate::colouring::{component_index, ChainSeed, Colour, EdgeColouring, KempeChain};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::greedy::{greedy_colour, vertex_major_order, ConnectedOrdering, GreedyResult, OrderingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubcubicError {
    #[error("maximum degree {0} exceeds 3")]
    DegreeTooLarge(usize),
    #[error("colouring must be total, proper and use colours in [{0}]")]
    BadColouring(Colour),
    #[error("vertex {0} does not exist")]
    BadStart(Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Ordering(#[from] OrderingError),
}

fn colour_mask(g: &Graph, alpha: &EdgeColouring, a: Vertex) -> u64 {
    g.incident(a)
        .iter()
        .filter_map(|&(_, e)| alpha.get(e))
        .fold(0, |m, c| m | (1 << c))
}

fn carries_up_to(mask: u64, c: Colour) -> bool {
    let want = (1u64 << (c + 1)) - 2;
    mask & want == want
}

/// Membership vector of the vertices that `v` can `i`-reach.
pub fn i_reach_closure(g: &Graph, alpha: &EdgeColouring, v: Vertex, i: Colour) -> Vec<bool> {
    let masks: Vec<u64> = g.vertices().map(|a| colour_mask(g, alpha, a)).collect();
    let mut reached = vec![false; g.vertex_count()];
    reached[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(a) = queue.pop_front() {
        for &(b, e) in g.incident(a) {
            let c = alpha.colour(e);
            if !reached[b] && (c < i || carries_up_to(masks[a], c)) {
                reached[b] = true;
                queue.push_back(b);
            }
        }
    }
    reached
}

/// A `(Δ + 1)`-edge colouring in which `v` `Δ`-reaches every vertex.
pub fn saturate_delta_reach(g: &Graph, alpha: &EdgeColouring, v: Vertex) -> Result<Saturation, SubcubicError> {
    saturate_at_level(g, alpha, v, g.max_degree().max(1))
}

/// Saturation at level `k ≥ Δ(g)` with palette `[k + 1]`.
fn saturate_at_level(g: &Graph, alpha: &EdgeColouring, v: Vertex, k: Colour) -> Result<Saturation, SubcubicError> {
    if v >= g.vertex_count() {
        return Err(SubcubicError::BadStart(v));
    }
    if alpha.len() != g.edge_count() || !alpha.is_total() || !alpha.is_proper(g) || alpha.max_colour() > k + 1 {
        return Err(SubcubicError::BadColouring(k + 1));
    }
    if !g.is_connected() {
        return Err(SubcubicError::Disconnected);
    }
    let mut alpha = alpha.clone();
    let mut reached = i_reach_closure(g, &alpha, v, k);
    let mut rounds = 0;
    while reached.iter().any(|&r| !r) {
        let next = improve_delta_reach(g, &alpha, &reached, k)?;
        let grown = i_reach_closure(g, &next, v, k);
        let size = |r: &[bool]| r.iter().filter(|&&x| x).count();
        if !(next.is_proper(g) && next.max_colour() <= k + 1)
            || size(&grown) <= size(&reached)
            || reached.iter().zip(&grown).any(|(&a, &b)| a && !b)
        {
            return Err(SubcubicError::Invariant("reached set did not strictly grow".into()));
        }
        alpha = next;
        reached = grown;
        rounds += 1;
    }
    if rounds > g.vertex_count() {
        return Err(SubcubicError::Invariant(format!("{rounds} rounds on {} vertices", g.vertex_count())));
    }
    Ok(Saturation { colouring: alpha, rounds })
}

fn invariant(msg: impl Into<String>) -> SubcubicError {
    SubcubicError::Invariant(msg.into())
}

struct Step<'a> {
    g: &'a Graph,
    in_a: &'a [bool],
    k: Colour,
}

impl Step<'_> {
    fn missing_below(&self, alpha: &EdgeColouring, v: Vertex, top: Colour) -> Option<Colour> {
        alpha.smallest_missing(self.g, v, top)
    }

    fn switch_within(&self, alpha: &mut EdgeColouring, chain: &KempeChain, side: bool) -> Result<(), SubcubicError> {
        if chain.vertices.iter().any(|&w| self.in_a[w] != side) {
            let (i, j) = chain.colours;
            return Err(invariant(format!("({i},{j})-chain crosses between the reached and unreached sides")));
        }
        alpha.switch_in_place(chain).expect("fresh chain");
        Ok(())
    }

    /// Make `a` miss `x` by an `(x, y)`-switch at `a`, where `a` misses `y`.
    fn free_at(&self, alpha: &mut EdgeColouring, a: Vertex, x: Colour, y: Colour) -> Result<(), SubcubicError> {
        if alpha.has_colour_at(self.g, a, x) {
            let chain = alpha.chain_at(self.g, a, x, y);
            self.switch_within(alpha, &chain, self.in_a[a])?;
        }
        Ok(())
    }

    /// `C`: unreached ends of reached–unreached edges coloured `k`.
    fn c_set(&self, alpha: &EdgeColouring) -> Vec<bool> {
        let mut c = vec![false; self.g.vertex_count()];
        for (e, &(p, q)) in self.g.edges().iter().enumerate() {
            if alpha.colour(e) == self.k && self.in_a[p] != self.in_a[q] {
                c[if self.in_a[p] { q } else { p }] = true;
            }
        }
        c
    }

    /// Smallest-id colour-`k` edge from `c` into the reached side.
    fn anchor(&self, alpha: &EdgeColouring, c: Vertex) -> (EdgeId, Vertex) {
        self.g
            .incident(c)
            .iter()
            .filter(|&&(a, e)| self.in_a[a] && alpha.colour(e) == self.k)
            .map(|&(a, e)| (e, a))
            .min()
            .expect("vertex of C has a colour-k edge into A")
    }

    fn case_one(&self, alpha: &mut EdgeColouring) -> Result<(), SubcubicError> {
        let g = self.g;
        let (ab, a, b) = (0..g.edge_count())
            .find_map(|e| {
                let (p, q) = g.endpoints(e);
                match (self.in_a[p], self.in_a[q]) {
                    (true, false) => Some((e, p, q)),
                    (false, true) => Some((e, q, p)),
                    _ => None,
                }
            })
            .ok_or(SubcubicError::Disconnected)?;
        if alpha.colour(ab) != self.k + 1 {
            return Err(invariant(format!("edge {ab} leaves the reached set with colour {}", alpha.colour(ab))));
        }
        let x = self.missing_below(alpha, a, self.k).ok_or_else(|| invariant("degree bound exceeded"))?;
        if alpha.has_colour_at(g, b, x) {
            let y = self.missing_below(alpha, b, self.k).ok_or_else(|| invariant("degree bound exceeded"))?;
            let chain = alpha.chain_at(g, b, x, y);
            self.switch_within(alpha, &chain, false)?;
        }
        alpha.set(ab, Some(x));
        Ok(())
    }

    fn case_two(&self, alpha: &mut EdgeColouring) -> Result<bool, SubcubicError> {
        let g = self.g;
        let k = self.k;
        for x in 1..k {
            for u in g.vertices().filter(|&u| !self.in_a[u]) {
                let mut chain = alpha.chain_at(g, u, x, k);
                let Some((p, q)) = chain.ends() else { continue };
                if chain.is_empty() || (p != u && q != u) {
                    continue;
                }
                if p != u {
                    chain.vertices.reverse();
                    chain.edges.reverse();
                }
                let Some(t) = chain.vertices.iter().position(|&w| self.in_a[w]) else { continue };
                let (a, ab) = (chain.vertices[t], chain.edges[t - 1]);
                if alpha.colour(ab) != k {
                    return Err(invariant(format!("edge {ab} leaves the reached set below level {k}")));
                }
                let y = self
                    .missing_below(alpha, a, k - 1)
                    .ok_or_else(|| invariant(format!("{a} steps over {ab} but was not followed")))?;
                self.free_at(alpha, a, x, y)?;
                let segment = alpha.kempe_chain(g, ChainSeed::Edge(ab), x, k).expect("ab is coloured k");
                match segment.ends() {
                    Some((s, t)) if (s, t) == (u, a) || (s, t) == (a, u) => {}
                    _ => return Err(invariant(format!("segment through {ab} does not run from {u} to {a}"))),
                }
                alpha.switch_in_place(&segment).expect("fresh chain");
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Case (3) at a given `c ∈ C` missing `x < k`.
    fn case_three_at(&self, alpha: &mut EdgeColouring, c: Vertex, x: Colour) -> Result<(), SubcubicError> {
        let (ac, a) = self.anchor(alpha, c);
        let y = self
            .missing_below(alpha, a, self.k - 1)
            .ok_or_else(|| invariant(format!("{a} steps over {ac} but was not followed")))?;
        if x != y && alpha.has_colour_at(self.g, c, y) {
            let chain = alpha.chain_at(self.g, c, x, y);
            self.switch_within(alpha, &chain, false)?;
        }
        alpha.set(ac, Some(y));
        Ok(())
    }

    fn case_three(&self, alpha: &mut EdgeColouring, c_set: &[bool]) -> Result<bool, SubcubicError> {
        for c in self.g.vertices().filter(|&c| c_set[c]) {
            if let Some(x) = self.missing_below(alpha, c, self.k - 1) {
                self.case_three_at(alpha, c, x)?;
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn case_four(&self, alpha: &mut EdgeColouring, c_set: &[bool]) -> Result<bool, SubcubicError> {
        let g = self.g;
        let k = self.k;
        for d in g.vertices().filter(|&d| !self.in_a[d]) {
            let Some((cd, c)) = g
                .incident(d)
                .iter()
                .filter(|&&(c, _)| c_set[c])
                .map(|&(c, e)| (e, c))
                .min()
            else {
                continue;
            };
            let misses_top = !alpha.has_colour_at(g, d, k + 1);
            if !misses_top && alpha.has_colour_at(g, d, k) {
                continue;
            }
            if let Some(x) = self.missing_below(alpha, c, k - 1) {
                self.case_three_at(alpha, c, x)?;
                return Ok(true);
            }
            let y = alpha.colour(cd);
            if y >= k {
                return Err(invariant(format!("edge {cd} inside the unreached side has colour {y}")));
            }
            if misses_top {
                alpha.set(cd, Some(k + 1));
                self.case_three_at(alpha, c, y)?;
            } else {
                let (ac, a) = self.anchor(alpha, c);
                let x = self
                    .missing_below(alpha, a, k - 1)
                    .ok_or_else(|| invariant(format!("{a} steps over {ac} but was not followed")))?;
                self.free_at(alpha, a, y, x)?;
                let chain = alpha.kempe_chain(g, ChainSeed::Edge(ac), y, k).expect("ac is coloured k");
                let mut on: Vec<Vertex> = chain.vertices.clone();
                on.sort_unstable();
                let mut want = vec![a, c, d];
                want.sort_unstable();
                if on != want {
                    return Err(invariant(format!("({y},{k})-chain through {ac} is not {a}-{c}-{d}")));
                }
                alpha.switch_in_place(&chain).expect("fresh chain");
            }
            return Ok(true);
        }
        Ok(false)
    }

    fn apply_first_case(&self, alpha: &mut EdgeColouring) -> Result<bool, SubcubicError> {
        let c_set = self.c_set(alpha);
        if c_set.iter().all(|&x| !x) {
            self.case_one(alpha)?;
            return Ok(true);
        }
        Ok(self.case_two(alpha)? || self.case_three(alpha, &c_set)? || self.case_four(alpha, &c_set)?)
    }

    /// The `(k, y)`-switch at a neighbour `d` of `C` that makes case (4) apply.
    fn prepare(&self, alpha: &mut EdgeColouring) -> Result<(), SubcubicError> {
        let g = self.g;
        let k = self.k;
        let (ac, a, c) = (0..g.edge_count())
            .filter(|&e| alpha.colour(e) == k)
            .find_map(|e| {
                let (p, q) = g.endpoints(e);
                match (self.in_a[p], self.in_a[q]) {
                    (true, false) => Some((e, p, q)),
                    (false, true) => Some((e, q, p)),
                    _ => None,
                }
            })
            .ok_or_else(|| invariant("C is empty yet case (1) did not apply"))?;
        let x = self
            .missing_below(alpha, a, k - 1)
            .ok_or_else(|| invariant(format!("{a} steps over {ac} but was not followed")))?;
        let cd = alpha
            .edge_with(g, c, x)
            .ok_or_else(|| invariant(format!("{c} misses {x} yet case (3) did not apply")))?;
        let d = g.other_end(cd, c);
        let y = self
            .missing_below(alpha, d, k - 1)
            .ok_or_else(|| invariant(format!("{d} carries every colour below {k}")))?;
        let chain = alpha.chain_at(g, d, k, y);
        self.switch_within(alpha, &chain, false)
    }
}

/// One round of Kempe changes that strictly enlarges the set `in_a`
/// reached at level `k`.
fn improve_delta_reach(g: &Graph, alpha: &EdgeColouring, in_a: &[bool], k: Colour) -> Result<EdgeColouring, SubcubicError> {
    let step = Step { g, in_a, k };
    let mut next = alpha.clone();
    if step.apply_first_case(&mut next)? {
        return Ok(next);
    }
    step.prepare(&mut next)?;
    if step.apply_first_case(&mut next)? {
        return Ok(next);
    }
    Err(invariant("no case applies after the preparatory switch"))
}

/// Output of [`subcubic_ordering`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcubicOrder {
    pub ordering: ConnectedOrdering,
    pub greedy: GreedyResult,
    /// The 4-edge colouring, saturated from the start vertex, that the
    /// greedy run reproduces exactly.
    pub colouring: EdgeColouring,
    pub saturation_rounds: usize,
    pub replans: usize,
}

const LEVEL: Colour = 3;

/// Lowers each edge to the smallest colour free at both ends until stable.
fn normalise(g: &Graph, alpha: &mut EdgeColouring) {
    loop {
        let mut changed = false;
        for e in 0..g.edge_count() {
            let (a, b) = g.endpoints(e);
            if let Some(c) = (1..alpha.colour(e)).find(|&c| !alpha.has_colour_at(g, a, c) && !alpha.has_colour_at(g, b, c)) {
                alpha.set(e, Some(c));
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// `(entry vertex, jump edge)` of every `(1,2)`-component in visiting order.
fn plan(g: &Graph, alpha: &EdgeColouring, v: Vertex) -> Result<Vec<(Vertex, Option<EdgeId>)>, SubcubicError> {
    let comps = alpha.components_keeping(g, &[1, 2]);
    let comp_of = component_index(g, alpha, &[1, 2]);
    let mut visited = vec![false; comps.len()];
    visited[comp_of[v]] = true;
    let mut seq = vec![(v, None)];
    let mut head = 0;
    while head < seq.len() {
        let ci = comp_of[seq[head].0];
        head += 1;
        let mut jumps: Vec<(EdgeId, Vertex)> = comps[ci]
            .iter()
            .filter(|&&s| carries_up_to(colour_mask(g, alpha, s), LEVEL))
            .flat_map(|&s| g.incident(s).iter().map(move |&(w, e)| (e, w)))
            .filter(|&(e, _)| alpha.colour(e) == LEVEL)
            .collect();
        jumps.sort_unstable();
        for (e, w) in jumps {
            if !visited[comp_of[w]] {
                visited[comp_of[w]] = true;
                seq.push((w, Some(e)));
            }
        }
    }
    if visited.iter().any(|&x| !x) {
        return Err(invariant("a (1,2)-component is not reachable along colour-3 edges"));
    }
    Ok(seq)
}

/// Connected ordering starting at `v` whose greedy colouring uses at most 4
/// colours, for connected `g` of maximum degree ≤ 3.
pub fn subcubic_ordering(g: &Graph, v: Vertex) -> Result<SubcubicOrder, SubcubicError> {
    if v >= g.vertex_count() {
        return Err(SubcubicError::BadStart(v));
    }
    if g.max_degree() > 3 {
        return Err(SubcubicError::DegreeTooLarge(g.max_degree()));
    }
    if !g.is_connected() {
        return Err(SubcubicError::Disconnected);
    }
    let sat = saturate_at_level(g, &vizing_colour(g), v, LEVEL)?;
    let mut alpha = sat.colouring;

    // Normalise, then flip every component entered at a path end coloured 2;
    // repeat until the plan needs no flips. Both moves keep v saturated and
    // the colour sum never increases.
    let mut replans = 0;
    let seq = loop {
        normalise(g, &mut alpha);
        let seq = plan(g, &alpha, v)?;
        let mut flipped = false;
        for &(w, _) in &seq {
            if alpha.has_colour_at(g, w, 2) && !alpha.has_colour_at(g, w, 1) {
                let chain = alpha.chain_at(g, w, 1, 2);
                alpha.switch_in_place(&chain).expect("fresh chain");
                flipped = true;
            }
        }
        if !flipped {
            break seq;
        }
        replans += 1;
        if replans > 4 * g.edge_count() + 4 {
            return Err(invariant("component alignment did not settle"));
        }
    };
    if i_reach_closure(g, &alpha, v, LEVEL).iter().any(|&r| !r) {
        return Err(invariant("alignment lost saturation"));
    }

    let mut order = Vec::with_capacity(g.edge_count());
    let mut emitted = vec![false; g.edge_count()];
    for &(w, jump) in &seq {
        if let Some(e) = jump {
            emitted[e] = true;
            order.push(e);
        }
        for e in vertex_major_order(g, &alpha, w, |e| alpha.colour(e) <= 2) {
            emitted[e] = true;
            order.push(e);
        }
    }
    for c in [3, 4] {
        order.extend((0..g.edge_count()).filter(|&e| !emitted[e] && alpha.colour(e) == c));
    }

    let greedy = greedy_colour(g, &order)?;
    if greedy.colouring != alpha {
        return Err(invariant("greedy run does not reproduce the saturated colouring"));
    }
    if greedy.colours_used > 4 {
        return Err(invariant(format!("greedy used {} colours", greedy.colours_used)));
    }
    Ok(SubcubicOrder {
        ordering: ConnectedOrdering::new(g, order)?,
        greedy,
        colouring: alpha,
        saturation_rounds: sat.rounds,
        replans,
    })
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::bipartite_order::strong_reach_closure;
    use crate::graph::{complete, cycle, hypercube, path, petersen, star};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn total(cs: &[Colour]) -> EdgeColouring {
        EdgeColouring::from_total(cs.to_vec()).unwrap()
    }

    #[test]
    fn closure_on_star() {
        let s = star(3);
        let alpha = total(&[1, 2, 3]);
        assert!(i_reach_closure(&s, &alpha, 0, 3).iter().all(|&r| r));
        let leaf = s.other_end(2, 0);
        let r = i_reach_closure(&s, &alpha, leaf, 3);
        assert_eq!(r.iter().filter(|&&x| x).count(), 1);
        assert!(r[leaf]);
    }

    #[test]
    fn closure_below_level_is_everything() {
        let c6 = cycle(6);
        let alpha = total(&[1, 2, 1, 2, 1, 2]);
        assert!(i_reach_closure(&c6, &alpha, 2, 3).iter().all(|&r| r));
    }

    #[test]
    fn closure_matches_strong_reach_at_top_level() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let g = crate::generate::connected_bipartite(&mut rng, 20);
            let k = g.max_degree();
            let alpha = crate::chromatic::bipartite_colour(&g).unwrap();
            for v in g.vertices() {
                assert_eq!(i_reach_closure(&g, &alpha, v, k), strong_reach_closure(&g, &alpha, v, k).reachable);
            }
        }
    }

    #[test]
    fn saturation_on_c5() {
        let c5 = cycle(5);
        let alpha = total(&[1, 2, 1, 2, 3]);
        for v in c5.vertices() {
            let sat = saturate_delta_reach(&c5, &alpha, v).unwrap();
            assert!(sat.colouring.is_proper(&c5) && sat.colouring.max_colour() <= 3);
            assert!(i_reach_closure(&c5, &sat.colouring, v, 2).iter().all(|&r| r));
        }
    }

    #[test]
    fn saturated_input_unchanged() {
        let c6 = cycle(6);
        let alpha = total(&[1, 2, 1, 2, 1, 2]);
        let sat = saturate_delta_reach(&c6, &alpha, 0).unwrap();
        assert_eq!(sat.rounds, 0);
        assert_eq!(sat.colouring, alpha);
    }

    #[test]
    fn saturation_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for max_degree in [3, 4, 5] {
            for _ in 0..60 {
                let g = crate::generate::connected_bounded_degree(&mut rng, 40, max_degree);
                let alpha = vizing_colour(&g);
                for v in g.vertices() {
                    let sat = saturate_delta_reach(&g, &alpha, v).unwrap();
                    assert!(sat.rounds <= g.vertex_count());
                    let k = g.max_degree().max(1);
                    assert!(sat.colouring.is_proper(&g) && sat.colouring.max_colour() <= k + 1);
                    assert!(i_reach_closure(&g, &sat.colouring, v, k).iter().all(|&r| r));
                }
            }
        }
    }

    /// Every case, applied on its own whenever it is applicable, enlarges the
    /// reached set; case (2) usually pre-empts (3) and (4) in the ladder, and
    /// the preparatory switch is exercised where (2) and (3) are blocked.
    #[test]
    fn each_case_enlarges_alone() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut fired = [0usize; 4];
        let mut prepared = 0;
        for md in [3, 4, 5] {
            for _ in 0..150 {
                let g = crate::generate::connected_bounded_degree(&mut rng, 40, md);
                let k = g.max_degree();
                if k < 2 {
                    continue;
                }
                let alpha = vizing_colour(&g);
                for v in g.vertices() {
                    let in_a = i_reach_closure(&g, &alpha, v, k);
                    if in_a.iter().all(|&r| r) {
                        continue;
                    }
                    let step = Step { g: &g, in_a: &in_a, k };
                    let c_set = step.c_set(&alpha);
                    let before = in_a.iter().filter(|&&r| r).count();
                    for case in 0..4 {
                        let mut next = alpha.clone();
                        let applied = match case {
                            0 => c_set.iter().all(|&x| !x) && step.case_one(&mut next).map(|_| true).unwrap(),
                            1 => step.case_two(&mut next).unwrap(),
                            2 => step.case_three(&mut next, &c_set).unwrap(),
                            _ => step.case_four(&mut next, &c_set).unwrap(),
                        };
                        if !applied {
                            continue;
                        }
                        fired[case] += 1;
                        assert!(next.is_proper(&g) && next.max_colour() <= k + 1);
                        let after = i_reach_closure(&g, &next, v, k);
                        assert!(in_a.iter().zip(&after).all(|(&a, &b)| !a || b));
                        assert!(after.iter().filter(|&&r| r).count() > before, "case {} did not grow", case + 1);
                    }
                    let blocked = !c_set.iter().all(|&x| !x)
                        && !step.case_two(&mut alpha.clone()).unwrap()
                        && !step.case_three(&mut alpha.clone(), &c_set).unwrap();
                    if blocked {
                        let mut next = alpha.clone();
                        step.prepare(&mut next).unwrap();
                        assert_eq!(i_reach_closure(&g, &next, v, k), in_a);
                        assert!(step.case_four(&mut next, &c_set).unwrap());
                        assert!(i_reach_closure(&g, &next, v, k).iter().filter(|&&r| r).count() > before);
                        prepared += 1;
                    }
                }
            }
        }
        assert!(fired.iter().all(|&n| n > 0), "cases fired {fired:?}");
        assert!(prepared > 0);
    }

    #[test]
    fn orderings_on_named_graphs() {
        for v in 0..5 {
            let r = subcubic_ordering(&cycle(5), v).unwrap();
            assert_eq!(r.greedy.colours_used, 3);
        }
        let p = petersen();
        for v in p.vertices() {
            let r = subcubic_ordering(&p, v).unwrap();
            assert_eq!(r.greedy.colours_used, 4);
        }
        for g in [complete(4), hypercube(3).unwrap(), path(2), path(7), star(3)] {
            for v in g.vertices() {
                let r = subcubic_ordering(&g, v).unwrap();
                assert!(r.greedy.colours_used <= 4);
                let (a, b) = g.endpoints(r.ordering.edges()[0]);
                assert!(a == v || b == v);
            }
        }
    }

    #[test]
    fn trivial_and_rejected_inputs() {
        let lone = Graph::build(1, &[]).unwrap();
        assert!(subcubic_ordering(&lone, 0).unwrap().ordering.is_empty());
        assert_eq!(subcubic_ordering(&star(4), 0), Err(SubcubicError::DegreeTooLarge(4)));
        let two = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(subcubic_ordering(&two, 0), Err(SubcubicError::Disconnected));
    }

    #[test]
    fn orderings_on_random_subcubic_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..80 {
            let g = crate::generate::connected_subcubic(&mut rng, 40);
            for v in g.vertices() {
                let r = subcubic_ordering(&g, v).unwrap();
                assert!(r.greedy.colours_used <= 4);
            }
        }
    }
}
