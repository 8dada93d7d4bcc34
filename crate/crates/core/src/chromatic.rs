//! Base colourings (Vizing, König) and the exact chromatic index.

use thiserror::Error;

use crate::budget::{Budget, Decided, Meter};
use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{Bipartition, EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChromaticError {
    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<Vertex>),
}

/// Proper colouring with at most `Δ + 1` colours (Misra–Gries fan rotation).
pub fn vizing_colour(g: &Graph) -> EdgeColouring {
    let palette = g.max_degree() + 1;
    let mut alpha = EdgeColouring::uncoloured(g.edge_count());
    let free = |alpha: &EdgeColouring, v: Vertex| {
        alpha
            .smallest_missing(g, v, palette)
            .expect("a vertex of degree ≤ Δ misses a colour of [Δ+1]")
    };

    for e in 0..g.edge_count() {
        let (u, v0) = g.endpoints(e);

        // maximal fan at u starting with the uncoloured edge u v0
        let mut fan = vec![(v0, e)];
        loop {
            let last = fan.last().unwrap().0;
            let next = g.incident(u).iter().copied().find(|&(w, f)| {
                !fan.iter().any(|&(x, _)| x == w)
                    && matches!(alpha.get(f), Some(c) if !alpha.has_colour_at(g, last, c))
            });
            match next {
                Some(p) => fan.push(p),
                None => break,
            }
        }

        let c = free(&alpha, u);
        let d = free(&alpha, fan.last().unwrap().0);
        if c != d {
            // u misses c, so the (c, d) chain at u is a path ending at u
            let chain = alpha.chain_at(g, u, c, d);
            alpha.switch_in_place(&chain).expect("fresh chain");
        }

        let is_fan_prefix = |alpha: &EdgeColouring, len: usize| {
            (1..len).all(|t| {
                let col = alpha.colour(fan[t].1);
                !alpha.has_colour_at(g, fan[t - 1].0, col)
            })
        };
        let w = (0..fan.len())
            .find(|&i| !alpha.has_colour_at(g, fan[i].0, d) && is_fan_prefix(&alpha, i + 1))
            .expect("some fan prefix ends at a vertex missing d");

        let shifted: Vec<Colour> = (1..=w).map(|t| alpha.colour(fan[t].1)).collect();
        for (t, col) in shifted.into_iter().enumerate() {
            alpha.set(fan[t].1, Some(col));
        }
        alpha.set(fan[w].1, Some(d));
    }
    assert!(alpha.max_colour() <= palette);
    debug_assert!(alpha.is_proper(g));
    alpha
}

/// Proper colouring of a bipartite graph with exactly `Δ` colours.
///
/// Edges are inserted one at a time; when the endpoints miss no common
/// colour, an alternating path is flipped to free one.
pub fn bipartite_colour(g: &Graph) -> Result<EdgeColouring, ChromaticError> {
    if let Bipartition::OddCycle(c) = g.bipartition() {
        return Err(ChromaticError::NotBipartite(c));
    }
    let k = g.max_degree();
    let mut alpha = EdgeColouring::uncoloured(g.edge_count());
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let a = alpha.smallest_missing(g, u, k).expect("degree ≤ Δ");
        if alpha.has_colour_at(g, v, a) {
            let b = alpha.smallest_missing(g, v, k).expect("degree ≤ Δ");
            let chain = alpha.chain_at(g, v, a, b);
            // in a bipartite graph the alternating path from v cannot reach u
            assert!(!chain.contains_vertex(u), "odd cycle through edge {e}");
            alpha.switch_in_place(&chain).expect("fresh chain");
        }
        alpha.set(e, Some(a));
    }
    assert!(alpha.max_colour() <= k);
    debug_assert!(alpha.is_proper(g));
    Ok(alpha)
}

/// Searches for a proper colouring with colours in `[k]`.
///
/// Backtracking picks the uncoloured edge with the fewest available colours
/// (ties: larger endpoint-degree sum, then smaller id) and lets an edge use a
/// fresh colour only if it is the next unused one.
pub fn k_edge_colouring(g: &Graph, k: Colour, budget: Budget) -> Decided<Option<EdgeColouring>> {
    assert!(k < 64, "palette limited to 63 colours");
    let mut search = ColourSearch::new(g, k, budget);
    match search.run() {
        Some(true) => Decided::Value(Some(search.colouring())),
        Some(false) => Decided::Value(None),
        None => Decided::Indeterminate {
            explored: search.meter.used(),
        },
    }
}

/// `χ'(g)` with a witness colouring.
pub fn exact_edge_colouring(g: &Graph, budget: Budget) -> Decided<(Colour, EdgeColouring)> {
    let delta = g.max_degree();
    if g.edge_count() == 0 {
        return Decided::Value((0, EdgeColouring::uncoloured(0)));
    }
    match k_edge_colouring(g, delta, budget) {
        Decided::Value(Some(alpha)) => Decided::Value((delta, alpha)),
        Decided::Value(None) => {
            let alpha = vizing_colour(g);
            Decided::Value((delta + 1, alpha))
        }
        Decided::Indeterminate { explored } => Decided::Indeterminate { explored },
    }
}

pub fn exact_chromatic_index(g: &Graph, budget: Budget) -> Decided<Colour> {
    exact_edge_colouring(g, budget).map(|(k, _)| k)
}

struct ColourSearch<'g> {
    g: &'g Graph,
    k: Colour,
    colour: Vec<Colour>,
    used_at: Vec<u64>,
    weight: Vec<usize>,
    meter: Meter,
}

impl<'g> ColourSearch<'g> {
    fn new(g: &'g Graph, k: Colour, budget: Budget) -> Self {
        let weight = g
            .edges()
            .iter()
            .map(|&(a, b)| g.degree(a) + g.degree(b))
            .collect();
        ColourSearch {
            g,
            k,
            colour: vec![0; g.edge_count()],
            used_at: vec![0; g.vertex_count()],
            weight,
            meter: Meter::new(budget),
        }
    }

    fn colouring(&self) -> EdgeColouring {
        EdgeColouring::from_total(self.colour.clone()).unwrap()
    }

    fn available(&self, e: EdgeId) -> u64 {
        let (a, b) = self.g.endpoints(e);
        let palette = if self.k == 0 { 0 } else { (1u64 << (self.k + 1)) - 2 };
        palette & !(self.used_at[a] | self.used_at[b])
    }

    fn pick(&self) -> Option<(EdgeId, u64)> {
        let mut best: Option<(EdgeId, u64)> = None;
        for e in 0..self.colour.len() {
            if self.colour[e] != 0 {
                continue;
            }
            let avail = self.available(e);
            let better = match best {
                None => true,
                Some((b, bav)) => {
                    let (n, bn) = (avail.count_ones(), bav.count_ones());
                    n < bn || (n == bn && self.weight[e] > self.weight[b])
                }
            };
            if better {
                best = Some((e, avail));
                if avail == 0 {
                    break;
                }
            }
        }
        best
    }

    /// `Some(found)` or `None` when the budget ran out.
    fn run(&mut self) -> Option<bool> {
        self.extend(0)
    }

    fn extend(&mut self, max_used: Colour) -> Option<bool> {
        let Some((e, avail)) = self.pick() else {
            return Some(true);
        };
        let (a, b) = self.g.endpoints(e);
        let limit = (max_used + 1).min(self.k);
        for c in 1..=limit {
            if avail & (1 << c) == 0 {
                continue;
            }
            if !self.meter.tick() {
                return None;
            }
            self.colour[e] = c;
            self.used_at[a] |= 1 << c;
            self.used_at[b] |= 1 << c;
            let r = self.extend(max_used.max(c));
            if r != Some(false) {
                return r;
            }
            self.colour[e] = 0;
            self.used_at[a] &= !(1 << c);
            self.used_at[b] &= !(1 << c);
        }
        Some(false)
    }
}
