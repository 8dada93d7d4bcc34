//! The greedy edge-colouring procedure along connected orderings.

use std::collections::VecDeque;

use thiserror::Error;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("position {position}: edge {edge} does not exist")]
    UnknownEdge { position: usize, edge: EdgeId },
    #[error("position {position}: edge {edge} appears twice")]
    Repeated { position: usize, edge: EdgeId },
    #[error("position {position}: edge {edge} is not incident to any earlier edge")]
    Disconnected { position: usize, edge: EdgeId },
    #[error("ordering covers {covered} of {total} edges")]
    Incomplete { covered: usize, total: usize },
    #[error("replay not faithful: edge {edge} received colour {got}, expected {expected}")]
    ReplayNotFaithful {
        edge: EdgeId,
        got: Colour,
        expected: Colour,
    },
    #[error("colouring must be total and proper")]
    BadColouring,
    #[error("start vertex {0} does not exist")]
    BadStart(Vertex),
}

/// A sequence of distinct edges whose every prefix is connected.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConnectedOrdering {
    edges: Vec<EdgeId>,
}

impl ConnectedOrdering {
    /// Validates the prefix condition; coverage is not required.
    pub fn new(g: &Graph, edges: Vec<EdgeId>) -> Result<Self, OrderingError> {
        check_prefix(g, &edges)?;
        Ok(ConnectedOrdering { edges })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<EdgeId> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyResult {
    pub colouring: EdgeColouring,
    pub colours_used: Colour,
}

fn check_prefix(g: &Graph, order: &[EdgeId]) -> Result<(), OrderingError> {
    let mut used = vec![false; g.edge_count()];
    let mut touched = vec![false; g.vertex_count()];
    for (position, &edge) in order.iter().enumerate() {
        if edge >= g.edge_count() {
            return Err(OrderingError::UnknownEdge { position, edge });
        }
        if used[edge] {
            return Err(OrderingError::Repeated { position, edge });
        }
        let (a, b) = g.endpoints(edge);
        if position > 0 && !touched[a] && !touched[b] {
            return Err(OrderingError::Disconnected { position, edge });
        }
        used[edge] = true;
        touched[a] = true;
        touched[b] = true;
    }
    Ok(())
}

pub fn is_connected_ordering(g: &Graph, order: &[EdgeId]) -> bool {
    check_prefix(g, order).is_ok()
}

/// Step-by-step greedy colouring that enforces the connectivity of the
/// coloured edge set as it grows.
#[derive(Debug, Clone)]
pub struct GreedyRun<'g> {
    g: &'g Graph,
    colouring: EdgeColouring,
    touched: Vec<bool>,
    order: Vec<EdgeId>,
}

impl<'g> GreedyRun<'g> {
    pub fn new(g: &'g Graph) -> Self {
        GreedyRun {
            g,
            colouring: EdgeColouring::uncoloured(g.edge_count()),
            touched: vec![false; g.vertex_count()],
            order: Vec::new(),
        }
    }

    /// Colour the next edge with the greedy value.
    pub fn push(&mut self, edge: EdgeId) -> Result<Colour, OrderingError> {
        self.push_inner(edge, None)
    }

    /// Place an edge with a forced colour, exempt from the greedy rule.
    pub fn push_precoloured(&mut self, edge: EdgeId, colour: Colour) -> Result<Colour, OrderingError> {
        self.push_inner(edge, Some(colour))
    }

    fn push_inner(&mut self, edge: EdgeId, forced: Option<Colour>) -> Result<Colour, OrderingError> {
        let position = self.order.len();
        if edge >= self.g.edge_count() {
            return Err(OrderingError::UnknownEdge { position, edge });
        }
        if self.colouring.get(edge).is_some() {
            return Err(OrderingError::Repeated { position, edge });
        }
        let (a, b) = self.g.endpoints(edge);
        if position > 0 && !self.touched[a] && !self.touched[b] {
            return Err(OrderingError::Disconnected { position, edge });
        }
        let c = forced.unwrap_or_else(|| greedy_value(self.g, &self.colouring, edge));
        self.colouring.set(edge, Some(c));
        self.touched[a] = true;
        self.touched[b] = true;
        self.order.push(edge);
        Ok(c)
    }

    pub fn colouring(&self) -> &EdgeColouring {
        &self.colouring
    }

    pub fn order(&self) -> &[EdgeId] {
        &self.order
    }

    pub fn finish(self) -> Result<GreedyResult, OrderingError> {
        if self.order.len() != self.g.edge_count() {
            return Err(OrderingError::Incomplete {
                covered: self.order.len(),
                total: self.g.edge_count(),
            });
        }
        let colours_used = self.colouring.max_colour();
        Ok(GreedyResult {
            colouring: self.colouring,
            colours_used,
        })
    }
}

/// Smallest positive colour absent from the coloured edges incident to `edge`.
pub fn greedy_value(g: &Graph, colouring: &EdgeColouring, edge: EdgeId) -> Colour {
    let (a, b) = g.endpoints(edge);
    // at most 2Δ - 2 neighbours, so the answer is at most 2Δ - 1
    let mut blocked = vec![false; g.degree(a) + g.degree(b) + 1];
    for &(_, f) in g.incident(a).iter().chain(g.incident(b)) {
        if let Some(c) = colouring.get(f) {
            if c < blocked.len() {
                blocked[c] = true;
            }
        }
    }
    (1..blocked.len()).find(|&c| !blocked[c]).unwrap_or(blocked.len())
}

/// Greedy colouring along a full connected ordering of `E(g)`.
pub fn greedy_colour(g: &Graph, order: &[EdgeId]) -> Result<GreedyResult, OrderingError> {
    let mut run = GreedyRun::new(g);
    for &e in order {
        run.push(e)?;
    }
    run.finish()
}

/// Connected ordering that reproduces `alpha` under the greedy rule.
///
/// Reached vertices are processed first-in first-out; each emits its
/// not-yet-ordered edges in increasing `alpha` colour. The ordering is
/// accepted only if re-running the greedy procedure yields `alpha` exactly.
/// This is guaranteed when every vertex that emits an edge has all colours
/// of `[k]` present, e.g. `d`-regular graphs with `d`-edge colourings.
pub fn replay_ordering(
    g: &Graph,
    alpha: &EdgeColouring,
    start: Vertex,
) -> Result<ConnectedOrdering, OrderingError> {
    if start >= g.vertex_count() {
        return Err(OrderingError::BadStart(start));
    }
    if alpha.len() != g.edge_count() || !alpha.is_total() || !alpha.is_proper(g) {
        return Err(OrderingError::BadColouring);
    }
    let order = vertex_major_order(g, alpha, start, |_| true);
    let result = greedy_colour(g, &order)?;
    if let Some(edge) = (0..g.edge_count()).find(|&e| result.colouring.get(e) != alpha.get(e)) {
        return Err(OrderingError::ReplayNotFaithful {
            edge,
            got: result.colouring.colour(edge),
            expected: alpha.colour(edge),
        });
    }
    Ok(ConnectedOrdering { edges: order })
}

/// FIFO vertex-major traversal: each dequeued vertex emits its unemitted
/// edges (restricted by `allowed`) in increasing colour.
pub(crate) fn vertex_major_order(
    g: &Graph,
    alpha: &EdgeColouring,
    start: Vertex,
    allowed: impl Fn(EdgeId) -> bool,
) -> Vec<EdgeId> {
    let mut emitted = vec![false; g.edge_count()];
    let mut reached = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([start]);
    reached[start] = true;
    let mut order = Vec::new();
    while let Some(w) = queue.pop_front() {
        let mut edges: Vec<EdgeId> = g
            .incident(w)
            .iter()
            .map(|&(_, e)| e)
            .filter(|&e| !emitted[e] && allowed(e))
            .collect();
        edges.sort_by_key(|&e| (alpha.get(e), e));
        for e in edges {
            emitted[e] = true;
            order.push(e);
            let z = g.other_end(e, w);
            if !reached[z] {
                reached[z] = true;
                queue.push_back(z);
            }
        }
    }
    order
}
