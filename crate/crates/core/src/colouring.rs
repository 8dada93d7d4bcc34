//! Partial edge colourings, Kempe chains and Kempe switches.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

/// Colours are positive integers; `0` is never a colour.
pub type Colour = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colouring has {got} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("edge {0} has colour 0; colours start at 1")]
    ZeroColour(EdgeId),
    #[error("Kempe chain colours must differ (got {0} twice)")]
    SameColours(Colour),
    #[error("seed edge {edge} has colour {colour:?}, not one of ({i}, {j})")]
    SeedOutsidePair {
        edge: EdgeId,
        colour: Option<Colour>,
        i: Colour,
        j: Colour,
    },
    #[error("vertex {0} carries two edges of the same chain colour")]
    Improper(Vertex),
    #[error("chain is stale: edge {0} no longer carries one of the chain colours")]
    StaleChain(EdgeId),
}

/// Assignment of optional colours to the edges of a graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    colours: Vec<Option<Colour>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainShape {
    Path,
    Cycle,
}

/// A maximal connected component of the edges coloured `i` or `j`.
///
/// Paths are listed from the endpoint with the smaller vertex id; cycles
/// start with their smallest edge id, walked from its smaller endpoint.
/// `vertices[t]` and `vertices[t + 1]` are the ends of `edges[t]`; for a
/// cycle the last edge closes back onto `vertices[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeChain {
    pub colours: (Colour, Colour),
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<Vertex>,
    pub shape: ChainShape,
}

impl KempeChain {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// End vertices of a path chain (equal for an empty chain).
    pub fn ends(&self) -> Option<(Vertex, Vertex)> {
        match self.shape {
            ChainShape::Path => Some((self.vertices[0], *self.vertices.last().unwrap())),
            ChainShape::Cycle => None,
        }
    }
}

/// Where to start looking for a Kempe chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainSeed {
    Edge(EdgeId),
    Vertex(Vertex),
}

impl EdgeColouring {
    pub fn uncoloured(edge_count: usize) -> Self {
        EdgeColouring {
            colours: vec![None; edge_count],
        }
    }

    pub fn from_total(colours: Vec<Colour>) -> Result<Self, ColouringError> {
        Self::from_partial(colours.into_iter().map(Some).collect())
    }

    pub fn from_partial(colours: Vec<Option<Colour>>) -> Result<Self, ColouringError> {
        if let Some(e) = colours.iter().position(|&c| c == Some(0)) {
            return Err(ColouringError::ZeroColour(e));
        }
        Ok(EdgeColouring { colours })
    }

    /// Checks that the colouring has one entry per edge of `g`.
    pub fn check_against(&self, g: &Graph) -> Result<(), ColouringError> {
        if self.colours.len() != g.edge_count() {
            return Err(ColouringError::LengthMismatch {
                expected: g.edge_count(),
                got: self.colours.len(),
            });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Colour> {
        self.colours[e]
    }

    /// Colour of an edge the caller knows to be coloured.
    #[track_caller]
    pub fn colour(&self, e: EdgeId) -> Colour {
        self.colours[e].unwrap_or_else(|| panic!("edge {e} is uncoloured"))
    }

    pub fn set(&mut self, e: EdgeId, colour: Option<Colour>) {
        assert!(colour != Some(0), "colours start at 1");
        self.colours[e] = colour;
    }

    pub fn as_slice(&self) -> &[Option<Colour>] {
        &self.colours
    }

    pub fn is_total(&self) -> bool {
        self.colours.iter().all(Option::is_some)
    }

    /// Largest assigned colour, 0 when nothing is coloured.
    pub fn max_colour(&self) -> Colour {
        self.colours.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of distinct colours in use.
    pub fn distinct_colours(&self) -> usize {
        self.colours.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    /// The edge at `v` coloured `c`, if any.
    pub fn edge_with(&self, g: &Graph, v: Vertex, c: Colour) -> Option<EdgeId> {
        g.incident(v)
            .iter()
            .find(|&&(_, e)| self.colours[e] == Some(c))
            .map(|&(_, e)| e)
    }

    pub fn has_colour_at(&self, g: &Graph, v: Vertex, c: Colour) -> bool {
        self.edge_with(g, v, c).is_some()
    }

    /// Colours present on edges at `v`, ascending.
    pub fn colours_at(&self, g: &Graph, v: Vertex) -> Vec<Colour> {
        let mut cs: Vec<Colour> = g
            .incident(v)
            .iter()
            .filter_map(|&(_, e)| self.colours[e])
            .collect();
        cs.sort_unstable();
        cs
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.vertices().all(|v| {
            let cs = self.colours_at(g, v);
            cs.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Colours of `[k]` absent at `v`, ascending.
    pub fn missing_colours(&self, g: &Graph, v: Vertex, k: Colour) -> Vec<Colour> {
        let present = self.colours_at(g, v);
        (1..=k).filter(|c| present.binary_search(c).is_err()).collect()
    }

    /// Smallest colour of `[k]` absent at `v`.
    pub fn smallest_missing(&self, g: &Graph, v: Vertex, k: Colour) -> Option<Colour> {
        (1..=k).find(|&c| !self.has_colour_at(g, v, c))
    }

    pub fn kempe_chain(
        &self,
        g: &Graph,
        seed: ChainSeed,
        i: Colour,
        j: Colour,
    ) -> Result<KempeChain, ColouringError> {
        if i == j {
            return Err(ColouringError::SameColours(i));
        }
        let start = match seed {
            ChainSeed::Edge(e) => {
                let c = self.colours[e];
                if c != Some(i) && c != Some(j) {
                    return Err(ColouringError::SeedOutsidePair {
                        edge: e,
                        colour: c,
                        i,
                        j,
                    });
                }
                g.endpoints(e).0
            }
            ChainSeed::Vertex(v) => v,
        };
        let in_pair = |e: EdgeId| matches!(self.colours[e], Some(c) if c == i || c == j);
        let pair_edges = |v: Vertex| g.incident(v).iter().filter(move |&&(_, e)| in_pair(e));

        // Collect the component, then read off its shape.
        let mut members = vec![start];
        let mut stack = vec![start];
        let mut seen = BTreeSet::from([start]);
        while let Some(u) = stack.pop() {
            let mut count = 0;
            for &(w, _) in pair_edges(u) {
                count += 1;
                if seen.insert(w) {
                    members.push(w);
                    stack.push(w);
                }
            }
            if count > 2 {
                return Err(ColouringError::Improper(u));
            }
        }
        for &u in &members {
            let mut cs: Vec<Colour> = pair_edges(u).map(|&(_, e)| self.colours[e].unwrap()).collect();
            cs.sort_unstable();
            if cs.windows(2).any(|w| w[0] == w[1]) {
                return Err(ColouringError::Improper(u));
            }
        }
        let ends: Vec<Vertex> = members
            .iter()
            .copied()
            .filter(|&u| pair_edges(u).count() == 1)
            .collect();

        if members.len() == 1 {
            return Ok(KempeChain {
                colours: (i, j),
                edges: Vec::new(),
                vertices: members,
                shape: ChainShape::Path,
            });
        }

        let (shape, first_vertex, first_edge) = if ends.is_empty() {
            let e0 = members
                .iter()
                .flat_map(|&u| pair_edges(u).map(|&(_, e)| e))
                .min()
                .unwrap();
            let (a, b) = g.endpoints(e0);
            (ChainShape::Cycle, a.min(b), e0)
        } else {
            let p = *ends.iter().min().unwrap();
            let e0 = pair_edges(p).next().unwrap().1;
            (ChainShape::Path, p, e0)
        };

        let mut edges = vec![first_edge];
        let mut vertices = vec![first_vertex];
        let mut at = g.other_end(first_edge, first_vertex);
        let mut prev = first_edge;
        loop {
            if shape == ChainShape::Cycle && at == first_vertex {
                break;
            }
            vertices.push(at);
            match pair_edges(at).map(|&(_, e)| e).find(|&e| e != prev) {
                Some(e) => {
                    edges.push(e);
                    at = g.other_end(e, at);
                    prev = e;
                }
                None => break,
            }
        }
        Ok(KempeChain {
            colours: (i, j),
            edges,
            vertices,
            shape,
        })
    }

    /// Chain through `v` for colours `(i, j)`; `v` need not carry either.
    pub fn chain_at(&self, g: &Graph, v: Vertex, i: Colour, j: Colour) -> KempeChain {
        self.kempe_chain(g, ChainSeed::Vertex(v), i, j)
            .expect("chain lookup on a proper colouring")
    }

    /// New colouring with `i` and `j` exchanged along `chain`.
    pub fn kempe_switch(&self, chain: &KempeChain) -> Result<EdgeColouring, ColouringError> {
        let mut next = self.clone();
        next.switch_in_place(chain)?;
        Ok(next)
    }

    pub fn switch_in_place(&mut self, chain: &KempeChain) -> Result<(), ColouringError> {
        let (i, j) = chain.colours;
        for w in chain.edges.windows(2) {
            if self.colours[w[0]] == self.colours[w[1]] {
                return Err(ColouringError::StaleChain(w[1]));
            }
        }
        for &e in &chain.edges {
            match self.colours[e] {
                Some(c) if c == i || c == j => {}
                _ => return Err(ColouringError::StaleChain(e)),
            }
        }
        for &e in &chain.edges {
            let c = self.colours[e].unwrap();
            self.colours[e] = Some(if c == i { j } else { i });
        }
        Ok(())
    }

    /// Connected components of the subgraph formed by edges whose colour is
    /// in `keep`. Every vertex appears exactly once; components are sorted
    /// internally and listed by smallest member.
    pub fn components_keeping(&self, g: &Graph, keep: &[Colour]) -> Vec<Vec<Vertex>> {
        let kept = |e: EdgeId| matches!(self.colours[e], Some(c) if keep.contains(&c));
        let mut comp = vec![usize::MAX; g.vertex_count()];
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for s in g.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, e) in g.incident(u) {
                    if kept(e) && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// Component index of every vertex for the edges whose colour is in `keep`.
pub fn component_index(g: &Graph, alpha: &EdgeColouring, keep: &[Colour]) -> Vec<usize> {
    let mut idx = vec![0; g.vertex_count()];
    for (i, comp) in alpha.components_keeping(g, keep).iter().enumerate() {
        for &v in comp {
            idx[v] = i;
        }
    }
    idx
}
