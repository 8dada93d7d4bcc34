//! Gadget constructions: `Q_Δ⁺`, `H`, `G_v`, the reduction `G → G'` and a
//! subcubic graph whose connected greedy chromatic index exceeds `χ'`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{hypercube, EdgeId, Graph, Vertex};
use crate::greedy::{replay_ordering, vertex_major_order, ConnectedOrdering, GreedyRun, OrderingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("gadgets need Δ ≥ 3, got {0}")]
    DeltaTooSmall(usize),
    #[error("reduction needs d ≥ 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("vertex {vertex} has degree {degree}, expected {d}")]
    NotRegular { vertex: Vertex, degree: usize, d: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("colouring must be a proper {0}-edge colouring of the source graph")]
    BadColouring(Colour),
    #[error(transparent)]
    Ordering(#[from] OrderingError),
}

/// Where a copy of a smaller graph sits inside a larger one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl Embedding {
    pub fn vertex(&self, v: Vertex) -> Vertex {
        self.vertices[v]
    }

    pub fn edge(&self, e: EdgeId) -> EdgeId {
        self.edges[e]
    }

    /// `self` followed by `outer`.
    pub fn then(&self, outer: &Embedding) -> Embedding {
        Embedding {
            vertices: self.vertices.iter().map(|&v| outer.vertex(v)).collect(),
            edges: self.edges.iter().map(|&e| outer.edge(e)).collect(),
        }
    }
}

#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    labels: BTreeMap<Vertex, String>,
}

impl Builder {
    fn vertex(&mut self, label: impl Into<String>) -> Vertex {
        self.labels.insert(self.n, label.into());
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, a: Vertex, b: Vertex) -> EdgeId {
        self.edges.push((a, b));
        self.edges.len() - 1
    }

    /// Copies `g`, sending each `(local, host)` pair in `shared` onto an
    /// existing vertex and giving every other vertex a fresh prefixed label.
    fn embed(&mut self, g: &Graph, shared: &[(Vertex, Vertex)], prefix: &str) -> Embedding {
        let vertices: Vec<Vertex> = g
            .vertices()
            .map(|v| match shared.iter().find(|&&(l, _)| l == v) {
                Some(&(_, host)) => host,
                None => {
                    let name = g.label(v).map_or_else(|| v.to_string(), str::to_owned);
                    self.vertex(format!("{prefix}{name}"))
                }
            })
            .collect();
        let edges = g
            .edges()
            .iter()
            .map(|&(a, b)| self.edge(vertices[a], vertices[b]))
            .collect();
        Embedding { vertices, edges }
    }

    fn finish(self) -> Graph {
        Graph::build(self.n, &self.edges)
            .expect("gadgets are simple graphs")
            .with_labels(self.labels)
            .expect("labels name existing vertices")
    }
}

/// The hypercube `Q_Δ` with the edge `xy` replaced by pendant edges `xx'`, `yy'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPlus {
    pub graph: Graph,
    pub delta: usize,
    pub x: Vertex,
    pub y: Vertex,
    pub x_prime: Vertex,
    pub y_prime: Vertex,
    pub xx: EdgeId,
    pub yy: EdgeId,
}

/// `x` is the all-ones vertex and `y` differs from it in the last bit.
pub fn q_plus(delta: usize) -> Result<QPlus, GadgetError> {
    if delta < 3 {
        return Err(GadgetError::DeltaTooSmall(delta));
    }
    let cube = hypercube(delta).expect("positive dimension");
    let n = cube.vertex_count();
    let (x, y) = (n - 1, (n - 1) ^ 1);
    let mut edges: Vec<(Vertex, Vertex)> = cube
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| (a.min(b), a.max(b)) != (y, x))
        .collect();
    let (x_prime, y_prime) = (n, n + 1);
    edges.push((x, x_prime));
    edges.push((y, y_prime));
    let mut labels = cube.labels().clone();
    for (v, name) in [(x, "x"), (y, "y"), (x_prime, "x'"), (y_prime, "y'")] {
        labels.insert(v, name.to_string());
    }
    let graph = Graph::build(n + 2, &edges)
        .expect("simple")
        .with_labels(labels)
        .expect("in range");
    let m = graph.edge_count();
    Ok(QPlus {
        graph,
        delta,
        x,
        y,
        x_prime,
        y_prime,
        xx: m - 2,
        yy: m - 1,
    })
}

impl QPlus {
    /// The `Δ`-edge colouring by hypercube direction (pendant edges in the
    /// direction of the deleted edge), with colours `1` and `i` exchanged so
    /// that `xx'` and `yy'` receive colour `i`.
    pub fn direction_colouring(&self, i: Colour) -> EdgeColouring {
        assert!((1..=self.delta).contains(&i));
        let colours = (0..self.graph.edge_count())
            .map(|e| {
                let c = if e == self.xx || e == self.yy {
                    1
                } else {
                    let (a, b) = self.graph.endpoints(e);
                    (a ^ b).trailing_zeros() as Colour + 1
                };
                match c {
                    _ if c == i => 1,
                    1 => i,
                    _ => c,
                }
            })
            .collect();
        EdgeColouring::from_total(colours).expect("colours are positive")
    }
}

/// `Δ − 2` copies of `Q_Δ⁺` glued at `x'` and `y'`, plus `u ~ x', y'` and `s ~ u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetH {
    pub graph: Graph,
    pub delta: usize,
    pub s: Vertex,
    pub u: Vertex,
    pub x_prime: Vertex,
    pub y_prime: Vertex,
    pub su: EdgeId,
    pub x_prime_u: EdgeId,
    pub y_prime_u: EdgeId,
    pub q: QPlus,
    pub copies: Vec<Embedding>,
}

pub fn gadget_h(delta: usize) -> Result<GadgetH, GadgetError> {
    let q = q_plus(delta)?;
    let mut b = Builder::default();
    let x_prime = b.vertex("x'");
    let y_prime = b.vertex("y'");
    let copies = (0..delta - 2)
        .map(|i| b.embed(&q.graph, &[(q.x_prime, x_prime), (q.y_prime, y_prime)], &format!("q{i}.")))
        .collect();
    let u = b.vertex("u");
    let s = b.vertex("s");
    let x_prime_u = b.edge(x_prime, u);
    let y_prime_u = b.edge(y_prime, u);
    let su = b.edge(s, u);
    Ok(GadgetH {
        graph: b.finish(),
        delta,
        s,
        u,
        x_prime,
        y_prime,
        su,
        x_prime_u,
        y_prime_u,
        q,
        copies,
    })
}

/// `Δ − 1` copies of `H` sharing their vertex `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGv {
    pub graph: Graph,
    pub delta: usize,
    pub s: Vertex,
    pub h: GadgetH,
    pub copies: Vec<Embedding>,
}

pub fn gadget_gv(delta: usize) -> Result<GadgetGv, GadgetError> {
    let h = gadget_h(delta)?;
    let mut b = Builder::default();
    let s = b.vertex("s");
    let copies = (0..delta - 1)
        .map(|j| b.embed(&h.graph, &[(h.s, s)], &format!("h{j}.")))
        .collect();
    Ok(GadgetGv {
        graph: b.finish(),
        delta,
        s,
        h,
        copies,
    })
}

/// `G'`: the source graph with a fresh `G_v` attached to every vertex `v`
/// by an edge `v s_v`. Source vertices and edges keep their ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    pub source: Graph,
    pub d: usize,
    pub gv: GadgetGv,
    pub gadgets: Vec<Embedding>,
    pub links: Vec<EdgeId>,
}

pub fn reduce(g: &Graph, d: usize) -> Result<Reduction, GadgetError> {
    if d < 3 {
        return Err(GadgetError::DegreeTooSmall(d));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != d) {
        return Err(GadgetError::NotRegular {
            vertex: v,
            degree: g.degree(v),
            d,
        });
    }
    if !g.is_connected() {
        return Err(GadgetError::Disconnected);
    }
    let gv = gadget_gv(d + 1)?;
    let mut b = Builder::default();
    for v in g.vertices() {
        b.vertex(g.label(v).map_or_else(|| format!("v{v}"), str::to_owned));
    }
    for &(p, q) in g.edges() {
        b.edge(p, q);
    }
    let mut gadgets = Vec::with_capacity(g.vertex_count());
    let mut links = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let emb = b.embed(&gv.graph, &[], &format!("g{v}."));
        links.push(b.edge(v, emb.vertex(gv.s)));
        gadgets.push(emb);
    }
    Ok(Reduction {
        graph: b.finish(),
        source: g.clone(),
        d,
        gv,
        gadgets,
        links,
    })
}

impl Reduction {
    pub fn delta(&self) -> usize {
        self.d + 1
    }

    /// Connected ordering of `G'` built from a `d`-edge colouring of the
    /// source: replay the source colouring, give every link colour `d + 1`,
    /// then fill each copy of `H` from its edge `su`.
    pub fn positive_ordering(&self, alpha: &EdgeColouring) -> Result<ConnectedOrdering, GadgetError> {
        let src = &self.source;
        if alpha.len() != src.edge_count() || !alpha.is_total() || !alpha.is_proper(src) || alpha.max_colour() > self.d
        {
            return Err(GadgetError::BadColouring(self.d));
        }
        let mut run = GreedyRun::new(&self.graph);
        for e in replay_ordering(src, alpha, 0)?.into_edges() {
            run.push(e)?;
        }
        for &e in &self.links {
            run.push(e)?;
        }
        let h = &self.gv.h;
        let q = &h.q;
        for gadget in &self.gadgets {
            for h_copy in &self.gv.copies {
                let in_host = h_copy.then(gadget);
                run.push(in_host.edge(h.su))?;
                run.push(in_host.edge(h.x_prime_u))?;
                let q_copies: Vec<Embedding> = h.copies.iter().map(|c| c.then(&in_host)).collect();
                for c in &q_copies {
                    run.push(c.edge(q.xx))?;
                }
                for c in &q_copies {
                    let i = run.colouring().colour(c.edge(q.xx));
                    for e in vertex_major_order(&q.graph, &q.direction_colouring(i), q.x, |e| e != q.xx) {
                        run.push(c.edge(e))?;
                    }
                }
                run.push(in_host.edge(h.y_prime_u))?;
            }
        }
        let order = run.order().to_vec();
        run.finish()?;
        Ok(ConnectedOrdering::new(&self.graph, order)?)
    }
}

/// The five-cycle with a copy of `H` (for `Δ = 3`) hanging from each vertex
/// through its vertex `s`: 60 vertices, 85 edges, maximum degree 3.
pub fn counterexample_subcubic() -> Graph {
    let h = gadget_h(3).expect("Δ = 3 is valid");
    let mut b = Builder::default();
    let ring: Vec<Vertex> = (0..5).map(|i| b.vertex(format!("c{i}"))).collect();
    for i in 0..5 {
        b.edge(ring[i], ring[(i + 1) % 5]);
    }
    for (i, &c) in ring.iter().enumerate() {
        b.embed(&h.graph, &[(h.s, c)], &format!("h{i}."));
    }
    b.finish()
}
