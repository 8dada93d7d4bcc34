//! Simple undirected graphs with dense vertex and edge identifiers.

use std::collections::{BTreeMap, HashSet, VecDeque};

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("label refers to vertex {0}, but the graph has {1} vertices")]
    LabelOutOfRange(Vertex, usize),
    #[error("hypercube dimension must be at least 1")]
    ZeroDimension,
}

/// A simple undirected graph.
///
/// Edge `i` is the `i`-th pair handed to [`Graph::build`]; colourings and
/// orderings refer to edges by this identifier only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // (neighbour, edge id), sorted by edge id
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    labels: BTreeMap<Vertex, String>,
}

/// Either a proper two-colouring of the vertices or an odd cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Sides(Vec<Vertex>, Vec<Vertex>),
    /// Vertex sequence of an odd cycle; consecutive vertices (and the last
    /// and first) are adjacent.
    OddCycle(Vec<Vertex>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Sides(..))
    }
}

impl Graph {
    pub fn build(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edge_list.len());
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edge_list.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph {
            n,
            edges: edge_list.to_vec(),
            adj,
            labels: BTreeMap::new(),
        })
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Result<Self, GraphError> {
        if let Some(&v) = labels.keys().find(|&&v| v >= self.n) {
            return Err(GraphError::LabelOutOfRange(v, self.n));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        assert!(v < self.n, "vertex {v} out of range");
        self.labels.insert(v, label.into());
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        debug_assert!(a == v || b == v, "vertex {v} is not on edge {e}");
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbour, edge id)` pairs at `v` in increasing edge id.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Whether two distinct edges share an endpoint.
    pub fn incident_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        e != f && (a == c || a == d || b == c || b == d)
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// First vertex carrying `label`.
    pub fn find_label(&self, label: &str) -> Option<Vertex> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(&v, _)| v)
    }

    /// Connected-component index of every vertex, numbered by smallest member.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// True iff the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        self.component_ids().iter().all(|&c| c == 0)
    }

    pub fn bipartition(&self) -> Bipartition {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Bipartition::OddCycle(tree_cycle(&parent, &depth, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, &s) in side.iter().enumerate() {
            if s == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Bipartition::Sides(left, right)
    }

    /// Subgraph on `vertices` (in the given order) keeping the listed edges.
    ///
    /// Returns the subgraph together with the map from new edge ids back to
    /// ids in `self`. Vertex `i` of the subgraph is `vertices[i]`.
    pub fn subgraph(&self, vertices: &[Vertex], edges: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut list = Vec::with_capacity(edges.len());
        let mut back = Vec::with_capacity(edges.len());
        for &e in edges {
            let (a, b) = self.edges[e];
            assert!(
                local[a] != usize::MAX && local[b] != usize::MAX,
                "edge {e} leaves the vertex set"
            );
            list.push((local[a], local[b]));
            back.push(e);
        }
        let g = Graph::build(vertices.len(), &list).expect("subgraph of a simple graph is simple");
        (g, back)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        let mut g = Graph::build(self.n + other.n, &edges).expect("disjoint union stays simple");
        g.labels = self.labels.clone();
        for (&v, l) in &other.labels {
            g.labels.insert(v + shift, l.clone());
        }
        g
    }
}

fn tree_cycle(parent: &[usize], depth: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    right.reverse();
    left.extend(right);
    left
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges).unwrap()
}

/// Cycle on `n ≥ 3` vertices, edges in cyclic order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::build(a + b, &edges).unwrap()
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::build(leaves + 1, &edges).unwrap()
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::build(10, &edges).unwrap()
}

/// The `d`-dimensional hypercube.
///
/// Vertex `v` is the bit string of `v` written most significant bit first,
/// so bit 0 is the last character of its label. Edges are listed by
/// increasing lower endpoint, then increasing bit.
pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    if d == 0 {
        return Err(GraphError::ZeroDimension);
    }
    let n = 1usize << d;
    let mut edges = Vec::with_capacity(n * d / 2);
    for v in 0..n {
        for bit in 0..d {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    let labels = (0..n).map(|v| (v, format!("{v:0d$b}"))).collect();
    Graph::build(n, &edges)?.with_labels(labels)
}

/// Which bit a hypercube edge flips.
pub fn hypercube_direction(g: &Graph, e: EdgeId) -> usize {
    let (a, b) = g.endpoints(e);
    (a ^ b).trailing_zeros() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_and_square() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(g.max_degree(), 1);
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.max_degree(), 2);
        assert_eq!(c4.edge_count(), 4);
    }

    #[test]
    fn rejects_duplicates_and_loops() {
        assert_eq!(
            Graph::build(2, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::build(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(Graph::build(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::build(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        ));
    }

    #[test]
    fn edge_ids_follow_input_order() {
        let pairs = [(3, 1), (0, 2), (1, 0)];
        let g = Graph::build(4, &pairs).unwrap();
        for (i, &p) in pairs.iter().enumerate() {
            assert_eq!(g.endpoints(i), p);
        }
        assert_eq!(g.edge_between(0, 1), Some(2));
        assert_eq!(g.edge_between(2, 3), None);
    }

    #[test]
    fn connectivity() {
        assert!(cycle(4).is_connected());
        assert!(!Graph::build(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::build(1, &[]).unwrap().is_connected());
        assert!(Graph::build(0, &[]).unwrap().is_connected());
    }

    #[test]
    fn bipartition_of_small_graphs() {
        assert_eq!(
            cycle(4).bipartition(),
            Bipartition::Sides(vec![0, 2], vec![1, 3])
        );
        match cycle(5).bipartition() {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.len(), 5);
                let g = cycle(5);
                for i in 0..c.len() {
                    assert!(g.edge_between(c[i], c[(i + 1) % c.len()]).is_some());
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
        let q3 = hypercube(3).unwrap();
        match q3.bipartition() {
            Bipartition::Sides(l, r) => {
                assert!(l.iter().all(|v| v.count_ones() % 2 == 0));
                assert!(r.iter().all(|v| v.count_ones() % 2 == 1));
            }
            other => panic!("hypercube is bipartite, got {other:?}"),
        }
    }

    #[test]
    fn odd_cycle_witness_in_larger_graph() {
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        let Bipartition::OddCycle(c) = g.bipartition() else {
            panic!("contains a 5-cycle");
        };
        assert_eq!(c.len() % 2, 1);
        for i in 0..c.len() {
            assert!(g.edge_between(c[i], c[(i + 1) % c.len()]).is_some());
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(cycle(5).max_degree(), 2);
        assert_eq!(hypercube(3).unwrap().max_degree(), 3);
        assert_eq!(star(4).max_degree(), 4);
        assert_eq!(Graph::build(3, &[]).unwrap().max_degree(), 0);
    }

    #[test]
    fn hypercube_sizes() {
        let q1 = hypercube(1).unwrap();
        assert_eq!((q1.vertex_count(), q1.edge_count()), (2, 1));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count()), (16, 32));
        assert_eq!(q3.label(5), Some("101"));
        assert_eq!(hypercube(0), Err(GraphError::ZeroDimension));
    }

    #[test]
    fn hypercubes_are_regular_and_bipartite() {
        for d in 1..=10 {
            let q = hypercube(d).unwrap();
            assert!(q.vertices().all(|v| q.degree(v) == d));
            assert!(q.bipartition().is_bipartite());
            assert!(q.is_connected());
        }
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert!(!p.bipartition().is_bipartite());
    }

    #[test]
    fn subgraph_maps_edges_back() {
        let g = cycle(6);
        let (sub, back) = g.subgraph(&[2, 3, 4], &[2, 3]);
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.endpoints(0), (0, 1));
        assert_eq!(back, vec![2, 3]);
    }
}
