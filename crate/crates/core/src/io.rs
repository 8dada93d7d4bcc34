//! JSON formats for graphs, colourings and orderings, and DOT export.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::{Colour, ColouringError, EdgeColouring};
use crate::graph::{EdgeId, Graph, GraphError, Vertex};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

/// `{"n": 4, "edges": [[0, 1], ...], "labels": {"0": "s"}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<Vertex, String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            labels: g.labels().clone(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        let edges: Vec<(Vertex, Vertex)> = j.edges.iter().map(|&[a, b]| (a, b)).collect();
        Graph::build(j.n, &edges)?.with_labels(j.labels)
    }
}

/// `{"colours": [1, 2, null], "colours_used": 2}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringJson {
    pub colours: Vec<Option<Colour>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colours_used: Option<Colour>,
}

impl ColouringJson {
    pub fn new(alpha: &EdgeColouring) -> Self {
        ColouringJson {
            colours: alpha.as_slice().to_vec(),
            colours_used: Some(alpha.max_colour()),
        }
    }

    pub fn colouring(&self) -> Result<EdgeColouring, ColouringError> {
        EdgeColouring::from_partial(self.colours.clone())
    }
}

/// `{"order": [0, 3, 1, 2], "colours_used": 2}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingJson {
    pub order: Vec<EdgeId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colours_used: Option<Colour>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<Vertex>,
}

pub fn graph_from_json(text: &str) -> Result<Graph, IoError> {
    let j: GraphJson = serde_json::from_str(text)?;
    Ok(Graph::try_from(j)?)
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serialisable")
}

pub fn read_text(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    graph_from_json(&read_text(path)?)
}

/// Graphviz rendering; coloured edges carry their colour as the edge label.
pub fn to_dot(g: &Graph, colouring: Option<&EdgeColouring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match g.label(v) {
            Some(name) => writeln!(out, "  {v} [label=\"{}\"];", name.replace('"', "\\\"")),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        match colouring.and_then(|c| c.get(e)) {
            Some(c) => writeln!(out, "  {a} -- {b} [label=\"{c}\"];"),
            None => writeln!(out, "  {a} -- {b};"),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}
