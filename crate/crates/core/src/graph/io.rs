//! Graph JSON (`{"n": 3, "edges": [[0, 1], [1, 2]]}`) and DOT export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{SimpleGraph, VertexId};
use crate::error::Result;

/// Serialized form of a [`SimpleGraph`]. Edges are written as `[u, v]` with
/// `u < v` in lexicographic order, so equal graphs serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> Self {
        Self {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = crate::error::Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        let edges: Vec<_> = json.edges.iter().map(|&[u, v]| (u, v)).collect();
        SimpleGraph::from_edge_list(json.n, &edges)
    }
}

pub fn to_json(g: &SimpleGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON serializes")
}

/// Parses graph JSON, rejecting self-loops and out-of-range ids.
pub fn from_json(text: &str) -> Result<SimpleGraph> {
    let json: GraphJson = serde_json::from_str(text)?;
    json.try_into()
}

/// Undirected DOT with vertex ids as labels.
pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v} [label=\"{v}\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
