//! Finite directed multigraphs with named vertices.
//!
//! Vertices are addressed by dense index internally and by name in every
//! user-facing report. Parallel edges and self-loops are allowed; edge ids
//! are dense and follow input order.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Dense vertex index into [`Graph::vertices`].
pub type VertexId = usize;
/// Dense edge id into [`Graph::edges`].
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub src: VertexId,
    pub dst: VertexId,
}

/// Input syntax accepted by [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Edgelist,
}

impl std::str::FromStr for GraphFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(GraphFormat::Json),
            "edgelist" => Ok(GraphFormat::Edgelist),
            other => Err(GraphError::Malformed(format!(
                "unknown graph format `{other}`"
            ))),
        }
    }
}

/// An immutable finite directed multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<EdgeId>>,
    in_adj: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph from vertex names and `(src, dst)` index pairs.
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(GraphError::Malformed("graph has no vertices".into()));
        }
        let mut seen = HashMap::with_capacity(vertices.len());
        for (i, name) in vertices.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(GraphError::Malformed(format!(
                    "invalid vertex name {name:?}"
                )));
            }
            if seen.insert(name.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let n = vertices.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (id, (src, dst)) in edges.into_iter().enumerate() {
            for endpoint in [src, dst] {
                if endpoint >= n {
                    return Err(GraphError::UnknownVertex(format!("#{endpoint}")));
                }
            }
            out_adj[src].push(id);
            in_adj[dst].push(id);
            list.push(Edge { id, src, dst });
        }
        Ok(Graph {
            vertices,
            edges: list,
            out_adj,
            in_adj,
        })
    }

    /// Builds a graph from named edges; vertices are declared in order of
    /// first appearance.
    pub fn from_named_edges<'a>(
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, GraphError> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, VertexId> = HashMap::new();
        let mut intern = |name: &str| -> VertexId {
            if let Some(&i) = index.get(name) {
                return i;
            }
            names.push(name.to_string());
            index.insert(name.to_string(), names.len() - 1);
            names.len() - 1
        };
        let pairs: Vec<_> = edges
            .into_iter()
            .map(|(s, d)| (intern(s), intern(d)))
            .collect();
        Graph::new(names, pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vertices
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    /// Edges emitted by `v`, in id order.
    pub fn out_edges(&self, v: VertexId) -> Result<&[EdgeId], GraphError> {
        self.out_adj
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| GraphError::UnknownVertex(format!("#{v}")))
    }

    /// Edges received by `v`, in id order.
    pub fn in_edges(&self, v: VertexId) -> Result<&[EdgeId], GraphError> {
        self.in_adj
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| GraphError::UnknownVertex(format!("#{v}")))
    }

    pub(crate) fn in_adj(&self, v: VertexId) -> &[EdgeId] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    /// Applies a vertex permutation (`perm[old] = new`) and an edge
    /// reordering, producing an isomorphic graph. Used for relabeling tests.
    pub fn relabel(
        &self,
        perm: &[VertexId],
        names: &[String],
        edge_order: &[EdgeId],
    ) -> Result<Graph, GraphError> {
        let mut vertices = vec![String::new(); self.vertex_count()];
        for (old, &new) in perm.iter().enumerate() {
            vertices[new] = names[old].clone();
        }
        let edges = edge_order.iter().map(|&e| {
            let edge = self.edges[e];
            (perm[edge.src], perm[edge.dst])
        });
        Graph::new(vertices, edges)
    }

    pub fn to_json(&self) -> String {
        let doc = JsonGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    src: self.vertices[e.src].clone(),
                    dst: self.vertices[e.dst].clone(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("graph serialization cannot fail")
    }

    /// Edgelist serialization. Isolated vertices, and any vertex whose first
    /// appearance in the edge list would not match its index, are declared
    /// up front with `vertex` lines so the round trip preserves order.
    pub fn to_edgelist(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "vertex {v}");
        }
        for e in &self.edges {
            let _ = writeln!(out, "{} {}", self.vertices[e.src], self.vertices[e.dst]);
        }
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<JsonEdge>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEdge {
    src: String,
    dst: String,
}

pub fn parse_graph(input: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::Json => parse_json(input),
        GraphFormat::Edgelist => parse_edgelist(input),
    }
}

fn parse_json(input: &str) -> Result<Graph, GraphError> {
    let doc: JsonGraph =
        serde_json::from_str(input).map_err(|e| GraphError::Malformed(e.to_string()))?;
    let mut index = HashMap::new();
    for (i, name) in doc.vertices.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(GraphError::DuplicateVertex(name.clone()));
        }
    }
    let lookup = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    };
    let edges = doc
        .edges
        .iter()
        .map(|e| Ok((lookup(&e.src)?, lookup(&e.dst)?)))
        .collect::<Result<Vec<_>, GraphError>>()?;
    Graph::new(doc.vertices.clone(), edges)
}

fn parse_edgelist(input: &str) -> Result<Graph, GraphError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, VertexId> = HashMap::new();
    let mut edges = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["vertex", name] => {
                if index.contains_key(*name) {
                    return Err(GraphError::DuplicateVertex(name.to_string()));
                }
                index.insert(name.to_string(), names.len());
                names.push(name.to_string());
            }
            [src, dst] => {
                let mut intern = |name: &str| {
                    *index.entry(name.to_string()).or_insert_with(|| {
                        names.push(name.to_string());
                        names.len() - 1
                    })
                };
                let s = intern(src);
                let d = intern(dst);
                edges.push((s, d));
            }
            _ => {
                return Err(GraphError::Malformed(format!(
                    "line {}: expected `src dst` or `vertex name`, got {raw:?}",
                    lineno + 1
                )))
            }
        }
    }
    Graph::new(names, edges)
}
