//! Finite directed multigraphs.
//!
//! Vertices and edges are addressed by dense indices ([`VertexId`],
//! [`EdgeId`]) assigned in lexicographic order of their string ids, so every
//! derived ordering (paths, elements, reports) is deterministic.

mod finiteness;
mod scc;

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use finiteness::{
    component_finiteness, finiteness, Cardinality, ComponentFiniteness, FinitenessReport,
};
pub(crate) use finiteness::{first_return_count, first_visit_count};
pub use scc::{component_order, scc, BlockId, ComponentSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// Content fingerprint used to tag values that belong to a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphTag(u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub src: VertexId,
    pub dst: VertexId,
}

/// On-disk graph document: `{"vertices": [...], "edges": [{"id","src","dst"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    pub src: String,
    pub dst: String,
}

#[derive(Debug, Clone)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_lookup: HashMap<String, VertexId>,
    edge_lookup: HashMap<String, EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    tag: GraphTag,
    components: OnceLock<ComponentSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

pub(crate) fn check_id(id: &str) -> Result<()> {
    if !id.is_empty() && id.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
        Ok(())
    } else {
        Err(Error::InvalidId(id.to_string()))
    }
}

impl Graph {
    /// Builds and validates a graph from string ids. Edges are `(id, src, dst)`.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let mut vertex_names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vertex_names {
            check_id(v)?;
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateId(v.clone()));
            }
        }
        vertex_names.sort();
        let vertex_lookup: HashMap<String, VertexId> = vertex_names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), VertexId(i)))
            .collect();

        let mut raw: Vec<(String, String, String)> = edges.into_iter().collect();
        for (id, src, dst) in &raw {
            check_id(id)?;
            if !seen.insert(id.clone()) {
                return Err(Error::DuplicateId(id.clone()));
            }
            for endpoint in [src, dst] {
                if !vertex_lookup.contains_key(endpoint) {
                    return Err(Error::DanglingEndpoint {
                        edge: id.clone(),
                        endpoint: endpoint.clone(),
                    });
                }
            }
        }
        raw.sort();

        let mut out_edges = vec![Vec::new(); vertex_names.len()];
        let mut in_edges = vec![Vec::new(); vertex_names.len()];
        let mut edge_lookup = HashMap::new();
        let mut edge_list = Vec::with_capacity(raw.len());
        for (i, (name, src, dst)) in raw.into_iter().enumerate() {
            let (src, dst) = (vertex_lookup[&src], vertex_lookup[&dst]);
            out_edges[src.0].push(EdgeId(i));
            in_edges[dst.0].push(EdgeId(i));
            edge_lookup.insert(name.clone(), EdgeId(i));
            edge_list.push(Edge { name, src, dst });
        }

        let mut hasher = DefaultHasher::new();
        vertex_names.hash(&mut hasher);
        for e in &edge_list {
            (&e.name, e.src, e.dst).hash(&mut hasher);
        }

        Ok(Graph {
            vertices: vertex_names,
            edges: edge_list,
            vertex_lookup,
            edge_lookup,
            out_edges,
            in_edges,
            tag: GraphTag(hasher.finish()),
            components: OnceLock::new(),
        })
    }

    pub fn from_document(doc: GraphDocument) -> Result<Self> {
        Graph::new(
            doc.vertices,
            doc.edges.into_iter().map(|e| (e.id, e.src, e.dst)),
        )
    }

    /// Parses and validates a JSON graph document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| Error::MalformedGraph(e.to_string()))?;
        Graph::from_document(doc)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    id: e.name.clone(),
                    src: self.vertices[e.src.0].clone(),
                    dst: self.vertices[e.dst.0].clone(),
                })
                .collect(),
        }
    }

    pub fn tag(&self) -> GraphTag {
        self.tag
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId> {
        self.edge_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn src(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].src
    }

    pub fn dst(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].dst
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.0]
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.0 < self.vertices.len()
    }

    pub fn has_loop_at(&self, v: VertexId) -> bool {
        self.out_edges[v.0].iter().any(|&e| self.dst(e) == v)
    }

    /// Strongly connected components, computed once and cached.
    pub fn components(&self) -> &ComponentSet {
        self.components.get_or_init(|| scc(self))
    }

    /// True iff the graph contains no cycle (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        let cs = self.components();
        cs.blocks().iter().all(|b| b.len() == 1) && self.edges.iter().all(|e| e.src != e.dst)
    }

    /// True iff no cycle passes through `v`.
    pub fn is_acyclic_at(&self, v: VertexId) -> Result<bool> {
        self.check_vertex(v)?;
        let cs = self.components();
        Ok(cs.block(cs.block_of(v)).len() == 1 && !self.has_loop_at(v))
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{}", v.0)))
        }
    }

    /// Subgraph on `set` keeping exactly the edges with both endpoints in `set`.
    /// Vertex and edge ids are preserved.
    pub fn induced_subgraph(&self, set: &[VertexId]) -> Result<Graph> {
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut keep = vec![false; self.vertex_count()];
        for &v in set {
            if !self.contains_vertex(v) {
                return Err(Error::EmptyVertexSet);
            }
            keep[v.0] = true;
        }
        let vertices = self
            .vertex_ids()
            .filter(|v| keep[v.0])
            .map(|v| self.vertex_name(v).to_string());
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|e| keep[e.src.0] && keep[e.dst.0])
            .map(|e| {
                (
                    e.name.clone(),
                    self.vertex_name(e.src).to_string(),
                    self.vertex_name(e.dst).to_string(),
                )
            })
            .collect();
        Graph::new(vertices, edges)
    }

    /// Renders a vertex set as `{a,b}`.
    pub fn format_vertex_set(&self, set: &[VertexId]) -> String {
        let names: Vec<&str> = set.iter().map(|&v| self.vertex_name(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} vertices, {} edges",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Parses `{"vertices": ...}` text into a validated graph.
pub fn load_graph(document: &str) -> Result<Graph> {
    Graph::from_json(document)
}

pub fn induced_subgraph(g: &Graph, set: &[VertexId]) -> Result<Graph> {
    g.induced_subgraph(set)
}
