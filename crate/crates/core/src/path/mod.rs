//! Paths of a graph, their prefix structure, bounded enumeration of the
//! anchored path sets and the unique first-visit factorizations.

mod enumerate;
mod factor;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

pub use enumerate::{enumerate, is_member, Anchor, PathSet, SetKind};
pub use factor::{cycle_factorize, factor_at_component, factor_at_vertex};

/// A vertex (length 0) or a composable sequence of edges.
///
/// Ordered by length, then lexicographically by edge sequence, then by source.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    range: VertexId,
    edges: Vec<EdgeId>,
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Path {
    pub fn vertex(v: VertexId) -> Self {
        Path {
            source: v,
            range: v,
            edges: Vec::new(),
        }
    }

    pub fn edge(g: &Graph, e: EdgeId) -> Self {
        Path {
            source: g.src(e),
            range: g.dst(e),
            edges: vec![e],
        }
    }

    /// Validates composability of a nonempty edge sequence.
    pub fn from_edges(g: &Graph, edges: Vec<EdgeId>) -> Result<Self> {
        let first = *edges
            .first()
            .ok_or_else(|| Error::NotComposable("empty edge sequence".into()))?;
        for e in &edges {
            if e.0 >= g.edge_count() {
                return Err(Error::UnknownEdge(format!("#{}", e.0)));
            }
        }
        for pair in edges.windows(2) {
            if g.dst(pair[0]) != g.src(pair[1]) {
                return Err(Error::NotComposable(format!(
                    "edge {} ends at {} but {} starts at {}",
                    g.edge_name(pair[0]),
                    g.vertex_name(g.dst(pair[0])),
                    g.edge_name(pair[1]),
                    g.vertex_name(g.src(pair[1]))
                )));
            }
        }
        let last = *edges.last().unwrap();
        Ok(Path {
            source: g.src(first),
            range: g.dst(last),
            edges,
        })
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// Same as [`Path::is_vertex`].
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// The `len() + 1` vertices visited, source first.
    pub fn visits<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = VertexId> + 'a {
        std::iter::once(self.source).chain(self.edges.iter().map(move |&e| g.dst(e)))
    }

    /// `self` followed by `other`; vertex paths act as identities.
    pub fn concat(&self, other: &Path) -> Result<Path> {
        if self.range != other.source {
            return Err(Error::NotComposable(format!(
                "range #{} does not match source #{}",
                self.range.0, other.source.0
            )));
        }
        let mut edges = Vec::with_capacity(self.len() + other.len());
        edges.extend_from_slice(&self.edges);
        edges.extend_from_slice(&other.edges);
        Ok(Path {
            source: self.source,
            range: other.range,
            edges,
        })
    }

    /// Returns `w` with `other = self · w`, if `self` is a prefix of `other`.
    pub fn strip_prefix_of(&self, other: &Path) -> Option<Path> {
        if self.source != other.source || !other.edges.starts_with(&self.edges) {
            return None;
        }
        Some(Path {
            source: self.range,
            range: other.range,
            edges: other.edges[self.edges.len()..].to_vec(),
        })
    }

    /// The prefix of length `k` (`k <= len`).
    pub fn prefix(&self, g: &Graph, k: usize) -> Path {
        let edges = self.edges[..k].to_vec();
        let range = edges.last().map_or(self.source, |&e| g.dst(e));
        Path {
            source: self.source,
            range,
            edges,
        }
    }

    /// The suffix after the first `k` edges.
    pub fn suffix(&self, g: &Graph, k: usize) -> Path {
        let source = if k == 0 {
            self.source
        } else {
            g.dst(self.edges[k - 1])
        };
        Path {
            source,
            range: self.range,
            edges: self.edges[k..].to_vec(),
        }
    }

    /// Renders `@v` for vertices and dot-joined edge ids otherwise.
    pub fn to_literal(&self, g: &Graph) -> String {
        if self.edges.is_empty() {
            format!("@{}", g.vertex_name(self.source))
        } else {
            let names: Vec<&str> = self.edges.iter().map(|&e| g.edge_name(e)).collect();
            names.join(".")
        }
    }

    /// Rewrites the path into `target`, matching vertices and edges by id.
    pub fn transfer(&self, from: &Graph, target: &Graph) -> Result<Path> {
        if self.edges.is_empty() {
            return Ok(Path::vertex(target.vertex(from.vertex_name(self.source))?));
        }
        let edges = self
            .edges
            .iter()
            .map(|&e| target.edge_id(from.edge_name(e)))
            .collect::<Result<Vec<_>>>()?;
        Path::from_edges(target, edges)
    }
}

pub fn concat(p: &Path, q: &Path) -> Result<Path> {
    p.concat(q)
}

/// `Some(w)` with `q = p · w` when `p` is a prefix of `q`.
pub fn strip_prefix(p: &Path, q: &Path) -> Option<Path> {
    p.strip_prefix_of(q)
}

/// Parses a path literal: `@v` or `e1.e2...`. `offset` shifts reported positions.
pub(crate) fn parse_path_at(g: &Graph, text: &str, offset: usize) -> Result<Path> {
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    let base = offset + trimmed_start;
    if body.is_empty() {
        return Err(Error::syntax(base, "", "expected a path"));
    }
    if let Some(name) = body.strip_prefix('@') {
        crate::graph::check_id(name)
            .map_err(|_| Error::syntax(base + 1, name, "expected a vertex id after '@'"))?;
        return Ok(Path::vertex(g.vertex(name)?));
    }
    let mut edges = Vec::new();
    let mut pos = base;
    for part in body.split('.') {
        let name = part.trim();
        if crate::graph::check_id(name).is_err() {
            return Err(Error::syntax(pos, part, "expected an edge id"));
        }
        edges.push(g.edge_id(name)?);
        pos += part.len() + 1;
    }
    Path::from_edges(g, edges)
}

pub fn parse_path(g: &Graph, text: &str) -> Result<Path> {
    parse_path_at(g, text, 0)
}
