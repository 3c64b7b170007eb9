//! Exact finiteness and cardinality of the path sets anchored at a vertex or
//! at a strongly connected component.
//!
//! Every question reduces to reachability and cycle detection in the graph
//! with the anchor removed. A set is infinite iff some vertex on a cycle of
//! that graph lies on a route that can be completed into a member.

use std::fmt;

use serde::{Serialize, Serializer};

use super::scc::tarjan;
use super::{BlockId, Graph, VertexId};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FinitenessReport {
    #[serde(skip)]
    pub vertex: VertexId,
    pub i_finite: bool,
    pub q_finite: bool,
    pub c_finite: bool,
    pub c1_finite: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentFiniteness {
    #[serde(skip)]
    pub block: BlockId,
    pub i_finite: bool,
    pub q_finite: bool,
}

/// Size of a possibly infinite set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinality {
    Finite(u128),
    Infinite,
}

impl Cardinality {
    pub fn finite(self) -> Option<u128> {
        match self {
            Cardinality::Finite(n) => Some(n),
            Cardinality::Infinite => None,
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Infinite => f.write_str("∞"),
        }
    }
}

impl Serialize for Cardinality {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cardinality::Finite(n) => s.serialize_u128(*n),
            Cardinality::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// The graph with a set of vertices deleted.
struct Punctured<'g> {
    g: &'g Graph,
    removed: Vec<bool>,
}

impl<'g> Punctured<'g> {
    fn new(g: &'g Graph, removed: &[VertexId]) -> Self {
        let mut mask = vec![false; g.vertex_count()];
        for v in removed {
            mask[v.0] = true;
        }
        Punctured { g, removed: mask }
    }

    fn kept(&self, v: VertexId) -> bool {
        !self.removed[v.0]
    }

    /// Vertices lying on a cycle that avoids the removed set.
    fn cyclic(&self) -> Vec<bool> {
        let g = self.g;
        let adjacency: Vec<Vec<usize>> = g
            .vertex_ids()
            .map(|v| {
                if !self.kept(v) {
                    return Vec::new();
                }
                g.out_edges(v)
                    .iter()
                    .map(|&e| g.dst(e))
                    .filter(|&w| self.kept(w))
                    .map(|w| w.0)
                    .collect()
            })
            .collect();
        let mut cyclic = vec![false; g.vertex_count()];
        for comp in tarjan(&adjacency) {
            if comp.len() > 1 {
                for v in comp {
                    cyclic[v] = true;
                }
            }
        }
        for v in g.vertex_ids() {
            if self.kept(v) && g.has_loop_at(v) {
                cyclic[v.0] = true;
            }
        }
        cyclic
    }

    /// Kept vertices reachable from `seeds` (kept seeds only) without leaving the kept set.
    fn forward(&self, seeds: impl IntoIterator<Item = VertexId>) -> Vec<bool> {
        self.search(seeds, |v| self.g.out_edges(v).iter().map(|&e| self.g.dst(e)).collect())
    }

    /// Kept vertices that reach one of `seeds` without leaving the kept set.
    fn backward(&self, seeds: impl IntoIterator<Item = VertexId>) -> Vec<bool> {
        self.search(seeds, |v| self.g.in_edges(v).iter().map(|&e| self.g.src(e)).collect())
    }

    fn search(
        &self,
        seeds: impl IntoIterator<Item = VertexId>,
        step: impl Fn(VertexId) -> Vec<VertexId>,
    ) -> Vec<bool> {
        let mut seen = vec![false; self.g.vertex_count()];
        let mut stack: Vec<VertexId> = Vec::new();
        for s in seeds {
            if self.kept(s) && !seen[s.0] {
                seen[s.0] = true;
                stack.push(s);
            }
        }
        while let Some(v) = stack.pop() {
            for w in step(v) {
                if self.kept(w) && !seen[w.0] {
                    seen[w.0] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Sources of edges entering the removed set from outside it.
    fn entry_sources(&self) -> Vec<VertexId> {
        self.g
            .edge_ids()
            .filter(|&e| self.kept(self.g.src(e)) && !self.kept(self.g.dst(e)))
            .map(|e| self.g.src(e))
            .collect()
    }
}

fn any_both(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).any(|(x, y)| *x && *y)
}

pub fn finiteness(g: &Graph, e: VertexId) -> Result<FinitenessReport> {
    let c_finite = g.is_acyclic_at(e)?;
    let p = Punctured::new(g, &[e]);
    let cyclic = p.cyclic();
    let reaches_entry = p.backward(p.entry_sources());
    let from_exit = p.forward(g.out_edges(e).iter().map(|&f| g.dst(f)));
    let q_finite = !any_both(&cyclic, &reaches_entry);
    let on_return: Vec<bool> = reaches_entry
        .iter()
        .zip(&from_exit)
        .map(|(a, b)| *a && *b)
        .collect();
    let c1_finite = !any_both(&cyclic, &on_return);
    Ok(FinitenessReport {
        vertex: e,
        i_finite: q_finite && c_finite,
        q_finite,
        c_finite,
        c1_finite,
    })
}

pub fn component_finiteness(g: &Graph, block: BlockId) -> Result<ComponentFiniteness> {
    let cs = g.components();
    cs.le(block, block)?;
    let members = cs.block(block);
    let p = Punctured::new(g, members);
    let cyclic = p.cyclic();
    let reaches_entry = p.backward(p.entry_sources());
    let q_finite = !any_both(&cyclic, &reaches_entry);
    let internal_cycle = members.len() > 1 || g.has_loop_at(members[0]);
    Ok(ComponentFiniteness {
        block,
        i_finite: q_finite && !internal_cycle,
        q_finite,
    })
}

/// Number of paths of the punctured graph ending at each kept vertex that
/// can reach an entry edge. `None` when that region contains a cycle.
fn paths_into(p: &Punctured<'_>) -> Option<Vec<u128>> {
    let g = p.g;
    let region = p.backward(p.entry_sources());
    let cyclic = p.cyclic();
    if any_both(&cyclic, &region) {
        return None;
    }
    // Predecessors of region vertices are themselves in the region, so a
    // memoized walk over in-edges stays inside an acyclic set.
    let mut memo: Vec<Option<u128>> = vec![None; g.vertex_count()];
    for v in g.vertex_ids().filter(|v| region[v.0]) {
        count_into(g, p, v, &mut memo);
    }
    Some(memo.into_iter().map(|c| c.unwrap_or(0)).collect())
}

fn count_into(g: &Graph, p: &Punctured<'_>, v: VertexId, memo: &mut [Option<u128>]) -> u128 {
    if let Some(c) = memo[v.0] {
        return c;
    }
    let mut total: u128 = 1;
    for &f in g.in_edges(v) {
        let x = g.src(f);
        if p.kept(x) {
            total = total.saturating_add(count_into(g, p, x, memo));
        }
    }
    memo[v.0] = Some(total);
    total
}

/// Exact size of the set of first-visit paths into `targets`: the target
/// vertices themselves plus every path whose only visit to `targets` is its
/// final vertex.
pub(crate) fn first_visit_count(g: &Graph, targets: &[VertexId]) -> Cardinality {
    let p = Punctured::new(g, targets);
    let Some(counts) = paths_into(&p) else {
        return Cardinality::Infinite;
    };
    let mut total = targets.len() as u128;
    for e in g.edge_ids() {
        let (s, d) = (g.src(e), g.dst(e));
        if p.kept(s) && !p.kept(d) {
            total = total.saturating_add(counts[s.0]);
        }
    }
    Cardinality::Finite(total)
}

/// Exact number of cycles at `e` with no interior visit of `e`.
pub(crate) fn first_return_count(g: &Graph, e: VertexId) -> Cardinality {
    let report = match finiteness(g, e) {
        Ok(r) => r,
        Err(_) => return Cardinality::Finite(0),
    };
    if !report.c1_finite {
        return Cardinality::Infinite;
    }
    let p = Punctured::new(g, &[e]);
    let reaches_entry = p.backward(p.entry_sources());
    let mut memo: Vec<Option<u128>> = vec![None; g.vertex_count()];
    let mut total: u128 = 0;
    for &f in g.out_edges(e) {
        let w = g.dst(f);
        total = total.saturating_add(if w == e {
            1
        } else {
            count_returns(g, e, w, &reaches_entry, &mut memo)
        });
    }
    Cardinality::Finite(total)
}

// Paths from `w` avoiding `e` until a final edge into `e`. Restricted to
// vertices that can still reach `e`, which is acyclic when the set is finite.
fn count_returns(
    g: &Graph,
    e: VertexId,
    w: VertexId,
    reaches_entry: &[bool],
    memo: &mut [Option<u128>],
) -> u128 {
    if !reaches_entry[w.0] {
        return 0;
    }
    if let Some(c) = memo[w.0] {
        return c;
    }
    let mut total: u128 = 0;
    for &f in g.out_edges(w) {
        let y = g.dst(f);
        total = total.saturating_add(if y == e {
            1
        } else {
            count_returns(g, e, y, reaches_entry, memo)
        });
    }
    memo[w.0] = Some(total);
    total
}
