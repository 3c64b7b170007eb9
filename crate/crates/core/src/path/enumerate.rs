use std::fmt;
use std::str::FromStr;

use super::Path;
use crate::error::{Error, Result};
use crate::graph::{finiteness, BlockId, Graph, VertexId};

/// The anchored path sets.
///
/// Membership uses first-visit semantics: a path belongs to a first-visit
/// set iff no strictly shorter prefix (including the length-0 prefix) ends
/// at the anchor; first-return cycles may not revisit the anchor in their
/// interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetKind {
    /// `I_e`: paths ending at `e`.
    Incoming,
    /// `Q_e`: paths whose first visit of `e` is their last vertex.
    FirstVisit,
    /// `C_e`: paths starting and ending at `e`.
    Cycles,
    /// `C¹_e`: `e` plus cycles at `e` with no interior visit of `e`.
    FirstReturn,
    /// `I_A`: paths ending in the component `A`.
    ComponentIncoming,
    /// `Q_A`: paths whose first visit of `A` is their last vertex.
    ComponentFirstVisit,
}

impl SetKind {
    pub fn is_component_kind(self) -> bool {
        matches!(self, SetKind::ComponentIncoming | SetKind::ComponentFirstVisit)
    }

    pub fn name(self) -> &'static str {
        match self {
            SetKind::Incoming => "I_e",
            SetKind::FirstVisit => "Q_e",
            SetKind::Cycles => "C_e",
            SetKind::FirstReturn => "C1_e",
            SetKind::ComponentIncoming => "I_A",
            SetKind::ComponentFirstVisit => "Q_A",
        }
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "I_e" | "I" => SetKind::Incoming,
            "Q_e" | "Q" => SetKind::FirstVisit,
            "C_e" | "C" => SetKind::Cycles,
            "C1_e" | "C1" => SetKind::FirstReturn,
            "I_A" => SetKind::ComponentIncoming,
            "Q_A" => SetKind::ComponentFirstVisit,
            _ => {
                return Err(Error::syntax(
                    0,
                    s,
                    "expected one of I_e, Q_e, C_e, C1_e, I_A, Q_A",
                ))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Anchor {
    Vertex(VertexId),
    Component(BlockId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSet {
    pub kind: SetKind,
    pub anchor: Anchor,
    pub bound: usize,
    /// Every qualifying path of length at most `bound`, shortest first.
    pub members: Vec<Path>,
    /// True iff no qualifying path is longer than `bound`.
    pub complete: bool,
}

impl PathSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.members.binary_search(p).is_ok()
    }
}

fn targets(g: &Graph, kind: SetKind, anchor: Anchor) -> Result<Vec<VertexId>> {
    match (kind.is_component_kind(), anchor) {
        (false, Anchor::Vertex(v)) => {
            g.check_vertex(v)?;
            Ok(vec![v])
        }
        (true, Anchor::Component(b)) => {
            let cs = g.components();
            if b.0 >= cs.len() {
                return Err(Error::UnknownComponent(format!("#{}", b.0)));
            }
            Ok(cs.block(b).to_vec())
        }
        (true, Anchor::Vertex(_)) => Err(Error::UnknownComponent(format!(
            "{kind} needs a component anchor"
        ))),
        (false, Anchor::Component(_)) => Err(Error::UnknownVertex(format!(
            "{kind} needs a vertex anchor"
        ))),
    }
}

/// Membership by definition, independent of enumeration.
pub fn is_member(g: &Graph, kind: SetKind, anchor: Anchor, p: &Path) -> Result<bool> {
    let t = targets(g, kind, anchor)?;
    let visits: Vec<VertexId> = p.visits(g).collect();
    let last = visits.len() - 1;
    let in_t = |v: &VertexId| t.contains(v);
    Ok(match kind {
        SetKind::Incoming | SetKind::ComponentIncoming => in_t(&p.range()),
        SetKind::FirstVisit | SetKind::ComponentFirstVisit => {
            in_t(&p.range()) && !visits[..last].iter().any(in_t)
        }
        SetKind::Cycles => p.source() == t[0] && p.range() == t[0],
        SetKind::FirstReturn => {
            p.source() == t[0]
                && p.range() == t[0]
                && (last == 0 || !visits[1..last].iter().any(in_t))
        }
    })
}

/// Search node: a path ending in the anchor, grown backwards.
struct Node {
    path: Path,
    member: bool,
    extendable: bool,
}

fn prepend(g: &Graph, f: crate::graph::EdgeId, p: &Path) -> Path {
    let mut edges = Vec::with_capacity(p.len() + 1);
    edges.push(f);
    edges.extend_from_slice(p.edges());
    Path {
        source: g.src(f),
        range: p.range(),
        edges,
    }
}

/// Enumerates every member of length `<= bound` in ascending path order.
///
/// Paths are grown backwards from the anchor over a pruned search tree in
/// which every node extends to a member, so `complete` is exact: the set is
/// finite (by the finiteness analysis) and the tree has no node deeper than
/// `bound`.
pub fn enumerate(g: &Graph, kind: SetKind, anchor: Anchor, bound: usize) -> Result<PathSet> {
    let t = targets(g, kind, anchor)?;
    let in_t = {
        let mut mask = vec![false; g.vertex_count()];
        for v in &t {
            mask[v.0] = true;
        }
        mask
    };

    // Vertices from which a node may still be completed into a member.
    let allowed: Vec<bool> = match kind {
        SetKind::Cycles => reach_from(g, &[t[0]], None),
        SetKind::FirstReturn => {
            let exits: Vec<VertexId> = g
                .out_edges(t[0])
                .iter()
                .map(|&f| g.dst(f))
                .filter(|&w| w != t[0])
                .collect();
            reach_from(g, &exits, Some(t[0]))
        }
        _ => vec![true; g.vertex_count()],
    };

    let finite = match kind {
        SetKind::Incoming => finiteness(g, t[0])?.i_finite,
        SetKind::FirstVisit => finiteness(g, t[0])?.q_finite,
        SetKind::Cycles => finiteness(g, t[0])?.c_finite,
        SetKind::FirstReturn => finiteness(g, t[0])?.c1_finite,
        SetKind::ComponentIncoming | SetKind::ComponentFirstVisit => {
            let Anchor::Component(b) = anchor else {
                unreachable!("checked by targets")
            };
            let cf = crate::graph::component_finiteness(g, b)?;
            if kind == SetKind::ComponentIncoming {
                cf.i_finite
            } else {
                cf.q_finite
            }
        }
    };

    let mut layer: Vec<Node> = t
        .iter()
        .map(|&v| Node {
            path: Path::vertex(v),
            member: match kind {
                SetKind::Cycles | SetKind::FirstReturn => v == t[0],
                _ => true,
            },
            extendable: true,
        })
        .collect();
    let mut members = Vec::new();
    let mut deeper = false;
    for depth in 0..=bound + 1 {
        if depth > bound {
            deeper = !layer.is_empty();
            break;
        }
        let mut found: Vec<Path> = layer
            .iter()
            .filter(|n| n.member)
            .map(|n| n.path.clone())
            .collect();
        found.sort();
        members.extend(found);

        let mut next = Vec::new();
        for node in layer.iter().filter(|n| n.extendable) {
            for &f in g.in_edges(node.path.source()) {
                let s = g.src(f);
                let child = match kind {
                    SetKind::Incoming | SetKind::ComponentIncoming => Node {
                        path: prepend(g, f, &node.path),
                        member: true,
                        extendable: true,
                    },
                    SetKind::FirstVisit | SetKind::ComponentFirstVisit => {
                        if in_t[s.0] {
                            continue;
                        }
                        Node {
                            path: prepend(g, f, &node.path),
                            member: true,
                            extendable: true,
                        }
                    }
                    SetKind::Cycles => {
                        if !allowed[s.0] {
                            continue;
                        }
                        Node {
                            path: prepend(g, f, &node.path),
                            member: s == t[0],
                            extendable: true,
                        }
                    }
                    SetKind::FirstReturn => {
                        if s == t[0] {
                            Node {
                                path: prepend(g, f, &node.path),
                                member: true,
                                extendable: false,
                            }
                        } else if allowed[s.0] {
                            Node {
                                path: prepend(g, f, &node.path),
                                member: false,
                                extendable: true,
                            }
                        } else {
                            continue;
                        }
                    }
                };
                next.push(child);
            }
        }
        layer = next;
    }

    Ok(PathSet {
        kind,
        anchor,
        bound,
        members,
        complete: finite && !deeper,
    })
}

/// Vertices reachable from `seeds`, optionally never entering `avoid`.
fn reach_from(g: &Graph, seeds: &[VertexId], avoid: Option<VertexId>) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = Vec::new();
    for &s in seeds {
        if Some(s) != avoid && !seen[s.0] {
            seen[s.0] = true;
            stack.push(s);
        }
    }
    while let Some(v) = stack.pop() {
        for &f in g.out_edges(v) {
            let w = g.dst(f);
            if Some(w) != avoid && !seen[w.0] {
                seen[w.0] = true;
                stack.push(w);
            }
        }
    }
    seen
}
