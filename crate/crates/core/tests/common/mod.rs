//! Brute-force oracles, written from the definitions and independent of the
//! library's algorithms.

#![allow(dead_code)]

use gis::graph::{EdgeId, Graph, VertexId};
use gis::{Element, Path};

/// Every path of length at most `max_len`, by extending edge sequences one
/// edge at a time and keeping the composable ones.
pub fn all_paths(g: &Graph, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = g.vertex_ids().map(Path::vertex).collect();
    let mut layer: Vec<Vec<EdgeId>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seq in &layer {
            for f in g.edge_ids() {
                let mut s = seq.clone();
                s.push(f);
                if let Ok(p) = Path::from_edges(g, s.clone()) {
                    out.push(p);
                    next.push(s);
                }
            }
        }
        layer = next;
    }
    out
}

/// The vertex sequence of a path, recomputed from its edges.
pub fn visits(g: &Graph, p: &Path) -> Vec<VertexId> {
    let mut v = vec![p.source()];
    for &f in p.edges() {
        v.push(g.edge(f).dst);
    }
    v
}

/// First-visit membership: the only visit of the set is the last vertex.
pub fn first_visit_into(g: &Graph, p: &Path, inside: impl Fn(VertexId) -> bool) -> bool {
    let vs = visits(g, p);
    vs.iter().position(|&v| inside(v)) == Some(vs.len() - 1)
}

pub fn is_cycle_at(p: &Path, e: VertexId) -> bool {
    p.source() == e && p.range() == e
}

/// `e` itself, or a cycle at `e` with no interior visit of `e`.
pub fn is_first_return(g: &Graph, p: &Path, e: VertexId) -> bool {
    let vs = visits(g, p);
    is_cycle_at(p, e) && (vs.len() < 3 || vs[1..vs.len() - 1].iter().all(|&v| v != e))
}

/// Reflexive-transitive reachability by Floyd–Warshall.
pub fn reach(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for f in g.edge_ids() {
        let e = g.edge(f);
        r[e.src.0][e.dst.0] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

/// Whether some cycle of length at least one passes through `v`.
pub fn on_cycle(g: &Graph, v: VertexId) -> bool {
    let r = reach(g);
    g.edge_ids().any(|f| {
        let e = g.edge(f);
        e.src == v && r[e.dst.0][v.0]
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Letter {
    V(VertexId),
    E(EdgeId),
    I(EdgeId),
}

fn word(x: &Element) -> Option<Vec<Letter>> {
    let (u, v) = x.parts()?;
    if u.is_vertex() && v.is_vertex() {
        return Some(vec![Letter::V(u.range())]);
    }
    let mut w: Vec<Letter> = u.edges().iter().map(|&f| Letter::E(f)).collect();
    w.extend(v.edges().iter().rev().map(|&f| Letter::I(f)));
    Some(w)
}

/// Reduces two adjacent letters; `Err(())` is zero, `Ok(None)` keeps both.
fn step(g: &Graph, a: Letter, b: Letter) -> Result<Option<Letter>, ()> {
    use Letter::*;
    let s = |f: EdgeId| g.edge(f).src;
    let r = |f: EdgeId| g.edge(f).dst;
    let keep = |ok: bool| if ok { Ok(None) } else { Err(()) };
    match (a, b) {
        (V(x), V(y)) => if x == y { Ok(Some(V(x))) } else { Err(()) },
        (V(x), E(f)) => if s(f) == x { Ok(Some(E(f))) } else { Err(()) },
        (E(f), V(x)) => if r(f) == x { Ok(Some(E(f))) } else { Err(()) },
        (V(x), I(f)) => if r(f) == x { Ok(Some(I(f))) } else { Err(()) },
        (I(f), V(x)) => if s(f) == x { Ok(Some(I(f))) } else { Err(()) },
        (I(f), E(h)) => if f == h { Ok(Some(V(r(f)))) } else { Err(()) },
        (E(f), E(h)) => keep(r(f) == s(h)),
        (I(f), I(h)) => keep(s(f) == r(h)),
        (E(f), I(h)) => keep(r(f) == r(h)),
    }
}

/// Multiplication by rewriting the concatenated word with the defining
/// relations `e⁻¹e = r(e)`, `e⁻¹f = 0` and the vertex rules.
pub fn rewrite_multiply(g: &Graph, x: &Element, y: &Element) -> Element {
    let (Some(a), Some(b)) = (word(x), word(y)) else {
        return Element::zero(g);
    };
    let mut stack: Vec<Letter> = Vec::new();
    for l in a.into_iter().chain(b) {
        let mut cur = l;
        loop {
            let Some(&top) = stack.last() else {
                stack.push(cur);
                break;
            };
            match step(g, top, cur) {
                Err(()) => return Element::zero(g),
                Ok(None) => {
                    stack.push(cur);
                    break;
                }
                Ok(Some(m)) => {
                    stack.pop();
                    cur = m;
                }
            }
        }
    }
    if let [Letter::V(v)] = stack[..] {
        return Element::vertex(g, v);
    }
    let u: Vec<EdgeId> = stack
        .iter()
        .filter_map(|l| if let Letter::E(f) = l { Some(*f) } else { None })
        .collect();
    let mut v: Vec<EdgeId> = stack
        .iter()
        .filter_map(|l| if let Letter::I(f) = l { Some(*f) } else { None })
        .collect();
    v.reverse();
    let at = |p: &[EdgeId]| p.last().map(|&f| g.edge(f).dst);
    let e = at(&u).or(at(&v)).expect("nonempty word");
    let path = |p: Vec<EdgeId>| {
        if p.is_empty() {
            Path::vertex(e)
        } else {
            Path::from_edges(g, p).expect("reduced words are composable")
        }
    };
    Element::pair(g, path(u), path(v)).expect("reduced words share a range")
}

/// All nonzero elements `uv⁻¹` with `|u|, |v| <= bound`, from [`all_paths`].
pub fn all_nonzero(g: &Graph, bound: usize) -> Vec<Element> {
    let paths = all_paths(g, bound);
    let mut out = Vec::new();
    for u in &paths {
        for v in paths.iter().filter(|v| v.range() == u.range()) {
            out.push(Element::pair(g, u.clone(), v.clone()).unwrap());
        }
    }
    out
}
