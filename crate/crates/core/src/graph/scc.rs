use super::{Graph, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockId(pub usize);

/// Strongly connected components with the reachability order between them.
///
/// `X <= Y` iff some path starts in `Y` and ends in `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSet {
    blocks: Vec<Vec<VertexId>>,
    block_of: Vec<BlockId>,
    // Condensation edges Y -> X for every graph edge from Y into X != Y.
    successors: Vec<Vec<BlockId>>,
}

impl ComponentSet {
    /// Blocks sorted internally; block order follows the smallest member.
    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_ids(&self) -> impl ExactSizeIterator<Item = BlockId> {
        (0..self.blocks.len()).map(BlockId)
    }

    pub fn block(&self, id: BlockId) -> &[VertexId] {
        &self.blocks[id.0]
    }

    pub fn block_of(&self, v: VertexId) -> BlockId {
        self.block_of[v.0]
    }

    pub fn contains(&self, id: BlockId, v: VertexId) -> bool {
        self.block_of.get(v.0) == Some(&id)
    }

    /// Finds the block whose vertex set is exactly `set` (any order).
    pub fn find_block(&self, set: &[VertexId]) -> Result<BlockId> {
        let mut sorted = set.to_vec();
        sorted.sort();
        sorted.dedup();
        self.blocks
            .iter()
            .position(|b| *b == sorted)
            .map(BlockId)
            .ok_or_else(|| {
                let ids: Vec<String> = sorted.iter().map(|v| format!("#{}", v.0)).collect();
                Error::UnknownComponent(format!("{{{}}}", ids.join(",")))
            })
    }

    fn check(&self, id: BlockId) -> Result<()> {
        if id.0 < self.blocks.len() {
            Ok(())
        } else {
            Err(Error::UnknownComponent(format!("#{}", id.0)))
        }
    }

    /// `x <= y`: some path runs from `y` into `x`.
    pub fn le(&self, x: BlockId, y: BlockId) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        if x == y {
            return Ok(true);
        }
        let mut seen = vec![false; self.blocks.len()];
        let mut stack = vec![y];
        seen[y.0] = true;
        while let Some(b) = stack.pop() {
            for &next in &self.successors[b.0] {
                if next == x {
                    return Ok(true);
                }
                if !seen[next.0] {
                    seen[next.0] = true;
                    stack.push(next);
                }
            }
        }
        Ok(false)
    }

    /// All blocks `x` with `x <= y`, `x != y`, in block order.
    pub fn strictly_below(&self, y: BlockId) -> Vec<BlockId> {
        let mut seen = vec![false; self.blocks.len()];
        let mut stack = vec![y];
        seen[y.0] = true;
        while let Some(b) = stack.pop() {
            for &next in &self.successors[b.0] {
                if !seen[next.0] {
                    seen[next.0] = true;
                    stack.push(next);
                }
            }
        }
        seen[y.0] = false;
        self.block_ids().filter(|b| seen[b.0]).collect()
    }

    pub fn strictly_above(&self, x: BlockId) -> Vec<BlockId> {
        self.block_ids()
            .filter(|&y| y != x && self.le(x, y).unwrap_or(false))
            .collect()
    }
}

pub fn component_order(cs: &ComponentSet, x: BlockId, y: BlockId) -> Result<bool> {
    cs.le(x, y)
}

/// Tarjan's algorithm, iterative so deep graphs do not exhaust the call stack.
pub(crate) fn tarjan(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = adjacency.len();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next_index = 0;
    // (vertex, position of the next successor to inspect)
    let mut work: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        work.push((root, 0));
        while let Some(&mut (v, ref mut pos)) = work.last_mut() {
            if *pos == 0 && index[v] == UNVISITED {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adjacency[v].get(*pos) {
                *pos += 1;
                if index[w] == UNVISITED {
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comps.push(comp);
            }
        }
    }
    comps
}

pub fn scc(g: &Graph) -> ComponentSet {
    let adjacency: Vec<Vec<usize>> = g
        .vertex_ids()
        .map(|v| g.out_edges(v).iter().map(|&e| g.dst(e).0).collect())
        .collect();
    let mut raw = tarjan(&adjacency);
    for comp in &mut raw {
        comp.sort_unstable();
    }
    raw.sort_unstable_by_key(|c| c[0]);

    let blocks: Vec<Vec<VertexId>> = raw
        .into_iter()
        .map(|c| c.into_iter().map(VertexId).collect())
        .collect();
    let mut block_of = vec![BlockId(0); g.vertex_count()];
    for (i, b) in blocks.iter().enumerate() {
        for v in b {
            block_of[v.0] = BlockId(i);
        }
    }
    let mut successors = vec![Vec::new(); blocks.len()];
    for e in g.edge_ids() {
        let (from, to) = (block_of[g.src(e).0], block_of[g.dst(e).0]);
        if from != to {
            successors[from.0].push(to);
        }
    }
    for s in &mut successors {
        s.sort_unstable();
        s.dedup();
    }
    ComponentSet {
        blocks,
        block_of,
        successors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(g: &Graph, cs: &ComponentSet) -> Vec<Vec<String>> {
        cs.blocks()
            .iter()
            .map(|b| b.iter().map(|&v| g.vertex_name(v).to_string()).collect())
            .collect()
    }

    #[test]
    fn cycle_is_one_component() {
        let g = fixtures::g_c2();
        assert_eq!(names(&g, &scc(&g)), vec![vec!["a", "b"]]);
    }

    #[test]
    fn single_edge_orders_components() {
        let g = fixtures::g_a2();
        let cs = scc(&g);
        assert_eq!(names(&g, &cs), vec![vec!["a"], vec!["b"]]);
        let a = cs.block_of(g.vertex("a").unwrap());
        let b = cs.block_of(g.vertex("b").unwrap());
        assert!(cs.le(b, a).unwrap());
        assert!(!cs.le(a, b).unwrap());
    }

    #[test]
    fn lone_vertex() {
        let g = Graph::new(["v"], Vec::new()).unwrap();
        let cs = scc(&g);
        assert_eq!(cs.len(), 1);
        assert!(cs.le(BlockId(0), BlockId(0)).unwrap());
    }

    #[test]
    fn flow_order() {
        let g = fixtures::g_flow();
        let cs = scc(&g);
        let c = cs.block_of(g.vertex("c").unwrap());
        let ab = cs.find_block(&[g.vertex("b").unwrap(), g.vertex("a").unwrap()]).unwrap();
        assert!(component_order(&cs, c, ab).unwrap());
        assert!(!component_order(&cs, ab, c).unwrap());
        assert_eq!(cs.strictly_below(ab), vec![c]);
        assert_eq!(cs.strictly_above(c), vec![ab]);
        assert!(component_order(&cs, BlockId(9), ab).is_err());
    }

    #[test]
    fn isolated_vertices_are_incomparable() {
        let g = fixtures::g_iso2();
        let cs = scc(&g);
        assert!(!cs.le(BlockId(0), BlockId(1)).unwrap());
        assert!(!cs.le(BlockId(1), BlockId(0)).unwrap());
    }

    #[test]
    fn deep_chain_does_not_overflow() {
        let n = 200_000;
        let adjacency: Vec<Vec<usize>> = (0..n)
            .map(|i| if i + 1 < n { vec![i + 1] } else { vec![0] })
            .collect();
        let comps = tarjan(&adjacency);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), n);
    }
}
