//! The embedding of a component's `J⁰`-class into the Brandt extension of the
//! graph inverse semigroup of the component's induced subgraph.
//!
//! `u₁u₂(v₁v₂)⁻¹ ↦ (u₁, u₂v₂⁻¹, v₁)` where `u₁, v₁` are first-visit paths of
//! the component and `u₂, v₂` stay inside it. The payload is transferred to
//! the induced subgraph by id.

use std::collections::BTreeSet;

use crate::brandt::{Brandt, BrandtElement, GisPayload};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::graph::{first_visit_count, BlockId, Cardinality, Graph, GraphTag};
use crate::path::{enumerate, factor_at_component, Anchor, Path, PathSet, SetKind};

pub type JClassImage = BrandtElement<Path, Element>;

#[derive(Debug, Clone)]
pub struct ComponentStructure {
    tag: GraphTag,
    block: BlockId,
    bound: usize,
    subgraph: Graph,
    first_visits: PathSet,
    indices: BTreeSet<Path>,
    q_size: Cardinality,
}

impl ComponentStructure {
    pub fn new(g: &Graph, block: BlockId, bound: usize) -> Result<Self> {
        let cs = g.components();
        cs.le(block, block)?;
        let members = cs.block(block);
        let subgraph = g.induced_subgraph(members)?;
        let first_visits = enumerate(g, SetKind::ComponentFirstVisit, Anchor::Component(block), bound)?;
        Ok(ComponentStructure {
            tag: g.tag(),
            block,
            bound,
            subgraph,
            indices: first_visits.members.iter().cloned().collect(),
            first_visits,
            q_size: first_visit_count(g, members),
        })
    }

    pub fn block(&self) -> BlockId {
        self.block
    }

    /// The subgraph induced by the component.
    pub fn subgraph(&self) -> &Graph {
        &self.subgraph
    }

    pub fn first_visits(&self) -> &PathSet {
        &self.first_visits
    }

    /// Exact `|Q_A|`.
    pub fn q_size(&self) -> Cardinality {
        self.q_size
    }

    /// The target `B⁰_{Q_A}(G(E_A))` over the materialized indices.
    pub fn brandt(&self) -> Brandt<GisPayload<'_>, Path> {
        Brandt::new(GisPayload(&self.subgraph), self.indices.iter().cloned())
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if g.tag() == self.tag {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    fn domain(&self, g: &Graph) -> String {
        format!(
            "J_{}",
            g.format_vertex_set(g.components().block(self.block))
        )
    }

    pub fn embed(&self, g: &Graph, x: &Element) -> Result<JClassImage> {
        self.check_graph(g)?;
        if x.tag() != self.tag {
            return Err(Error::GraphMismatch);
        }
        let Some((u, v)) = x.parts() else {
            return Ok(BrandtElement::Zero);
        };
        if !g.components().contains(self.block, u.range()) {
            return Err(Error::OutsideDomain {
                element: x.to_literal(g),
                domain: self.domain(g),
            });
        }
        let (u1, u2) = factor_at_component(g, u, self.block)?;
        let (v1, v2) = factor_at_component(g, v, self.block)?;
        for q in [&u1, &v1] {
            if !self.indices.contains(q) {
                return Err(Error::BoundExceeded {
                    what: format!("first-visit path {}", q.to_literal(g)),
                    bound: self.bound,
                });
            }
        }
        let payload = Element::pair(
            &self.subgraph,
            u2.transfer(g, &self.subgraph)?,
            v2.transfer(g, &self.subgraph)?,
        )?;
        Ok(BrandtElement::Triple {
            a: u1,
            s: payload,
            b: v1,
        })
    }

    /// Inverse of [`ComponentStructure::embed`] on its image. A triple
    /// `(a, uv⁻¹, b)` lies in the image iff `s(u) = r(a)` and `s(v) = r(b)`.
    pub fn restore(&self, g: &Graph, y: &JClassImage) -> Result<Element> {
        self.check_graph(g)?;
        let BrandtElement::Triple { a, s, b } = y else {
            return Ok(Element::zero(g));
        };
        for q in [a, b] {
            if !self.indices.contains(q) {
                return Err(Error::UnknownIndex(q.to_literal(g)));
            }
        }
        if s.tag() != self.subgraph.tag() {
            return Err(Error::GraphMismatch);
        }
        let Some((p, q)) = s.parts() else {
            return Ok(Element::zero(g));
        };
        let p = p.transfer(&self.subgraph, g)?;
        let q = q.transfer(&self.subgraph, g)?;
        if p.source() != a.range() || q.source() != b.range() {
            return Err(Error::OutsideDomain {
                element: self.render(g, y),
                domain: "the image of the embedding".into(),
            });
        }
        Element::pair(g, a.concat(&p)?, b.concat(&q)?)
    }

    pub fn render(&self, g: &Graph, y: &JClassImage) -> String {
        match y {
            BrandtElement::Zero => "0".into(),
            BrandtElement::Triple { a, s, b } => format!(
                "({} | {} | {})",
                a.to_literal(g),
                s.to_literal(&self.subgraph),
                b.to_literal(g)
            ),
        }
    }
}

pub fn embed_jclass(g: &Graph, cs: &ComponentStructure, x: &Element) -> Result<JClassImage> {
    cs.embed(g, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{multiply, parse_element};
    use crate::fixtures;

    #[test]
    fn flow_embedding() {
        let g = fixtures::g_flow();
        let ab = g.components().block_of(g.vertex("a").unwrap());
        let st = ComponentStructure::new(&g, ab, 4).unwrap();
        assert_eq!(st.q_size(), Cardinality::Finite(2));
        assert_eq!(st.subgraph().edge_count(), 2);
        let x = parse_element(&g, "x.y;@a").unwrap();
        let y = st.embed(&g, &x).unwrap();
        assert_eq!(st.render(&g, &y), "(@a | x.y;@a | @a)");
        assert_eq!(st.restore(&g, &y).unwrap(), x);
        let z = parse_element(&g, "z;z").unwrap();
        assert!(matches!(st.embed(&g, &z), Err(Error::OutsideDomain { .. })));
    }

    #[test]
    fn flow_entry_embedding() {
        let g = fixtures::g_flow_entry();
        let ab = g.components().block_of(g.vertex("a").unwrap());
        let st = ComponentStructure::new(&g, ab, 4).unwrap();
        let x = parse_element(&g, "w.x;@b").unwrap();
        let y = st.embed(&g, &x).unwrap();
        assert_eq!(st.render(&g, &y), "(w | x;@b | @b)");
        assert_eq!(st.restore(&g, &y).unwrap(), x);

        let bx = st.brandt();
        let x2 = parse_element(&g, "@b;w.x.y.x").unwrap();
        let lhs = st.embed(&g, &multiply(&g, &x, &x2).unwrap()).unwrap();
        let rhs = bx.multiply(&y, &st.embed(&g, &x2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_image_triple_is_refused() {
        let g = fixtures::g_flow_entry();
        let ab = g.components().block_of(g.vertex("a").unwrap());
        let st = ComponentStructure::new(&g, ab, 4).unwrap();
        let sub = st.subgraph();
        let w = crate::path::parse_path(&g, "w").unwrap();
        let s = parse_element(sub, "y;@a").unwrap();
        let t = BrandtElement::Triple {
            a: w.clone(),
            s,
            b: w,
        };
        assert!(matches!(st.restore(&g, &t), Err(Error::OutsideDomain { .. })));
    }
}
