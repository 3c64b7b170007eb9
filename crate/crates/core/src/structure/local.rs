//! Local structure at a vertex `e`: the isomorphism `f` from the cycle
//! subsemigroup `⟨C_e⟩` onto a polycyclic monoid, and the isomorphism `h`
//! from `D_e⁰` onto the Brandt `Q_e⁰`-extension of that monoid.
//!
//! The generators of the monoid are the first-return cycles at `e`
//! themselves, written as path literals. Both maps work on materialized
//! slices: a first-return cycle or first-visit path longer than the bound has
//! no label or index, and inputs that need one are refused.

use std::collections::HashMap;

use crate::brandt::{Brandt, BrandtElement};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::graph::{first_return_count, first_visit_count, Cardinality, Graph, GraphTag, VertexId};
use crate::path::{cycle_factorize, enumerate, factor_at_vertex, Anchor, Path, PathSet, SetKind};
use crate::polycyclic::{Alphabet, Label, PolyElement, Polycyclic};

pub type DClassImage = BrandtElement<Path, PolyElement>;

#[derive(Debug, Clone)]
pub struct LocalStructure {
    tag: GraphTag,
    vertex: VertexId,
    bound: usize,
    first_returns: PathSet,
    first_visits: PathSet,
    label_paths: Vec<Path>,
    labels: HashMap<Path, Label>,
    brandt: Brandt<Polycyclic, Path>,
    lambda: Cardinality,
    q_size: Cardinality,
}

impl LocalStructure {
    pub fn new(g: &Graph, e: VertexId, bound: usize) -> Result<Self> {
        let first_returns = enumerate(g, SetKind::FirstReturn, Anchor::Vertex(e), bound)?;
        let first_visits = enumerate(g, SetKind::FirstVisit, Anchor::Vertex(e), bound)?;
        let label_paths: Vec<Path> = first_returns
            .members
            .iter()
            .filter(|p| !p.is_vertex())
            .cloned()
            .collect();
        let alphabet = Alphabet::new(label_paths.iter().map(|p| p.to_literal(g)))?;
        let labels = label_paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), Label(i)))
            .collect();
        let brandt = Brandt::new(
            Polycyclic::new(alphabet),
            first_visits.members.iter().cloned(),
        );
        Ok(LocalStructure {
            tag: g.tag(),
            vertex: e,
            bound,
            lambda: first_return_count(g, e),
            q_size: first_visit_count(g, &[e]),
            first_returns,
            first_visits,
            label_paths,
            labels,
            brandt,
        })
    }

    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Exact `|C¹_e \ {e}|`.
    pub fn lambda(&self) -> Cardinality {
        self.lambda
    }

    /// Exact `|Q_e|`.
    pub fn q_size(&self) -> Cardinality {
        self.q_size
    }

    pub fn first_returns(&self) -> &PathSet {
        &self.first_returns
    }

    pub fn first_visits(&self) -> &PathSet {
        &self.first_visits
    }

    /// The generators, i.e. the materialized nontrivial first-return cycles.
    pub fn generators(&self) -> &[Path] {
        &self.label_paths
    }

    pub fn monoid(&self) -> &Polycyclic {
        self.brandt.payload()
    }

    pub fn brandt(&self) -> &Brandt<Polycyclic, Path> {
        &self.brandt
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if g.tag() == self.tag {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    fn word_of_cycle(&self, g: &Graph, u: &Path) -> Result<Vec<Label>> {
        cycle_factorize(g, u, self.vertex)?
            .into_iter()
            .map(|c| {
                self.labels.get(&c).copied().ok_or_else(|| Error::BoundExceeded {
                    what: format!("first-return cycle {}", c.to_literal(g)),
                    bound: self.bound,
                })
            })
            .collect()
    }

    fn cycle_of_word(&self, w: &[Label]) -> Result<Path> {
        let mut out = Path::vertex(self.vertex);
        for l in w {
            let p = self
                .label_paths
                .get(l.0)
                .ok_or_else(|| Error::UnknownLabel(format!("#{}", l.0)))?;
            out = out.concat(p)?;
        }
        Ok(out)
    }

    /// `f`: `uv⁻¹ ↦ f(u) f(v)⁻¹` for cycles `u`, `v` at `e`, where `f(u)` is
    /// the word of first-return factors of `u`.
    pub fn cycles_to_poly(&self, g: &Graph, x: &Element) -> Result<PolyElement> {
        self.check_graph(g)?;
        if x.tag() != self.tag {
            return Err(Error::GraphMismatch);
        }
        let Some((u, v)) = x.parts() else {
            return Ok(PolyElement::Zero);
        };
        let e = self.vertex;
        if u.source() != e || u.range() != e || v.source() != e {
            return Err(Error::OutsideDomain {
                element: x.to_literal(g),
                domain: format!("the cycle subsemigroup at {}", g.vertex_name(e)),
            });
        }
        Ok(PolyElement::pair(
            self.word_of_cycle(g, u)?,
            self.word_of_cycle(g, v)?,
        ))
    }

    /// `f⁻¹`.
    pub fn poly_to_cycles(&self, g: &Graph, p: &PolyElement) -> Result<Element> {
        self.check_graph(g)?;
        self.monoid().check(p)?;
        match p {
            PolyElement::Zero => Ok(Element::zero(g)),
            PolyElement::Pair { pos, neg } => {
                Element::pair(g, self.cycle_of_word(pos)?, self.cycle_of_word(neg)?)
            }
        }
    }

    /// `h`: `u₁u₂(v₁v₂)⁻¹ ↦ (u₁, f(u₂v₂⁻¹), v₁)` with `u₁, v₁` first-visit
    /// paths and `u₂, v₂` cycles at `e`.
    pub fn dclass_to_brandt(&self, g: &Graph, x: &Element) -> Result<DClassImage> {
        self.check_graph(g)?;
        if x.tag() != self.tag {
            return Err(Error::GraphMismatch);
        }
        let Some((u, v)) = x.parts() else {
            return Ok(BrandtElement::Zero);
        };
        if u.range() != self.vertex {
            return Err(Error::OutsideDomain {
                element: x.to_literal(g),
                domain: format!("D_{}", g.vertex_name(self.vertex)),
            });
        }
        let (u1, u2) = factor_at_vertex(g, u, self.vertex)?;
        let (v1, v2) = factor_at_vertex(g, v, self.vertex)?;
        for q in [&u1, &v1] {
            if !self.first_visits.contains(q) {
                return Err(Error::BoundExceeded {
                    what: format!("first-visit path {}", q.to_literal(g)),
                    bound: self.bound,
                });
            }
        }
        let payload = PolyElement::pair(self.word_of_cycle(g, &u2)?, self.word_of_cycle(g, &v2)?);
        self.brandt.triple(u1, payload, v1)
    }

    /// `h⁻¹`: `(a, s, b) ↦ a·f⁻¹(s)` with the cycle parts appended.
    pub fn brandt_to_dclass(&self, g: &Graph, y: &DClassImage) -> Result<Element> {
        self.check_graph(g)?;
        match y {
            BrandtElement::Zero => Ok(Element::zero(g)),
            BrandtElement::Triple { a, s, b } => {
                for q in [a, b] {
                    if !self.first_visits.contains(q) {
                        return Err(Error::UnknownIndex(q.to_literal(g)));
                    }
                }
                let PolyElement::Pair { pos, neg } = s else {
                    return Ok(Element::zero(g));
                };
                let u = a.concat(&self.cycle_of_word(pos)?)?;
                let v = b.concat(&self.cycle_of_word(neg)?)?;
                Element::pair(g, u, v)
            }
        }
    }

    pub fn render(&self, g: &Graph, y: &DClassImage) -> String {
        self.brandt.render_with(y, |p| p.to_literal(g))
    }
}

pub fn iso_cycles_to_poly(g: &Graph, ls: &LocalStructure, x: &Element) -> Result<PolyElement> {
    ls.cycles_to_poly(g, x)
}

pub fn iso_dclass_to_brandt(g: &Graph, ls: &LocalStructure, x: &Element) -> Result<DClassImage> {
    ls.dclass_to_brandt(g, x)
}
