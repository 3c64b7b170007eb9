//! The global decomposition report: components with their order, and per
//! vertex the invariants `λ_e`, `|Q_e|` and the isomorphism type of `D_e⁰`.

use std::fmt;

use serde::Serialize;

use super::{ComponentStructure, LocalStructure};
use crate::error::Result;
use crate::graph::{BlockId, Cardinality, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub vertices: usize,
    pub edges: usize,
    pub bound: usize,
    pub acyclic: bool,
    /// Whether `J = D` on `G(E)`, i.e. every component is a single vertex.
    pub j_equals_d: bool,
    pub components: Vec<ComponentEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentEntry {
    pub block: Vec<String>,
    /// Components strictly below this one.
    pub below: Vec<Vec<String>>,
    /// Components strictly above this one.
    pub above: Vec<Vec<String>>,
    pub q_size: Cardinality,
    pub statement: String,
    pub vertices: Vec<VertexEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexEntry {
    pub vertex: String,
    pub lambda: Cardinality,
    pub q_size: Cardinality,
    pub acyclic_at: bool,
    pub iso_type: String,
    pub statement: String,
    /// Materialized first-return cycles, i.e. the generators up to the bound.
    pub generators: Vec<String>,
    pub generators_complete: bool,
}

fn names(g: &Graph, set: &[VertexId]) -> Vec<String> {
    set.iter().map(|&v| g.vertex_name(v).to_string()).collect()
}

fn subscript(set: &[String]) -> String {
    if set.len() == 1 {
        set[0].clone()
    } else {
        format!("{{{}}}", set.join(","))
    }
}

/// The isomorphism type of `D_e⁰`.
pub fn iso_type(acyclic_at: bool, lambda: Cardinality, q_size: Cardinality) -> String {
    if acyclic_at {
        format!("B⁰_{q_size} (matrix units)")
    } else if q_size == Cardinality::Finite(1) {
        format!("B⁰_1(P_{lambda}) ≅ P_{lambda}")
    } else {
        format!("B⁰_{q_size}(P_{lambda})")
    }
}

fn vertex_entry(g: &Graph, e: VertexId, bound: usize) -> Result<VertexEntry> {
    let ls = LocalStructure::new(g, e, bound)?;
    let acyclic_at = g.is_acyclic_at(e)?;
    let iso = iso_type(acyclic_at, ls.lambda(), ls.q_size());
    Ok(VertexEntry {
        vertex: g.vertex_name(e).to_string(),
        lambda: ls.lambda(),
        q_size: ls.q_size(),
        acyclic_at,
        statement: format!("D_{}^0 ≅ {iso}", g.vertex_name(e)),
        iso_type: iso,
        generators: ls.generators().iter().map(|p| p.to_literal(g)).collect(),
        generators_complete: ls.first_returns().complete,
    })
}

fn component_entry(g: &Graph, block: BlockId, bound: usize) -> Result<ComponentEntry> {
    let cs = g.components();
    let members = names(g, cs.block(block));
    let st = ComponentStructure::new(g, block, bound)?;
    let sub = subscript(&members);
    let statement = format!("J_{sub}^0 ↪ B⁰_{}(G(E_{sub}))", st.q_size());
    let vertices = cs
        .block(block)
        .iter()
        .map(|&e| vertex_entry(g, e, bound))
        .collect::<Result<_>>()?;
    Ok(ComponentEntry {
        below: cs
            .strictly_below(block)
            .into_iter()
            .map(|b| names(g, cs.block(b)))
            .collect(),
        above: cs
            .strictly_above(block)
            .into_iter()
            .map(|b| names(g, cs.block(b)))
            .collect(),
        block: members,
        q_size: st.q_size(),
        statement,
        vertices,
    })
}

/// Builds the report. Counts are exact; generator lists are materialized up
/// to `bound`.
pub fn structural_report(g: &Graph, bound: usize) -> Result<StructureReport> {
    let cs = g.components();
    let components = cs
        .block_ids()
        .map(|b| component_entry(g, b, bound))
        .collect::<Result<_>>()?;
    Ok(StructureReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        bound,
        acyclic: g.is_acyclic(),
        j_equals_d: cs.blocks().iter().all(|b| b.len() == 1),
        components,
    })
}

fn set_list(sets: &[Vec<String>]) -> String {
    if sets.is_empty() {
        return "-".into();
    }
    sets.iter()
        .map(|s| format!("{{{}}}", s.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "vertices: {}  edges: {}  bound: {}",
            self.vertices, self.edges, self.bound
        )?;
        writeln!(f, "acyclic: {}", self.acyclic)?;
        writeln!(f, "J=D: {}", self.j_equals_d)?;
        for c in &self.components {
            writeln!(f)?;
            writeln!(f, "component {{{}}}", c.block.join(","))?;
            writeln!(f, "  below: {}", set_list(&c.below))?;
            writeln!(f, "  above: {}", set_list(&c.above))?;
            writeln!(f, "  |Q_A| = {}", c.q_size)?;
            writeln!(f, "  {}", c.statement)?;
            for v in &c.vertices {
                writeln!(
                    f,
                    "  vertex {}: λ = {}  |Q| = {}  acyclic_at = {}",
                    v.vertex, v.lambda, v.q_size, v.acyclic_at
                )?;
                writeln!(f, "    {}", v.statement)?;
                if !v.generators.is_empty() || !v.generators_complete {
                    let more = if v.generators_complete { "" } else { " …" };
                    writeln!(f, "    generators: {}{more}", v.generators.join(" "))?;
                }
            }
        }
        Ok(())
    }
}
