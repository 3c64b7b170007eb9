//! Exact computation in graph inverse semigroups over finite directed
//! multigraphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: multigraphs, strongly connected components and their order,
//!   induced subgraphs, and exact finiteness of the anchored path sets.
//! - [`path`]: paths, prefixes, bounded enumeration and the first-visit
//!   factorizations.
//! - [`element`]: normal forms `uv⁻¹`, multiplication, inversion and Green's
//!   relations.
//! - [`polycyclic`]: polycyclic monoids and confluent word reduction.
//! - [`brandt`]: Brandt `X⁰`-extensions over any semigroup with zero.
//! - [`structure`]: the maps from cycle subsemigroups to polycyclic monoids,
//!   from D-classes to Brandt extensions, the J-class embedding, the global
//!   report and the verification suite.

pub mod brandt;
pub mod element;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod path;
pub mod polycyclic;
pub mod structure;

pub use element::{Element, Relation};
pub use error::{Error, Result};
pub use graph::{BlockId, Graph, VertexId};
pub use path::Path;
