//! Elements of the graph inverse semigroup `G(E)`.
//!
//! A nonzero element is stored in its unique normal form `uv⁻¹` with
//! `r(u) = r(v)`. Multiplication only ever produces normal forms, so equality
//! is structural.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{BlockId, Graph, GraphTag, VertexId};
use crate::path::{enumerate, parse_path_at, Anchor, Path, SetKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Zero,
    Pair(Path, Path),
}

/// `0` or `uv⁻¹`, tagged with the graph it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    tag: GraphTag,
    repr: Repr,
}

impl Element {
    pub fn zero(g: &Graph) -> Self {
        Element {
            tag: g.tag(),
            repr: Repr::Zero,
        }
    }

    /// `uv⁻¹`; requires `r(u) = r(v)`.
    pub fn pair(g: &Graph, u: Path, v: Path) -> Result<Self> {
        if u.range() != v.range() {
            return Err(Error::RangeMismatch(format!(
                "{} ends at {} but {} ends at {}",
                u.to_literal(g),
                g.vertex_name(u.range()),
                v.to_literal(g),
                g.vertex_name(v.range())
            )));
        }
        Ok(Element {
            tag: g.tag(),
            repr: Repr::Pair(u, v),
        })
    }

    /// The vertex idempotent `e = ee⁻¹`.
    pub fn vertex(g: &Graph, e: VertexId) -> Self {
        Element {
            tag: g.tag(),
            repr: Repr::Pair(Path::vertex(e), Path::vertex(e)),
        }
    }

    /// The path `u` as the element `u r(u)⁻¹`.
    pub fn path(g: &Graph, u: Path) -> Self {
        let r = Path::vertex(u.range());
        Element {
            tag: g.tag(),
            repr: Repr::Pair(u, r),
        }
    }

    pub fn tag(&self) -> GraphTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    /// `(u, v)` for `uv⁻¹`, `None` for zero.
    pub fn parts(&self) -> Option<(&Path, &Path)> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Pair(u, v) => Some((u, v)),
        }
    }

    pub fn into_parts(self) -> Option<(Path, Path)> {
        match self.repr {
            Repr::Zero => None,
            Repr::Pair(u, v) => Some((u, v)),
        }
    }

    /// Common range vertex of a nonzero element.
    pub fn range(&self) -> Option<VertexId> {
        self.parts().map(|(u, _)| u.range())
    }

    pub fn inverse(&self) -> Self {
        inverse(self)
    }

    pub fn to_literal(&self, g: &Graph) -> String {
        match &self.repr {
            Repr::Zero => "0".to_string(),
            Repr::Pair(u, v) => format!("{};{}", u.to_literal(g), v.to_literal(g)),
        }
    }

    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        DisplayElement(self, g)
    }
}

struct DisplayElement<'a>(&'a Element, &'a Graph);

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_literal(self.1))
    }
}

fn check_tags(g: &Graph, xs: &[&Element]) -> Result<()> {
    if xs.iter().all(|x| x.tag == g.tag()) {
        Ok(())
    } else {
        Err(Error::GraphMismatch)
    }
}

/// `u₁v₁⁻¹ · u₂v₂⁻¹` by prefix cancellation.
pub fn multiply(g: &Graph, x: &Element, y: &Element) -> Result<Element> {
    check_tags(g, &[x, y])?;
    let (Some((u1, v1)), Some((u2, v2))) = (x.parts(), y.parts()) else {
        return Ok(Element::zero(g));
    };
    let repr = if let Some(w) = v1.strip_prefix_of(u2) {
        Repr::Pair(u1.concat(&w)?, v2.clone())
    } else if let Some(w) = u2.strip_prefix_of(v1) {
        Repr::Pair(u1.clone(), v2.concat(&w)?)
    } else {
        Repr::Zero
    };
    Ok(Element { tag: g.tag(), repr })
}

/// `(uv⁻¹)⁻¹ = vu⁻¹`.
pub fn inverse(x: &Element) -> Element {
    match &x.repr {
        Repr::Zero => x.clone(),
        Repr::Pair(u, v) => Element {
            tag: x.tag,
            repr: Repr::Pair(v.clone(), u.clone()),
        },
    }
}

/// Idempotents are `0` and the `uu⁻¹`.
pub fn is_idempotent(g: &Graph, x: &Element) -> Result<bool> {
    check_tags(g, &[x])?;
    Ok(match x.parts() {
        None => true,
        Some((u, v)) => u == v,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    D,
    J,
    L,
    R,
    H,
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "D" | "d" => Ok(Relation::D),
            "J" | "j" => Ok(Relation::J),
            "L" | "l" => Ok(Relation::L),
            "R" | "r" => Ok(Relation::R),
            "H" | "h" => Ok(Relation::H),
            other => Err(Error::syntax(0, other, "expected one of D, J, L, R, H")),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::D => "D",
            Relation::J => "J",
            Relation::L => "L",
            Relation::R => "R",
            Relation::H => "H",
        })
    }
}

/// Green's relations. For `ab⁻¹`, `cd⁻¹`: `L` iff `b = d`, `R` iff `a = c`,
/// `D` iff `r(a) = r(c)`, `J` iff `r(a)` and `r(c)` are strongly connected.
/// Zero is related only to itself.
pub fn green(g: &Graph, rel: Relation, x: &Element, y: &Element) -> Result<bool> {
    check_tags(g, &[x, y])?;
    let (Some((a, b)), Some((c, d))) = (x.parts(), y.parts()) else {
        return Ok(x.is_zero() && y.is_zero());
    };
    Ok(match rel {
        Relation::L => b == d,
        Relation::R => a == c,
        Relation::H => a == c && b == d,
        Relation::D => a.range() == c.range(),
        Relation::J => {
            let cs = g.components();
            cs.block_of(a.range()) == cs.block_of(c.range())
        }
    })
}

/// The unique vertex in the D-class of a nonzero element.
pub fn dclass_vertex(g: &Graph, x: &Element) -> Result<VertexId> {
    check_tags(g, &[x])?;
    x.range().ok_or_else(|| Error::OutsideDomain {
        element: "0".into(),
        domain: "the nonzero elements".into(),
    })
}

/// All `uv⁻¹` with `r(u) = r(v) = e` and `|u|, |v| <= bound`, sorted.
pub fn enumerate_dclass(g: &Graph, e: VertexId, bound: usize) -> Result<Vec<Element>> {
    let paths = enumerate(g, SetKind::Incoming, Anchor::Vertex(e), bound)?.members;
    let mut out = Vec::with_capacity(paths.len() * paths.len());
    for u in &paths {
        for v in &paths {
            out.push(Element {
                tag: g.tag(),
                repr: Repr::Pair(u.clone(), v.clone()),
            });
        }
    }
    Ok(out)
}

/// The union of the bounded D-class slices over the vertices of `a`, sorted.
pub fn enumerate_jclass(g: &Graph, a: BlockId, bound: usize) -> Result<Vec<Element>> {
    let cs = g.components();
    cs.le(a, a)?;
    let mut out = Vec::new();
    for &e in cs.block(a) {
        out.extend(enumerate_dclass(g, e, bound)?);
    }
    out.sort();
    Ok(out)
}

/// Every nonzero element with `|u|, |v| <= bound`, sorted.
pub fn enumerate_nonzero(g: &Graph, bound: usize) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for e in g.vertex_ids() {
        out.extend(enumerate_dclass(g, e, bound)?);
    }
    out.sort();
    Ok(out)
}

/// Parses `0` or `<path>;<path>`; whitespace is ignored.
pub fn parse_element(g: &Graph, text: &str) -> Result<Element> {
    if text.trim() == "0" {
        return Ok(Element::zero(g));
    }
    let mut parts = text.splitn(3, ';');
    let first = parts.next().unwrap_or_default();
    let Some(second) = parts.next() else {
        return Err(Error::syntax(
            text.len(),
            text.trim(),
            "expected '0' or '<path>;<path>'",
        ));
    };
    if let Some(extra) = parts.next() {
        let pos = first.len() + second.len() + 1;
        return Err(Error::syntax(pos, format!(";{extra}"), "unexpected second ';'"));
    }
    let u = parse_path_at(g, first, 0)?;
    let v = parse_path_at(g, second, first.len() + 1)?;
    Element::pair(g, u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn el(g: &Graph, s: &str) -> Element {
        parse_element(g, s).unwrap()
    }

    fn mul(g: &Graph, x: &str, y: &str) -> String {
        multiply(g, &el(g, x), &el(g, y)).unwrap().to_literal(g)
    }

    #[test]
    fn multiplication_examples() {
        let r1 = fixtures::g_r1();
        assert_eq!(mul(&r1, "@e;p", "p;@e"), "@e;@e");
        let r2 = fixtures::g_r2();
        assert_eq!(mul(&r2, "@e;p", "q;@e"), "0");
        let iso = fixtures::g_iso2();
        assert_eq!(mul(&iso, "@a;@a", "@b;@b"), "0");
        let c2 = fixtures::g_c2();
        assert_eq!(mul(&c2, "x;@b", "y;@a"), "x.y;@a");
        // second branch: u₂ is a prefix of v₁
        assert_eq!(mul(&c2, "@a;x.y", "x;@b"), "@a;y");
        assert_eq!(mul(&c2, "0", "x;@b"), "0");
    }

    #[test]
    fn mixed_graphs_are_rejected() {
        let a = fixtures::g_a2();
        let c = fixtures::g_c2();
        let x = el(&a, "x;@b");
        let z = Element::zero(&c);
        assert_eq!(multiply(&a, &x, &z), Err(Error::GraphMismatch));
        assert_eq!(green(&a, Relation::D, &x, &z), Err(Error::GraphMismatch));
    }

    #[test]
    fn inverses_and_idempotents() {
        let g = fixtures::g_a2();
        assert_eq!(inverse(&el(&g, "x;@b")).to_literal(&g), "@b;x");
        assert!(inverse(&Element::zero(&g)).is_zero());
        let xx = el(&g, "x;x");
        assert_eq!(inverse(&xx), xx);
        assert!(is_idempotent(&g, &xx).unwrap());
        assert!(is_idempotent(&g, &Element::zero(&g)).unwrap());
        let x = el(&g, "x;@b");
        assert!(!is_idempotent(&g, &x).unwrap());
        assert!(multiply(&g, &x, &x).unwrap().is_zero());
    }

    #[test]
    fn green_examples() {
        let g = fixtures::g_a2();
        assert!(green(&g, Relation::D, &el(&g, "x;@b"), &el(&g, "@b;x")).unwrap());
        let c2 = fixtures::g_c2();
        let (a, b) = (el(&c2, "@a;@a"), el(&c2, "@b;@b"));
        assert!(green(&c2, Relation::J, &a, &b).unwrap());
        assert!(!green(&c2, Relation::D, &a, &b).unwrap());
        for x in enumerate_nonzero(&c2, 2).unwrap() {
            assert!(green(&c2, Relation::H, &x, &x).unwrap());
            assert!(!green(&c2, Relation::J, &x, &Element::zero(&c2)).unwrap());
        }
        let z = Element::zero(&c2);
        assert!(green(&c2, Relation::D, &z, &z).unwrap());
    }

    #[test]
    fn dclass_vertices() {
        let g = fixtures::g_a2();
        assert_eq!(dclass_vertex(&g, &el(&g, "x;@b")).unwrap(), g.vertex("b").unwrap());
        assert_eq!(dclass_vertex(&g, &el(&g, "@a;@a")).unwrap(), g.vertex("a").unwrap());
        assert!(dclass_vertex(&g, &Element::zero(&g)).is_err());
        let c2 = fixtures::g_c2();
        assert_eq!(dclass_vertex(&c2, &el(&c2, "x.y;@a")).unwrap(), c2.vertex("a").unwrap());
    }

    #[test]
    fn class_enumeration() {
        let g = fixtures::g_a2();
        let lits: Vec<String> = enumerate_dclass(&g, g.vertex("b").unwrap(), 1)
            .unwrap()
            .iter()
            .map(|x| x.to_literal(&g))
            .collect();
        assert_eq!(lits, ["@b;@b", "@b;x", "x;@b", "x;x"]);
        let lits: Vec<String> = enumerate_dclass(&g, g.vertex("a").unwrap(), 2)
            .unwrap()
            .iter()
            .map(|x| x.to_literal(&g))
            .collect();
        assert_eq!(lits, ["@a;@a"]);

        let f = fixtures::g_flow();
        let ab = f.components().block_of(f.vertex("a").unwrap());
        let lits: Vec<String> = enumerate_jclass(&f, ab, 0)
            .unwrap()
            .iter()
            .map(|x| x.to_literal(&f))
            .collect();
        assert_eq!(lits, ["@a;@a", "@b;@b"]);
    }

    #[test]
    fn literal_errors() {
        let g = fixtures::g_c2();
        assert!(matches!(parse_element(&g, "x"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_element(&g, "x;@b;y"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_element(&g, "x;y..x"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(parse_element(&g, "x;@a"), Err(Error::RangeMismatch(_))));
        assert_eq!(el(&g, " x . y ; @a ").to_literal(&g), "x.y;@a");
        assert!(el(&g, " 0 ").is_zero());
    }
}
