use super::Path;
use crate::error::{Error, Result};
use crate::graph::{BlockId, Graph, VertexId};

fn split_at_first(g: &Graph, u: &Path, hit: impl Fn(VertexId) -> bool) -> (Path, Path) {
    let k = u
        .visits(g)
        .position(hit)
        .expect("range lies in the target set");
    (u.prefix(g, k), u.suffix(g, k))
}

/// Splits `u` (ending at `e`) at its first visit of `e`: `u = u1 · u2` with
/// `u1` a first-visit path and `u2` a cycle at `e`.
pub fn factor_at_vertex(g: &Graph, u: &Path, e: VertexId) -> Result<(Path, Path)> {
    g.check_vertex(e)?;
    if u.range() != e {
        return Err(Error::RangeMismatch(format!(
            "{} does not end at {}",
            u.to_literal(g),
            g.vertex_name(e)
        )));
    }
    Ok(split_at_first(g, u, |v| v == e))
}

/// Splits `u` (ending in component `a`) at its first visit of `a`. The
/// second factor stays inside the component.
pub fn factor_at_component(g: &Graph, u: &Path, a: BlockId) -> Result<(Path, Path)> {
    let cs = g.components();
    cs.le(a, a)?;
    if !cs.contains(a, u.range()) {
        return Err(Error::RangeMismatch(format!(
            "{} does not end in {}",
            u.to_literal(g),
            g.format_vertex_set(cs.block(a))
        )));
    }
    Ok(split_at_first(g, u, |v| cs.contains(a, v)))
}

/// Cuts a cycle at `e` at every interior visit of `e`. The factors are
/// first-return cycles; the vertex path yields no factors.
pub fn cycle_factorize(g: &Graph, u: &Path, e: VertexId) -> Result<Vec<Path>> {
    g.check_vertex(e)?;
    if u.source() != e || u.range() != e {
        return Err(Error::OutsideDomain {
            element: u.to_literal(g),
            domain: format!("the cycles at {}", g.vertex_name(e)),
        });
    }
    let cuts: Vec<usize> = u
        .visits(g)
        .enumerate()
        .filter(|&(_, v)| v == e)
        .map(|(i, _)| i)
        .collect();
    Ok(cuts
        .windows(2)
        .map(|w| Path {
            source: e,
            range: e,
            edges: u.edges()[w[0]..w[1]].to_vec(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::path::parse_path;

    fn lit(g: &Graph, p: &Path) -> String {
        p.to_literal(g)
    }

    #[test]
    fn vertex_factorization() {
        let g = fixtures::g_c2();
        let a = g.vertex("a").unwrap();
        let (u1, u2) = factor_at_vertex(&g, &parse_path(&g, "y.x.y").unwrap(), a).unwrap();
        assert_eq!((lit(&g, &u1), lit(&g, &u2)), ("y".into(), "x.y".into()));
        let (u1, u2) = factor_at_vertex(&g, &parse_path(&g, "@a").unwrap(), a).unwrap();
        assert_eq!((lit(&g, &u1), lit(&g, &u2)), ("@a".into(), "@a".into()));
        assert!(matches!(
            factor_at_vertex(&g, &parse_path(&g, "x").unwrap(), a),
            Err(Error::RangeMismatch(_))
        ));

        let g = fixtures::g_a2();
        let b = g.vertex("b").unwrap();
        let (u1, u2) = factor_at_vertex(&g, &parse_path(&g, "x").unwrap(), b).unwrap();
        assert_eq!((lit(&g, &u1), lit(&g, &u2)), ("x".into(), "@b".into()));
    }

    #[test]
    fn component_factorization() {
        let g = fixtures::g_flow();
        let ab = g.components().block_of(g.vertex("a").unwrap());
        let (u1, u2) = factor_at_component(&g, &parse_path(&g, "x.y").unwrap(), ab).unwrap();
        assert_eq!((lit(&g, &u1), lit(&g, &u2)), ("@a".into(), "x.y".into()));
        let (u1, u2) = factor_at_component(&g, &parse_path(&g, "@b").unwrap(), ab).unwrap();
        assert_eq!((lit(&g, &u1), lit(&g, &u2)), ("@b".into(), "@b".into()));
        assert!(factor_at_component(&g, &parse_path(&g, "z").unwrap(), ab).is_err());

        let g = fixtures::g_flow_entry();
        let ab = g.components().block_of(g.vertex("a").unwrap());
        let (u1, u2) = factor_at_component(&g, &parse_path(&g, "w.x.y").unwrap(), ab).unwrap();
        assert_eq!((lit(&g, &u1), lit(&g, &u2)), ("w".into(), "x.y".into()));
    }

    #[test]
    fn cycle_factors() {
        let g = fixtures::g_c2();
        let a = g.vertex("a").unwrap();
        let f = cycle_factorize(&g, &parse_path(&g, "x.y.x.y").unwrap(), a).unwrap();
        let f: Vec<String> = f.iter().map(|p| lit(&g, p)).collect();
        assert_eq!(f, ["x.y", "x.y"]);
        assert!(cycle_factorize(&g, &parse_path(&g, "@a").unwrap(), a)
            .unwrap()
            .is_empty());
        assert!(cycle_factorize(&g, &parse_path(&g, "y").unwrap(), a).is_err());

        let g = fixtures::g_r2();
        let e = g.vertex("e").unwrap();
        let f = cycle_factorize(&g, &parse_path(&g, "p.q.p").unwrap(), e).unwrap();
        let f: Vec<String> = f.iter().map(|p| lit(&g, p)).collect();
        assert_eq!(f, ["p", "q", "p"]);
    }
}
