//! Small named graphs used throughout the tests and documentation.

use crate::graph::Graph;

fn build(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Graph {
    Graph::new(
        vertices.iter().copied(),
        edges
            .iter()
            .map(|(id, s, d)| (id.to_string(), s.to_string(), d.to_string())),
    )
    .expect("fixture graphs are valid")
}

/// a -x-> b
pub fn g_a2() -> Graph {
    build(&["a", "b"], &[("x", "a", "b")])
}

/// One vertex `e` with loop `p`.
pub fn g_r1() -> Graph {
    build(&["e"], &[("p", "e", "e")])
}

/// One vertex `e` with loops `p`, `q`.
pub fn g_r2() -> Graph {
    build(&["e"], &[("p", "e", "e"), ("q", "e", "e")])
}

/// a -x-> b -y-> a
pub fn g_c2() -> Graph {
    build(&["a", "b"], &[("x", "a", "b"), ("y", "b", "a")])
}

/// a -x-> b -y-> a, b -z-> c
pub fn g_flow() -> Graph {
    build(
        &["a", "b", "c"],
        &[("x", "a", "b"), ("y", "b", "a"), ("z", "b", "c")],
    )
}

/// `g_flow` plus d -w-> a.
pub fn g_flow_entry() -> Graph {
    build(
        &["a", "b", "c", "d"],
        &[("w", "d", "a"), ("x", "a", "b"), ("y", "b", "a"), ("z", "b", "c")],
    )
}

/// a -> b -> d, a -> c -> d
pub fn g_diamond() -> Graph {
    build(
        &["a", "b", "c", "d"],
        &[
            ("ab", "a", "b"),
            ("ac", "a", "c"),
            ("bd", "b", "d"),
            ("cd", "c", "d"),
        ],
    )
}

/// Two vertices, no edges.
pub fn g_iso2() -> Graph {
    build(&["a", "b"], &[])
}

/// The six named fixtures with their names.
pub fn all() -> Vec<(&'static str, Graph)> {
    vec![
        ("G_A2", g_a2()),
        ("G_R1", g_r1()),
        ("G_R2", g_r2()),
        ("G_C2", g_c2()),
        ("G_FLOW", g_flow()),
        ("G_DIAMOND", g_diamond()),
    ]
}
