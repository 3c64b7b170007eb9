mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gis::brandt::{Brandt, BrandtElement, MatrixUnits, Semilattice};
use gis::element::{is_idempotent, multiply, parse_element, Element};
use gis::graph::{component_finiteness, finiteness, Graph, VertexId};
use gis::path::{
    cycle_factorize, enumerate, factor_at_component, factor_at_vertex, is_member, parse_path,
    Anchor, Path, SetKind,
};
use gis::polycyclic::{
    poly_from_rose, rose_from_poly, Alphabet, GeneratorWord, Label, PolyElement, Polycyclic,
    Strategy as Redex, Token,
};
use gis::structure::{random_element, structural_report, verify_suite_with};

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(
        (0..n).map(|i| format!("v{i}")),
        edges
            .iter()
            .enumerate()
            .map(|(k, &(s, d))| (format!("e{k}"), format!("v{s}"), format!("v{d}"))),
    )
    .unwrap()
}

prop_compose! {
    fn graphs(max_vertices: usize, max_edges: usize)
        (n in 1..=max_vertices)
        (edges in prop::collection::vec((0..n, 0..n), 0..=max_edges), n in Just(n))
        -> Graph {
        build(n, &edges)
    }
}

fn elements(g: &Graph, seed: u64, count: usize) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_element(g, &mut rng, 4)).collect()
}

fn words(rank: usize) -> impl Strategy<Value = Vec<Token>> {
    let token = prop_oneof![
        1 => Just(Token::One),
        1 => Just(Token::Zero),
        6 => (0..rank).prop_map(|i| Token::Gen(Label(i))),
        6 => (0..rank).prop_map(|i| Token::Inv(Label(i))),
    ];
    prop::collection::vec(token, 0..12)
}

fn rank_alphabet(rank: usize) -> Polycyclic {
    let names: Vec<String> = (0..rank).map(|i| format!("g{i}")).collect();
    Polycyclic::new(Alphabet::new(names).unwrap())
}

fn by_definition(g: &Graph, kind: SetKind, anchor: Anchor, p: &Path) -> bool {
    let cs = g.components();
    match (kind, anchor) {
        (SetKind::Incoming, Anchor::Vertex(e)) => p.range() == e,
        (SetKind::FirstVisit, Anchor::Vertex(e)) => common::first_visit_into(g, p, |v| v == e),
        (SetKind::Cycles, Anchor::Vertex(e)) => common::is_cycle_at(p, e),
        (SetKind::FirstReturn, Anchor::Vertex(e)) => common::is_first_return(g, p, e),
        (SetKind::ComponentIncoming, Anchor::Component(a)) => cs.contains(a, p.range()),
        (SetKind::ComponentFirstVisit, Anchor::Component(a)) => {
            common::first_visit_into(g, p, |v| cs.contains(a, v))
        }
        _ => unreachable!(),
    }
}

fn anchors(g: &Graph) -> Vec<(SetKind, Anchor)> {
    let mut out = Vec::new();
    for e in g.vertex_ids() {
        for k in [
            SetKind::Incoming,
            SetKind::FirstVisit,
            SetKind::Cycles,
            SetKind::FirstReturn,
        ] {
            out.push((k, Anchor::Vertex(e)));
        }
    }
    for b in g.components().block_ids() {
        for k in [SetKind::ComponentIncoming, SetKind::ComponentFirstVisit] {
            out.push((k, Anchor::Component(b)));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn multiplication_matches_rewriting(g in graphs(4, 6), seed in any::<u64>()) {
        let xs = elements(&g, seed, 24);
        for x in &xs {
            for y in &xs {
                prop_assert_eq!(multiply(&g, x, y).unwrap(), common::rewrite_multiply(&g, x, y));
            }
        }
    }

    #[test]
    fn inverse_semigroup_axioms(g in graphs(4, 6), seed in any::<u64>()) {
        let xs = elements(&g, seed, 12);
        let m = |a: &Element, b: &Element| multiply(&g, a, b).unwrap();
        for x in &xs {
            let xi = x.inverse();
            prop_assert_eq!(&m(&m(x, &xi), x), x);
            prop_assert_eq!(&m(&m(&xi, x), &xi), &xi);
            prop_assert_eq!(&xi.inverse(), x);
            prop_assert!(is_idempotent(&g, &m(x, &xi)).unwrap());
            for y in &xs {
                let (ex, ey) = (m(x, &xi), m(y, &y.inverse()));
                prop_assert_eq!(m(&ex, &ey), m(&ey, &ex));
                prop_assert_eq!(m(x, y).inverse(), m(&y.inverse(), &xi));
                for z in xs.iter().take(4) {
                    prop_assert_eq!(m(&m(x, y), z), m(x, &m(y, z)));
                }
            }
        }
    }

    #[test]
    fn literals_round_trip(g in graphs(4, 6), seed in any::<u64>()) {
        for x in elements(&g, seed, 32) {
            prop_assert_eq!(parse_element(&g, &x.to_literal(&g)).unwrap(), x.clone());
            if let Some((u, _)) = x.parts() {
                prop_assert_eq!(&parse_path(&g, &u.to_literal(&g)).unwrap(), u);
            }
        }
    }

    #[test]
    fn graph_document_round_trip(g in graphs(5, 8)) {
        let text = serde_json::to_string(&g.to_document()).unwrap();
        prop_assert_eq!(Graph::from_json(&text).unwrap(), g);
    }

    #[test]
    fn components_match_closure(g in graphs(6, 10)) {
        let r = common::reach(&g);
        let cs = g.components();
        for u in g.vertex_ids() {
            for v in g.vertex_ids() {
                let same = r[u.0][v.0] && r[v.0][u.0];
                prop_assert_eq!(cs.block_of(u) == cs.block_of(v), same);
                // X <= Y iff a path runs from Y into X.
                prop_assert_eq!(cs.le(cs.block_of(u), cs.block_of(v)).unwrap(), r[v.0][u.0]);
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force(g in graphs(4, 6), bound in 0usize..4) {
        let n = g.vertex_count();
        let brute = common::all_paths(&g, (2 * n).max(bound) + 1);
        for (kind, anchor) in anchors(&g) {
            let ps = enumerate(&g, kind, anchor, bound).unwrap();
            let expected: Vec<&Path> = brute
                .iter()
                .filter(|p| p.len() <= bound && by_definition(&g, kind, anchor, p))
                .collect();
            let mut sorted = expected.clone();
            sorted.sort_by(|a, b| (a.len(), a.edges(), a.source()).cmp(&(b.len(), b.edges(), b.source())));
            prop_assert_eq!(ps.members.iter().collect::<Vec<_>>(), sorted);
            for p in &ps.members {
                prop_assert!(is_member(&g, kind, anchor, p).unwrap());
            }
            // Finite sets have no member longer than n; infinite ones have
            // one with length in (n, 2n].
            let members = |lo: usize, hi: usize| {
                brute.iter().any(|p| p.len() > lo && p.len() <= hi && by_definition(&g, kind, anchor, p))
            };
            let finite = !members(n, 2 * n);
            let complete = finite && !members(bound, usize::MAX);
            prop_assert_eq!(ps.complete, complete, "{:?} at {:?}", kind, anchor);
        }
    }

    #[test]
    fn finiteness_matches_pumping(g in graphs(4, 6)) {
        let n = g.vertex_count();
        let brute = common::all_paths(&g, 2 * n);
        let finite = |kind, anchor| {
            !brute.iter().any(|p| p.len() > n && by_definition(&g, kind, anchor, p))
        };
        for e in g.vertex_ids() {
            let a = Anchor::Vertex(e);
            let r = finiteness(&g, e).unwrap();
            prop_assert_eq!(r.i_finite, finite(SetKind::Incoming, a));
            prop_assert_eq!(r.q_finite, finite(SetKind::FirstVisit, a));
            prop_assert_eq!(r.c_finite, finite(SetKind::Cycles, a));
            prop_assert_eq!(r.c1_finite, finite(SetKind::FirstReturn, a));
            prop_assert_eq!(g.is_acyclic_at(e).unwrap(), !common::on_cycle(&g, e));
        }
        for b in g.components().block_ids() {
            let a = Anchor::Component(b);
            let r = component_finiteness(&g, b).unwrap();
            prop_assert_eq!(r.i_finite, finite(SetKind::ComponentIncoming, a));
            prop_assert_eq!(r.q_finite, finite(SetKind::ComponentFirstVisit, a));
        }
    }

    #[test]
    fn exact_counts_match_enumeration(g in graphs(4, 6)) {
        let n = g.vertex_count();
        let report = structural_report(&g, 2).unwrap();
        let brute = common::all_paths(&g, n);
        for entry in report.components.iter().flat_map(|c| &c.vertices) {
            let e = g.vertex(&entry.vertex).unwrap();
            let count = |kind| brute.iter().filter(|p| by_definition(&g, kind, Anchor::Vertex(e), p)).count() as u128;
            if let Some(q) = entry.q_size.finite() {
                prop_assert_eq!(q, count(SetKind::FirstVisit));
            }
            if let Some(l) = entry.lambda.finite() {
                prop_assert_eq!(l + 1, count(SetKind::FirstReturn));
            }
        }
    }

    #[test]
    fn factorizations_are_unique(g in graphs(4, 6)) {
        let cs = g.components();
        for u in common::all_paths(&g, 4) {
            let e = u.range();
            let a = cs.block_of(e);
            let splits: Vec<usize> = (0..=u.len())
                .filter(|&k| {
                    common::first_visit_into(&g, &u.prefix(&g, k), |v| v == e)
                        && common::is_cycle_at(&u.suffix(&g, k), e)
                })
                .collect();
            let (u1, u2) = factor_at_vertex(&g, &u, e).unwrap();
            prop_assert_eq!(splits, vec![u1.len()]);
            prop_assert_eq!(u1.concat(&u2).unwrap(), u.clone());
            let (w1, w2) = factor_at_component(&g, &u, a).unwrap();
            prop_assert!(common::first_visit_into(&g, &w1, |v| cs.contains(a, v)));
            prop_assert!(common::visits(&g, &w2).iter().all(|&v| cs.contains(a, v)));
            prop_assert_eq!(w1.concat(&w2).unwrap(), u.clone());
            if u.source() == e {
                let parts = cycle_factorize(&g, &u, e).unwrap();
                let mut joined = Path::vertex(e);
                for c in &parts {
                    prop_assert!(!c.is_vertex() && common::is_first_return(&g, c, e));
                    joined = joined.concat(c).unwrap();
                }
                prop_assert_eq!(joined, u.clone());
            }
        }
    }

    #[test]
    fn structure_checks_pass(g in graphs(3, 5), seed in any::<u64>()) {
        let report = verify_suite_with(&g, 2, seed, 20).unwrap();
        let singletons = g.components().blocks().iter().all(|b| b.len() == 1);
        for c in &report.checks {
            if c.name == "j_equals_d" {
                // J = D exactly when every component is a single vertex.
                prop_assert_eq!(c.passed(), g.is_acyclic() || !singletons, "{:?}", c);
            } else {
                prop_assert!(c.passed(), "{:?}", c);
            }
        }
    }

    #[test]
    fn report_invariants(g in graphs(4, 6)) {
        let r = structural_report(&g, 2).unwrap();
        prop_assert_eq!(r.acyclic, g.vertex_ids().all(|e| g.is_acyclic_at(e).unwrap()));
        prop_assert_eq!(r.j_equals_d, g.components().blocks().iter().all(|b| b.len() == 1));
        prop_assert!(!r.acyclic || r.j_equals_d);
        for v in r.components.iter().flat_map(|c| &c.vertices) {
            prop_assert_eq!(v.iso_type.ends_with("(matrix units)"), v.acyclic_at);
        }
    }

    #[test]
    fn poly_reduction_is_confluent(w in words(3)) {
        let p = rank_alphabet(3);
        let w = GeneratorWord(w);
        let a = p.reduce(&w).unwrap();
        prop_assert_eq!(&p.rewrite(&w, Redex::Leftmost).unwrap(), &a);
        prop_assert_eq!(&p.rewrite(&w, Redex::Rightmost).unwrap(), &a);
        prop_assert_eq!(&p.reduce(&p.word_of(&a)).unwrap(), &a);
        prop_assert_eq!(&p.reduce(&p.parse_word(&p.to_literal(&a)).unwrap()).unwrap(), &a);
    }

    #[test]
    fn poly_multiplication_is_associative(a in words(2), b in words(2), c in words(2)) {
        let p = rank_alphabet(2);
        let [x, y, z] = [a, b, c].map(|w| p.reduce(&GeneratorWord(w)).unwrap());
        let m = |s: &PolyElement, t: &PolyElement| p.multiply(s, t).unwrap();
        prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
        prop_assert_eq!(m(&m(&x, &x.inverse()), &x), x);
    }

    #[test]
    fn poly_agrees_with_rose(a in words(2), b in words(2)) {
        let g = build(1, &[(0, 0), (0, 0)]);
        let p = rank_alphabet(2);
        let [x, y] = [a, b].map(|w| p.reduce(&GeneratorWord(w)).unwrap());
        let gx = rose_from_poly(&g, &x).unwrap();
        let gy = rose_from_poly(&g, &y).unwrap();
        prop_assert_eq!(poly_from_rose(&g, &gx).unwrap(), x.clone());
        prop_assert_eq!(poly_from_rose(&g, &multiply(&g, &gx, &gy).unwrap()).unwrap(), p.multiply(&x, &y).unwrap());
    }

    #[test]
    fn brandt_over_semilattice_is_matrix_units(n in 1usize..5, picks in prop::collection::vec((0usize..5, 0usize..5, any::<bool>()), 1..20)) {
        let bx = Brandt::new(Semilattice, 0..n);
        let mu = MatrixUnits::new(0..n);
        let elems: Vec<_> = picks
            .iter()
            .map(|&(a, b, s)| bx.triple(a % n, s, b % n).unwrap())
            .collect();
        let unit = |y: &BrandtElement<usize, bool>| match y {
            BrandtElement::Zero => None,
            BrandtElement::Triple { a, b, .. } => Some((*a, *b)),
        };
        for x in &elems {
            for y in &elems {
                prop_assert_eq!(unit(&bx.multiply(x, y).unwrap()), mu.multiply(&unit(x), &unit(y)).unwrap());
                for z in elems.iter().take(3) {
                    let l = bx.multiply(&bx.multiply(x, y).unwrap(), z).unwrap();
                    let r = bx.multiply(x, &bx.multiply(y, z).unwrap()).unwrap();
                    prop_assert_eq!(l, r);
                }
            }
        }
    }
}

#[test]
fn rewriting_oracle_on_exhaustive_fixture_slices() {
    for (name, g) in gis::fixtures::all() {
        let xs = common::all_nonzero(&g, 2);
        let zero = Element::zero(&g);
        for x in xs.iter().chain([&zero]) {
            for y in xs.iter().chain([&zero]) {
                assert_eq!(
                    multiply(&g, x, y).unwrap(),
                    common::rewrite_multiply(&g, x, y),
                    "{name}: {} · {}",
                    x.to_literal(&g),
                    y.to_literal(&g)
                );
            }
        }
    }
}

#[test]
fn vertex_ids_follow_sorted_names() {
    let g = build(3, &[(2, 0)]);
    assert_eq!(g.vertex("v0").unwrap(), VertexId(0));
    assert_eq!(g.vertex_name(VertexId(2)), "v2");
}
