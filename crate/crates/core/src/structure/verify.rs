//! The verification suite: every structural statement as a named check run
//! on exhaustive bounded slices, plus seeded random sampling of the inverse
//! semigroup axioms.
//!
//! A case whose map value needs an unmaterialized generator or index is
//! counted as skipped, never as a pass.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{ComponentStructure, DClassImage, LocalStructure};
use crate::brandt::{BrandtElement, MatrixUnits};
use crate::element::{
    enumerate_dclass, enumerate_jclass, enumerate_nonzero, green, is_idempotent, multiply,
    Element, Relation,
};
use crate::error::{Error, Result};
use crate::graph::{BlockId, Graph, VertexId};
use crate::path::{enumerate, Anchor, Path, SetKind};
use crate::polycyclic::{Label, PolyElement};

pub const DEFAULT_SAMPLES: usize = 10_000;

/// Longest path drawn by the random element sampler.
pub const SAMPLE_PATH_LEN: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub statement: String,
    pub cases: u64,
    pub skipped: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
    pub note: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub bound: usize,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "bound: {}  seed: {}  samples: {}",
            self.bound, self.seed, self.samples
        )?;
        for c in &self.checks {
            let status = if c.passed() { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "{status} {:<28} cases={} skipped={} failures={}",
                c.name, c.cases, c.skipped, c.failures
            )?;
            writeln!(f, "     {}", c.statement)?;
            if let Some(n) = &c.note {
                writeln!(f, "     note: {n}")?;
            }
            if let Some(x) = &c.counterexample {
                writeln!(f, "     counterexample: {x}")?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

struct Tally(CheckResult);

impl Tally {
    fn new(name: &str, statement: &str) -> Self {
        Tally(CheckResult {
            name: name.into(),
            statement: statement.into(),
            cases: 0,
            skipped: 0,
            failures: 0,
            counterexample: None,
            note: None,
        })
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.0.cases += 1;
        if !ok {
            self.fail(describe);
        }
    }

    fn fail(&mut self, describe: impl FnOnce() -> String) {
        self.0.failures += 1;
        if self.0.counterexample.is_none() {
            self.0.counterexample = Some(describe());
        }
    }

    fn skip(&mut self) {
        self.0.skipped += 1;
    }

    fn note(&mut self, text: String) {
        match &mut self.0.note {
            Some(n) => {
                n.push_str("; ");
                n.push_str(&text);
            }
            None => self.0.note = Some(text),
        }
    }

    fn finish(self) -> CheckResult {
        self.0
    }
}

/// A map value: computed, beyond the materialized bound, or a genuine error.
enum Value<T> {
    Ok(T),
    Skip,
    Err(Error),
}

impl<T> From<Result<T>> for Value<T> {
    fn from(r: Result<T>) -> Self {
        match r {
            Ok(v) => Value::Ok(v),
            Err(Error::BoundExceeded { .. }) => Value::Skip,
            Err(e) => Value::Err(e),
        }
    }
}

struct Ctx<'g> {
    g: &'g Graph,
    bound: usize,
    seed: u64,
    samples: usize,
}

impl Ctx<'_> {
    fn lit(&self, x: &Element) -> String {
        x.to_literal(self.g)
    }

    fn pair(&self, slice: &str, i: usize, j: usize, xs: &[Element]) -> String {
        format!(
            "{slice}[{i}]·{slice}[{j}] = ({})·({})",
            self.lit(&xs[i]),
            self.lit(&xs[j])
        )
    }

    fn vertex(&self, e: VertexId) -> &str {
        self.g.vertex_name(e)
    }

    fn block(&self, b: BlockId) -> String {
        self.g.format_vertex_set(self.g.components().block(b))
    }
}

fn with_zero(g: &Graph, mut xs: Vec<Element>) -> Vec<Element> {
    xs.insert(0, Element::zero(g));
    xs
}

fn in_range_set(x: &Element, ok: impl Fn(VertexId) -> bool) -> bool {
    x.range().is_none_or(ok)
}

fn component_paths(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new(
        "component_paths",
        "a path with both ends in a component A uses only edges of E_A",
    );
    let g = cx.g;
    let cs = g.components();
    for b in cs.block_ids() {
        let sub = g.induced_subgraph(cs.block(b))?;
        let incoming = enumerate(g, SetKind::ComponentIncoming, Anchor::Component(b), cx.bound)?;
        for u in incoming.members.iter().filter(|u| cs.contains(b, u.source())) {
            t.case(u.transfer(g, &sub).is_ok(), || {
                format!("{} in component {}", u.to_literal(g), cx.block(b))
            });
        }
    }
    Ok(t.finish())
}

fn dclass_products(cx: &Ctx, nonzero: &[Element]) -> Result<CheckResult> {
    let mut t = Tally::new(
        "dclass_products",
        "ab⁻¹ ∈ D_e, cd⁻¹ ∈ D_f ⇒ ab⁻¹·cd⁻¹ ∈ D_e⁰ ∪ D_f⁰",
    );
    for (i, x) in nonzero.iter().enumerate() {
        for (j, y) in nonzero.iter().enumerate() {
            let xy = multiply(cx.g, x, y)?;
            t.case(in_range_set(&xy, |r| Some(r) == x.range() || Some(r) == y.range()), || {
                cx.pair("slice", i, j, nonzero)
            });
        }
    }
    Ok(t.finish())
}

fn closure(
    cx: &Ctx,
    t: &mut Tally,
    label: &str,
    xs: &[Element],
    inside: impl Fn(VertexId) -> bool,
) -> Result<()> {
    for (i, x) in xs.iter().enumerate() {
        t.case(in_range_set(&x.inverse(), &inside), || {
            format!("{label}[{i}]⁻¹ = ({})⁻¹", cx.lit(x))
        });
        for (j, y) in xs.iter().enumerate() {
            let xy = multiply(cx.g, x, y)?;
            t.case(in_range_set(&xy, &inside), || cx.pair(label, i, j, xs));
        }
    }
    Ok(())
}

fn dclass_closure(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new("dclass_closure", "D_e⁰ is an inverse subsemigroup");
    for e in cx.g.vertex_ids() {
        let xs = enumerate_dclass(cx.g, e, cx.bound)?;
        closure(cx, &mut t, &format!("D_{}", cx.vertex(e)), &xs, |r| r == e)?;
    }
    Ok(t.finish())
}

fn jclass_closure(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new("jclass_closure", "J_A⁰ is an inverse subsemigroup");
    let cs = cx.g.components();
    for b in cs.block_ids() {
        let xs = enumerate_jclass(cx.g, b, cx.bound)?;
        closure(cx, &mut t, &format!("J_{}", cx.block(b)), &xs, |r| {
            cs.contains(b, r)
        })?;
    }
    Ok(t.finish())
}

fn jclass_partition(cx: &Ctx, nonzero: &[Element]) -> Result<CheckResult> {
    let mut t = Tally::new(
        "jclass_partition",
        "G(E) is the union of the J_X⁰, which pairwise meet only in 0",
    );
    let cs = cx.g.components();
    let mut owner: HashMap<&Element, BlockId> = HashMap::new();
    let classes: Vec<(BlockId, Vec<Element>)> = cs
        .block_ids()
        .map(|b| Ok((b, enumerate_jclass(cx.g, b, cx.bound)?)))
        .collect::<Result<_>>()?;
    for (b, xs) in &classes {
        for x in xs {
            let first = owner.insert(x, *b);
            t.case(first.is_none(), || {
                format!(
                    "{} lies in J_{} and J_{}",
                    cx.lit(x),
                    cx.block(first.unwrap()),
                    cx.block(*b)
                )
            });
        }
    }
    for (i, x) in nonzero.iter().enumerate() {
        t.case(owner.contains_key(x), || {
            format!("slice[{i}] = {} lies in no J-class", cx.lit(x))
        });
    }
    Ok(t.finish())
}

fn jclass_order_products(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new(
        "jclass_order_products",
        "X ≤ Y ⇒ J_X⁰·J_Y⁰ ∪ J_Y⁰·J_X⁰ ⊆ J_X⁰",
    );
    let cs = cx.g.components();
    for y in cs.block_ids() {
        let ys = enumerate_jclass(cx.g, y, cx.bound)?;
        for x in cs.strictly_below(y) {
            let xs = enumerate_jclass(cx.g, x, cx.bound)?;
            let inside = |r| cs.contains(x, r);
            for (i, a) in xs.iter().enumerate() {
                for (j, b) in ys.iter().enumerate() {
                    let ab = multiply(cx.g, a, b)?;
                    let ba = multiply(cx.g, b, a)?;
                    t.case(in_range_set(&ab, inside) && in_range_set(&ba, inside), || {
                        format!(
                            "J_{}[{i}] = {}, J_{}[{j}] = {}",
                            cx.block(x),
                            cx.lit(a),
                            cx.block(y),
                            cx.lit(b)
                        )
                    });
                }
            }
        }
    }
    Ok(t.finish())
}

fn jclass_incomparable_products(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new(
        "jclass_incomparable_products",
        "X, Y incomparable ⇒ J_X⁰·J_Y⁰ ∪ J_Y⁰·J_X⁰ = {0}",
    );
    let cs = cx.g.components();
    let classes: Vec<Vec<Element>> = cs
        .block_ids()
        .map(|b| enumerate_jclass(cx.g, b, cx.bound))
        .collect::<Result<_>>()?;
    for x in cs.block_ids() {
        for y in cs.block_ids().filter(|&y| y > x) {
            if cs.le(x, y)? || cs.le(y, x)? {
                continue;
            }
            for (i, a) in classes[x.0].iter().enumerate() {
                for (j, b) in classes[y.0].iter().enumerate() {
                    let ab = multiply(cx.g, a, b)?;
                    let ba = multiply(cx.g, b, a)?;
                    t.case(ab.is_zero() && ba.is_zero(), || {
                        format!(
                            "J_{}[{i}] = {}, J_{}[{j}] = {}",
                            cx.block(x),
                            cx.lit(a),
                            cx.block(y),
                            cx.lit(b)
                        )
                    });
                }
            }
        }
    }
    Ok(t.finish())
}

/// Checks that `map` is an injective homomorphism on `xs` (which contains
/// zero) into a semigroup with product `target`.
fn homomorphism<T: Clone + Eq + std::hash::Hash>(
    cx: &Ctx,
    t: &mut Tally,
    label: &str,
    xs: &[Element],
    map: impl Fn(&Element) -> Result<T>,
    target: impl Fn(&T, &T) -> Result<T>,
    show: impl Fn(&T) -> String,
) -> Result<Vec<Value<T>>> {
    let images: Vec<Value<T>> = xs.iter().map(|x| map(x).into()).collect();
    let mut seen: HashMap<&T, usize> = HashMap::new();
    for (i, fx) in images.iter().enumerate() {
        match fx {
            Value::Ok(v) => {
                let prev = seen.insert(v, i);
                t.case(prev.is_none(), || {
                    format!(
                        "{label}[{}] and {label}[{i}] both map to {}",
                        prev.unwrap(),
                        show(v)
                    )
                });
            }
            Value::Skip => t.skip(),
            Value::Err(e) => t.fail(|| format!("{label}[{i}] = {}: {e}", cx.lit(&xs[i]))),
        }
    }
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in xs.iter().enumerate() {
            let (Value::Ok(fx), Value::Ok(fy)) = (&images[i], &images[j]) else {
                t.skip();
                continue;
            };
            let xy = multiply(cx.g, x, y)?;
            match Value::from(map(&xy)) {
                Value::Ok(lhs) => {
                    let rhs = target(fx, fy)?;
                    t.case(lhs == rhs, || {
                        format!(
                            "{}: image of product {} but product of images {}",
                            cx.pair(label, i, j, xs),
                            show(&lhs),
                            show(&rhs)
                        )
                    });
                }
                Value::Skip => t.skip(),
                Value::Err(e) => t.fail(|| format!("{}: {e}", cx.pair(label, i, j, xs))),
            }
        }
    }
    Ok(images)
}

/// All label words whose cycles have total length at most `bound`.
fn label_words(ls: &LocalStructure, bound: usize) -> Vec<(Vec<Label>, usize)> {
    let gens: Vec<usize> = ls.generators().iter().map(Path::len).collect();
    let mut out = vec![(Vec::new(), 0)];
    let mut i = 0;
    while i < out.len() {
        let (w, len) = out[i].clone();
        for (k, &gl) in gens.iter().enumerate() {
            if len + gl <= bound {
                let mut w2 = w.clone();
                w2.push(Label(k));
                out.push((w2, len + gl));
            }
        }
        i += 1;
    }
    out
}

fn cycle_poly_iso(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new(
        "cycle_poly_iso",
        "⟨C_e⟩ ≅ P_λ with λ = |C¹_e \\ {e}|, via first-return factorization",
    );
    let g = cx.g;
    for e in g.vertex_ids() {
        let ls = LocalStructure::new(g, e, cx.bound)?;
        let m = ls.monoid();
        let cycles = enumerate(g, SetKind::Cycles, Anchor::Vertex(e), cx.bound)?.members;
        let mut xs = Vec::new();
        for u in &cycles {
            for v in &cycles {
                xs.push(Element::pair(g, u.clone(), v.clone())?);
            }
        }
        let xs = with_zero(g, xs);
        let label = format!("C_{}", cx.vertex(e));
        let images = homomorphism(
            cx,
            &mut t,
            &label,
            &xs,
            |x| ls.cycles_to_poly(g, x),
            |a, b| m.multiply(a, b),
            |p| m.to_literal(p),
        )?;
        for (i, fx) in images.iter().enumerate() {
            if let Value::Ok(p) = fx {
                let back = ls.poly_to_cycles(g, p)?;
                t.case(back == xs[i], || {
                    format!("f⁻¹(f({label}[{i}])) = {} ≠ {}", cx.lit(&back), cx.lit(&xs[i]))
                });
            }
        }
        // The bounded slice of P_λ maps back onto the bounded cycle slice.
        let slice: HashSet<&Element> = xs.iter().collect();
        let words = label_words(&ls, cx.bound);
        let mut ps = vec![PolyElement::Zero];
        for (pos, _) in &words {
            for (neg, _) in &words {
                ps.push(PolyElement::pair(pos.clone(), neg.clone()));
            }
        }
        for (k, p) in ps.iter().enumerate() {
            let x = ls.poly_to_cycles(g, p)?;
            let ok = slice.contains(&x) && ls.cycles_to_poly(g, &x)? == *p;
            t.case(ok, || format!("P slice [{k}] = {} at {}", m.to_literal(p), cx.vertex(e)));
        }
        t.case(ps.len() == xs.len(), || {
            format!(
                "at {}: {} bounded cycle elements but {} bounded P_λ elements",
                cx.vertex(e),
                xs.len(),
                ps.len()
            )
        });
    }
    Ok(t.finish())
}

fn transpose(y: &DClassImage) -> DClassImage {
    match y {
        BrandtElement::Zero => BrandtElement::Zero,
        BrandtElement::Triple { a, s, b } => BrandtElement::Triple {
            a: b.clone(),
            s: s.inverse(),
            b: a.clone(),
        },
    }
}

fn dclass_brandt_iso(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new("dclass_brandt_iso", "D_e⁰ ≅ B⁰_{Q_e}(P_λ)");
    let g = cx.g;
    for e in g.vertex_ids() {
        let ls = LocalStructure::new(g, e, cx.bound)?;
        let xs = with_zero(g, enumerate_dclass(g, e, cx.bound)?);
        let label = format!("D_{}", cx.vertex(e));
        let images = homomorphism(
            cx,
            &mut t,
            &label,
            &xs,
            |x| ls.dclass_to_brandt(g, x),
            |a, b| ls.brandt().multiply(a, b),
            |y| ls.render(g, y),
        )?;
        for (i, hx) in images.iter().enumerate() {
            let Value::Ok(hx) = hx else { continue };
            let back = ls.brandt_to_dclass(g, hx)?;
            t.case(back == xs[i], || {
                format!("h⁻¹(h({label}[{i}])) = {} ≠ {}", cx.lit(&back), cx.lit(&xs[i]))
            });
            match Value::from(ls.dclass_to_brandt(g, &xs[i].inverse())) {
                Value::Ok(hinv) => t.case(hinv == transpose(hx), || {
                    format!("h({label}[{i}]⁻¹) = {}", ls.render(g, &hinv))
                }),
                Value::Skip => t.skip(),
                Value::Err(err) => t.fail(|| format!("h({label}[{i}]⁻¹): {err}")),
            }
        }
    }
    Ok(t.finish())
}

fn jclass_embedding(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new("jclass_embedding", "J_A⁰ embeds in B⁰_{Q_A}(G(E_A))");
    let g = cx.g;
    let cs = g.components();
    let mut notes = Vec::new();
    for b in cs.block_ids() {
        let st = ComponentStructure::new(g, b, cx.bound)?;
        let bx = st.brandt();
        let xs = with_zero(g, enumerate_jclass(g, b, cx.bound)?);
        let label = format!("J_{}", cx.block(b));
        let images = homomorphism(
            cx,
            &mut t,
            &label,
            &xs,
            |x| st.embed(g, x),
            |a, c| bx.multiply(a, c),
            |y| st.render(g, y),
        )?;
        for (i, fx) in images.iter().enumerate() {
            let Value::Ok(fx) = fx else { continue };
            let back = st.restore(g, fx)?;
            t.case(back == xs[i], || {
                format!("restore(embed({label}[{i}])) = {}", cx.lit(&back))
            });
        }
        // The bounded image against all bounded triples.
        let sub = st.subgraph();
        let payloads = enumerate_nonzero(sub, cx.bound)?;
        let (mut inside, mut outside) = (0u64, 0u64);
        for a in bx.indices() {
            for s in &payloads {
                for c in bx.indices() {
                    let y = BrandtElement::Triple {
                        a: a.clone(),
                        s: s.clone(),
                        b: c.clone(),
                    };
                    match st.restore(g, &y) {
                        Ok(x) => {
                            inside += 1;
                            let ok = matches!(st.embed(g, &x), Ok(ref z) if *z == y);
                            t.case(ok, || format!("embed(restore({})) differs", st.render(g, &y)));
                        }
                        Err(Error::OutsideDomain { .. }) => outside += 1,
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        notes.push(format!(
            "{label}: {inside} of {} bounded triples in the image",
            inside + outside
        ));
    }
    for n in notes {
        t.note(n);
    }
    Ok(t.finish())
}

fn matrix_units(cx: &Ctx) -> Result<CheckResult> {
    let mut t = Tally::new("matrix_units", "C_e = {e} ⇒ D_e⁰ ≅ B⁰_{I_e} (matrix units)");
    let g = cx.g;
    for e in g.vertex_ids() {
        if !g.is_acyclic_at(e)? {
            continue;
        }
        let ls = LocalStructure::new(g, e, cx.bound)?;
        if !ls.first_visits().complete {
            t.note(format!(
                "I_{} exceeds the bound; table checked on the bounded slice",
                cx.vertex(e)
            ));
        }
        let mu = MatrixUnits::new(ls.first_visits().members.iter().cloned());
        let xs = with_zero(g, enumerate_dclass(g, e, cx.bound)?);
        let label = format!("D_{}", cx.vertex(e));
        let mut units: Vec<Option<(Path, Path)>> = Vec::with_capacity(xs.len());
        for (i, x) in xs.iter().enumerate() {
            let unit = match ls.dclass_to_brandt(g, x)? {
                BrandtElement::Zero => None,
                BrandtElement::Triple { a, s, b } => {
                    t.case(s.is_one(), || {
                        format!("{label}[{i}] = {} has payload other than 1", cx.lit(x))
                    });
                    Some((a, b))
                }
            };
            units.push(unit);
        }
        let distinct: BTreeSet<&Option<(Path, Path)>> = units.iter().collect();
        t.case(distinct.len() == mu.elements().len(), || {
            format!(
                "{label}: {} distinct units but B⁰ has {}",
                distinct.len(),
                mu.elements().len()
            )
        });
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in xs.iter().enumerate() {
                let xy = multiply(g, x, y)?;
                let lhs = match ls.dclass_to_brandt(g, &xy)? {
                    BrandtElement::Zero => None,
                    BrandtElement::Triple { a, b, .. } => Some((a, b)),
                };
                let rhs = mu.multiply(&units[i], &units[j])?;
                t.case(lhs == rhs, || cx.pair(&label, i, j, &xs));
            }
        }
    }
    Ok(t.finish())
}

fn j_equals_d(cx: &Ctx, nonzero: &[Element]) -> Result<CheckResult> {
    let mut t = Tally::new("j_equals_d", "J = D on G(E) ⇔ E is acyclic");
    let g = cx.g;
    let mut witness = None;
    let mut pairs = 0u64;
    for (i, x) in nonzero.iter().enumerate() {
        for (j, y) in nonzero.iter().enumerate() {
            pairs += 1;
            let jr = green(g, Relation::J, x, y)?;
            let dr = green(g, Relation::D, x, y)?;
            if jr != dr && witness.is_none() {
                witness = Some((i, j));
            }
        }
    }
    let acyclic = g.is_acyclic();
    let desc = |w: Option<(usize, usize)>| match w {
        Some((i, j)) => format!(
            "J-related, not D-related: slice[{i}] = {}, slice[{j}] = {}",
            cx.lit(&nonzero[i]),
            cx.lit(&nonzero[j])
        ),
        None => format!("J and D agree on all {pairs} bounded pairs"),
    };
    t.case(witness.is_some() != acyclic, || {
        let shape = if acyclic { "acyclic" } else { "cyclic" };
        format!("graph is {shape}; {}", desc(witness))
    });
    t.note(desc(witness));
    Ok(t.finish())
}

/// A random path ending at `e` of length at most `max_len`.
pub fn random_path_to(g: &Graph, rng: &mut impl Rng, e: VertexId, max_len: usize) -> Path {
    let len = rng.gen_range(0..=max_len);
    let mut edges = Vec::with_capacity(len);
    let mut at = e;
    for _ in 0..len {
        let ins = g.in_edges(at);
        if ins.is_empty() {
            break;
        }
        let f = ins[rng.gen_range(0..ins.len())];
        edges.push(f);
        at = g.src(f);
    }
    edges.reverse();
    Path::from_edges(g, edges).unwrap_or_else(|_| Path::vertex(e))
}

/// A random element: zero with probability 1/16, otherwise `uv⁻¹` with a
/// uniformly chosen range vertex and random paths of length at most `max_len`.
pub fn random_element(g: &Graph, rng: &mut impl Rng, max_len: usize) -> Element {
    if g.vertex_count() == 0 || rng.gen_range(0..16) == 0 {
        return Element::zero(g);
    }
    let e = VertexId(rng.gen_range(0..g.vertex_count()));
    let u = random_path_to(g, rng, e, max_len);
    let v = random_path_to(g, rng, e, max_len);
    Element::pair(g, u, v).expect("both paths end at e")
}

/// Seeded random sampling of associativity, the inverse axioms and
/// commutation of idempotents. Each sample draws a fresh triple.
pub fn sample_axioms(g: &Graph, seed: u64, samples: usize) -> Result<CheckResult> {
    let mut t = Tally::new(
        "random_axioms",
        "(xy)z = x(yz), xx⁻¹x = x, x⁻¹xx⁻¹ = x⁻¹, idempotents commute",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let x = random_element(g, &mut rng, SAMPLE_PATH_LEN);
        let y = random_element(g, &mut rng, SAMPLE_PATH_LEN);
        let z = random_element(g, &mut rng, SAMPLE_PATH_LEN);
        let xi = x.inverse();
        let assoc = multiply(g, &multiply(g, &x, &y)?, &z)? == multiply(g, &x, &multiply(g, &y, &z)?)?;
        let xxi = multiply(g, &x, &xi)?;
        let inv1 = multiply(g, &xxi, &x)? == x;
        let inv2 = multiply(g, &multiply(g, &xi, &x)?, &xi)? == xi;
        let f = multiply(g, &y, &y.inverse())?;
        let idem = is_idempotent(g, &xxi)? && is_idempotent(g, &f)?;
        let commute = multiply(g, &xxi, &f)? == multiply(g, &f, &xxi)?;
        t.case(assoc && inv1 && inv2 && idem && commute, || {
            format!(
                "seed {seed}, sample {k}: x = {}, y = {}, z = {}",
                x.to_literal(g),
                y.to_literal(g),
                z.to_literal(g)
            )
        });
    }
    Ok(t.finish())
}

/// Runs the suite with [`DEFAULT_SAMPLES`] random samples.
pub fn verify_suite(g: &Graph, bound: usize, seed: u64) -> Result<VerificationReport> {
    verify_suite_with(g, bound, seed, DEFAULT_SAMPLES)
}

type Check = fn(&Ctx, &[Element]) -> Result<CheckResult>;

const ALL_CHECKS: [Check; 13] = [
    |cx, _| component_paths(cx),
    dclass_products,
    |cx, _| dclass_closure(cx),
    |cx, _| jclass_closure(cx),
    jclass_partition,
    |cx, _| jclass_order_products(cx),
    |cx, _| jclass_incomparable_products(cx),
    |cx, _| cycle_poly_iso(cx),
    |cx, _| dclass_brandt_iso(cx),
    |cx, _| jclass_embedding(cx),
    |cx, _| matrix_units(cx),
    j_equals_d,
    |cx, _| sample_axioms(cx.g, cx.seed, cx.samples),
];

const ISO_CHECKS: [Check; 4] = [
    |cx, _| cycle_poly_iso(cx),
    |cx, _| dclass_brandt_iso(cx),
    |cx, _| jclass_embedding(cx),
    |cx, _| matrix_units(cx),
];

fn run_checks(
    g: &Graph,
    bound: usize,
    seed: u64,
    samples: usize,
    checks: &[Check],
) -> Result<VerificationReport> {
    let cx = Ctx {
        g,
        bound,
        seed,
        samples,
    };
    let nonzero = enumerate_nonzero(g, bound)?;
    let results: Vec<Result<CheckResult>> = thread::scope(|s| {
        let handles: Vec<_> = checks
            .iter()
            .map(|check| s.spawn(|| check(&cx, &nonzero)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect()
    });
    let mut checks = results.into_iter().collect::<Result<Vec<_>>>()?;
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(VerificationReport {
        bound,
        seed,
        samples,
        checks,
    })
}

/// Runs every check; the random axiom check draws `samples` triples.
pub fn verify_suite_with(
    g: &Graph,
    bound: usize,
    seed: u64,
    samples: usize,
) -> Result<VerificationReport> {
    run_checks(g, bound, seed, samples, &ALL_CHECKS)
}

/// Runs only the isomorphism and embedding checks.
pub fn iso_checks(g: &Graph, bound: usize) -> Result<VerificationReport> {
    run_checks(g, bound, 0, 0, &ISO_CHECKS)
}
