//! Polycyclic monoids `P_λ` over a finite ordered alphabet.
//!
//! Nonzero elements are normal forms `pos · neg⁻¹` of two generator words.
//! Arbitrary generator words are reduced with the length-reducing rewriting
//! system `a⁻¹a → 1`, `a⁻¹b → 0` (`a ≠ b`), which is confluent.

use std::collections::HashMap;
use std::fmt;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub usize);

/// An explicit ordered label set. Labels keep their declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    labels: Vec<String>,
    lookup: HashMap<String, Label>,
}

impl Alphabet {
    pub fn new<I>(labels: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        let mut out = Alphabet {
            labels: Vec::new(),
            lookup: HashMap::new(),
        };
        for label in labels {
            let label: String = label.into();
            if label.is_empty()
                || label == "0"
                || label == "1"
                || label.contains('\'')
                || label.chars().any(char::is_whitespace)
            {
                return Err(Error::InvalidId(label));
            }
            if out.lookup.contains_key(&label) {
                return Err(Error::DuplicateId(label));
            }
            out.lookup.insert(label.clone(), Label(out.labels.len()));
            out.labels.push(label);
        }
        Ok(out)
    }

    /// Parses a comma-separated label list; the empty string is the empty alphabet.
    pub fn parse(list: &str) -> Result<Self> {
        if list.trim().is_empty() {
            return Alphabet::new(Vec::<String>::new());
        }
        Alphabet::new(list.split(',').map(|s| s.trim().to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, name: &str) -> Result<Label> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn name(&self, l: Label) -> &str {
        &self.labels[l.0]
    }

    pub fn labels(&self) -> impl ExactSizeIterator<Item = Label> {
        (0..self.labels.len()).map(Label)
    }
}

/// `0` or `pos · neg⁻¹`; `(ε, ε)` is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyElement {
    Zero,
    Pair { pos: Vec<Label>, neg: Vec<Label> },
}

impl PolyElement {
    pub fn one() -> Self {
        PolyElement::Pair {
            pos: Vec::new(),
            neg: Vec::new(),
        }
    }

    pub fn pair(pos: Vec<Label>, neg: Vec<Label>) -> Self {
        PolyElement::Pair { pos, neg }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, PolyElement::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, PolyElement::Pair { pos, neg } if pos.is_empty() && neg.is_empty())
    }

    pub fn inverse(&self) -> Self {
        match self {
            PolyElement::Zero => PolyElement::Zero,
            PolyElement::Pair { pos, neg } => PolyElement::Pair {
                pos: neg.clone(),
                neg: pos.clone(),
            },
        }
    }
}

/// One token of a generator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    Gen(Label),
    Inv(Label),
    One,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratorWord(pub Vec<Token>);

/// Which redex a naive rewriting run contracts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// The polycyclic monoid over an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polycyclic {
    alphabet: Alphabet,
}

impl Polycyclic {
    pub fn new(alphabet: Alphabet) -> Self {
        Polycyclic { alphabet }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    fn check_word(&self, w: &[Label]) -> Result<()> {
        match w.iter().find(|l| l.0 >= self.alphabet.len()) {
            Some(l) => Err(Error::UnknownLabel(format!("#{}", l.0))),
            None => Ok(()),
        }
    }

    pub fn check(&self, x: &PolyElement) -> Result<()> {
        match x {
            PolyElement::Zero => Ok(()),
            PolyElement::Pair { pos, neg } => {
                self.check_word(pos)?;
                self.check_word(neg)
            }
        }
    }

    /// `(u₁, v₁)(u₂, v₂)`: `(u₁w, v₂)` if `u₂ = v₁w`, `(u₁, v₂w)` if `v₁ = u₂w`, else `0`.
    pub fn multiply(&self, x: &PolyElement, y: &PolyElement) -> Result<PolyElement> {
        self.check(x)?;
        self.check(y)?;
        let (
            PolyElement::Pair { pos: u1, neg: v1 },
            PolyElement::Pair { pos: u2, neg: v2 },
        ) = (x, y)
        else {
            return Ok(PolyElement::Zero);
        };
        Ok(if let Some(w) = u2.strip_prefix(v1.as_slice()) {
            PolyElement::Pair {
                pos: [u1.as_slice(), w].concat(),
                neg: v2.clone(),
            }
        } else if let Some(w) = v1.strip_prefix(u2.as_slice()) {
            PolyElement::Pair {
                pos: u1.clone(),
                neg: [v2.as_slice(), w].concat(),
            }
        } else {
            PolyElement::Zero
        })
    }

    /// Single-pass stack reduction of a generator word.
    ///
    /// The stack always holds a normal form `gens* invs*`; an incoming
    /// generator either cancels the inverse on top, annihilates the word, or
    /// is pushed.
    pub fn reduce(&self, word: &GeneratorWord) -> Result<PolyElement> {
        self.check_tokens(word)?;
        let mut stack: Vec<Token> = Vec::with_capacity(word.0.len());
        for &t in &word.0 {
            match t {
                Token::One => {}
                Token::Zero => return Ok(PolyElement::Zero),
                Token::Inv(_) => stack.push(t),
                Token::Gen(b) => match stack.last() {
                    Some(&Token::Inv(a)) if a == b => {
                        stack.pop();
                    }
                    Some(&Token::Inv(_)) => return Ok(PolyElement::Zero),
                    _ => stack.push(t),
                },
            }
        }
        Ok(normal_form_of(&stack))
    }

    /// Naive rewriting that contracts one redex at a time; used to cross-check
    /// [`Polycyclic::reduce`]. Quadratic.
    pub fn rewrite(&self, word: &GeneratorWord, strategy: Strategy) -> Result<PolyElement> {
        self.check_tokens(word)?;
        let mut w: Vec<Token> = word.0.clone();
        if w.contains(&Token::Zero) {
            return Ok(PolyElement::Zero);
        }
        w.retain(|t| *t != Token::One);
        loop {
            let redexes = (0..w.len().saturating_sub(1))
                .filter(|&i| matches!((w[i], w[i + 1]), (Token::Inv(_), Token::Gen(_))));
            let pick = match strategy {
                Strategy::Leftmost => redexes.min(),
                Strategy::Rightmost => redexes.max(),
            };
            let Some(i) = pick else { break };
            let (Token::Inv(a), Token::Gen(b)) = (w[i], w[i + 1]) else {
                unreachable!()
            };
            if a != b {
                return Ok(PolyElement::Zero);
            }
            w.drain(i..i + 2);
        }
        Ok(normal_form_of(&w))
    }

    fn check_tokens(&self, word: &GeneratorWord) -> Result<()> {
        for t in &word.0 {
            if let Token::Gen(l) | Token::Inv(l) = t {
                self.check_word(std::slice::from_ref(l))?;
            }
        }
        Ok(())
    }

    /// Parses space-separated tokens: `p`, `p'` (inverse), `1`, `0`.
    pub fn parse_word(&self, text: &str) -> Result<GeneratorWord> {
        let mut tokens = Vec::new();
        let mut offset = 0;
        for raw in text.split(' ') {
            let pos = offset;
            offset += raw.len() + 1;
            let tok = raw.trim();
            if tok.is_empty() {
                continue;
            }
            let parsed = match tok {
                "1" => Token::One,
                "0" => Token::Zero,
                _ => {
                    let (name, inverse) = match tok.strip_suffix('\'') {
                        Some(n) => (n, true),
                        None => (tok, false),
                    };
                    if name.is_empty() || name.contains('\'') {
                        return Err(Error::syntax(pos, tok, "malformed generator token"));
                    }
                    let l = self.alphabet.label(name)?;
                    if inverse {
                        Token::Inv(l)
                    } else {
                        Token::Gen(l)
                    }
                }
            };
            tokens.push(parsed);
        }
        Ok(GeneratorWord(tokens))
    }

    /// `0`, `1`, or generator tokens followed by inverse tokens, e.g. `p q q'`.
    pub fn to_literal(&self, x: &PolyElement) -> String {
        match x {
            PolyElement::Zero => "0".to_string(),
            PolyElement::Pair { pos, neg } if pos.is_empty() && neg.is_empty() => "1".to_string(),
            PolyElement::Pair { pos, neg } => {
                let mut parts: Vec<String> =
                    pos.iter().map(|&l| self.alphabet.name(l).to_string()).collect();
                parts.extend(neg.iter().rev().map(|&l| format!("{}'", self.alphabet.name(l))));
                parts.join(" ")
            }
        }
    }

    /// The generator word spelling out a normal form.
    pub fn word_of(&self, x: &PolyElement) -> GeneratorWord {
        match x {
            PolyElement::Zero => GeneratorWord(vec![Token::Zero]),
            PolyElement::Pair { pos, neg } => GeneratorWord(
                pos.iter()
                    .map(|&l| Token::Gen(l))
                    .chain(neg.iter().rev().map(|&l| Token::Inv(l)))
                    .collect(),
            ),
        }
    }
}

fn normal_form_of(tokens: &[Token]) -> PolyElement {
    let mut pos = Vec::new();
    let mut inverted = Vec::new();
    for t in tokens {
        match *t {
            Token::Gen(l) => {
                debug_assert!(inverted.is_empty(), "not a normal form");
                pos.push(l);
            }
            Token::Inv(l) => inverted.push(l),
            Token::One | Token::Zero => {}
        }
    }
    inverted.reverse();
    PolyElement::Pair { pos, neg: inverted }
}

pub fn poly_multiply(p: &Polycyclic, x: &PolyElement, y: &PolyElement) -> Result<PolyElement> {
    p.multiply(x, y)
}

pub fn poly_reduce(p: &Polycyclic, w: &GeneratorWord) -> Result<PolyElement> {
    p.reduce(w)
}

/// The polycyclic monoid of a one-vertex graph; its loops, in edge order,
/// are the generators.
pub fn rose_monoid(g: &Graph) -> Result<Polycyclic> {
    if g.vertex_count() != 1 {
        return Err(Error::NotARose(g.vertex_count()));
    }
    let alphabet = Alphabet::new(g.edge_ids().map(|e| g.edge_name(e).to_string()))?;
    Ok(Polycyclic::new(alphabet))
}

fn labels_of(p: &Path) -> Vec<Label> {
    p.edges().iter().map(|e| Label(e.0)).collect()
}

/// Transliterates a rose-graph element into its polycyclic monoid.
pub fn poly_from_rose(g: &Graph, x: &Element) -> Result<PolyElement> {
    rose_monoid(g)?;
    if x.tag() != g.tag() {
        return Err(Error::GraphMismatch);
    }
    Ok(match x.parts() {
        None => PolyElement::Zero,
        Some((u, v)) => PolyElement::Pair {
            pos: labels_of(u),
            neg: labels_of(v),
        },
    })
}

pub fn rose_from_poly(g: &Graph, x: &PolyElement) -> Result<Element> {
    let p = rose_monoid(g)?;
    p.check(x)?;
    let path = |w: &[Label]| -> Result<Path> {
        if w.is_empty() {
            Ok(Path::vertex(crate::graph::VertexId(0)))
        } else {
            Path::from_edges(g, w.iter().map(|l| EdgeId(l.0)).collect())
        }
    };
    match x {
        PolyElement::Zero => Ok(Element::zero(g)),
        PolyElement::Pair { pos, neg } => Element::pair(g, path(pos)?, path(neg)?),
    }
}

pub struct DisplayPoly<'a>(pub &'a Polycyclic, pub &'a PolyElement);

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_literal(self.1))
    }
}
