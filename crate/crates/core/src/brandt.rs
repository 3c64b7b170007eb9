//! Brandt `X⁰`-extensions `B⁰_X(S)` of a semigroup with zero, and the
//! semigroup of `X×X` matrix units.
//!
//! Only the Rees quotient is represented: a triple whose payload is the zero
//! of `S` is the zero of the extension.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;

use crate::element::{self, Element};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polycyclic::{PolyElement, Polycyclic};

/// A semigroup with an absorbing zero, supplied as a capability.
pub trait SemigroupWithZero {
    type Elem: Clone + Eq + Hash + Debug;

    fn product(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn zero(&self) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn render(&self, a: &Self::Elem) -> String;
}

/// The two-element semilattice `({0, 1}, min)`; `true` is `1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Semilattice;

impl SemigroupWithZero for Semilattice {
    type Elem = bool;

    fn product(&self, a: &bool, b: &bool) -> Result<bool> {
        Ok(*a && *b)
    }

    fn zero(&self) -> bool {
        false
    }

    fn render(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.to_string()
    }
}

impl SemigroupWithZero for Polycyclic {
    type Elem = PolyElement;

    fn product(&self, a: &PolyElement, b: &PolyElement) -> Result<PolyElement> {
        self.multiply(a, b)
    }

    fn zero(&self) -> PolyElement {
        PolyElement::Zero
    }

    fn render(&self, a: &PolyElement) -> String {
        self.to_literal(a)
    }
}

/// The graph inverse semigroup of a graph as a payload.
#[derive(Debug, Clone, Copy)]
pub struct GisPayload<'g>(pub &'g Graph);

impl SemigroupWithZero for GisPayload<'_> {
    type Elem = Element;

    fn product(&self, a: &Element, b: &Element) -> Result<Element> {
        element::multiply(self.0, a, b)
    }

    fn zero(&self) -> Element {
        Element::zero(self.0)
    }

    fn render(&self, a: &Element) -> String {
        a.to_literal(self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BrandtElement<I, S> {
    Zero,
    Triple { a: I, s: S, b: I },
}

impl<I, S> BrandtElement<I, S> {
    pub fn is_zero(&self) -> bool {
        matches!(self, BrandtElement::Zero)
    }
}

/// `B⁰_X(S)` with an explicit (materialized) index set `X`.
#[derive(Debug, Clone)]
pub struct Brandt<P: SemigroupWithZero, I: Ord> {
    payload: P,
    indices: BTreeSet<I>,
}

impl<P, I> Brandt<P, I>
where
    P: SemigroupWithZero,
    I: Ord + Clone + Debug,
{
    pub fn new(payload: P, indices: impl IntoIterator<Item = I>) -> Self {
        Brandt {
            payload,
            indices: indices.into_iter().collect(),
        }
    }

    pub fn payload(&self) -> &P {
        &self.payload
    }

    pub fn indices(&self) -> &BTreeSet<I> {
        &self.indices
    }

    fn check_index(&self, i: &I) -> Result<()> {
        if self.indices.contains(i) {
            Ok(())
        } else {
            Err(Error::UnknownIndex(format!("{i:?}")))
        }
    }

    /// `(a, s, b)`, or zero when `s` is the payload zero.
    pub fn triple(&self, a: I, s: P::Elem, b: I) -> Result<BrandtElement<I, P::Elem>> {
        self.check_index(&a)?;
        self.check_index(&b)?;
        Ok(if self.payload.is_zero(&s) {
            BrandtElement::Zero
        } else {
            BrandtElement::Triple { a, s, b }
        })
    }

    fn check(&self, x: &BrandtElement<I, P::Elem>) -> Result<()> {
        if let BrandtElement::Triple { a, b, .. } = x {
            self.check_index(a)?;
            self.check_index(b)?;
        }
        Ok(())
    }

    /// `(a, s, b)(c, t, d) = (a, st, d)` if `b = c` and `st ≠ 0`, else zero.
    pub fn multiply(
        &self,
        x: &BrandtElement<I, P::Elem>,
        y: &BrandtElement<I, P::Elem>,
    ) -> Result<BrandtElement<I, P::Elem>> {
        self.check(x)?;
        self.check(y)?;
        let (
            BrandtElement::Triple { a, s, b },
            BrandtElement::Triple { a: c, s: t, b: d },
        ) = (x, y)
        else {
            return Ok(BrandtElement::Zero);
        };
        if b != c {
            return Ok(BrandtElement::Zero);
        }
        let st = self.payload.product(s, t)?;
        Ok(if self.payload.is_zero(&st) {
            BrandtElement::Zero
        } else {
            BrandtElement::Triple {
                a: a.clone(),
                s: st,
                b: d.clone(),
            }
        })
    }

    /// Renders `(a | payload | b)` or `0`.
    pub fn render_with(
        &self,
        x: &BrandtElement<I, P::Elem>,
        index: impl Fn(&I) -> String,
    ) -> String {
        match x {
            BrandtElement::Zero => "0".to_string(),
            BrandtElement::Triple { a, s, b } => {
                format!("({} | {} | {})", index(a), self.payload.render(s), index(b))
            }
        }
    }

    /// Every element whose payload lies in `payloads`, zero first.
    pub fn elements_over(&self, payloads: &[P::Elem]) -> Vec<BrandtElement<I, P::Elem>> {
        let mut out = vec![BrandtElement::Zero];
        for a in &self.indices {
            for s in payloads.iter().filter(|s| !self.payload.is_zero(s)) {
                for b in &self.indices {
                    out.push(BrandtElement::Triple {
                        a: a.clone(),
                        s: s.clone(),
                        b: b.clone(),
                    });
                }
            }
        }
        out
    }
}

pub fn brandt_multiply<P, I>(
    bx: &Brandt<P, I>,
    x: &BrandtElement<I, P::Elem>,
    y: &BrandtElement<I, P::Elem>,
) -> Result<BrandtElement<I, P::Elem>>
where
    P: SemigroupWithZero,
    I: Ord + Clone + Debug,
{
    bx.multiply(x, y)
}

/// A matrix unit `(a, b)`, or `None` for zero.
pub type MatrixUnit<I> = Option<(I, I)>;

/// The semigroup `B⁰_X` of `X×X` matrix units.
#[derive(Debug, Clone)]
pub struct MatrixUnits<I: Ord> {
    indices: BTreeSet<I>,
}

impl<I: Ord + Clone + Debug> MatrixUnits<I> {
    pub fn new(indices: impl IntoIterator<Item = I>) -> Self {
        MatrixUnits {
            indices: indices.into_iter().collect(),
        }
    }

    pub fn indices(&self) -> &BTreeSet<I> {
        &self.indices
    }

    /// `(a, b)(c, d) = (a, d)` if `b = c`, else zero.
    pub fn multiply(&self, x: &MatrixUnit<I>, y: &MatrixUnit<I>) -> Result<MatrixUnit<I>> {
        for (a, b) in [x, y].into_iter().flatten() {
            for i in [a, b] {
                if !self.indices.contains(i) {
                    return Err(Error::UnknownIndex(format!("{i:?}")));
                }
            }
        }
        Ok(match (x, y) {
            (Some((a, b)), Some((c, d))) if b == c => Some((a.clone(), d.clone())),
            _ => None,
        })
    }

    /// Zero followed by every `(a, b)` in index order.
    pub fn elements(&self) -> Vec<MatrixUnit<I>> {
        let mut out = vec![None];
        for a in &self.indices {
            for b in &self.indices {
                out.push(Some((a.clone(), b.clone())));
            }
        }
        out
    }
}

pub fn matrix_unit_multiply<I: Ord + Clone + Debug>(
    x_set: &MatrixUnits<I>,
    x: &MatrixUnit<I>,
    y: &MatrixUnit<I>,
) -> Result<MatrixUnit<I>> {
    x_set.multiply(x, y)
}
