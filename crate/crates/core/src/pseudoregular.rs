//! Groupoids whose vertex set is an inverse monoid acting on the arrows
//! from both sides.
//!
//! Composition is written left to right: `α ∘ β` is defined when
//! `α𝐫 = β𝐝`.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::relmod::AxiomReport;

pub trait PseudoregularGroupoid {
    type Vertex: Clone + PartialEq + Debug;
    type Arrow: Clone + PartialEq + Debug;

    fn vertex_identity(&self) -> Self::Vertex;
    fn vertex_mul(&self, x: &Self::Vertex, y: &Self::Vertex) -> Self::Vertex;
    fn dom(&self, a: &Self::Arrow) -> Self::Vertex;
    fn ran(&self, a: &Self::Arrow) -> Self::Vertex;
    fn identity_arrow(&self, v: &Self::Vertex) -> Self::Arrow;
    fn compose(&self, a: &Self::Arrow, b: &Self::Arrow) -> Result<Self::Arrow>;
    fn act_left(&self, x: &Self::Vertex, a: &Self::Arrow) -> Self::Arrow;
    fn act_right(&self, a: &Self::Arrow, x: &Self::Vertex) -> Self::Arrow;

    /// `α ∗ β = (α ◁ β𝐝) ∘ (α𝐫 ▷ β)`.
    fn star(&self, a: &Self::Arrow, b: &Self::Arrow) -> Result<Self::Arrow> {
        let left = self.act_right(a, &self.dom(b));
        let right = self.act_left(&self.ran(a), b);
        self.compose(&left, &right)
    }

    /// `α ⊛ β = (α𝐝 ▷ β) ∘ (α ◁ β𝐫)`.
    fn circledast(&self, a: &Self::Arrow, b: &Self::Arrow) -> Result<Self::Arrow> {
        let left = self.act_left(&self.dom(a), b);
        let right = self.act_right(a, &self.ran(b));
        self.compose(&left, &right)
    }
}

/// One sample for [`check_axioms`]: vertices `x, y`, an arrow `α`, and
/// optionally an arrow `β` with `α𝐫 = β𝐝`.
pub struct AxiomSample<G: PseudoregularGroupoid + ?Sized> {
    pub x: G::Vertex,
    pub y: G::Vertex,
    pub alpha: G::Arrow,
    pub beta: Option<G::Arrow>,
}

/// Checks the five semiregular axioms on each sample.
pub fn check_axioms<G: PseudoregularGroupoid>(g: &G, samples: &[AxiomSample<G>]) -> AxiomReport {
    for (i, s) in samples.iter().enumerate() {
        let (x, y, a) = (&s.x, &s.y, &s.alpha);
        let xy = g.vertex_mul(x, y);
        let fail = |axiom: &str| AxiomReport {
            checked: i,
            failure: Some(format!("axiom ({axiom}) fails on sample {i}")),
        };
        if g.act_left(&xy, a) != g.act_left(x, &g.act_left(y, a))
            || g.act_right(a, &xy) != g.act_right(&g.act_right(a, x), y)
            || g.act_right(&g.act_left(x, a), y) != g.act_left(x, &g.act_right(a, y))
        {
            return fail("a");
        }
        let one = g.vertex_identity();
        if g.act_left(&one, a) != *a || g.act_right(a, &one) != *a {
            return fail("b");
        }
        if g.dom(&g.act_left(x, a)) != g.vertex_mul(x, &g.dom(a))
            || g.dom(&g.act_right(a, x)) != g.vertex_mul(&g.dom(a), x)
            || g.ran(&g.act_left(x, a)) != g.vertex_mul(x, &g.ran(a))
            || g.ran(&g.act_right(a, x)) != g.vertex_mul(&g.ran(a), x)
        {
            return fail("c");
        }
        if let Some(b) = &s.beta {
            let ab = match g.compose(a, b) {
                Ok(ab) => ab,
                Err(_) => return fail("d"),
            };
            let left = g.compose(&g.act_left(x, a), &g.act_left(x, b));
            let right = g.compose(&g.act_right(a, x), &g.act_right(b, x));
            if left.ok() != Some(g.act_left(x, &ab)) || right.ok() != Some(g.act_right(&ab, x)) {
                return fail("d");
            }
        }
        let one_xy = g.identity_arrow(&xy);
        if g.act_left(x, &g.identity_arrow(y)) != one_xy
            || g.act_right(&g.identity_arrow(x), y) != one_xy
        {
            return fail("e");
        }
    }
    AxiomReport {
        checked: samples.len(),
        failure: None,
    }
}

/// The semilattice `{1, e, f, 0}` with `ef = 0`, as indices `0..4`.
pub const U_VERTICES: [&str; 4] = ["1", "e", "f", "0"];

/// The subgroupoid `U` of the simplicial groupoid `E × E` on the semilattice
/// `{1, e, f, 0}` with `ef = 0`: pairs `(x, y)` with `x ≠ 1 ≠ y`, plus
/// `(1, 1)`. Both actions are componentwise multiplication.
#[derive(Clone, Copy, Debug, Default)]
pub struct FixtureU;

impl FixtureU {
    pub fn mul(x: usize, y: usize) -> usize {
        match (x, y) {
            (0, y) => y,
            (x, 0) => x,
            (x, y) if x == y => x,
            _ => 3,
        }
    }

    pub fn arrows() -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0)];
        for x in 1..4 {
            for y in 1..4 {
                out.push((x, y));
            }
        }
        out
    }

    /// Arrows with domain `v`.
    pub fn star_at(v: usize) -> Vec<(usize, usize)> {
        Self::arrows().into_iter().filter(|a| a.0 == v).collect()
    }

    /// Whether `1_v` is a two-sided identity for `∗` on the star at `v`.
    pub fn identity_is_star_identity(&self, v: usize) -> bool {
        let one = self.identity_arrow(&v);
        Self::star_at(v).iter().all(|a| {
            self.star(&one, a).ok().as_ref() == Some(a) && self.star(a, &one).ok().as_ref() == Some(a)
        })
    }
}

impl PseudoregularGroupoid for FixtureU {
    type Vertex = usize;
    type Arrow = (usize, usize);

    fn vertex_identity(&self) -> usize {
        0
    }

    fn vertex_mul(&self, x: &usize, y: &usize) -> usize {
        Self::mul(*x, *y)
    }

    fn dom(&self, a: &(usize, usize)) -> usize {
        a.0
    }

    fn ran(&self, a: &(usize, usize)) -> usize {
        a.1
    }

    fn identity_arrow(&self, v: &usize) -> (usize, usize) {
        (*v, *v)
    }

    fn compose(&self, a: &(usize, usize), b: &(usize, usize)) -> Result<(usize, usize)> {
        if a.1 != b.0 {
            return Err(Error::NotComposable);
        }
        Ok((a.0, b.1))
    }

    fn act_left(&self, x: &usize, a: &(usize, usize)) -> (usize, usize) {
        (Self::mul(*x, a.0), Self::mul(*x, a.1))
    }

    fn act_right(&self, a: &(usize, usize), x: &usize) -> (usize, usize) {
        (Self::mul(a.0, *x), Self::mul(a.1, *x))
    }
}
