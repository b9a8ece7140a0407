//! The arboreal cover `T(M, X)` and its kernel groups.
//!
//! `T(M, X)` embeds in `F(X) × M`, so an element is stored by its key
//! `(σ(w), (w⁻¹w)θ)`: the free reduction of any representative together with
//! its right idempotent in `M`.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::monoid::FiniteInverseMonoid;
use crate::schutz::{schutzenberger_graph, SchutzGraph};
use crate::word::{free_reduce, FreeGroupElement, Letter, Word};

#[derive(Clone, Debug)]
pub struct TElement {
    g: FreeGroupElement,
    e: usize,
    rep: Word,
    backend: u64,
}

impl TElement {
    /// `(σ-image, right idempotent)`.
    pub fn key(&self) -> (&FreeGroupElement, usize) {
        (&self.g, self.e)
    }

    pub fn group_part(&self) -> &FreeGroupElement {
        &self.g
    }

    /// The right idempotent `w⁻¹w` in `M`.
    pub fn idempotent(&self) -> usize {
        self.e
    }

    pub fn rep(&self) -> &Word {
        &self.rep
    }

    pub fn is_idempotent(&self) -> bool {
        self.g.is_identity()
    }
}

impl PartialEq for TElement {
    fn eq(&self, other: &Self) -> bool {
        self.backend == other.backend && self.g == other.g && self.e == other.e
    }
}

impl Eq for TElement {}

impl std::hash::Hash for TElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.g.hash(state);
        self.e.hash(state);
    }
}

impl PartialOrd for TElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.g, self.e).cmp(&(&other.g, other.e))
    }
}

impl fmt::Display for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, #{})", self.g.word(), self.e)
    }
}

/// Element arithmetic in `T(M, X)` over a finite backend.
#[derive(Clone, Debug)]
pub struct Cover {
    m: FiniteInverseMonoid,
}

impl Cover {
    pub fn new(m: FiniteInverseMonoid) -> Cover {
        Cover { m }
    }

    pub fn monoid(&self) -> &FiniteInverseMonoid {
        &self.m
    }

    /// `wρτ`, keeping `w` as the representative.
    pub fn element(&self, w: &Word) -> TElement {
        let e = self.m.right_idempotent(self.m.eval(w));
        TElement {
            g: free_reduce(w),
            e,
            rep: w.clone(),
            backend: self.m.fingerprint(),
        }
    }

    pub fn parse(&self, text: &str) -> Result<TElement> {
        Ok(self.element(&self.m.alphabet().parse_word(text)?))
    }

    pub fn identity(&self) -> TElement {
        self.element(&Word::empty())
    }

    /// A word with empty free reduction and value `e`.
    pub fn idempotent_lift(&self, e: usize) -> Word {
        let r = self.m.rep(e);
        r.concat(&r.inverse())
    }

    /// The idempotent of `T` above `e ∈ E(M)`.
    pub fn idempotent(&self, e: usize) -> Result<TElement> {
        self.m.require_idempotent(e)?;
        Ok(self.element(&self.idempotent_lift(e)))
    }

    /// `rep(s)ρτ`: the shortlex lift of an element of `M`.
    pub fn lift(&self, s: usize) -> TElement {
        self.element(self.m.rep(s))
    }

    /// Representative `σ · ẽ` determined by the key alone.
    fn canonical(&self, g: FreeGroupElement, e: usize) -> TElement {
        let rep = g.word().concat(&self.idempotent_lift(e));
        TElement {
            g,
            e,
            rep,
            backend: self.m.fingerprint(),
        }
    }

    fn check(&self, a: &TElement) -> Result<()> {
        if a.backend != self.m.fingerprint() {
            return Err(Error::BackendMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, a: &TElement, b: &TElement) -> Result<TElement> {
        self.check(a)?;
        self.check(b)?;
        let w = a.rep.concat(&b.rep);
        let e = self.m.right_idempotent(self.m.eval(&w));
        Ok(self.canonical(a.g.mul(&b.g), e))
    }

    pub fn inverse(&self, a: &TElement) -> Result<TElement> {
        self.check(a)?;
        let e = self.m.left_idempotent(self.psi(a));
        Ok(self.canonical(a.g.inverse(), e))
    }

    pub fn product(&self, items: &[&TElement]) -> Result<TElement> {
        items
            .iter()
            .try_fold(self.identity(), |acc, t| self.mul(&acc, t))
    }

    /// `ψ : T → M`. Since `w = σ(w)·w⁻¹w` in `FIM(X)`, this is `σθ·e`.
    pub fn psi(&self, a: &TElement) -> usize {
        self.m.mul(self.m.eval(a.g.word()), a.e)
    }

    /// Natural order: `a ⩽ b` iff `a = (aa⁻¹)b`.
    pub fn leq(&self, a: &TElement, b: &TElement) -> Result<bool> {
        let left = self.mul(a, &self.inverse(a)?)?;
        Ok(&self.mul(&left, b)? == a)
    }

    pub fn kernel_group(&self, e: usize) -> Result<KernelGroup> {
        Ok(KernelGroup::new(schutzenberger_graph(&self.m, e)?))
    }

    pub fn to_json(&self, a: &TElement) -> Value {
        let alpha = self.m.alphabet();
        json!({
            "g": alpha.format_word(a.g.word()),
            "e": self.m.name(a.e),
            "rep": alpha.format_word(&a.rep),
        })
    }
}

/// `K_e`, free on the non-tree edges of a spanning tree of the graph.
#[derive(Clone, Debug)]
pub struct KernelGroup {
    graph: SchutzGraph,
    tree_words: Vec<Word>,
    tree_edge: Vec<bool>,
    basis: Vec<usize>,
    basis_index: Vec<Option<usize>>,
}

impl KernelGroup {
    /// Spanning tree by breadth-first search from the base in letter order.
    pub fn new(graph: SchutzGraph) -> KernelGroup {
        let n = graph.vertex_count();
        let edge_id = |s: usize, l: Letter, t: usize| -> usize {
            let (src, dst) = if l.is_inverse() { (t, s) } else { (s, t) };
            graph
                .edges()
                .binary_search(&(src, l.generator(), dst))
                .expect("edge present")
        };
        let mut tree_words = vec![Word::empty(); n];
        let mut tree_edge = vec![false; graph.edge_count()];
        let mut seen = vec![false; n];
        seen[graph.base()] = true;
        let mut queue = std::collections::VecDeque::from([graph.base()]);
        while let Some(v) = queue.pop_front() {
            for l in graph.alphabet().letters() {
                if let Some(t) = graph.step(v, l) {
                    if !seen[t] {
                        seen[t] = true;
                        tree_edge[edge_id(v, l, t)] = true;
                        let mut w = tree_words[v].clone();
                        w.push(l);
                        tree_words[t] = w;
                        queue.push_back(t);
                    }
                }
            }
        }
        let basis: Vec<usize> = (0..graph.edge_count()).filter(|&i| !tree_edge[i]).collect();
        let mut basis_index = vec![None; graph.edge_count()];
        for (i, &edge) in basis.iter().enumerate() {
            basis_index[edge] = Some(i);
        }
        KernelGroup {
            graph,
            tree_words,
            tree_edge,
            basis,
            basis_index,
        }
    }

    pub fn graph(&self) -> &SchutzGraph {
        &self.graph
    }

    /// The base idempotent, for graphs built from a finite monoid.
    pub fn idempotent(&self) -> Option<usize> {
        self.graph.element(self.graph.base())
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Edge ids (positions in `graph().edges()`) of the free basis.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn is_tree_edge(&self, edge: usize) -> bool {
        self.tree_edge[edge]
    }

    pub fn basis_position(&self, edge: usize) -> Option<usize> {
        self.basis_index[edge]
    }

    /// Label of the tree path from the base to `v`.
    pub fn tree_word(&self, v: usize) -> &Word {
        &self.tree_words[v]
    }

    /// Traces `w` from the base. Each traversed edge contributes its signed
    /// edge id.
    fn walk(&self, w: &Word) -> Result<Vec<(usize, bool)>> {
        let mut cur = self.graph.base();
        let mut steps = Vec::with_capacity(w.len());
        for &l in w.letters() {
            let t = self.graph.step(cur, l).ok_or(Error::NotAClosedPath)?;
            let (src, dst) = if l.is_inverse() { (t, cur) } else { (cur, t) };
            let id = self
                .graph
                .edges()
                .binary_search(&(src, l.generator(), dst))
                .expect("edge present");
            steps.push((id, l.is_inverse()));
            cur = t;
        }
        if cur != self.graph.base() {
            return Err(Error::NotAClosedPath);
        }
        Ok(steps)
    }

    /// `κ_e`: a closed path at the base written in the non-tree-edge basis.
    pub fn kappa(&self, w: &Word) -> Result<FreeGroupElement> {
        let letters: Vec<Letter> = self
            .walk(w)?
            .into_iter()
            .filter_map(|(id, inv)| self.basis_index[id].map(|b| Letter::new(b, inv)))
            .collect();
        Ok(free_reduce(&Word::new(letters)))
    }

    /// Edge-space vector of a closed path: net traversals of every edge.
    pub fn cycle_vector(&self, w: &Word) -> Result<Vec<i64>> {
        let mut v = vec![0; self.graph.edge_count()];
        for (id, inv) in self.walk(w)? {
            v[id] += if inv { -1 } else { 1 };
        }
        Ok(v)
    }

    /// A closed path whose `κ_e` is `k`.
    pub fn kappa_inv(&self, k: &FreeGroupElement) -> Word {
        let mut out = Vec::new();
        for &l in k.word().letters() {
            let (s, x, t) = self.graph.edges()[self.basis[l.generator()]];
            let (from, to, step) = if l.is_inverse() {
                (t, s, Letter::new(x, true))
            } else {
                (s, t, Letter::positive(x))
            };
            out.extend_from_slice(self.tree_words[from].letters());
            out.push(step);
            out.extend(self.tree_words[to].inverse().letters().iter().copied());
        }
        Word::new(out)
    }

    /// The element `(σ(w⁻ˡ), e)` of `T` carried by a closed path `w`,
    /// where `w⁻ˡ` inverts every letter in place.
    pub fn path_to_t(&self, cover: &Cover, w: &Word) -> Result<TElement> {
        self.walk(w)?;
        let e = self.idempotent().ok_or(Error::NotInKernelComponent)?;
        let lift = cover.idempotent(e)?;
        cover.mul(&lift, &cover.element(&w.invert_letters()))
    }

    /// Inverse of [`KernelGroup::path_to_t`] composed with `κ_e`.
    pub fn from_t(&self, cover: &Cover, t: &TElement) -> Result<FreeGroupElement> {
        let e = self.idempotent().ok_or(Error::NotInKernelComponent)?;
        if t.idempotent() != e || cover.psi(t) != e {
            return Err(Error::NotInKernelComponent);
        }
        self.kappa(&t.group_part().word().invert_letters())
            .map_err(|_| Error::NotInKernelComponent)
    }

    pub fn to_json(&self, names: impl Fn(usize) -> String) -> Value {
        json!({
            "e": self.idempotent().map(&names).unwrap_or_else(|| self.graph.name(self.graph.base()).to_string()),
            "rank": self.rank(),
            "basis": self.basis,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn i2() -> Cover {
        let a = Alphabet::new(&["t", "e"]).unwrap();
        Cover::new(
            FiniteInverseMonoid::from_partial_bijections(
                a,
                2,
                &[vec![Some(1), Some(0)], vec![Some(0), None]],
            )
            .unwrap(),
        )
    }

    #[test]
    fn keys_and_idempotents() {
        let c = i2();
        let t = c.parse("t e e' t'").unwrap();
        assert!(t.is_idempotent());
        let w = c.parse("t e").unwrap();
        let ww = c.element(&c.monoid().alphabet().parse_word("t e e' t' t e").unwrap());
        assert_eq!(w, ww);
        let inv = c.inverse(&w).unwrap();
        assert_eq!(c.mul(&c.mul(&w, &inv).unwrap(), &w).unwrap(), w);
        assert!(c.leq(&ww, &w).unwrap());
    }

    #[test]
    fn kernel_ranks_for_i2() {
        let c = i2();
        let ranks: Vec<usize> = c
            .monoid()
            .idempotents()
            .iter()
            .map(|&e| c.kernel_group(e).unwrap().rank())
            .collect();
        assert_eq!(ranks, [1, 2, 2, 2]);
    }

    #[test]
    fn kappa_round_trip_and_errors() {
        let c = i2();
        let k = c.kernel_group(0).unwrap();
        let tt = c.monoid().alphabet().parse_word("t t").unwrap();
        assert_eq!(k.kappa(&tt).unwrap(), FreeGroupElement::generator(0));
        assert_eq!(k.kappa(&Word::empty()).unwrap(), FreeGroupElement::identity());
        let t = c.monoid().alphabet().parse_word("t").unwrap();
        assert_eq!(k.kappa(&t), Err(Error::NotAClosedPath));
        let g = FreeGroupElement::generator(0).inverse();
        assert_eq!(k.kappa(&k.kappa_inv(&g)).unwrap(), g);
        let elem = k.path_to_t(&c, &tt).unwrap();
        assert_eq!(k.from_t(&c, &elem).unwrap(), FreeGroupElement::generator(0));
    }

    #[test]
    fn backend_mismatch() {
        let c = i2();
        let a = Alphabet::new(&["t", "e"]).unwrap();
        let other = Cover::new(
            FiniteInverseMonoid::from_partial_bijections(a, 1, &[vec![Some(0)], vec![None]]).unwrap(),
        );
        let x = c.parse("t").unwrap();
        let y = other.parse("t").unwrap();
        assert_eq!(c.mul(&x, &y), Err(Error::BackendMismatch));
    }
}
