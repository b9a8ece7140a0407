//! The free crossed module on the relations, its abelianisation as a free
//! Lausch module, and the boundary `r̄` onto the relation module.
//!
//! Elements of a star group are compared through [`CanonicalForm`]: the
//! boundary in `K_e` together with the abelianised vector over `Y_e`.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cover::{Cover, TElement};
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::monoid::FiniteInverseMonoid;
use crate::presentation::Presentation;
use crate::relmod::{LauschModule, MonoidModule};
use crate::squier::LambdaGenerator;
use crate::word::FreeGroupElement;

/// One element `(l, r, x)` of `R_x` with `ω = x̃·(l⁻¹r)ρτ·x̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedBasisEntry {
    pub rel: usize,
    pub x: usize,
    pub omega: TElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossedTerm {
    pub rel: usize,
    pub u: TElement,
    pub inverse: bool,
}

/// A formal product of generators `(l, r, u)^±1`, all anchored at `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossedElement {
    pub anchor: usize,
    pub terms: Vec<CrossedTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub anchor: usize,
    /// The boundary as a word over the free basis of `K_e`.
    pub k: FreeGroupElement,
    /// Coordinates over `Y_e`.
    pub vec: Vec<i64>,
}

impl CanonicalForm {
    pub fn is_identity(&self) -> bool {
        self.k.is_identity() && self.vec.iter().all(|&x| x == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactEntry {
    pub e: usize,
    pub name: String,
    pub free_rank: usize,
    pub image_rank: usize,
    pub kernel_rank: usize,
    pub h1_rank: usize,
    pub surjective: bool,
    pub kernel_basis: Vec<Vec<i64>>,
}

impl ExactEntry {
    pub fn exact(&self) -> bool {
        self.kernel_rank + self.image_rank == self.free_rank
            && self.surjective == (self.image_rank == self.h1_rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub entries: Vec<ExactEntry>,
    /// First failure of `r̄_f·A = B·r̄_e`, if any.
    pub naturality: Option<String>,
    /// First kernel vector pushed out of the kernel by an action, if any.
    pub closure: Option<String>,
}

impl ExactSequenceReport {
    pub fn passed(&self) -> bool {
        self.naturality.is_none()
            && self.closure.is_none()
            && self.entries.iter().all(|x| x.exact() && x.surjective)
    }

    pub fn entry(&self, e: usize) -> Option<&ExactEntry> {
        self.entries.iter().find(|x| x.e == e)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|x| {
                json!({
                    "e": x.name,
                    "freeRank": x.free_rank,
                    "imageRank": x.image_rank,
                    "kernelRank": x.kernel_rank,
                    "surjective": x.surjective,
                    "kernelBasis": x.kernel_basis,
                })
            })
            .collect();
        json!({
            "entries": entries,
            "natural": self.naturality.is_none(),
            "kernelClosed": self.closure.is_none(),
            "passed": self.passed(),
        })
    }

    pub fn table(&self) -> String {
        let mut out = String::from("e\tfree\timage\tkernel\tH1\tsurjective\tkernel basis\n");
        for x in &self.entries {
            let basis: Vec<String> = x.kernel_basis.iter().map(|v| format!("{v:?}")).collect();
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                x.name,
                x.free_rank,
                x.image_rank,
                x.kernel_rank,
                x.h1_rank,
                x.surjective,
                if basis.is_empty() { "-".into() } else { basis.join(" ") }
            );
        }
        out
    }
}

/// The free crossed module of a presentation over its finite monoid.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pres: Presentation,
    module: LauschModule,
    sides: Vec<(TElement, TElement)>,
    /// `(l⁻¹r)θ` per relation.
    quotients: Vec<usize>,
    y: HashMap<usize, Vec<(usize, usize)>>,
}

impl CrossedModule {
    pub fn new(pres: &Presentation, m: FiniteInverseMonoid) -> Result<CrossedModule> {
        Self::with_module(pres, LauschModule::new(m))
    }

    pub fn with_module(pres: &Presentation, module: LauschModule) -> Result<CrossedModule> {
        let m = module.monoid();
        if m.alphabet().rank() != pres.rank() {
            return Err(Error::AlphabetMismatch(pres.rank(), m.alphabet().rank()));
        }
        let cover = module.cover();
        let mut quotients = Vec::new();
        for (i, r) in pres.relations().iter().enumerate() {
            if m.eval(&r.lhs) != m.eval(&r.rhs) {
                return Err(Error::InvalidMonoid(format!("relation {i} does not hold")));
            }
            quotients.push(m.eval(&r.quotient()));
        }
        let sides = pres
            .relations()
            .iter()
            .map(|r| (cover.element(&r.lhs), cover.element(&r.rhs)))
            .collect();
        let mut y = HashMap::new();
        for &e in m.idempotents() {
            let mut basis = Vec::new();
            for (rel, &q) in quotients.iter().enumerate() {
                for s in m.elements() {
                    if m.right_idempotent(s) == e && m.leq(m.left_idempotent(s), q) {
                        basis.push((rel, s));
                    }
                }
            }
            y.insert(e, basis);
        }
        Ok(CrossedModule {
            pres: pres.clone(),
            module,
            sides,
            quotients,
            y,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn cover(&self) -> &Cover {
        self.module.cover()
    }

    pub fn relation_module(&self) -> &LauschModule {
        &self.module
    }

    pub fn crossed_basis(&self) -> Result<Vec<CrossedBasisEntry>> {
        let m = self.module.monoid();
        let c = self.cover();
        let mut out = Vec::new();
        for &x in m.idempotents() {
            for (rel, &q) in self.quotients.iter().enumerate() {
                if !m.leq(x, q) {
                    continue;
                }
                let xt = c.idempotent(x)?;
                let (h, k) = &self.sides[rel];
                let omega = c.product(&[&xt, &c.inverse(h)?, k, &xt])?;
                out.push(CrossedBasisEntry { rel, x, omega });
            }
        }
        Ok(out)
    }

    /// `Z_e`: relations with `(l⁻¹r)θ = e` exactly.
    pub fn z_set(&self, e: usize) -> Vec<usize> {
        (0..self.quotients.len()).filter(|&i| self.quotients[i] == e).collect()
    }

    pub fn z_sets(&self) -> Vec<(usize, Vec<usize>)> {
        self.module.monoid().idempotents().iter().map(|&e| (e, self.z_set(e))).collect()
    }

    /// `Y_e`, sorted by relation then element.
    pub fn free_module_basis(&self, e: usize) -> &[(usize, usize)] {
        self.y.get(&e).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn generator(&self, rel: usize, u: &TElement) -> Result<CrossedElement> {
        let c = self.cover();
        let m = c.monoid();
        let top = m.left_idempotent(c.psi(u));
        if !m.leq(top, self.quotients[rel]) {
            return Err(Error::SideCondition(format!(
                "{} is not below (l⁻¹r)θ for relation {rel}",
                m.name(top)
            )));
        }
        Ok(CrossedElement {
            anchor: u.idempotent(),
            terms: vec![CrossedTerm {
                rel,
                u: u.clone(),
                inverse: false,
            }],
        })
    }

    pub fn identity(&self, e: usize) -> Result<CrossedElement> {
        self.module.monoid().require_idempotent(e)?;
        Ok(CrossedElement {
            anchor: e,
            terms: Vec::new(),
        })
    }

    pub fn mul(&self, a: &CrossedElement, b: &CrossedElement) -> Result<CrossedElement> {
        if a.anchor != b.anchor {
            return Err(Error::AnchorMismatch(a.anchor, b.anchor));
        }
        let mut terms = a.terms.clone();
        terms.extend(b.terms.iter().cloned());
        Ok(CrossedElement {
            anchor: a.anchor,
            terms,
        })
    }

    pub fn inverse(&self, a: &CrossedElement) -> CrossedElement {
        CrossedElement {
            anchor: a.anchor,
            terms: a
                .terms
                .iter()
                .rev()
                .map(|t| CrossedTerm {
                    inverse: !t.inverse,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// `u⁻¹v⁻¹u·v^{δu}`.
    pub fn peiffer(&self, u: &CrossedElement, v: &CrossedElement) -> Result<CrossedElement> {
        let du = self.delta(u)?;
        let left = self.mul(&self.mul(&self.inverse(u), &self.inverse(v))?, u)?;
        self.mul(&left, &self.act(v, &du)?)
    }

    fn term_delta(&self, t: &CrossedTerm) -> Result<TElement> {
        let c = self.cover();
        let (h, k) = &self.sides[t.rel];
        let d = c.product(&[&c.inverse(&t.u)?, &c.inverse(h)?, k, &t.u])?;
        if t.inverse {
            c.inverse(&d)
        } else {
            Ok(d)
        }
    }

    /// The boundary in `T`; it lies in `K_e`.
    pub fn delta(&self, c: &CrossedElement) -> Result<TElement> {
        let cover = self.cover();
        let mut acc = cover.idempotent(c.anchor)?;
        for t in &c.terms {
            if t.u.idempotent() != c.anchor {
                return Err(Error::AnchorMismatch(c.anchor, t.u.idempotent()));
            }
            acc = cover.mul(&acc, &self.term_delta(t)?)?;
        }
        Ok(acc)
    }

    /// The boundary as a word over the basis of `K_e`.
    pub fn delta_kernel(&self, c: &CrossedElement) -> Result<FreeGroupElement> {
        let d = self.delta(c)?;
        self.module.component(c.anchor).kernel.from_t(self.cover(), &d)
    }

    /// `c^t`: each conjugator `u` becomes `ut`. Needs `ψ(tt⁻¹) = e`.
    pub fn act(&self, c: &CrossedElement, t: &TElement) -> Result<CrossedElement> {
        let cover = self.cover();
        let m = cover.monoid();
        let top = m.left_idempotent(cover.psi(t));
        if top != c.anchor {
            return Err(Error::AnchorMismatch(c.anchor, top));
        }
        let terms = c
            .terms
            .iter()
            .map(|x| {
                Ok(CrossedTerm {
                    u: cover.mul(&x.u, t)?,
                    ..x.clone()
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CrossedElement {
            anchor: m.right_idempotent(cover.psi(t)),
            terms,
        })
    }

    pub fn canonical_form(&self, c: &CrossedElement) -> Result<CanonicalForm> {
        let k = self.delta_kernel(c)?;
        let cover = self.cover();
        let basis = self.free_module_basis(c.anchor);
        let mut vec = vec![0i64; basis.len()];
        for t in &c.terms {
            let key = (t.rel, cover.psi(&t.u));
            let pos = basis
                .binary_search(&key)
                .map_err(|_| Error::SideCondition(format!("term {key:?} lies outside Y_e")))?;
            vec[pos] += if t.inverse { -1 } else { 1 };
        }
        Ok(CanonicalForm {
            anchor: c.anchor,
            k,
            vec,
        })
    }

    /// `λ^e_{l,r,q} ↦ (l, r, qe)`, signs preserved.
    pub fn from_lambda(&self, e: usize, gens: &[LambdaGenerator]) -> Result<CrossedElement> {
        let c = self.cover();
        let et = c.idempotent(e)?;
        let mut out = self.identity(e)?;
        for g in gens {
            if g.e != e {
                return Err(Error::AnchorMismatch(e, g.e));
            }
            out.terms.push(CrossedTerm {
                rel: g.rel,
                u: c.mul(&g.q, &et)?,
                inverse: g.inverse,
            });
        }
        Ok(out)
    }

    /// The `H₁` class of `δ(l, r, u)` in the cycle basis at `e = u⁻¹u`.
    pub fn rbar_column(&self, rel: usize, u: &TElement) -> Result<Vec<i64>> {
        let e = u.idempotent();
        let comp = self.module.component(e);
        let d = self.term_delta(&CrossedTerm {
            rel,
            u: u.clone(),
            inverse: false,
        })?;
        Ok(comp.kernel.from_t(self.cover(), &d)?.abelianize(comp.rank()))
    }

    /// `r̄_e : ℤ^{Y_e} → H₁(e)`, lifting each `m` by its shortlex word.
    pub fn rbar_matrix(&self, e: usize) -> Result<IntegerMatrix> {
        let columns = self
            .free_module_basis(e)
            .iter()
            .map(|&(rel, m)| self.rbar_column(rel, &self.cover().lift(m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegerMatrix::from_columns(self.module.rank(e), &columns))
    }

    /// Columns form a basis of the identities at `e`, `ker r̄_e`.
    pub fn identity_module(&self, e: usize) -> Result<IntegerMatrix> {
        Ok(self.rbar_matrix(e)?.kernel())
    }

    fn entry(&self, e: usize) -> Result<ExactEntry> {
        let r = self.rbar_matrix(e)?;
        let kernel = r.kernel();
        let h1_rank = self.module.rank(e);
        Ok(ExactEntry {
            e,
            name: self.module.monoid().name(e).to_string(),
            free_rank: r.cols(),
            image_rank: r.rank(),
            kernel_rank: kernel.cols(),
            h1_rank,
            surjective: r.is_surjective(),
            kernel_basis: kernel.transpose().to_i64_rows(),
        })
    }

    /// Ranks, surjectivity and kernel bases per idempotent, then naturality
    /// of `r̄` and closure of the kernels under every action.
    pub fn verify_exact_sequence(&self) -> Result<ExactSequenceReport> {
        let m = self.module.monoid();
        let idem = m.idempotents();
        let entries = idem
            .par_iter()
            .map(|&e| self.entry(e))
            .collect::<Result<Vec<_>>>()?;
        let rbars = idem
            .par_iter()
            .map(|&e| Ok((e, self.rbar_matrix(e)?)))
            .collect::<Result<HashMap<_, _>>>()?;
        let mut naturality = None;
        let mut closure = None;
        'outer: for (&e, entry) in idem.iter().zip(&entries) {
            let kernel = IntegerMatrix::from_rows_with_cols(&entry.kernel_basis, entry.free_rank)
                .transpose();
            for s in m.elements() {
                let (f, free) = MonoidModule::action_matrix(self, e, s);
                let (_, h) = self.module.action_matrix(e, s);
                let left = rbars[&f].mul(&free);
                if left != h.mul(&rbars[&e]) {
                    naturality = Some(format!("r̄ is not natural at e={}, s={}", m.name(e), m.name(s)));
                    break 'outer;
                }
                if closure.is_none() && !left.mul(&kernel).is_zero() {
                    closure = Some(format!("kernel at {} leaves under {}", m.name(e), m.name(s)));
                }
            }
        }
        Ok(ExactSequenceReport {
            entries,
            naturality,
            closure,
        })
    }
}

/// The free Lausch module on `Z`: `(l, r, m) ◁ s = (l, r, ms)`.
impl MonoidModule for CrossedModule {
    fn monoid(&self) -> &FiniteInverseMonoid {
        self.module.monoid()
    }

    fn rank(&self, e: usize) -> usize {
        self.free_module_basis(e).len()
    }

    fn action_matrix(&self, e: usize, s: usize) -> (usize, IntegerMatrix) {
        let m = self.module.monoid();
        let f = m.mul(m.mul(m.inv(s), e), s);
        let src = self.free_module_basis(e);
        let dst = self.free_module_basis(f);
        let mut mat = IntegerMatrix::zeros(dst.len(), src.len());
        for (j, &(rel, x)) in src.iter().enumerate() {
            let i = dst
                .binary_search(&(rel, m.mul(x, s)))
                .expect("Y is closed under the action");
            mat.set(i, j, 1.into());
        }
        (f, mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relmod::verify_lausch_axioms;
    use crate::stephen::{enumerate_monoid, StephenBudget};

    fn semilattice() -> CrossedModule {
        let p = Presentation::from_strs(&["e", "f"], &[("e e", "e"), ("f f", "f"), ("e f", "f e")])
            .unwrap();
        let m = enumerate_monoid(&p, StephenBudget::default()).unwrap();
        CrossedModule::new(&p, m).unwrap()
    }

    #[test]
    fn z_and_y_sets() {
        let x = semilattice();
        let m = x.relation_module().monoid();
        let id = |s| m.element_by_name(s).unwrap();
        assert_eq!(x.z_set(id("e")), [0]);
        assert_eq!(x.z_set(id("f")), [1]);
        assert_eq!(x.z_set(id("e f")), [2]);
        assert!(x.z_set(id("1")).is_empty());
        assert_eq!(x.free_module_basis(id("e f")).len(), 3);
        assert_eq!(x.free_module_basis(id("e")), [(0, id("e"))]);
        assert!(x.free_module_basis(id("1")).is_empty());
    }

    #[test]
    fn crossed_basis_omega_is_loop() {
        let x = semilattice();
        let c = x.cover();
        let m = c.monoid();
        let basis = x.crossed_basis().unwrap();
        let ef = m.element_by_name("e f").unwrap();
        let xs: Vec<usize> = basis.iter().filter(|b| b.rel == 2).map(|b| b.x).collect();
        assert_eq!(xs, [ef]);
        for b in &basis {
            let w = &b.omega;
            let wi = c.inverse(w).unwrap();
            assert_eq!(c.mul(w, &wi).unwrap(), c.mul(&wi, w).unwrap());
        }
    }

    #[test]
    fn semilattice_rbar_at_ef() {
        let x = semilattice();
        let ef = x.cover().monoid().element_by_name("e f").unwrap();
        let r = x.rbar_matrix(ef).unwrap();
        assert_eq!(r.to_i64_rows(), [[1, 0, 0], [0, 1, 0]]);
        assert_eq!(x.identity_module(ef).unwrap().to_i64_rows(), [[0], [0], [1]]);
    }

    #[test]
    fn exact_sequence_semilattice() {
        let x = semilattice();
        let rep = x.verify_exact_sequence().unwrap();
        assert!(rep.passed(), "{rep:?}");
        let ranks: Vec<(usize, usize, usize)> = rep
            .entries
            .iter()
            .map(|e| (e.free_rank, e.image_rank, e.kernel_rank))
            .collect();
        assert_eq!(ranks, [(0, 0, 0), (1, 1, 0), (1, 1, 0), (3, 2, 1)]);
    }

    #[test]
    fn free_module_is_lausch() {
        let x = semilattice();
        assert!(verify_lausch_axioms(&x, 200, 1).passed());
    }

    #[test]
    fn canonical_forms() {
        let x = semilattice();
        let c = x.cover();
        let m = c.monoid();
        let ef = m.element_by_name("e f").unwrap();
        let u = c.lift(ef);
        let g = x.generator(2, &u).unwrap();
        let cf = x.canonical_form(&g).unwrap();
        // A commutator of the e- and f-loops: nontrivial, abelianising to 0.
        assert!(!cf.k.is_identity());
        assert_eq!(cf.k.abelianize(2), [0, 0]);
        assert_eq!(cf.vec, [0, 0, 1]);
        let gg = x.mul(&g, &x.inverse(&g)).unwrap();
        assert!(x.canonical_form(&gg).unwrap().is_identity());
        let h = x.generator(0, &u).unwrap();
        let p = x.peiffer(&g, &h).unwrap();
        assert!(x.canonical_form(&p).unwrap().is_identity());
        assert!(x.canonical_form(&x.identity(ef).unwrap()).unwrap().is_identity());
        assert!(matches!(x.generator(2, &c.identity()), Err(Error::SideCondition(_))));
        assert!(matches!(x.mul(&g, &x.identity(0).unwrap()), Err(Error::AnchorMismatch(..))));
    }

    #[test]
    fn single_idempotent_relation() {
        let p = Presentation::from_strs(&["e"], &[("e e", "e")]).unwrap();
        let m = enumerate_monoid(&p, StephenBudget::default()).unwrap();
        let x = CrossedModule::new(&p, m).unwrap();
        let rep = x.verify_exact_sequence().unwrap();
        assert!(rep.passed());
        let e = x.cover().monoid().element_by_name("e").unwrap();
        let r = x.rbar_matrix(e).unwrap();
        assert_eq!(r.rows(), 1);
        assert_eq!(r.cols(), 1);
        assert!(r.get(0, 0) == &1.into() || r.get(0, 0) == &(-1).into());
        assert!(rep.entries.iter().all(|x| x.kernel_rank == 0));
    }
}
