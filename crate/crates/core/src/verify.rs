//! The property suite behind `invpres verify`: every sampled check is
//! driven by one seed, so runs are reproducible.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cover::{Cover, KernelGroup, TElement};
use crate::error::{Error, Result};
use crate::monoid::FiniteInverseMonoid;
use crate::presentation::Presentation;
use crate::pseudoregular::{check_axioms, AxiomSample, PseudoregularGroupoid};
use crate::relmod::{compare_kernel_route, verify_lausch_axioms};
use crate::schutz::schutzenberger_graph;
use crate::squier::{Squier, SquierPath};
use crate::stephen::{enumerate_monoid, stephen_graph, StephenBudget};
use crate::word::{FreeGroupElement, Letter, Word};
use crate::xmod::{CanonicalForm, CrossedElement, CrossedModule};

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub budget: StephenBudget,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: 500,
            seed: 0,
            budget: StephenBudget::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, outcome: std::result::Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(CheckResult { name, passed, detail });
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}\t{}\t{}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

fn random_word<R: Rng>(rng: &mut R, letters: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| Letter::from_index(rng.gen_range(0..letters))).collect())
}

/// A random walk of length `len` from the base, closed up along the tree.
pub fn random_closed_path<R: Rng>(k: &KernelGroup, rng: &mut R, len: usize) -> Word {
    let g = k.graph();
    let letters: Vec<Letter> = g.alphabet().letters().collect();
    let mut cur = g.base();
    let mut w = Word::empty();
    for _ in 0..len {
        let moves: Vec<(Letter, usize)> =
            letters.iter().filter_map(|&l| g.step(cur, l).map(|t| (l, t))).collect();
        if moves.is_empty() {
            break;
        }
        let (l, t) = moves[rng.gen_range(0..moves.len())];
        w.push(l);
        cur = t;
    }
    w.concat(&k.tree_word(cur).inverse())
}

/// A random reduced word over the free basis of `K_e`.
pub fn random_kernel_word<R: Rng>(k: &KernelGroup, rng: &mut R, max_len: usize) -> FreeGroupElement {
    if k.rank() == 0 {
        return FreeGroupElement::identity();
    }
    crate::word::free_reduce(&random_word(rng, 2 * k.rank(), max_len))
}

fn check_kappa(cover: &Cover, cfg: &VerifyConfig) -> std::result::Result<String, String> {
    let m = cover.monoid();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6b61);
    let kernels: Vec<KernelGroup> = m
        .idempotents()
        .iter()
        .map(|&e| cover.kernel_group(e).map_err(|x| x.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    for i in 0..cfg.samples {
        let k = &kernels[rng.gen_range(0..kernels.len())];
        let a = random_closed_path(k, &mut rng, 8);
        let b = random_closed_path(k, &mut rng, 8);
        let ka = k.kappa(&a).map_err(|x| x.to_string())?;
        let kb = k.kappa(&b).map_err(|x| x.to_string())?;
        let kab = k.kappa(&a.concat(&b)).map_err(|x| x.to_string())?;
        if kab != ka.mul(&kb) {
            return Err(format!("homomorphism law fails on sample {i}"));
        }
        let t = k.path_to_t(cover, &a).map_err(|x| x.to_string())?;
        if k.from_t(cover, &t).as_ref() != Ok(&ka) {
            return Err(format!("path_to_t / from_t disagree on sample {i}"));
        }
    }
    let round_trips = cfg.samples.min(100);
    for i in 0..round_trips {
        let k = &kernels[rng.gen_range(0..kernels.len())];
        let w = random_kernel_word(k, &mut rng, 6);
        if k.kappa(&k.kappa_inv(&w)).as_ref() != Ok(&w) {
            return Err(format!("kappa ∘ kappa_inv differs from the identity on round trip {i}"));
        }
    }
    Ok(format!("{} pairs, {} round trips", cfg.samples, round_trips))
}

fn random_lift<R: Rng>(x: &CrossedModule, rng: &mut R, s: usize) -> Result<TElement> {
    let cover = x.cover();
    let m = cover.monoid();
    let e = m.left_idempotent(s);
    let k = &x.relation_module().component(e).kernel;
    let w = random_kernel_word(k, rng, 4);
    let kt = k.path_to_t(cover, &k.kappa_inv(&w))?;
    cover.mul(&kt, &cover.lift(s))
}

/// A random crossed element anchored at `e`, or `None` if `Y_e` is empty.
fn random_crossed<R: Rng>(x: &CrossedModule, rng: &mut R, e: usize) -> Result<Option<CrossedElement>> {
    let basis = x.free_module_basis(e);
    if basis.is_empty() {
        return Ok(None);
    }
    let mut c = x.identity(e)?;
    for _ in 0..rng.gen_range(1..=4) {
        let (rel, s) = basis[rng.gen_range(0..basis.len())];
        let mut g = x.generator(rel, &random_lift(x, rng, s)?)?;
        if rng.gen_bool(0.5) {
            g = x.inverse(&g);
        }
        c = x.mul(&c, &g)?;
    }
    Ok(Some(c))
}

fn check_crossed(x: &CrossedModule, cfg: &VerifyConfig) -> Result<std::result::Result<String, String>> {
    let cover = x.cover();
    let m = cover.monoid();
    let idem: Vec<usize> = m.idempotents().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x636d);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < cfg.samples && attempts < 20 * cfg.samples.max(1) {
        attempts += 1;
        let e = idem[rng.gen_range(0..idem.len())];
        let (Some(c), Some(a)) = (random_crossed(x, &mut rng, e)?, random_crossed(x, &mut rng, e)?) else {
            continue;
        };
        let r_class: Vec<usize> = m.elements().filter(|&s| m.left_idempotent(s) == e).collect();
        let s = r_class[rng.gen_range(0..r_class.len())];
        let t = random_lift(x, &mut rng, s)?;
        let lhs = x.delta(&x.act(&c, &t)?)?;
        let rhs = cover.product(&[&cover.inverse(&t)?, &x.delta(&c)?, &t])?;
        if lhs != rhs {
            return Ok(Err(format!("CM1 fails on sample {checked}")));
        }
        let da = x.delta(&a)?;
        let left = x.canonical_form(&x.act(&c, &da)?)?;
        let conj = x.mul(&x.mul(&x.inverse(&a), &c)?, &a)?;
        if left != x.canonical_form(&conj)? {
            return Ok(Err(format!("CM2 fails on sample {checked}")));
        }
        let (fc, fa) = (x.canonical_form(&c)?, x.canonical_form(&a)?);
        let prod = x.canonical_form(&x.mul(&c, &a)?)?;
        let sum: Vec<i64> = fc.vec.iter().zip(&fa.vec).map(|(p, q)| p + q).collect();
        if prod.k != fc.k.mul(&fa.k) || prod.vec != sum {
            return Ok(Err(format!("canonical form is not multiplicative on sample {checked}")));
        }
        if !x.canonical_form(&x.peiffer(&c, &a)?)?.is_identity() {
            return Ok(Err(format!("Peiffer element is nontrivial on sample {checked}")));
        }
        checked += 1;
    }
    Ok(Ok(format!("{checked} samples")))
}

fn check_lift_independence(x: &CrossedModule, cfg: &VerifyConfig) -> Result<std::result::Result<String, String>> {
    let cover = x.cover();
    let m = cover.monoid();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6c69);
    let letters = m.alphabet().letter_count();
    let mut checked = 0;
    for &e in m.idempotents() {
        for &(rel, s) in x.free_module_basis(e) {
            let base = x.rbar_column(rel, &cover.lift(s))?;
            for _ in 0..8 {
                let u = random_lift(x, &mut rng, s)?;
                if x.rbar_column(rel, &u)? != base {
                    return Ok(Err(format!("column ({rel}, {}) depends on the lift", m.name(s))));
                }
                checked += 1;
            }
            for _ in 0..32 {
                let w = random_word(&mut rng, letters, 6);
                if m.eval(&w) == s {
                    if x.rbar_column(rel, &cover.element(&w))? != base {
                        return Ok(Err(format!("column ({rel}, {}) depends on the lift", m.name(s))));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(Ok(format!("{checked} alternative lifts")))
}

/// Canonical form of a path in a star component, through its λ-sequence.
pub fn path_canonical_form(sq: &Squier, x: &CrossedModule, a: &SquierPath) -> Result<CanonicalForm> {
    let gens = sq.lambda_rectify(a)?;
    let e = sq.cover().psi(a.start());
    x.canonical_form(&x.from_lambda(e, &gens)?)
}

fn check_squier(sq: &Squier, x: &CrossedModule, cfg: &VerifyConfig) -> Result<std::result::Result<String, String>> {
    let cover = sq.cover();
    let m = cover.monoid();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7371);
    let letters = m.alphabet().letter_count();
    let mut samples = Vec::with_capacity(cfg.samples);
    for _ in 0..cfg.samples {
        let long = sq.random_path(&mut rng, 3, 6);
        let (alpha, beta) = if long.len() >= 2 {
            let k = rng.gen_range(1..long.len());
            (
                sq.path_from_edges(long.edges()[..k].to_vec())?,
                sq.path_from_edges(long.edges()[k..].to_vec())?,
            )
        } else {
            let back = sq.reverse(&long);
            (long, back)
        };
        let xv = cover.element(&random_word(&mut rng, letters, 4));
        let yv = cover.element(&random_word(&mut rng, letters, 4));
        samples.push(AxiomSample {
            x: xv,
            y: yv,
            alpha,
            beta: Some(beta),
        });
    }
    let report = check_axioms(sq, &samples);
    if let Some(f) = report.failure {
        return Ok(Err(f));
    }
    for i in 0..cfg.samples {
        let a = sq.random_star_path(&mut rng, 3, 4);
        let b = sq.random_star_path(&mut rng, 3, 4);
        let gens = sq.lambda_rectify(&a)?;
        let e = cover.psi(a.start());
        let realized = sq.realize_sequence(e, &gens)?;
        let expected = cover.mul(&cover.inverse(a.start())?, a.end())?;
        if realized.end() != &expected {
            return Ok(Err(format!("endpoint law fails on sample {i}")));
        }
        let star = path_canonical_form(sq, x, &sq.star(&a, &b)?)?;
        let circ = path_canonical_form(sq, x, &sq.circledast(&a, &b)?)?;
        if star != circ {
            return Ok(Err(format!("α∗β and α⊛β differ on sample {i}")));
        }
        let inv = sq.star_inverse(&a)?;
        if !path_canonical_form(sq, x, &sq.star(&a, &inv)?)?.is_identity() {
            return Ok(Err(format!("α∗α* is not the identity on sample {i}")));
        }
    }
    Ok(Ok(format!("{} axiom samples, {} star samples", samples.len(), cfg.samples)))
}

fn check_stephen(p: &Presentation, m: &FiniteInverseMonoid, cfg: &VerifyConfig) -> std::result::Result<String, String> {
    for &e in m.idempotents() {
        let exact = schutzenberger_graph(m, e).map_err(|x| x.to_string())?;
        let g = stephen_graph(p, m.rep(e), cfg.budget);
        if !g.is_converged() || !g.label_isomorphic(&exact) {
            return Err(format!("Stephen graph of {} differs from the exact graph", m.name(e)));
        }
    }
    Ok(format!("{} idempotents", m.idempotents().len()))
}

fn check_monotone(p: &Presentation, cfg: &VerifyConfig) -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6d6f);
    let letters = p.alphabet().letter_count();
    let rounds = cfg.samples.min(20);
    for i in 0..rounds {
        let w = random_word(&mut rng, letters, 4);
        let mut prev = None;
        for b in 1..=10 {
            let budget = StephenBudget::new(b, cfg.budget.max_vertices()).map_err(|x| x.to_string())?;
            let g = stephen_graph(p, &w, budget);
            if !g.is_folded() {
                return Err(format!("unfolded graph on sample {i}"));
            }
            if let Some(prev) = prev.replace(g.clone()) {
                if prev.morphism_into(&g).is_none() {
                    return Err(format!("budgets {} and {b} admit no morphism on sample {i}", b - 1));
                }
            }
        }
    }
    Ok(format!("{rounds} words, budgets 1..10"))
}

/// Runs every check that applies to the presentation. Module-level checks
/// need a finite monoid: `table` if given, otherwise Stephen enumeration.
pub fn verify(p: &Presentation, table: Option<FiniteInverseMonoid>, cfg: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    report.push("stephen-monotone", check_monotone(p, cfg));
    let enumerated = enumerate_monoid(p, cfg.budget);
    let m = match (table, enumerated) {
        (Some(t), Ok(e)) => {
            let same = t.size() == e.size()
                && t.elements().all(|a| t.elements().all(|b| t.mul(a, b) == e.mul(a, b)));
            report.push(
                "table-matches-presentation",
                if same { Ok(format!("{} elements", t.size())) } else { Err("tables differ".into()) },
            );
            t
        }
        (Some(t), Err(err)) => {
            report.push("table-matches-presentation", Err(err.to_string()));
            t
        }
        (None, Ok(e)) => e,
        (None, Err(Error::NotFinishedWithinBudget)) => {
            report.push(
                "enumeration",
                Ok("not finished within budget; module checks skipped".into()),
            );
            return report;
        }
        (None, Err(err)) => {
            report.push("enumeration", Err(err.to_string()));
            return report;
        }
    };
    report.push("enumeration", Ok(format!("{} elements", m.size())));
    report.push("stephen-exact", check_stephen(p, &m, cfg));
    let x = match CrossedModule::new(p, m) {
        Ok(x) => x,
        Err(err) => {
            report.push("crossed-module", Err(err.to_string()));
            return report;
        }
    };
    let module = x.relation_module();
    report.push("kappa", check_kappa(module.cover(), cfg));
    let lausch = verify_lausch_axioms(module, cfg.samples, cfg.seed);
    report.push(
        "lausch-relation-module",
        match lausch.failure {
            None => Ok(format!("{} samples", lausch.checked)),
            Some(f) => Err(f),
        },
    );
    report.push(
        "kernel-route",
        match compare_kernel_route(module) {
            Ok(None) => Ok("graph action equals conjugation in the cover".into()),
            Ok(Some((e, s))) => Err(format!("mismatch at e={e}, s={s}")),
            Err(err) => Err(err.to_string()),
        },
    );
    let free = verify_lausch_axioms(&x, cfg.samples, cfg.seed);
    report.push(
        "lausch-free-module",
        match free.failure {
            None => Ok(format!("{} samples", free.checked)),
            Some(f) => Err(f),
        },
    );
    report.push(
        "exact-sequence",
        match x.verify_exact_sequence() {
            Ok(r) if r.passed() => Ok(format!("{} idempotents", r.entries.len())),
            Ok(r) => Err(r
                .naturality
                .or(r.closure)
                .unwrap_or_else(|| "rank identity or surjectivity fails".into())),
            Err(err) => Err(err.to_string()),
        },
    );
    let flatten = |r: Result<std::result::Result<String, String>>| r.unwrap_or_else(|e| Err(e.to_string()));
    report.push("rbar-lift-independence", flatten(check_lift_independence(&x, cfg)));
    report.push("crossed-module-axioms", flatten(check_crossed(&x, cfg)));
    let squier = Squier::new(x.cover(), p).map_err(|e| e.to_string());
    report.push(
        "squier",
        match squier {
            Ok(sq) => flatten(check_squier(&sq, &x, cfg)),
            Err(err) => Err(err),
        },
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;

    fn quick(seed: u64) -> VerifyConfig {
        VerifyConfig {
            samples: 40,
            seed,
            budget: StephenBudget::default(),
        }
    }

    #[test]
    fn builtins_pass() {
        for name in ["semilattice", "i2", "semilattice0"] {
            let b = builtin(name).unwrap();
            let r = verify(&b.presentation, b.table, &quick(7));
            assert!(r.passed(), "{name}: {}", r.table());
        }
    }

    #[test]
    fn bicyclic_skips_module_checks() {
        let b = builtin("bicyclic").unwrap();
        let cfg = VerifyConfig {
            budget: StephenBudget::new(30, 30).unwrap(),
            ..quick(1)
        };
        let r = verify(&b.presentation, None, &cfg);
        assert!(r.passed(), "{}", r.table());
        assert!(r.get("exact-sequence").is_none());
    }

    #[test]
    fn deterministic() {
        let b = builtin("i2").unwrap();
        let a = verify(&b.presentation, b.table.clone(), &quick(3));
        let c = verify(&b.presentation, b.table, &quick(3));
        assert_eq!(a, c);
    }
}
