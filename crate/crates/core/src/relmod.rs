//! The relation module as first homology of Schützenberger graphs.
//!
//! The component at `e` is `H₁` of `Sch(M, X, e)`, written in the cycle
//! basis with one cycle per non-tree edge. `s ∈ M` acts by the graph
//! morphism `v ↦ vs`, which carries the component at `e` to the one at
//! `s⁻¹es`. Matrices map source coordinates (columns) to target
//! coordinates (rows).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cover::{Cover, KernelGroup};
use crate::error::Result;
use crate::matrix::IntegerMatrix;
use crate::monoid::FiniteInverseMonoid;
use crate::presentation::Presentation;
use crate::schutz::{schutzenberger_graph, GraphStatus, SchutzGraph};
use crate::stephen::{enumerate_monoid, stephen_graph, StephenBudget};
use crate::word::{FreeGroupElement, Letter, Word};

/// `C₁ → C₀` for the graph at `e`. Edges are `(s, x)` with `s` in element
/// order then `x` in alphabet order.
#[derive(Clone, Debug)]
pub struct ChainComplexAt {
    pub e: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub boundary: IntegerMatrix,
}

pub fn chain_complex_at(m: &FiniteInverseMonoid, e: usize) -> Result<ChainComplexAt> {
    let g = schutzenberger_graph(m, e)?;
    Ok(chain_complex_of(&g))
}

fn chain_complex_of(g: &SchutzGraph) -> ChainComplexAt {
    let vertices: Vec<usize> = (0..g.vertex_count()).map(|v| g.element(v).unwrap_or(v)).collect();
    let mut columns = Vec::with_capacity(g.edge_count());
    let mut edges = Vec::with_capacity(g.edge_count());
    for &(s, x, t) in g.edges() {
        let mut col = vec![0i64; g.vertex_count()];
        col[t] += 1;
        col[s] -= 1;
        columns.push(col);
        edges.push((vertices[s], x));
    }
    ChainComplexAt {
        e: g.element(g.base()).unwrap_or(0),
        vertices,
        edges,
        boundary: IntegerMatrix::from_columns(g.vertex_count(), &columns),
    }
}

/// One component `H₁(Sch(M, X, e))` with its cycle basis.
#[derive(Clone, Debug)]
pub struct Component {
    pub e: usize,
    pub kernel: KernelGroup,
    pub cycles: Vec<Vec<i64>>,
}

impl Component {
    fn new(m: &FiniteInverseMonoid, e: usize) -> Component {
        let kernel = KernelGroup::new(schutzenberger_graph(m, e).expect("idempotent"));
        let cycles = h1_basis_of(&kernel);
        Component { e, kernel, cycles }
    }

    pub fn rank(&self) -> usize {
        self.kernel.rank()
    }

    pub fn graph(&self) -> &SchutzGraph {
        self.kernel.graph()
    }

    /// Coordinates of a cycle (edge vector) in the cycle basis: its values
    /// on the non-tree edges.
    pub fn coordinates(&self, z: &[i64]) -> Vec<i64> {
        self.kernel.basis().iter().map(|&b| z[b]).collect()
    }
}

fn h1_basis_of(k: &KernelGroup) -> Vec<Vec<i64>> {
    (0..k.rank())
        .map(|i| {
            k.cycle_vector(&k.kappa_inv(&FreeGroupElement::generator(i)))
                .expect("basis path is closed")
        })
        .collect()
}

/// Cycle basis of `H₁` at `e`: one cycle per non-tree edge, as edge vectors.
pub fn h1_basis(m: &FiniteInverseMonoid, e: usize) -> Result<Vec<Vec<i64>>> {
    let g = schutzenberger_graph(m, e)?;
    Ok(h1_basis_of(&KernelGroup::new(g)))
}

#[derive(Clone, Debug)]
pub struct StructureMap {
    pub from: usize,
    pub to: usize,
    pub matrix: IntegerMatrix,
}

#[derive(Clone, Debug)]
pub struct GeneratorAction {
    pub generator: usize,
    pub from: usize,
    pub to: usize,
    pub matrix: IntegerMatrix,
}

/// The relation module of a finite `(M, X)` as a Lausch module.
#[derive(Clone, Debug)]
pub struct LauschModule {
    cover: Cover,
    components: Vec<Component>,
    index: Vec<Option<usize>>,
    structure_maps: Vec<StructureMap>,
    actions: Vec<GeneratorAction>,
}

/// Builds the module; components are computed in parallel.
pub fn relation_module(m: &FiniteInverseMonoid) -> LauschModule {
    LauschModule::new(m.clone())
}

impl LauschModule {
    pub fn new(m: FiniteInverseMonoid) -> LauschModule {
        let components: Vec<Component> = m
            .idempotents()
            .par_iter()
            .map(|&e| Component::new(&m, e))
            .collect();
        let mut index = vec![None; m.size()];
        for (i, c) in components.iter().enumerate() {
            index[c.e] = Some(i);
        }
        let mut module = LauschModule {
            cover: Cover::new(m),
            components,
            index,
            structure_maps: Vec::new(),
            actions: Vec::new(),
        };
        let m = module.monoid();
        let idem = m.idempotents().to_vec();
        let mut maps = Vec::new();
        for &e in &idem {
            for &f in &idem {
                if e != f && m.leq(f, e) {
                    maps.push((e, f));
                }
            }
        }
        let structure_maps = maps
            .par_iter()
            .map(|&(e, f)| StructureMap {
                from: e,
                to: f,
                matrix: module.action_matrix(e, f).1,
            })
            .collect();
        let pairs: Vec<(usize, usize)> = (0..m.alphabet().rank())
            .flat_map(|x| idem.iter().map(move |&e| (x, e)))
            .collect();
        let actions = pairs
            .par_iter()
            .map(|&(x, e)| {
                let (to, matrix) = module.action_matrix(e, m.generator(x));
                GeneratorAction {
                    generator: x,
                    from: e,
                    to,
                    matrix,
                }
            })
            .collect();
        module.structure_maps = structure_maps;
        module.actions = actions;
        module
    }

    pub fn monoid(&self) -> &FiniteInverseMonoid {
        self.cover.monoid()
    }

    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, e: usize) -> &Component {
        &self.components[self.index[e].expect("idempotent")]
    }

    pub fn rank(&self, e: usize) -> usize {
        self.component(e).rank()
    }

    /// Ranks in idempotent order.
    pub fn ranks(&self) -> Vec<usize> {
        self.components.iter().map(Component::rank).collect()
    }

    pub fn structure_maps(&self) -> &[StructureMap] {
        &self.structure_maps
    }

    pub fn structure_map(&self, e: usize, f: usize) -> Option<&IntegerMatrix> {
        self.structure_maps
            .iter()
            .find(|s| s.from == e && s.to == f)
            .map(|s| &s.matrix)
    }

    pub fn actions(&self) -> &[GeneratorAction] {
        &self.actions
    }

    /// Pushes an edge vector of the graph at `e` forward along `v ↦ vs`.
    pub fn push_forward(&self, e: usize, z: &[i64], s: usize) -> (usize, Vec<i64>) {
        let m = self.monoid();
        let f = m.mul(m.mul(m.inv(s), e), s);
        let src = self.component(e).graph();
        let dst = self.component(f).graph();
        let mut out = vec![0i64; dst.edge_count()];
        for (id, &(v, x, _)) in src.edges().iter().enumerate() {
            if z[id] == 0 {
                continue;
            }
            let vs = m.mul(src.element(v).expect("exact graph"), s);
            let a = dst.vertex_of_element(vs).expect("vs lies in L_f");
            let b = dst.step(a, Letter::positive(x)).expect("edge survives the action");
            let target = dst.edges().binary_search(&(a, x, b)).expect("edge present");
            out[target] += z[id];
        }
        (f, out)
    }

    /// The action of `s` on the component at `e`, with the target idempotent
    /// `s⁻¹es`.
    pub fn action_matrix(&self, e: usize, s: usize) -> (usize, IntegerMatrix) {
        let src = self.component(e);
        let m = self.monoid();
        let f = m.mul(m.mul(m.inv(s), e), s);
        let dst = self.component(f);
        let columns: Vec<Vec<i64>> = src
            .cycles
            .iter()
            .map(|z| dst.coordinates(&self.push_forward(e, z, s).1))
            .collect();
        (f, IntegerMatrix::from_columns(dst.rank(), &columns))
    }

    /// The same action computed through the cover: `k ◁ s = t⁻¹kt` with
    /// `t` the shortlex lift of `s`, read back in the target kernel group
    /// and abelianised.
    pub fn kernel_route_matrix(&self, e: usize, s: usize) -> Result<(usize, IntegerMatrix)> {
        let cover = &self.cover;
        let src = self.component(e);
        let t = cover.lift(s);
        let t_inv = cover.inverse(&t)?;
        let m = self.monoid();
        let f = m.mul(m.mul(m.inv(s), e), s);
        let dst = self.component(f);
        let mut columns = Vec::with_capacity(src.rank());
        for i in 0..src.rank() {
            let path = src.kernel.kappa_inv(&FreeGroupElement::generator(i));
            let k = src.kernel.path_to_t(cover, &path)?;
            let conj = cover.product(&[&t_inv, &k, &t])?;
            let image = dst.kernel.from_t(cover, &conj)?;
            columns.push(image.abelianize(dst.rank()));
        }
        Ok((f, IntegerMatrix::from_columns(dst.rank(), &columns)))
    }

    pub fn to_json(&self) -> Value {
        let m = self.monoid();
        let alpha = m.alphabet();
        let components: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                let g = c.graph();
                let basis: Vec<Value> = c
                    .cycles
                    .iter()
                    .map(|z| {
                        let terms: Vec<Value> = z
                            .iter()
                            .enumerate()
                            .filter(|(_, &k)| k != 0)
                            .map(|(id, &k)| {
                                let (s, x, t) = g.edges()[id];
                                json!([k, g.name(s), alpha.name(x), g.name(t)])
                            })
                            .collect();
                        Value::Array(terms)
                    })
                    .collect();
                json!({ "e": m.name(c.e), "rank": c.rank(), "basis": basis })
            })
            .collect();
        let maps: Vec<Value> = self
            .structure_maps
            .iter()
            .map(|s| json!({ "from": m.name(s.from), "to": m.name(s.to), "matrix": s.matrix.to_json() }))
            .collect();
        let actions: Vec<Value> = self
            .actions
            .iter()
            .map(|a| {
                json!({
                    "generator": alpha.name(a.generator),
                    "from": m.name(a.from),
                    "to": m.name(a.to),
                    "matrix": a.matrix.to_json(),
                })
            })
            .collect();
        json!({ "components": components, "structure_maps": maps, "actions": actions })
    }

    /// Plain-text table: one row per idempotent, then the structure maps.
    pub fn table(&self) -> String {
        let m = self.monoid();
        let width = self
            .components
            .iter()
            .map(|c| m.name(c.e).len())
            .max()
            .unwrap_or(1)
            .max(9);
        let mut out = format!("{:<width$}  rank  group\n", "idempotent");
        for c in &self.components {
            let group = match c.rank() {
                0 => "0".to_string(),
                1 => "Z".to_string(),
                r => format!("Z^{r}"),
            };
            out.push_str(&format!("{:<width$}  {:<4}  {}\n", m.name(c.e), c.rank(), group));
        }
        if !self.structure_maps.is_empty() {
            out.push_str("structure maps\n");
            for s in &self.structure_maps {
                let kind = if s.matrix.is_injective() {
                    "injective"
                } else {
                    "not injective"
                };
                out.push_str(&format!(
                    "  {} -> {}  {:?}  {}\n",
                    m.name(s.from),
                    m.name(s.to),
                    s.matrix.to_i64_rows(),
                    kind
                ));
            }
        }
        out
    }
}

/// A module over `M` presented componentwise: a free abelian group of rank
/// `rank(e)` at each idempotent, with matrices for the action.
pub trait MonoidModule {
    fn monoid(&self) -> &FiniteInverseMonoid;
    fn rank(&self, e: usize) -> usize;
    /// Target idempotent `s⁻¹es` and the matrix of `◁ s` from the component at `e`.
    fn action_matrix(&self, e: usize, s: usize) -> (usize, IntegerMatrix);

    /// `a ◁ s` for `a` in the component at `e`.
    fn act(&self, e: usize, a: &[i64], s: usize) -> (usize, Vec<i64>) {
        let (f, mat) = self.action_matrix(e, s);
        (f, mat.mul_vec(a))
    }

    /// `a ⊕ b = aφ^e_{ef} + bφ^f_{ef}`.
    fn oplus(&self, (e, a): (usize, &[i64]), (f, b): (usize, &[i64])) -> (usize, Vec<i64>) {
        let ef = self.monoid().mul(e, f);
        let (_, x) = self.act(e, a, ef);
        let (_, y) = self.act(f, b, ef);
        (ef, x.iter().zip(&y).map(|(p, q)| p + q).collect())
    }
}

impl MonoidModule for LauschModule {
    fn monoid(&self) -> &FiniteInverseMonoid {
        LauschModule::monoid(self)
    }

    fn rank(&self, e: usize) -> usize {
        LauschModule::rank(self, e)
    }

    fn action_matrix(&self, e: usize, s: usize) -> (usize, IntegerMatrix) {
        LauschModule::action_matrix(self, e, s)
    }
}

/// Outcome of a randomised axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub failure: Option<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks additivity, `(a◁s)◁t = a◁st`, `a◁f = a ⊕ 0_f` and
/// `0_e◁s = 0_{s⁻¹es}` on random samples, plus presheaf coherence over all
/// chains `e ⩾ f ⩾ g`.
pub fn verify_lausch_axioms<Mo: MonoidModule + ?Sized>(module: &Mo, samples: usize, seed: u64) -> AxiomReport {
    let m = module.monoid();
    let idem = m.idempotents();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vector = |rng: &mut ChaCha8Rng, e: usize| -> Vec<i64> {
        (0..module.rank(e)).map(|_| rng.gen_range(-3..=3)).collect()
    };
    let fail = |checked, msg: String| AxiomReport {
        checked,
        failure: Some(msg),
    };
    for i in 0..samples {
        let e = idem[rng.gen_range(0..idem.len())];
        let f = idem[rng.gen_range(0..idem.len())];
        let s = rng.gen_range(0..m.size());
        let t = rng.gen_range(0..m.size());
        let g = idem[rng.gen_range(0..idem.len())];
        let a = vector(&mut rng, e);
        let b = vector(&mut rng, f);

        let lhs = {
            let (ef, sum) = module.oplus((e, &a), (f, &b));
            module.act(ef, &sum, s)
        };
        let (e1, as_) = module.act(e, &a, s);
        let (f1, bs) = module.act(f, &b, s);
        if lhs != module.oplus((e1, &as_), (f1, &bs)) {
            return fail(i, format!("additivity at e={e}, f={f}, s={s}"));
        }
        let (e2, ast) = module.act(e1, &as_, t);
        if (e2, ast) != module.act(e, &a, m.mul(s, t)) {
            return fail(i, format!("(a◁s)◁t at e={e}, s={s}, t={t}"));
        }
        let zero_g = vec![0; module.rank(g)];
        if module.act(e, &a, g) != module.oplus((e, &a), (g, &zero_g)) {
            return fail(i, format!("a◁f = a⊕0_f at e={e}, f={g}"));
        }
        let zero_e = vec![0; module.rank(e)];
        let (target, z) = module.act(e, &zero_e, s);
        if target != m.mul(m.mul(m.inv(s), e), s) || z.iter().any(|&x| x != 0) {
            return fail(i, format!("0_e◁s at e={e}, s={s}"));
        }
    }
    for &e in idem {
        let (to, id) = module.action_matrix(e, e);
        if to != e || id != IntegerMatrix::identity(module.rank(e)) {
            return fail(samples, format!("φ^e_e is not the identity at e={e}"));
        }
        for &f in idem.iter().filter(|&&f| m.leq(f, e)) {
            for &g in idem.iter().filter(|&&g| m.leq(g, f)) {
                let ef = module.action_matrix(e, f).1;
                let fg = module.action_matrix(f, g).1;
                if fg.mul(&ef) != module.action_matrix(e, g).1 {
                    return fail(samples, format!("presheaf law on {e} ⩾ {f} ⩾ {g}"));
                }
            }
        }
    }
    AxiomReport {
        checked: samples,
        failure: None,
    }
}

/// Compares the graph action with conjugation in the cover for every
/// idempotent and every element; returns the first mismatch.
pub fn compare_kernel_route(module: &LauschModule) -> Result<Option<(usize, usize)>> {
    let m = module.monoid();
    for &e in m.idempotents() {
        for s in m.elements() {
            if module.kernel_route_matrix(e, s)? != module.action_matrix(e, s) {
                return Ok(Some((e, s)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroReport {
    pub zero_rank: usize,
    pub expected_zero_rank: usize,
    pub mismatches: Vec<String>,
}

impl ZeroReport {
    pub fn passed(&self) -> bool {
        self.zero_rank == self.expected_zero_rank && self.mismatches.is_empty()
    }
}

/// Compares the module of `P` with that of `P` with a zero adjoined: the
/// zero component has one loop per generator and every other component,
/// with its structure maps, is unchanged.
pub fn adjoin_zero_check(p: &Presentation, budget: StephenBudget) -> Result<ZeroReport> {
    let m = enumerate_monoid(p, budget)?;
    let q = p.adjoin_zero("z")?;
    let m0 = enumerate_monoid(&q, budget)?;
    let base = relation_module(&m);
    let zero = relation_module(&m0);
    let z = m0.element_by_name("z").expect("z is a shortlex representative");
    let mut mismatches = Vec::new();
    let to_zero = |name: &str| m0.element_by_name(name);
    for c in base.components() {
        let name = m.name(c.e);
        match to_zero(name) {
            Some(e0) if zero.rank(e0) == c.rank() => {}
            Some(e0) => mismatches.push(format!(
                "rank at {name}: {} vs {}",
                c.rank(),
                zero.rank(e0)
            )),
            None => mismatches.push(format!("idempotent {name} missing")),
        }
    }
    for s in base.structure_maps() {
        let (a, b) = (to_zero(m.name(s.from)), to_zero(m.name(s.to)));
        let same = match (a, b) {
            (Some(a), Some(b)) => zero.structure_map(a, b) == Some(&s.matrix),
            _ => false,
        };
        if !same {
            mismatches.push(format!(
                "structure map {} -> {}",
                m.name(s.from),
                m.name(s.to)
            ));
        }
    }
    Ok(ZeroReport {
        zero_rank: zero.rank(z),
        expected_zero_rank: q.rank(),
        mismatches,
    })
}

/// `H₁` rank of a Stephen approximation, with its status.
pub fn stephen_h1(p: &Presentation, w: &Word, budget: StephenBudget) -> (usize, GraphStatus) {
    let g = stephen_graph(p, w, budget);
    (KernelGroup::new(g.clone()).rank(), g.status())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn semilattice() -> FiniteInverseMonoid {
        let p = Presentation::from_strs(&["e", "f"], &[("e e", "e"), ("f f", "f"), ("e f", "f e")])
            .unwrap();
        enumerate_monoid(&p, StephenBudget::default()).unwrap()
    }

    fn i2() -> FiniteInverseMonoid {
        let a = Alphabet::new(&["t", "e"]).unwrap();
        FiniteInverseMonoid::from_partial_bijections(
            a,
            2,
            &[vec![Some(1), Some(0)], vec![Some(0), None]],
        )
        .unwrap()
    }

    #[test]
    fn chain_complex_boundaries() {
        let m = semilattice();
        let ef = m.element_by_name("e f").unwrap();
        let c = chain_complex_at(&m, ef).unwrap();
        assert_eq!((c.boundary.rows(), c.boundary.cols()), (1, 2));
        assert!(c.boundary.is_zero());

        let m = i2();
        let c = chain_complex_at(&m, 0).unwrap();
        assert_eq!(
            c.boundary,
            IntegerMatrix::from_rows(&[vec![-1, 1], vec![1, -1]])
        );
        let h = h1_basis(&m, 0).unwrap();
        assert_eq!(h, vec![vec![1, 1]]);
        for z in &h {
            let zv: Vec<i64> = c.boundary.mul_vec(z);
            assert!(zv.iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn semilattice_module() {
        let m = semilattice();
        let module = relation_module(&m);
        assert_eq!(module.ranks(), [0, 1, 1, 2]);
        let ef = m.element_by_name("e f").unwrap();
        for name in ["e", "f"] {
            let e = m.element_by_name(name).unwrap();
            assert!(module.structure_map(e, ef).unwrap().is_injective());
        }
        assert!(verify_lausch_axioms(&module, 200, 1).passed());
        assert_eq!(compare_kernel_route(&module).unwrap(), None);
    }

    #[test]
    fn i2_module() {
        let m = i2();
        let module = relation_module(&m);
        assert_eq!(module.ranks(), [1, 2, 2, 2]);
        let e = m.element_by_name("e").unwrap();
        let tet = m.element_by_name("t e t").unwrap();
        let t = m.element_by_name("t").unwrap();
        let (to, a) = module.action_matrix(e, t);
        let (back, b) = module.action_matrix(tet, t);
        assert_eq!((to, back), (tet, e));
        assert_eq!(b.mul(&a), IntegerMatrix::identity(2));
        assert!(verify_lausch_axioms(&module, 200, 2).passed());
        assert_eq!(compare_kernel_route(&module).unwrap(), None);
    }

    #[test]
    fn adjoining_zero() {
        let p = Presentation::from_strs(&["e", "f"], &[("e e", "e"), ("f f", "f"), ("e f", "f e")])
            .unwrap();
        let r = adjoin_zero_check(&p, StephenBudget::default()).unwrap();
        assert_eq!(r.zero_rank, 3);
        assert!(r.passed(), "{r:?}");
        let empty = Presentation::from_strs::<&str>(&[], &[]).unwrap();
        let r = adjoin_zero_check(&empty, StephenBudget::default()).unwrap();
        assert_eq!(r.zero_rank, 1);
        assert!(r.passed());
    }

    #[test]
    fn bicyclic_truncations_have_no_cycles() {
        let p = Presentation::from_strs(&["x"], &[("x x'", "1")]).unwrap();
        let w = p.parse_word("x' x").unwrap();
        for n in [1, 5, 25] {
            let (rank, status) = stephen_h1(&p, &w, StephenBudget::new(n, 1000).unwrap());
            assert_eq!(rank, 0);
            assert!(matches!(status, GraphStatus::Truncated { .. }));
        }
    }
}
