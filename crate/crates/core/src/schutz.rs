//! Left Schützenberger graphs: an `x`-edge runs from `s` to `(xθ)s`.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::sync::{Arc, OnceLock};

use serde_json::{json, Value};

use crate::error::Result;
use crate::monoid::FiniteInverseMonoid;
use crate::word::{Alphabet, Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphStatus {
    Converged,
    /// Stopped early; the counts record the budget that was hit.
    Truncated { expansions: usize, vertices: usize },
}

type Namer = Arc<dyn Fn(usize) -> String + Send + Sync>;

/// Vertex names, either stored or computed on first use. Long truncated
/// graphs have long names, so those are never built unless asked for.
#[derive(Clone)]
pub(crate) enum VertexNames {
    Eager(Vec<String>),
    /// `namer(origin[v])`, cached.
    Lazy {
        namer: Namer,
        origin: Vec<usize>,
        cache: Vec<OnceLock<String>>,
    },
}

impl VertexNames {
    pub(crate) fn lazy(n: usize, namer: impl Fn(usize) -> String + Send + Sync + 'static) -> Self {
        VertexNames::Lazy {
            namer: Arc::new(namer),
            origin: (0..n).collect(),
            cache: vec![OnceLock::new(); n],
        }
    }

    fn get(&self, v: usize) -> &str {
        match self {
            VertexNames::Eager(names) => &names[v],
            VertexNames::Lazy { namer, origin, cache } => cache[v].get_or_init(|| namer(origin[v])),
        }
    }

    fn permuted(&self, order: &[usize]) -> Self {
        match self {
            VertexNames::Eager(names) => {
                VertexNames::Eager(order.iter().map(|&v| names[v].clone()).collect())
            }
            VertexNames::Lazy { namer, origin, cache } => VertexNames::Lazy {
                namer: namer.clone(),
                origin: order.iter().map(|&v| origin[v]).collect(),
                cache: order.iter().map(|&v| cache[v].clone()).collect(),
            },
        }
    }
}

impl From<Vec<String>> for VertexNames {
    fn from(names: Vec<String>) -> Self {
        VertexNames::Eager(names)
    }
}

impl fmt::Debug for VertexNames {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexNames::Eager(names) => f.debug_list().entries(names).finish(),
            VertexNames::Lazy { origin, .. } => write!(f, "<{} lazy names>", origin.len()),
        }
    }
}

/// A connected, folded, `X`-labelled graph with a base vertex.
///
/// Edges are `(source, generator, target)` sorted by source then generator.
/// For graphs built from a finite monoid, `element(v)` gives the monoid
/// element at each vertex.
#[derive(Clone, Debug)]
pub struct SchutzGraph {
    alphabet: Alphabet,
    base: usize,
    names: VertexNames,
    elements: Option<Vec<usize>>,
    edges: Vec<(usize, usize, usize)>,
    out: Vec<Vec<Option<usize>>>,
    status: GraphStatus,
}

impl SchutzGraph {
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        vertex_count: usize,
        base: usize,
        names: VertexNames,
        elements: Option<Vec<usize>>,
        mut edges: Vec<(usize, usize, usize)>,
        status: GraphStatus,
    ) -> SchutzGraph {
        edges.sort();
        let mut out = vec![vec![None; alphabet.letter_count()]; vertex_count];
        for &(s, x, t) in &edges {
            out[s][Letter::positive(x).index()] = Some(t);
            out[t][Letter::new(x, true).index()] = Some(s);
        }
        SchutzGraph {
            alphabet,
            base,
            names,
            elements,
            edges,
            out,
            status,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn status(&self) -> GraphStatus {
        self.status
    }

    pub fn is_converged(&self) -> bool {
        self.status == GraphStatus::Converged
    }

    pub fn name(&self, v: usize) -> &str {
        self.names.get(v)
    }

    pub fn element(&self, v: usize) -> Option<usize> {
        self.elements.as_ref().map(|e| e[v])
    }

    pub fn vertex_of_element(&self, s: usize) -> Option<usize> {
        self.elements.as_ref()?.iter().position(|&t| t == s)
    }

    /// One step along a signed letter: `x` forwards, `x⁻¹` backwards.
    pub fn step(&self, v: usize, letter: Letter) -> Option<usize> {
        self.out[v][letter.index()]
    }

    /// Follows `letters` read left to right.
    pub fn trace(&self, v: usize, letters: &[Letter]) -> Option<usize> {
        letters.iter().try_fold(v, |cur, &l| self.step(cur, l))
    }

    /// The vertex `w·v`, reached by reading `rev(w)` from `v`.
    pub fn act_word(&self, v: usize, w: &Word) -> Option<usize> {
        self.trace(v, w.reversed().letters())
    }

    /// First Betti number `E − V + 1`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count()
    }

    /// A tree whose vertices all have degree at most two.
    pub fn is_simple_path(&self) -> bool {
        let mut degree = vec![0; self.vertex_count()];
        for &(s, _, t) in &self.edges {
            degree[s] += 1;
            degree[t] += 1;
        }
        self.is_tree() && degree.iter().all(|&d| d <= 2)
    }

    /// No vertex has two outgoing or two incoming edges with the same label.
    pub fn is_folded(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(s, x, t)| seen.insert((s, x, true)) && seen.insert((t, x, false)))
    }

    /// Breadth-first order from the base in letter order, with the BFS parent
    /// step of every vertex.
    fn bfs(&self) -> (Vec<usize>, Vec<Option<(usize, Letter)>>) {
        let n = self.vertex_count();
        let mut order = vec![self.base];
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[self.base] = true;
        let mut queue = VecDeque::from([self.base]);
        while let Some(v) = queue.pop_front() {
            for l in self.alphabet.letters() {
                if let Some(t) = self.step(v, l) {
                    if !seen[t] {
                        seen[t] = true;
                        parent[t] = Some((v, l));
                        order.push(t);
                        queue.push_back(t);
                    }
                }
            }
        }
        (order, parent)
    }

    /// Label of the BFS tree path from the base to `v`, read left to right.
    pub fn tree_path(&self, v: usize) -> Word {
        let (_, parent) = self.bfs();
        let mut letters = Vec::new();
        let mut cur = v;
        while let Some((p, l)) = parent[cur] {
            letters.push(l);
            cur = p;
        }
        letters.reverse();
        Word::new(letters)
    }

    /// The same graph renumbered breadth-first from the base, which becomes
    /// vertex `0`. Two graphs are label-isomorphic (preserving base) iff
    /// their canonical forms have equal edge lists.
    pub fn canonical(&self) -> SchutzGraph {
        let (order, _) = self.bfs();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(s, x, t)| (index[s], x, index[t]))
            .collect();
        SchutzGraph::from_parts(
            self.alphabet.clone(),
            order.len(),
            0,
            self.names.permuted(&order),
            self.elements
                .as_ref()
                .map(|e| order.iter().map(|&v| e[v]).collect()),
            edges,
            self.status,
        )
    }

    pub fn label_isomorphic(&self, other: &SchutzGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.canonical().edges == other.canonical().edges
    }

    /// The label-preserving, base-preserving morphism into `other`, if one
    /// exists. It is unique when it exists since both graphs are folded.
    pub fn morphism_into(&self, other: &SchutzGraph) -> Option<Vec<usize>> {
        let (order, parent) = self.bfs();
        let mut image = vec![usize::MAX; self.vertex_count()];
        image[self.base] = other.base;
        for &v in order.iter().skip(1) {
            let (p, l) = parent[v]?;
            image[v] = other.step(image[p], l)?;
        }
        self.edges
            .iter()
            .all(|&(s, x, t)| other.step(image[s], Letter::positive(x)) == Some(image[t]))
            .then_some(image)
    }

    /// An injective morphism into `other`.
    pub fn embeds_into(&self, other: &SchutzGraph) -> bool {
        match self.morphism_into(other) {
            Some(image) => {
                let mut sorted = image.clone();
                sorted.sort_unstable();
                sorted.dedup();
                sorted.len() == image.len()
            }
            None => false,
        }
    }

    /// Graphviz rendering; the base is drawn as a double circle.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let canon = self.canonical();
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", graph_name);
        if let GraphStatus::Truncated { .. } = canon.status {
            let _ = writeln!(out, "  label=\"Truncated\";");
        }
        for v in 0..canon.vertex_count() {
            let shape = if v == 0 { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  v{v} [label=\"{}\", shape={shape}];", canon.name(v));
        }
        for &(s, x, t) in &canon.edges {
            let _ = writeln!(out, "  v{s} -> v{t} [label=\"{}\"];", self.alphabet.name(x));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let canon = self.canonical();
        let edges: Vec<Value> = canon
            .edges
            .iter()
            .map(|&(s, x, t)| json!([s, self.alphabet.name(x), t]))
            .collect();
        json!({
            "base": canon.name(0),
            "vertices": (0..canon.vertex_count()).map(|v| canon.name(v)).collect::<Vec<_>>(),
            "edges": edges,
            "converged": canon.is_converged(),
        })
    }
}

/// `Sch(M, X, e)`: vertices `L_e` in element order, an `x`-edge from `s` to
/// `(xθ)s` whenever `(x⁻¹x)θ ⩾ ss⁻¹`.
pub fn schutzenberger_graph(m: &FiniteInverseMonoid, e: usize) -> Result<SchutzGraph> {
    m.require_idempotent(e)?;
    let vertices = m.l_class(e);
    let mut index = vec![usize::MAX; m.size()];
    for (i, &s) in vertices.iter().enumerate() {
        index[s] = i;
    }
    let mut edges = Vec::new();
    for (i, &s) in vertices.iter().enumerate() {
        for x in 0..m.alphabet().rank() {
            let xs = m.generator(x);
            if m.leq(m.left_idempotent(s), m.right_idempotent(xs)) {
                edges.push((i, x, index[m.mul(xs, s)]));
            }
        }
    }
    Ok(SchutzGraph::from_parts(
        m.alphabet().clone(),
        vertices.len(),
        index[e],
        vertices
            .iter()
            .map(|&s| m.name(s).to_string())
            .collect::<Vec<_>>()
            .into(),
        Some(vertices),
        edges,
        GraphStatus::Converged,
    ))
}

/// Graphs for every idempotent, in element order.
pub fn all_schutzenberger_graphs(m: &FiniteInverseMonoid) -> Vec<(usize, SchutzGraph)> {
    m.idempotents()
        .iter()
        .map(|&e| (e, schutzenberger_graph(m, e).expect("idempotent")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn i2_components() {
        let m = i2();
        let shapes: Vec<(usize, usize)> = all_schutzenberger_graphs(&m)
            .iter()
            .map(|(_, g)| (g.vertex_count(), g.edge_count()))
            .collect();
        assert_eq!(shapes, [(2, 2), (2, 3), (2, 3), (1, 2)]);
        let g = schutzenberger_graph(&m, 0).unwrap();
        assert_eq!(g.edges(), &[(0, 0, 1), (1, 0, 0)]);
        for (_, g) in all_schutzenberger_graphs(&m) {
            assert!(g.is_folded());
        }
        assert!(schutzenberger_graph(&m, 1).is_err());
    }

    #[test]
    fn trivial_monoid_has_loops() {
        let a = Alphabet::new(&["x", "y"]).unwrap();
        let m = FiniteInverseMonoid::from_table(a, vec![0], vec![0, 0]).unwrap();
        let g = schutzenberger_graph(&m, 0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges(), &[(0, 0, 0), (0, 1, 0)]);
        assert_eq!(g.cycle_rank(), 2);
    }

    #[test]
    fn canonical_and_morphisms() {
        let m = i2();
        let e = m.element_by_name("e").unwrap();
        let g = schutzenberger_graph(&m, e).unwrap();
        let c = g.canonical();
        assert_eq!(c.base(), 0);
        assert!(g.label_isomorphic(&c));
        assert!(g.embeds_into(&c));
        let one = schutzenberger_graph(&m, 0).unwrap();
        assert!(!one.label_isomorphic(&g));
        let dot = g.to_dot("e");
        assert!(dot.contains("doublecircle"));
        assert!(dot.contains("label=\"t\""));
    }

    #[test]
    fn act_word_follows_left_action() {
        let m = i2();
        let e = m.element_by_name("e").unwrap();
        let g = schutzenberger_graph(&m, e).unwrap();
        let w = m.alphabet().parse_word("t").unwrap();
        let v = g.act_word(g.base(), &w).unwrap();
        assert_eq!(g.element(v), Some(m.mul(m.eval(&w), e)));
    }
}
