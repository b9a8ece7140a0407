//! Stephen's procedure: approximate Schützenberger graphs of a presented
//! monoid by alternating elementary expansions with folding.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::fold::FoldGraph;
use crate::monoid::FiniteInverseMonoid;
use crate::munn::MunnTree;
use crate::presentation::Presentation;
use crate::schutz::{GraphStatus, SchutzGraph, VertexNames};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StephenBudget {
    max_expansions: usize,
    max_vertices: usize,
}

impl StephenBudget {
    pub fn new(max_expansions: usize, max_vertices: usize) -> Result<Self> {
        if max_expansions == 0 || max_vertices == 0 {
            return Err(Error::InvalidBudget);
        }
        Ok(StephenBudget {
            max_expansions,
            max_vertices,
        })
    }

    pub fn max_expansions(&self) -> usize {
        self.max_expansions
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }
}

impl Default for StephenBudget {
    fn default() -> Self {
        StephenBudget {
            max_expansions: 10_000,
            max_vertices: 10_000,
        }
    }
}

/// A Stephen graph of `w`, based at `w⁻¹w`, with the vertex of `w` marked.
#[derive(Clone, Debug)]
pub struct Stephen {
    pub graph: SchutzGraph,
    pub word_vertex: usize,
}

fn act(g: &mut FoldGraph, v: usize, w: &Word) -> Option<usize> {
    g.trace(v, w.reversed().letters())
}

/// Runs the procedure. Vertices and relations are scanned in order and the
/// graph is re-folded after every expansion.
pub fn stephen(p: &Presentation, w: &Word, budget: StephenBudget) -> Stephen {
    let rank = p.rank();
    let mut g = FoldGraph::new(rank);
    let base = g.add_vertex();
    let end = g.extend_path(base, w.reversed().letters());
    let relations: Vec<(Word, Word)> = p
        .relations()
        .iter()
        .map(|r| (r.lhs.clone(), r.rhs.clone()))
        .collect();

    // A vertex can only become applicable again when something changes
    // within one relation length of it, so only those are rescanned. The
    // lowest applicable vertex is still the one expanded.
    let radius = relations
        .iter()
        .map(|(l, r)| l.len().max(r.len()))
        .max()
        .unwrap_or(0);
    let mut dirty: BTreeSet<usize> = g.live_vertices().into_iter().collect();
    g.take_touched();
    let mut expansions = 0;
    let status = loop {
        let mut applicable = None;
        while let Some(&v) = dirty.first() {
            if !g.is_live(v) {
                dirty.remove(&v);
                continue;
            }
            for (l, r) in &relations {
                let a = act(&mut g, v, l);
                let b = act(&mut g, v, r);
                applicable = match (a, b) {
                    (Some(a), Some(b)) if a != b => Some((v, Word::empty(), a, b)),
                    (Some(a), None) => Some((v, r.reversed(), a, a)),
                    (None, Some(b)) => Some((v, l.reversed(), b, b)),
                    _ => None,
                };
                if applicable.is_some() {
                    break;
                }
            }
            if applicable.is_some() {
                break;
            }
            dirty.remove(&v);
        }
        let Some((v, path, target, other)) = applicable else {
            break GraphStatus::Converged;
        };
        if expansions >= budget.max_expansions || g.live_count() >= budget.max_vertices {
            break GraphStatus::Truncated {
                expansions,
                vertices: g.live_count(),
            };
        }
        if path.is_empty() {
            g.merge(target, other);
        } else {
            g.sew_path(v, path.letters(), target);
        }
        expansions += 1;
        let touched = g.take_touched();
        dirty.extend(g.ball(&touched, radius));
    };

    let c = g.compact(base);
    let word_vertex = c.old_to_new[end].expect("word vertex is connected");
    let base_word = w.inverse().concat(w);
    // Name each vertex by a representative of `u·w⁻¹w`, where `rev(u)` is
    // its breadth-first path from the base.
    let mut parent: Vec<Option<(usize, Letter)>> = vec![None; c.vertex_count];
    let mut out = vec![vec![None; 2 * rank]; c.vertex_count];
    for &(s, x, t) in &c.edges {
        out[s][Letter::positive(x).index()] = Some(t);
        out[t][Letter::new(x, true).index()] = Some(s);
    }
    let mut seen = vec![false; c.vertex_count];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for l in 0..2 * rank {
            if let Some(t) = out[v][l] {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((v, Letter::from_index(l)));
                    queue.push_back(t);
                }
            }
        }
    }
    let alphabet = p.alphabet().clone();
    let names = VertexNames::lazy(c.vertex_count, move |v| {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some((q, l)) = parent[cur] {
            path.push(l);
            cur = q;
        }
        // `path` holds the BFS label backwards, which is exactly `u`.
        let u = Word::new(path);
        let rep = MunnTree::from_word(rank, &u.concat(&base_word)).to_word();
        alphabet.format_word(&rep)
    });

    Stephen {
        graph: SchutzGraph::from_parts(
            p.alphabet().clone(),
            c.vertex_count,
            0,
            names,
            None,
            c.edges,
            status,
        ),
        word_vertex,
    }
}

pub fn stephen_graph(p: &Presentation, w: &Word, budget: StephenBudget) -> SchutzGraph {
    stephen(p, w, budget).graph
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Equality {
    Equal,
    Unequal,
    Unknown,
}

/// `u ⩾ v` in the sense of the converged graph of `v`: `u·v⁻¹v = v`.
fn accepts(s: &Stephen, u: &Word) -> bool {
    s.graph.act_word(s.graph.base(), u) == Some(s.word_vertex)
}

/// Decides `u = v` in the presented monoid. Any truncated graph gives
/// `Unknown`.
pub fn m_equal(p: &Presentation, u: &Word, v: &Word, budget: StephenBudget) -> Equality {
    let su = stephen(p, u, budget);
    let sv = stephen(p, v, budget);
    compare(&su, u, &sv, v)
}

/// One-sided certificate: each word labels the right path in the other's
/// (possibly truncated) approximation. Approximations map onto the true
/// graphs, so `true` is always sound; `false` proves nothing.
pub fn certify_equal(p: &Presentation, u: &Word, v: &Word, budget: StephenBudget) -> bool {
    let su = stephen(p, u, budget);
    let sv = stephen(p, v, budget);
    accepts(&su, v) && accepts(&sv, u)
}

fn compare(su: &Stephen, u: &Word, sv: &Stephen, v: &Word) -> Equality {
    if !su.graph.is_converged() || !sv.graph.is_converged() {
        return Equality::Unknown;
    }
    if accepts(su, v) && accepts(sv, u) {
        Equality::Equal
    } else {
        Equality::Unequal
    }
}

/// Enumerates the presented monoid breadth-first over shortlex words. The
/// vertex budget also caps the number of elements.
pub fn enumerate_monoid(p: &Presentation, budget: StephenBudget) -> Result<FiniteInverseMonoid> {
    let letters: Vec<Letter> = p.alphabet().letters().collect();
    let mut reps: Vec<(Word, Stephen)> = vec![(Word::empty(), stephen(p, &Word::empty(), budget))];
    if !reps[0].1.graph.is_converged() {
        return Err(Error::NotFinishedWithinBudget);
    }
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    while next < reps.len() {
        let mut row = Vec::with_capacity(letters.len());
        for &a in &letters {
            let mut w = reps[next].0.clone();
            w.push(a);
            let sw = stephen(p, &w, budget);
            if !sw.graph.is_converged() {
                return Err(Error::NotFinishedWithinBudget);
            }
            let mut found: Option<usize> = None;
            for (i, (r, sr)) in reps.iter().enumerate() {
                match compare(&sw, &w, sr, r) {
                    Equality::Equal => {
                        if let Some(first) = found {
                            return Err(Error::InconsistentEquality {
                                word: p.alphabet().format_word(&w),
                                first,
                                second: i,
                            });
                        }
                        found = Some(i);
                    }
                    Equality::Unequal => {}
                    Equality::Unknown => return Err(Error::NotFinishedWithinBudget),
                }
            }
            let idx = match found {
                Some(i) => i,
                None => {
                    if reps.len() >= budget.max_vertices {
                        return Err(Error::NotFinishedWithinBudget);
                    }
                    reps.push((w, sw));
                    reps.len() - 1
                }
            };
            row.push(idx);
        }
        right.push(row);
        next += 1;
    }

    let n = reps.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = reps[b]
                .0
                .letters()
                .iter()
                .fold(a, |acc, l| right[acc][l.index()]);
        }
    }
    let generators = (0..p.rank())
        .map(|x| right[0][Letter::positive(x).index()])
        .collect();
    FiniteInverseMonoid::from_table(p.alphabet().clone(), table, generators)
}
