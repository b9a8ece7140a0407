//! Munn trees: canonical forms for elements of the free inverse monoid.

use std::collections::VecDeque;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fold::{linear_folded, FoldGraph};
use crate::word::{Alphabet, Letter, Word};

/// A birooted, folded, `X`-labelled tree. Vertices are numbered breadth-first
/// from the start root (always `0`) in letter order, so two trees are equal
/// as elements of FIM(X) exactly when they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MunnTree {
    rank: usize,
    vertex_count: usize,
    end: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl MunnTree {
    /// Traces `word` from a base vertex and folds.
    pub fn from_word(rank: usize, word: &Word) -> MunnTree {
        let (mut g, start, end) = linear_folded(rank, word);
        Self::from_fold(rank, &mut g, start, end)
    }

    fn from_fold(rank: usize, g: &mut FoldGraph, start: usize, end: usize) -> MunnTree {
        let c = g.compact(start);
        MunnTree {
            rank,
            vertex_count: c.vertex_count,
            end: c.old_to_new[end].expect("end root is connected to the start root"),
            edges: c.edges,
        }
    }

    pub fn identity(rank: usize) -> MunnTree {
        MunnTree {
            rank,
            vertex_count: 1,
            end: 0,
            edges: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn start(&self) -> usize {
        0
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn is_idempotent(&self) -> bool {
        self.end == 0
    }

    fn load(&self, g: &mut FoldGraph) -> usize {
        let ids: Vec<usize> = (0..self.vertex_count).map(|_| g.add_vertex()).collect();
        let offset = ids[0];
        for &(u, x, v) in &self.edges {
            g.add_edge(offset + u, Letter::positive(x), offset + v);
        }
        offset
    }

    fn check(&self, other: &MunnTree) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::AlphabetMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    /// Glues the end root of `self` to the start root of `other` and folds.
    pub fn multiply(&self, other: &MunnTree) -> Result<MunnTree> {
        self.check(other)?;
        let mut g = FoldGraph::new(self.rank);
        let a = self.load(&mut g);
        let b = other.load(&mut g);
        g.merge(a + self.end, b);
        Ok(Self::from_fold(self.rank, &mut g, a, b + other.end))
    }

    /// Swaps the roots.
    pub fn inverse(&self) -> MunnTree {
        let mut g = FoldGraph::new(self.rank);
        let a = self.load(&mut g);
        Self::from_fold(self.rank, &mut g, a + self.end, a)
    }

    /// Natural partial order: `s ≤ t` iff `s = (s s⁻¹) t`.
    pub fn leq(&self, other: &MunnTree) -> Result<bool> {
        self.check(other)?;
        let left = self.multiply(&self.inverse())?.multiply(other)?;
        Ok(&left == self)
    }

    fn adjacency(&self) -> Vec<Vec<(Letter, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, x, v) in &self.edges {
            adj[u].push((Letter::new(x, false), v));
            adj[v].push((Letter::new(x, true), u));
        }
        for list in &mut adj {
            list.sort();
        }
        adj
    }

    /// A shortest word with this Munn tree: branches hanging off the
    /// start-to-end geodesic are toured (in letter order) before moving on.
    pub fn to_word(&self) -> Word {
        let adj = self.adjacency();
        let mut parent: Vec<Option<(usize, Letter)>> = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &(l, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, l));
                    queue.push_back(w);
                }
            }
        }
        let mut geodesic = Vec::new();
        let mut cur = self.end;
        while let Some((p, l)) = parent[cur] {
            geodesic.push((p, l, cur));
            cur = p;
        }
        geodesic.reverse();

        let mut out = Vec::new();
        let mut prev: Option<usize> = None;
        let mut v = 0;
        let mut step = 0;
        loop {
            let next = geodesic.get(step).map(|&(_, _, w)| w);
            for &(l, w) in &adj[v] {
                if Some(w) == prev || Some(w) == next {
                    continue;
                }
                out.push(l);
                tour(&adj, w, v, &mut out);
                out.push(l.inverse());
            }
            match geodesic.get(step) {
                Some(&(_, l, w)) => {
                    out.push(l);
                    prev = Some(v);
                    v = w;
                    step += 1;
                }
                None => break,
            }
        }
        Word::new(out)
    }

    /// JSON form `{vertices, start, end, edges: [[u, "x", v], ...]}`.
    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|&(u, x, v)| json!([u, alphabet.name(x), v]))
            .collect();
        json!({
            "vertices": self.vertex_count,
            "start": 0,
            "end": self.end,
            "edges": edges,
        })
    }
}

fn tour(adj: &[Vec<(Letter, usize)>], v: usize, from: usize, out: &mut Vec<Letter>) {
    for &(l, w) in &adj[v] {
        if w == from {
            continue;
        }
        out.push(l);
        tour(adj, w, v, out);
        out.push(l.inverse());
    }
}

/// Convenience: `munn_tree` of a word.
pub fn munn_tree(rank: usize, word: &Word) -> MunnTree {
    MunnTree::from_word(rank, word)
}
