//! Union-find folding of `A`-labelled graphs.
//!
//! An `x`-edge `u -> v` is stored twice: as the `x` transition out of `u`
//! and the `x⁻¹` transition out of `v`. Keeping both makes a folded graph
//! deterministic and co-deterministic at the same time.

use std::collections::VecDeque;

use crate::word::{Letter, Word};

#[derive(Clone, Debug)]
pub(crate) struct FoldGraph {
    letters: usize,
    parent: Vec<usize>,
    adj: Vec<Vec<Option<usize>>>,
    live: usize,
    /// Vertices whose adjacency changed since the last `take_touched`.
    touched: Vec<usize>,
}

impl FoldGraph {
    pub fn new(rank: usize) -> Self {
        FoldGraph {
            letters: 2 * rank,
            parent: Vec::new(),
            adj: Vec::new(),
            live: 0,
            touched: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        let v = self.parent.len();
        self.parent.push(v);
        self.adj.push(vec![None; self.letters]);
        self.live += 1;
        self.touched.push(v);
        v
    }

    pub fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn step(&mut self, v: usize, letter: Letter) -> Option<usize> {
        let v = self.find(v);
        let t = self.adj[v][letter.index()]?;
        Some(self.find(t))
    }

    /// Follows the path labelled `word` (read left to right) from `v`.
    pub fn trace(&mut self, v: usize, word: &[Letter]) -> Option<usize> {
        let mut cur = self.find(v);
        for &l in word {
            cur = self.step(cur, l)?;
        }
        Some(cur)
    }

    pub fn add_edge(&mut self, u: usize, letter: Letter, v: usize) {
        let (u, v) = (self.find(u), self.find(v));
        self.touched.extend([u, v]);
        match self.adj[u][letter.index()] {
            Some(w) => self.merge(w, v),
            None => self.adj[u][letter.index()] = Some(v),
        }
        let (u, v) = (self.find(u), self.find(v));
        match self.adj[v][letter.inverse().index()] {
            Some(w) => self.merge(w, u),
            None => self.adj[v][letter.inverse().index()] = Some(u),
        }
    }

    /// Sews a fresh path labelled `word` from `u` to `v` and folds. The
    /// empty word identifies `u` with `v`.
    pub fn sew_path(&mut self, u: usize, word: &[Letter], v: usize) {
        if word.is_empty() {
            self.merge(u, v);
            return;
        }
        let mut cur = u;
        for (i, &l) in word.iter().enumerate() {
            let next = if i + 1 == word.len() {
                v
            } else {
                self.add_vertex()
            };
            self.add_edge(cur, l, next);
            cur = next;
        }
    }

    /// Extends from `u` along `word`, reusing existing edges and creating
    /// new vertices where none exist; returns the end vertex.
    pub fn extend_path(&mut self, u: usize, word: &[Letter]) -> usize {
        let mut cur = self.find(u);
        for &l in word {
            cur = match self.step(cur, l) {
                Some(t) => t,
                None => {
                    let t = self.add_vertex();
                    self.add_edge(cur, l, t);
                    self.find(t)
                }
            };
        }
        cur
    }

    pub fn merge(&mut self, a: usize, b: usize) {
        let mut pending = vec![(a, b)];
        while let Some((a, b)) = pending.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop] = keep;
            self.live -= 1;
            self.touched.push(keep);
            let moved = std::mem::take(&mut self.adj[drop]);
            for (l, target) in moved.into_iter().enumerate() {
                let Some(t) = target else { continue };
                let t = self.find(t);
                match self.adj[keep][l] {
                    None => self.adj[keep][l] = Some(t),
                    Some(existing) => {
                        if self.find(existing) != t {
                            pending.push((existing, t));
                        }
                    }
                }
            }
        }
    }

    pub fn is_live(&self, v: usize) -> bool {
        self.parent[v] == v
    }

    pub fn live_vertices(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&v| self.is_live(v)).collect()
    }

    pub fn live_count(&self) -> usize {
        self.live
    }

    pub fn take_touched(&mut self) -> Vec<usize> {
        std::mem::take(&mut self.touched)
    }

    /// Live vertices within `radius` steps of any of `sources`.
    pub fn ball(&mut self, sources: &[usize], radius: usize) -> Vec<usize> {
        let mut dist = std::collections::HashMap::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            let s = self.find(s);
            if dist.insert(s, 0).is_none() {
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            if d == radius {
                continue;
            }
            for l in 0..self.letters {
                if let Some(t) = self.step(v, Letter::from_index(l)) {
                    if !dist.contains_key(&t) {
                        dist.insert(t, d + 1);
                        queue.push_back(t);
                    }
                }
            }
        }
        dist.into_keys().collect()
    }

    /// Renumbers the component of `root` breadth-first in letter order.
    /// Returns the new index of each reached old vertex and the positive
    /// edges `(source, generator, target)` in the new numbering.
    pub fn compact(&mut self, root: usize) -> Compacted {
        let root = self.find(root);
        let mut order = vec![root];
        let mut index = vec![usize::MAX; self.parent.len()];
        index[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for l in 0..self.letters {
                if let Some(t) = self.step(v, Letter::from_index(l)) {
                    if index[t] == usize::MAX {
                        index[t] = order.len();
                        order.push(t);
                        queue.push_back(t);
                    }
                }
            }
        }
        let mut edges = Vec::new();
        for (i, &v) in order.iter().enumerate() {
            for g in 0..self.letters / 2 {
                if let Some(t) = self.step(v, Letter::positive(g)) {
                    edges.push((i, g, index[t]));
                }
            }
        }
        let mut old_to_new = vec![None; self.parent.len()];
        for v in 0..self.parent.len() {
            let r = self.find(v);
            if index[r] != usize::MAX {
                old_to_new[v] = Some(index[r]);
            }
        }
        Compacted {
            vertex_count: order.len(),
            edges,
            old_to_new,
        }
    }
}

pub(crate) struct Compacted {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, usize)>,
    pub old_to_new: Vec<Option<usize>>,
}

/// Builds the folded linear graph of `word` and returns it with its start
/// and end vertices.
pub(crate) fn linear_folded(rank: usize, word: &Word) -> (FoldGraph, usize, usize) {
    let mut g = FoldGraph::new(rank);
    let start = g.add_vertex();
    let end = g.extend_path(start, word.letters());
    (g, start, end)
}
