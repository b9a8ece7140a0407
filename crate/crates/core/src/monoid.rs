//! Finite inverse monoids given by multiplication tables.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// Exhaustive associativity checks up to this size; sampled above it.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 200;
const SAMPLED_TRIPLES: usize = 100_000;

/// A finite inverse monoid `M` together with the images `xθ` of the
/// generators. Elements are `0..size()` numbered in shortlex order of their
/// minimal representative words, so `0` is the identity.
#[derive(Clone, Debug)]
pub struct FiniteInverseMonoid {
    alphabet: Alphabet,
    size: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    reps: Vec<Word>,
    names: Vec<String>,
    idempotents: Vec<usize>,
    fingerprint: u64,
}

impl PartialEq for FiniteInverseMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.table == other.table
            && self.generators == other.generators
    }
}

impl FiniteInverseMonoid {
    /// Builds a monoid from a multiplication table (`table[a * n + b] = ab`)
    /// and generator images, validating the inverse monoid axioms.
    pub fn from_table(alphabet: Alphabet, table: Vec<usize>, generators: Vec<usize>) -> Result<Self> {
        let n = (table.len() as f64).sqrt().round() as usize;
        if n == 0 || n * n != table.len() {
            return Err(Error::InvalidMonoid("table is not square".into()));
        }
        if table.iter().any(|&v| v >= n) || generators.iter().any(|&g| g >= n) {
            return Err(Error::InvalidMonoid("entry out of range".into()));
        }
        if generators.len() != alphabet.rank() {
            return Err(Error::AlphabetMismatch(generators.len(), alphabet.rank()));
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&i| (0..n).all(|a| mul(i, a) == a && mul(a, i) == a))
            .ok_or_else(|| Error::InvalidMonoid("no identity element".into()))?;

        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    let ab = mul(a, b);
                    for c in 0..n {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Err(Error::InvalidMonoid(format!(
                                "associativity fails on ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(Error::InvalidMonoid(format!(
                        "associativity fails on ({a}, {b}, {c})"
                    )));
                }
            }
        }

        let mut inverse = vec![usize::MAX; n];
        for s in 0..n {
            let candidates: Vec<usize> = (0..n)
                .filter(|&t| mul(mul(s, t), s) == s && mul(mul(t, s), t) == t)
                .collect();
            if candidates.len() != 1 {
                return Err(Error::InvalidMonoid(format!(
                    "element {s} has {} generalised inverses",
                    candidates.len()
                )));
            }
            inverse[s] = candidates[0];
        }
        let idem: Vec<usize> = (0..n).filter(|&s| mul(s, s) == s).collect();
        for &e in &idem {
            for &f in &idem {
                if mul(e, f) != mul(f, e) {
                    return Err(Error::InvalidMonoid("idempotents do not commute".into()));
                }
            }
        }

        // Breadth-first from the identity in letter order gives shortlex
        // minimal representatives; renumber elements in that order.
        let letter_value = |l: Letter| {
            let g = generators[l.generator()];
            if l.is_inverse() {
                inverse[g]
            } else {
                g
            }
        };
        let mut order = vec![identity];
        let mut reps = vec![Word::empty()];
        let mut new_index = vec![usize::MAX; n];
        new_index[identity] = 0;
        let mut queue = VecDeque::from([identity]);
        while let Some(s) = queue.pop_front() {
            let rep = reps[new_index[s]].clone();
            for l in alphabet.letters() {
                let t = mul(s, letter_value(l));
                if new_index[t] == usize::MAX {
                    new_index[t] = order.len();
                    order.push(t);
                    let mut w = rep.clone();
                    w.push(l);
                    reps.push(w);
                    queue.push_back(t);
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidMonoid(format!(
                "generators reach {} of {n} elements",
                order.len()
            )));
        }
        let mut new_table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                new_table[a * n + b] = new_index[mul(order[a], order[b])];
            }
        }
        let new_inverse: Vec<usize> = (0..n).map(|a| new_index[inverse[order[a]]]).collect();
        let new_generators: Vec<usize> = generators.iter().map(|&g| new_index[g]).collect();
        let idempotents: Vec<usize> = (0..n).filter(|&s| new_table[s * n + s] == s).collect();
        let names = reps.iter().map(|w| alphabet.format_word(w)).collect();

        let mut hasher = DefaultHasher::new();
        alphabet.names().hash(&mut hasher);
        new_table.hash(&mut hasher);
        new_generators.hash(&mut hasher);
        Ok(FiniteInverseMonoid {
            alphabet,
            size: n,
            table: new_table,
            inverse: new_inverse,
            generators: new_generators,
            reps,
            names,
            idempotents,
            fingerprint: hasher.finish(),
        })
    }

    /// The inverse monoid generated by partial injections of `{0..degree}`.
    /// `gens[i][p] = Some(q)` sends point `p` to `q`; products compose left
    /// to right, `p(st) = (ps)t`.
    pub fn from_partial_bijections(
        alphabet: Alphabet,
        degree: usize,
        gens: &[Vec<Option<usize>>],
    ) -> Result<Self> {
        if gens.len() != alphabet.rank() {
            return Err(Error::AlphabetMismatch(gens.len(), alphabet.rank()));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::NotInjective(i));
            }
            let mut hit = vec![false; degree];
            for &q in g.iter().flatten() {
                if q >= degree || hit[q] {
                    return Err(Error::NotInjective(i));
                }
                hit[q] = true;
            }
        }
        type Map = Vec<Option<usize>>;
        let invert = |m: &Map| -> Map {
            let mut out = vec![None; degree];
            for (p, q) in m.iter().enumerate() {
                if let Some(q) = q {
                    out[*q] = Some(p);
                }
            }
            out
        };
        let compose = |a: &Map, b: &Map| -> Map { a.iter().map(|p| p.and_then(|q| b[q])).collect() };
        let letters: Vec<Map> = alphabet
            .letters()
            .map(|l| {
                let g = &gens[l.generator()];
                if l.is_inverse() {
                    invert(g)
                } else {
                    g.clone()
                }
            })
            .collect();

        let identity: Map = (0..degree).map(Some).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Map, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            for m in &letters {
                let t = compose(&elements[s], m);
                if !index.contains_key(&t) {
                    index.insert(t.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(t);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Self::from_table(alphabet, table, generators)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `xθ`.
    pub fn generator(&self, x: usize) -> usize {
        self.generators[x]
    }

    pub fn letter(&self, l: Letter) -> usize {
        let g = self.generators[l.generator()];
        if l.is_inverse() {
            self.inverse[g]
        } else {
            g
        }
    }

    /// `wφ`: the value of a word.
    pub fn eval(&self, w: &Word) -> usize {
        w.letters()
            .iter()
            .fold(0, |acc, &l| self.mul(acc, self.letter(l)))
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    /// `E(M)` in element order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// `s⁻¹s`.
    pub fn right_idempotent(&self, s: usize) -> usize {
        self.mul(self.inv(s), s)
    }

    /// `ss⁻¹`.
    pub fn left_idempotent(&self, s: usize) -> usize {
        self.mul(s, self.inv(s))
    }

    /// Natural partial order `s ≤ t` iff `s = (ss⁻¹)t`.
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.mul(self.left_idempotent(s), t) == s
    }

    /// Shortlex-minimal representative word.
    pub fn rep(&self, s: usize) -> &Word {
        &self.reps[s]
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn require_idempotent(&self, e: usize) -> Result<()> {
        if e >= self.size || !self.is_idempotent(e) {
            return Err(Error::NotIdempotent(
                self.names.get(e).cloned().unwrap_or_else(|| e.to_string()),
            ));
        }
        Ok(())
    }

    /// `ℒ`-class `L_e = {s : s⁻¹s = e}` in element order.
    pub fn l_class(&self, e: usize) -> Vec<usize> {
        self.elements()
            .filter(|&s| self.right_idempotent(s) == e)
            .collect()
    }
}
