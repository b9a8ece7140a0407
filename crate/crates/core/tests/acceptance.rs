//! Acceptance criteria 1 to 9, one line each. Every comparison is exact;
//! the only tolerance is the wall-clock limit per criterion.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use invpres::builtins::{builtin, i2_table, semilattice_presentation};
use invpres::pseudoregular::{check_axioms, AxiomSample, FixtureU, PseudoregularGroupoid};
use invpres::relmod::{adjoin_zero_check, stephen_h1, verify_lausch_axioms};
use invpres::schutz::schutzenberger_graph;
use invpres::word::free_reduce;
use invpres::verify::{random_closed_path, random_kernel_word, verify, VerifyConfig};
use invpres::{
    enumerate_monoid, munn_tree, stephen_graph, Cover, CrossedModule, Error, FiniteInverseMonoid,
    LauschModule, Letter, Squier, StephenBudget, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact arithmetic throughout: no discrepancy is tolerated.
const MAX_DISCREPANCIES: usize = 0;
const TIME_LIMIT: Duration = Duration::from_secs(10);
const SAMPLES: usize = 500;
const ROUND_TRIPS: usize = 100;
const SEED: u64 = 2024;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ranks_by_name(module: &LauschModule, names: &[&str]) -> Result<Vec<usize>, String> {
    let m = module.monoid();
    names
        .iter()
        .map(|n| {
            m.element_by_name(n)
                .map(|e| module.rank(e))
                .ok_or_else(|| format!("no element named {n}"))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let p = semilattice_presentation();
    let m = enumerate_monoid(&p, StephenBudget::default()).map_err(|e| e.to_string())?;
    ensure(m.size() == 4, format!("{} elements", m.size()))?;
    let module = LauschModule::new(m);
    let ranks = ranks_by_name(&module, &["1", "e", "f", "e f"])?;
    ensure(ranks == [0, 1, 1, 2], format!("ranks {ranks:?}"))?;
    let m = module.monoid();
    let ef = m.element_by_name("e f").unwrap();
    for n in ["e", "f"] {
        let e = m.element_by_name(n).unwrap();
        let map = module.structure_map(e, ef).ok_or("missing structure map")?;
        ensure(map.is_injective(), format!("{n} -> e f is not injective"))?;
    }
    Ok("4 elements, ranks (0, 1, 1, 2), maps into e f injective".into())
}

fn criterion_2() -> Outcome {
    let p = builtin("bicyclic").unwrap().presentation;
    let mut graphs = 0;
    for q in 0..=5 {
        let mut letters = vec![Letter::new(0, true); q];
        letters.extend(vec![Letter::positive(0); q]);
        let w = Word::new(letters);
        for b in 1..=50 {
            let budget = StephenBudget::new(b, 100_000).unwrap();
            let g = stephen_graph(&p, &w, budget);
            ensure(g.is_simple_path() && g.is_tree(), format!("q={q}, budget {b}: not a path"))?;
            let (h1, _) = stephen_h1(&p, &w, budget);
            ensure(h1 == 0, format!("q={q}, budget {b}: H1 rank {h1}"))?;
            graphs += 1;
        }
    }
    let e = enumerate_monoid(&p, StephenBudget::default()).unwrap_err();
    ensure(e == Error::NotFinishedWithinBudget, format!("enumeration gave {e:?}"))?;
    Ok(format!("{graphs} truncations are paths with H1 = 0; enumeration unfinished"))
}

fn criterion_3() -> Outcome {
    let m = i2_table();
    ensure(m.size() == 7, format!("{} elements", m.size()))?;
    let names = ["1", "e", "t e t", "e t e"];
    let mut shapes = Vec::new();
    for n in names {
        let e = m.element_by_name(n).ok_or(format!("no {n}"))?;
        let g = schutzenberger_graph(&m, e).map_err(|x| x.to_string())?;
        shapes.push((g.vertex_count(), g.edge_count()));
    }
    ensure(shapes == [(2, 2), (2, 3), (2, 3), (1, 2)], format!("shapes {shapes:?}"))?;
    let module = LauschModule::new(m);
    let ranks = ranks_by_name(&module, &names)?;
    ensure(ranks == [1, 2, 2, 2], format!("ranks {ranks:?}"))?;
    Ok("7 elements, shapes (2,2) (2,3) (2,3) (1,2), ranks (1, 2, 2, 2)".into())
}

fn criterion_4() -> Outcome {
    let p = semilattice_presentation();
    let report = adjoin_zero_check(&p, StephenBudget::default()).map_err(|e| e.to_string())?;
    ensure(report.zero_rank == 3, format!("zero rank {}", report.zero_rank))?;
    ensure(report.passed(), format!("{:?}", report.mismatches))?;
    let q = builtin("semilattice0").unwrap().presentation;
    let module = LauschModule::new(enumerate_monoid(&q, StephenBudget::default()).unwrap());
    let ranks = ranks_by_name(&module, &["1", "e", "f", "e f", "z"])?;
    ensure(ranks == [0, 1, 1, 2, 3], format!("ranks {ranks:?}"))?;
    Ok("zero component rank 3, other components unchanged".into())
}

/// Rank over ℚ by fraction-free elimination, independent of the library.
fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let (f, g) = (a[rank][c], a[i][c]);
                for j in 0..cols {
                    a[i][j] = a[i][j] * f - a[rank][j] * g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn criterion_5() -> Outcome {
    let p = semilattice_presentation();
    let x = CrossedModule::new(&p, enumerate_monoid(&p, StephenBudget::default()).unwrap())
        .map_err(|e| e.to_string())?;
    let report = x.verify_exact_sequence().map_err(|e| e.to_string())?;
    let m = x.cover().monoid();
    // Hand-traced boundary at ef: the e-loop, the f-loop, and a commutator.
    let hand = vec![vec![1, 0, 0], vec![0, 1, 0]];
    let hand_rank = oracle_rank(&hand);
    let expected = [("1", 0, 0, 0), ("e", 1, 1, 0), ("f", 1, 1, 0), ("e f", 3, hand_rank, 3 - hand_rank)];
    for (n, free, image, kernel) in expected {
        let e = m.element_by_name(n).unwrap();
        let entry = report.entry(e).ok_or(format!("no entry for {n}"))?;
        let got = (entry.free_rank, entry.image_rank, entry.kernel_rank);
        ensure(got == (free, image, kernel), format!("{n}: {got:?}"))?;
        ensure(entry.surjective, format!("{n}: not surjective"))?;
        ensure(entry.kernel_rank + entry.image_rank == entry.free_rank, format!("{n}: rank identity"))?;
    }
    let ef = m.element_by_name("e f").unwrap();
    let rbar = x.rbar_matrix(ef).map_err(|e| e.to_string())?.to_i64_rows();
    ensure(rbar == hand, format!("r̄ at e f is {rbar:?}"))?;
    ensure(report.passed(), "naturality or kernel closure fails")?;
    Ok("ranks (free, image, kernel) at ef = (3, 2, 1), e, f = (1, 1, 0), 1 = (0, 0, 0)".into())
}

fn criterion_6() -> Outcome {
    let semilattice = enumerate_monoid(&semilattice_presentation(), StephenBudget::default()).unwrap();
    let mut failures = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for m in [semilattice, i2_table()] {
        let cover = Cover::new(m.clone());
        let kernels: Vec<_> = m.idempotents().iter().map(|&e| cover.kernel_group(e).unwrap()).collect();
        for _ in 0..SAMPLES {
            let k = &kernels[rng.gen_range(0..kernels.len())];
            let a = random_closed_path(k, &mut rng, 10);
            let b = random_closed_path(k, &mut rng, 10);
            let (ka, kb) = (k.kappa(&a).unwrap(), k.kappa(&b).unwrap());
            if k.kappa(&a.concat(&b)).unwrap() != ka.mul(&kb) {
                failures += 1;
            }
            // Abelianised κ agrees with the edge vector on the non-tree edges.
            let z = k.cycle_vector(&a).unwrap();
            let coords: Vec<i64> = k.basis().iter().map(|&i| z[i]).collect();
            if ka.abelianize(k.rank()) != coords {
                failures += 1;
            }
        }
        for _ in 0..ROUND_TRIPS {
            let k = &kernels[rng.gen_range(0..kernels.len())];
            let w = random_kernel_word(k, &mut rng, 8);
            if k.kappa(&k.kappa_inv(&w)).unwrap() != w {
                failures += 1;
            }
        }
    }
    ensure(failures <= MAX_DISCREPANCIES, format!("{failures} failures"))?;
    Ok(format!("{SAMPLES} pairs and {ROUND_TRIPS} round trips per backend, 0 failures"))
}

fn criterion_7() -> Outcome {
    let mut lines = Vec::new();
    for name in ["semilattice", "i2"] {
        let b = builtin(name).unwrap();
        let m = b.monoid(StephenBudget::default()).unwrap();
        let x = CrossedModule::new(&b.presentation, m.clone()).unwrap();
        let lausch = verify_lausch_axioms(x.relation_module(), SAMPLES, SEED);
        ensure(lausch.passed() && lausch.checked == SAMPLES, format!("{name}: {lausch:?}"))?;
        let free = verify_lausch_axioms(&x, SAMPLES, SEED);
        ensure(free.passed() && free.checked == SAMPLES, format!("{name} free: {free:?}"))?;

        let cover = x.cover();
        let sq = Squier::new(cover, &b.presentation).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let samples: Vec<_> = (0..SAMPLES)
            .map(|_| {
                let alpha = sq.random_path(&mut rng, 3, 4);
                let beta = Some(sq.reverse(&alpha));
                let xv = cover.lift(rng.gen_range(0..m.size()));
                let yv = cover.lift(rng.gen_range(0..m.size()));
                AxiomSample { x: xv, y: yv, alpha, beta }
            })
            .collect();
        let pr = check_axioms(&sq, &samples);
        ensure(pr.passed() && pr.checked == SAMPLES, format!("{name} pseudoregular: {pr:?}"))?;

        let cfg = VerifyConfig {
            samples: SAMPLES,
            seed: SEED,
            budget: StephenBudget::default(),
        };
        let report = verify(&b.presentation, b.table.clone(), &cfg);
        let cm = report.get("crossed-module-axioms").ok_or("no CM check")?;
        ensure(cm.passed && cm.detail == format!("{SAMPLES} samples"), format!("{name} CM: {}", cm.detail))?;
        lines.push(name);
    }
    let u = FixtureU;
    ensure(!u.identity_is_star_identity(3), "1_0 acts as a ∗-identity in U")?;
    ensure(u.star(&(3, 3), &(3, 1)).unwrap() == (3, 3), "1_0 ∗ (0, e) differs from (0, 0)")?;
    Ok(format!("{} backends x {SAMPLES} samples; 1_0 is not a ∗-identity in U", lines.len()))
}

fn all_words(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..letters {
                let mut v = w.clone();
                v.push(Letter::from_index(l));
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn criterion_8() -> Outcome {
    let semilattice = enumerate_monoid(&semilattice_presentation(), StephenBudget::default()).unwrap();
    let mut pairs = 0;
    for m in [semilattice, i2_table()] {
        pairs += key_criterion(&m)?;
    }
    Ok(format!("{} words per backend, {pairs} witness comparisons, 0 discrepancies", all_words(4, 5).len()))
}

/// Checks the key criterion for all words of length at most 5 and returns
/// how many witness comparisons were made.
fn key_criterion(m: &FiniteInverseMonoid) -> Result<u64, String> {
    let cover = Cover::new(m.clone());
    let words = all_words(4, 5);
    let keys: Vec<_> = words.iter().map(|w| cover.element(w)).collect();
    let right: Vec<(Word, usize)> = words
        .iter()
        .map(|w| {
            let ri = w.inverse().concat(w);
            let v = m.eval(&ri);
            (ri, v)
        })
        .collect();
    // The witness forces u⁻¹u = v⁻¹v in M and, through the Munn trees, the
    // same free reduction; pairs outside such a class must have distinct keys.
    let class: Vec<(usize, Vec<usize>)> = words
        .iter()
        .zip(&right)
        .map(|(w, (_, v))| (*v, free_reduce(w).word().letters().iter().map(|l| l.index()).collect()))
        .collect();
    let mut groups: HashMap<&(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    for (i, c) in class.iter().enumerate() {
        groups.entry(c).or_default().push(i);
    }
    let mut discrepancies = 0;
    let mut pairs = 0u64;
    for i in 0..words.len() {
        for j in 0..words.len() {
            if class[i] != class[j] && keys[i] == keys[j] {
                discrepancies += 1;
            }
        }
    }
    for group in groups.values() {
        for &i in group {
            for &j in group {
                pairs += 1;
                let e0 = right[i].0.concat(&right[j].0);
                let witness = m.eval(&e0) == right[i].1
                    && munn_tree(2, &words[i].concat(&e0)) == munn_tree(2, &words[j].concat(&e0));
                if witness != (keys[i] == keys[j]) {
                    discrepancies += 1;
                }
            }
        }
    }
    ensure(discrepancies <= MAX_DISCREPANCIES, format!("{discrepancies} discrepancies"))?;
    Ok(pairs)
}

type Raw = Vec<u8>;

fn inv(w: &[u8]) -> Raw {
    w.iter().rev().map(|&l| l ^ 1).collect()
}

/// Connected components of words of length ≤ `bound` under the Wagner
/// rules `w w⁻¹ w = w` and `u u⁻¹ v v⁻¹ = v v⁻¹ u u⁻¹`, applied to factors.
fn wagner_closure(letters: u8, bound: usize) -> (HashMap<Raw, usize>, Vec<usize>) {
    let mut index = HashMap::new();
    let mut all: Vec<Raw> = vec![Vec::new()];
    let mut layer: Vec<Raw> = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..letters {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    for (i, w) in all.iter().enumerate() {
        index.insert(w.clone(), i);
    }
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (a, b) = (find(p, a), find(p, b));
        if a != b {
            p[a.max(b)] = a.min(b);
        }
    };
    for (i, w) in all.iter().enumerate() {
        let n = w.len();
        for s in 0..n {
            for e in s + 1..=n {
                let f = &w[s..e];
                let (pre, post) = (&w[..s], &w[e..]);
                // f = x x⁻¹ x  →  x
                if f.len() % 3 == 0 {
                    let k = f.len() / 3;
                    let x = &f[..k];
                    if f[k..2 * k] == inv(x)[..] && &f[2 * k..] == x {
                        let t = [pre, x, post].concat();
                        union(&mut parent, i, index[&t]);
                    }
                }
                // f = u u⁻¹ v v⁻¹  →  v v⁻¹ u u⁻¹
                for a in 1..f.len() {
                    let (g, h) = (&f[..a], &f[a..]);
                    if g.len() % 2 != 0 || h.len() % 2 != 0 {
                        continue;
                    }
                    let (u, v) = (&g[..g.len() / 2], &h[..h.len() / 2]);
                    if g[g.len() / 2..] == inv(u)[..] && h[h.len() / 2..] == inv(v)[..] {
                        let t = [pre, h, g, post].concat();
                        union(&mut parent, i, index[&t]);
                    }
                }
            }
        }
    }
    let roots = (0..all.len()).map(|i| find(&mut parent, i)).collect();
    (index, roots)
}

fn criterion_9() -> Outcome {
    // Two generators, four signed letters; closure explored up to length 8.
    let (max_len, bound) = (6, 8);
    let (index, roots) = wagner_closure(4, bound);
    let words = all_words(4, max_len);
    let mut munn_class: HashMap<_, usize> = HashMap::new();
    let mut root_of_class: HashMap<usize, usize> = HashMap::new();
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut discrepancies = 0;
    for w in &words {
        let raw: Raw = w.letters().iter().map(|l| l.index() as u8).collect();
        let root = roots[index[&raw]];
        let next = munn_class.len();
        let class = *munn_class.entry(munn_tree(2, w)).or_insert(next);
        if *root_of_class.entry(class).or_insert(root) != root {
            discrepancies += 1;
        }
        if *class_of_root.entry(root).or_insert(class) != class {
            discrepancies += 1;
        }
    }
    ensure(discrepancies <= MAX_DISCREPANCIES, format!("{discrepancies} discrepancies"))?;
    Ok(format!("{} words in {} classes agree", words.len(), munn_class.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("semilattice example", criterion_1),
        ("bicyclic example", criterion_2),
        ("symmetric inverse monoid on two points", criterion_3),
        ("zero adjunction", criterion_4),
        ("exact sequence", criterion_5),
        ("kappa isomorphism", criterion_6),
        ("axiom suites", criterion_7),
        ("key criterion", criterion_8),
        ("Wagner congruence oracle", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > TIME_LIMIT => Err(format!("{d}; took {elapsed:.2?}")),
            o => o,
        };
        match outcome {
            Ok(d) => println!("criterion {}: PASS {name}: {d} ({elapsed:.2?})", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {d} ({elapsed:.2?})", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
