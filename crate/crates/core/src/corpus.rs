//! Seeded random instances for differential and property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::RadicalIdeal;
use crate::hypergraph::Hypergraph;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::varset::VarSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset<R: Rng>(rng: &mut R, n: usize) -> VarSet {
    loop {
        let s = VarSet::from_bits(rng.gen_range(1..(1u64 << n)));
        if !s.is_empty() {
            return s;
        }
    }
}

/// Square-free ideal on exactly `n` variables with at most `max_primes`
/// minimal primes. Primes are drawn one at a time and kept only when
/// incomparable with those already chosen, so small primes do not swallow
/// the rest; the count falls short only when `n` is too small.
pub fn square_free_on<R: Rng>(rng: &mut R, n: usize, max_primes: usize) -> RadicalIdeal {
    let r = rng.gen_range(1..=max_primes);
    let mut primes: Vec<VarSet> = Vec::with_capacity(r);
    for _ in 0..32 * r {
        if primes.len() == r {
            break;
        }
        let f = random_subset(rng, n);
        if primes.iter().all(|&g| !f.is_subset(g) && !g.is_subset(f)) {
            primes.push(f);
        }
    }
    RadicalIdeal::from_primes(n, primes).expect("non-empty subsets of 1..n")
}

/// `n ∈ 1..=max_n`, at most `max_primes` minimal primes.
pub fn square_free<R: Rng>(rng: &mut R, max_n: usize, max_primes: usize) -> RadicalIdeal {
    let n = rng.gen_range(1..=max_n);
    square_free_on(rng, n, max_primes)
}

/// A proper, nonzero ideal with some exponent ≥ 2 and all exponents
/// `≤ max_exp`.
pub fn non_square_free<R: Rng>(rng: &mut R, max_n: usize, max_exp: u32, max_gens: usize) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(1..=max_n);
        let k = rng.gen_range(1..=max_gens);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| {
                let mut e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
                if e.iter().all(|&x| x == 0) {
                    e[rng.gen_range(0..n)] = 1;
                }
                Monomial::new(e).expect("small exponents")
            })
            .collect();
        let i = MonomialIdeal::new(n, gens).expect("consistent ambient");
        if i.is_proper_nonzero() && !i.is_square_free() {
            return i;
        }
    }
}

/// Bipartite graph on `2..=max_n` vertices without isolated vertices.
pub fn bipartite_graph<R: Rng>(rng: &mut R, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(2..=max_n.max(2));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let a = rng.gen_range(1..n);
    let (left, right) = order.split_at(a);
    let mut edges: Vec<VarSet> = Vec::new();
    for &u in left {
        for &v in right {
            if rng.gen_bool(0.5) {
                edges.push(VarSet::singleton(u).with(v));
            }
        }
    }
    for v in 0..n {
        if !edges.iter().any(|e| e.contains(v)) {
            let other = if left.contains(&v) { right } else { left };
            let w = *other.choose(rng).expect("both sides non-empty");
            edges.push(VarSet::singleton(v).with(w));
        }
    }
    edges.sort();
    edges.dedup();
    Hypergraph::new(n, edges).expect("edges are distinct and in range")
}

/// Balanced hypergraph on `2..=max_n` vertices without isolated vertices,
/// with at least one edge of size ≥ 3 when `n ≥ 3`. Drawn by rejection.
pub fn balanced_hypergraph<R: Rng>(rng: &mut R, max_n: usize) -> Hypergraph {
    loop {
        let n = rng.gen_range(2..=max_n.max(2));
        let m = rng.gen_range(1..=n + 1);
        let mut edges: Vec<VarSet> = (0..m)
            .map(|_| loop {
                let e = random_subset(rng, n);
                if e.len() <= 3 {
                    break e;
                }
            })
            .collect();
        edges.sort();
        edges.dedup();
        let Ok(h) = Hypergraph::new(n, edges) else { continue };
        let big = h.edges().iter().any(|e| e.len() >= 3);
        if h.isolated_vertices().is_empty() && (n < 3 || big) && h.is_balanced() {
            return h;
        }
    }
}
