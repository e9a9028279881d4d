//! Seeded random instances for property checks.
//!
//! Uniform random signed graphs are almost never net-regular, so the
//! net-regular generators draw from whitelisted families: circulants with one
//! sign per jump (covering all-positive and all-negative regular graphs),
//! alternating even cycles and `K₁`. Every family is relabelled by a random
//! permutation.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{catalog, Sign, SignedGraph, SwitchSet};
use crate::linalg::{IntMatrix, Matrix};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign<R: Rng>(rng: &mut R, p_negative: f64) -> Sign {
    if rng.gen_bool(p_negative) {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

fn shuffled<R: Rng>(rng: &mut R, g: &SignedGraph) -> SignedGraph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// Erdős–Rényi style: each pair is an edge with probability `p_edge`, negative
/// with probability `p_negative`.
pub fn random_signed_graph<R: Rng>(rng: &mut R, n: usize, p_edge: f64, p_negative: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_edge) {
                edges.push((u, v, random_sign(rng, p_negative)));
            }
        }
    }
    SignedGraph::from_signed_edges(n, edges).unwrap()
}

/// Random signed graph on `1..=max_n` vertices.
pub fn random_graph_upto<R: Rng>(rng: &mut R, max_n: usize) -> SignedGraph {
    let n = rng.gen_range(1..=max_n.max(1));
    random_signed_graph(rng, n, 0.5, 0.5)
}

/// Random connected signed graph on exactly `n ≥ 1` vertices: a random
/// spanning tree plus extra edges with probability `p_extra`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p_extra: f64, p_negative: f64) -> SignedGraph {
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present[u][v] = true;
        edges.push((u, v, random_sign(rng, p_negative)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.gen_bool(p_extra) {
                edges.push((u, v, random_sign(rng, p_negative)));
            }
        }
    }
    shuffled(rng, &SignedGraph::from_signed_edges(n, edges).unwrap())
}

/// Nonempty random subset of the jumps `1..=n/2` (`n ≥ 2`).
fn random_jumps<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let all: Vec<usize> = (1..=n / 2).collect();
    loop {
        let chosen: Vec<usize> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !chosen.is_empty() {
            return chosen;
        }
    }
}

/// Circulant on `n ≥ 2` vertices with one random sign per jump.
pub fn random_signed_circulant<R: Rng>(rng: &mut R, n: usize) -> SignedGraph {
    let jumps: Vec<(usize, Sign)> = random_jumps(rng, n)
        .into_iter()
        .map(|d| (d, random_sign(rng, 0.5)))
        .collect();
    shuffled(rng, &catalog::circulant(n, &jumps))
}

/// Circulant on `n ≥ 2` vertices with every edge carrying `sign`.
pub fn random_uniform_circulant<R: Rng>(rng: &mut R, n: usize, sign: Sign) -> SignedGraph {
    let jumps: Vec<(usize, Sign)> = random_jumps(rng, n).into_iter().map(|d| (d, sign)).collect();
    shuffled(rng, &catalog::circulant(n, &jumps))
}

/// Net-regular graph on at most `max_n` vertices drawn from the whitelisted
/// families.
pub fn random_net_regular<R: Rng>(rng: &mut R, max_n: usize) -> SignedGraph {
    let max_n = max_n.max(1);
    loop {
        let family = rng.gen_range(0..5);
        let n = rng.gen_range(1..=max_n);
        let g = match family {
            0 if n == 1 => catalog::k1(),
            0 | 1 if n >= 2 => random_uniform_circulant(rng, n, Sign::Positive),
            2 if n >= 2 => random_uniform_circulant(rng, n, Sign::Negative),
            3 if n >= 4 => {
                let even = n - n % 2;
                shuffled(rng, &catalog::alternating_cycle(even))
            }
            4 if n >= 2 => random_signed_circulant(rng, n),
            _ => continue,
        };
        return g;
    }
}

/// Regular graph of positive degree on `2..=max_n` vertices with independent
/// random edge signs.
pub fn random_regular<R: Rng>(rng: &mut R, max_n: usize) -> SignedGraph {
    let n = rng.gen_range(2..=max_n.max(2));
    let jumps: Vec<(usize, Sign)> = random_jumps(rng, n).into_iter().map(|d| (d, Sign::Positive)).collect();
    let underlying = catalog::circulant(n, &jumps);
    let edges: Vec<_> = underlying.edges().iter().map(|e| (e.u, e.v, random_sign(rng, 0.5))).collect();
    shuffled(rng, &SignedGraph::from_signed_edges(n, edges).unwrap())
}

/// Net-regular graph with nonzero net degree on `2..=max_n` vertices.
pub fn random_net_regular_nonzero<R: Rng>(rng: &mut R, max_n: usize) -> SignedGraph {
    loop {
        let n = rng.gen_range(2..=max_n.max(2));
        let g = random_signed_circulant(rng, n);
        if g.net_regularity().is_some_and(|r| r != 0) {
            return g;
        }
    }
}

/// Companion for the Laplacian closed form: regular and net-regular, or
/// connected and all-positive.
pub fn random_laplacian_companion<R: Rng>(rng: &mut R, max_n: usize) -> SignedGraph {
    if rng.gen_bool(0.5) {
        random_net_regular(rng, max_n)
    } else {
        let n = rng.gen_range(1..=max_n.max(1));
        random_connected(rng, n, 0.4, 0.0)
    }
}

/// Connected and balanced but not necessarily all-positive: a connected
/// all-positive graph switched at a random vertex set.
pub fn random_connected_balanced<R: Rng>(rng: &mut R, n: usize) -> SignedGraph {
    let g = random_connected(rng, n, 0.4, 0.0);
    g.switch(&random_switch_set(rng, n))
}

pub fn random_switch_set<R: Rng>(rng: &mut R, n: usize) -> SwitchSet {
    let chosen: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    SwitchSet::new(n, chosen).unwrap()
}

/// Symmetric integer matrix with entries in `-bound..=bound`.
pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> IntMatrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = BigInt::from(rng.gen_range(-bound..=bound));
            m[(i, j)] = x.clone();
            m[(j, i)] = x;
        }
    }
    m
}

/// Rational with numerator in `-40..=40` and denominator in `1..=9`.
pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num = rng.gen_range(-40i64..=40);
    let den = rng.gen_range(1i64..=9);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
