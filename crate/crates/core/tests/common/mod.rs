#![allow(dead_code)]

use hyperspectral_core::Hypergraph;
use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

/// A random connected k-uniform hypergraph grown edge by edge: each new
/// edge keeps at least one existing vertex.
pub fn random_connected(rng: &mut StdRng, k: usize, m: usize) -> Hypergraph {
    loop {
        let mut edges: Vec<Vec<usize>> = vec![(0..k).collect()];
        let mut n = k;
        let mut attempts = 0;
        while edges.len() < m && attempts < 100 {
            attempts += 1;
            let shared = rng.random_range(1..=k.min(n));
            let mut pool: Vec<usize> = (0..n).collect();
            pool.shuffle(rng);
            let mut e: Vec<usize> = pool[..shared].to_vec();
            e.extend(n..n + k - shared);
            e.sort_unstable();
            if edges.contains(&e) {
                continue;
            }
            n += k - shared;
            edges.push(e);
        }
        if edges.len() == m {
            return Hypergraph::new(k, n, edges).unwrap();
        }
    }
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn pick<'a, T>(rng: &mut StdRng, items: &'a [T]) -> &'a T {
    items.choose(rng).unwrap()
}

/// Shortest cycle by exhaustive search over alternating vertex/edge
/// sequences with no repeats; `None` when acyclic.
pub fn girth_by_cycle_search(g: &Hypergraph) -> Option<usize> {
    fn extend(
        g: &Hypergraph,
        start: usize,
        current: usize,
        used_v: &mut Vec<bool>,
        used_e: &mut Vec<bool>,
        len: usize,
        best: &mut Option<usize>,
    ) {
        if best.is_some_and(|b| len >= b) {
            return;
        }
        for (i, e) in g.edges().enumerate() {
            if used_e[i] || !e.contains(&current) {
                continue;
            }
            used_e[i] = true;
            for &next in e {
                if next == current {
                    continue;
                }
                if next == start && len + 1 >= 2 {
                    *best = Some(best.map_or(len + 1, |b: usize| b.min(len + 1)));
                } else if !used_v[next] {
                    used_v[next] = true;
                    extend(g, start, next, used_v, used_e, len + 1, best);
                    used_v[next] = false;
                }
            }
            used_e[i] = false;
        }
    }
    let mut best = None;
    for start in 0..g.n() {
        let mut used_v = vec![false; g.n()];
        let mut used_e = vec![false; g.m()];
        used_v[start] = true;
        extend(g, start, start, &mut used_v, &mut used_e, 0, &mut best);
    }
    best
}

/// Largest eigenvalue of a symmetric nonnegative matrix by plain power
/// iteration on `M + I`.
pub fn dense_spectral_radius(matrix: &[Vec<f64>]) -> f64 {
    let n = matrix.len();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0;
    for _ in 0..200_000 {
        let mut y: Vec<f64> = (0..n)
            .map(|i| x[i] + (0..n).map(|j| matrix[i][j] * x[j]).sum::<f64>())
            .collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let next_lambda: f64 = (0..n).map(|i| x[i] * y[i]).sum::<f64>() - 1.0;
        y.iter_mut().for_each(|v| *v /= norm);
        let delta = y
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        x = y;
        if (next_lambda - lambda).abs() < 1e-15 && delta < 1e-13 {
            return next_lambda;
        }
        lambda = next_lambda;
    }
    lambda
}

/// The lexicographically smallest sorted edge list over every vertex
/// permutation (feasible for n <= 9).
pub fn brute_force_form(g: &Hypergraph) -> Vec<Vec<usize>> {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    permutations(g.n())
        .into_iter()
        .map(|p| {
            let mut edges: Vec<Vec<usize>> = g
                .edges()
                .map(|e| {
                    let mut r: Vec<usize> = e.iter().map(|&v| p[v]).collect();
                    r.sort_unstable();
                    r
                })
                .collect();
            edges.sort();
            edges
        })
        .min()
        .unwrap()
}
