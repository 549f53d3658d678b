//! Expectation of the index over random functions.
//!
//! For independent, identically distributed continuous values every relative
//! order of the closed neighborhood `B_1(x)` is equally likely. The index at
//! `x` depends only on which neighbors fall below `x`: a fixed set `A` of
//! size `a` out of `d` neighbors is exactly the below-set with probability
//! `a! (d - a)! / (d + 1)!`. Summing `1 - chi(A)` with these weights over all
//! `2^d` subsets gives the exact expectation.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{euler_characteristic, SimpleGraph, VertexId};
use crate::rational::Rational;

/// Largest degree handled by exact enumeration unless overridden.
pub const DEFAULT_EXACT_DEGREE_BOUND: usize = 8;

/// Hard ceiling for the exact path: beyond it `2^d` subsets are too many.
const MAX_EXACT_DEGREE: usize = 24;

const TRIALS_PER_CHUNK: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectationMode {
    Exact { degree_bound: usize },
    MonteCarlo { trials: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: u64,
    pub seed: u64,
}

impl MonteCarloEstimate {
    /// `|mean - target| <= z * std_error`.
    pub fn within(&self, target: f64, z: f64) -> bool {
        (self.mean - target).abs() <= z * self.std_error
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Expectation {
    Exact(Rational),
    Estimate(MonteCarloEstimate),
}

pub fn index_expectation(
    g: &SimpleGraph,
    x: VertexId,
    mode: ExpectationMode,
) -> Result<Expectation> {
    match mode {
        ExpectationMode::Exact { degree_bound } => {
            index_expectation_exact(g, x, degree_bound).map(Expectation::Exact)
        }
        ExpectationMode::MonteCarlo { trials, seed } => {
            index_expectation_monte_carlo(g, x, trials, seed).map(Expectation::Estimate)
        }
    }
}

fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

/// Rank-weighted sum over the below-sets of `S(x)`.
pub fn index_expectation_exact(
    g: &SimpleGraph,
    x: VertexId,
    degree_bound: usize,
) -> Result<Rational> {
    let sphere = g.unit_sphere(x)?;
    let d = sphere.graph.order();
    if d > degree_bound.min(MAX_EXACT_DEGREE) {
        return Err(Error::DegreeTooLarge {
            vertex: x,
            degree: d,
            bound: degree_bound.min(MAX_EXACT_DEGREE),
        });
    }
    let total = factorial(d + 1);
    let mut numerator: i128 = 0;
    let mut below = Vec::with_capacity(d);
    for mask in 0u32..(1u32 << d) {
        below.clear();
        below.extend((0..d).filter(|b| mask >> b & 1 == 1));
        let a = below.len();
        let chi = euler_characteristic(&sphere.graph.induced_subgraph(&below).graph);
        numerator += factorial(a) * factorial(d - a) * (1 - chi as i128);
    }
    Ok(Rational::new(numerator, total))
}

/// Uniform random orders of `B_1(x)`; trial `i` draws from the ChaCha stream
/// `i` under `seed`, so the estimate is identical at any thread count.
pub fn index_expectation_monte_carlo(
    g: &SimpleGraph,
    x: VertexId,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if trials < 2 {
        return Err(Error::InvalidParameter(
            "Monte-Carlo needs at least two trials".into(),
        ));
    }
    let sphere = g.unit_sphere(x)?;
    let d = sphere.graph.order();
    let chunks = trials.div_ceil(TRIALS_PER_CHUNK);
    let (sum, sum_sq) = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * TRIALS_PER_CHUNK;
            let end = (start + TRIALS_PER_CHUNK).min(trials);
            let mut order: Vec<usize> = (0..=d).collect();
            let mut below = Vec::with_capacity(d);
            let (mut s, mut s2) = (0i64, 0i64);
            for trial in start..end {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(trial);
                // position d stands for x itself
                order.shuffle(&mut rng);
                below.clear();
                below.extend(order.iter().copied().take_while(|&v| v != d));
                let i = 1 - euler_characteristic(&sphere.graph.induced_subgraph(&below).graph);
                s += i;
                s2 += i * i;
            }
            (s, s2)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let n = trials as f64;
    let mean = sum as f64 / n;
    let variance = ((sum_sq as f64) - n * mean * mean) / (n - 1.0);
    Ok(MonteCarloEstimate {
        mean,
        std_error: (variance.max(0.0) / n).sqrt(),
        trials,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::generators::*;
    use crate::morse::curvature;
    use crate::rational::{frac, int};

    #[test]
    fn icosahedron_expectation_is_one_sixth() {
        let g = icosahedron();
        assert_eq!(index_expectation_exact(&g, 0, 8).unwrap(), frac(1, 6));
    }

    #[test]
    fn cross_polytope_expectation_vanishes() {
        let g = cross_polytope(3).unwrap();
        assert_eq!(index_expectation_exact(&g, 3, 8).unwrap(), int(0));
    }

    #[test]
    fn isolated_vertex_and_bound() {
        assert_eq!(
            index_expectation_exact(&SimpleGraph::empty(1), 0, 8).unwrap(),
            int(1)
        );
        let g = complete(11);
        assert!(matches!(
            index_expectation(&g, 0, ExpectationMode::Exact { degree_bound: 8 }),
            Err(Error::DegreeTooLarge { degree: 10, .. })
        ));
        assert_eq!(index_expectation_exact(&g, 0, 10).unwrap(), frac(1, 11));
    }

    #[test]
    fn monte_carlo_is_reproducible_and_consistent() {
        let g = wheel(6).unwrap();
        let a = index_expectation_monte_carlo(&g, 6, 20_000, 3).unwrap();
        let b = index_expectation_monte_carlo(&g, 6, 20_000, 3).unwrap();
        assert_eq!(a, b);
        let k = curvature(&g, 6).unwrap();
        let k = *k.numer() as f64 / *k.denom() as f64;
        assert!(a.within(k, 4.0), "{a:?} vs {k}");
        assert!(index_expectation_monte_carlo(&g, 6, 1, 3).is_err());
    }

    #[test]
    fn constant_index_has_zero_error() {
        let est = index_expectation_monte_carlo(&SimpleGraph::empty(1), 0, 100, 1).unwrap();
        assert_eq!((est.mean, est.std_error), (1.0, 0.0));
        assert!(est.within(1.0, 4.0));
    }
}
