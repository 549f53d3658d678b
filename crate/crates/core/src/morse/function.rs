use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// An injective function on the vertices, stored as the ranking it induces.
///
/// Indices and hypersurfaces depend only on the order of the values, so a
/// permutation `rank: V -> 0..n` carries everything needed and never ties.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexFunction {
    ranks: Vec<usize>,
}

impl VertexFunction {
    /// `ranks` must be a permutation of `0..n`.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut owner = vec![usize::MAX; n];
        for (v, &r) in ranks.iter().enumerate() {
            if r >= n {
                return Err(Error::InvalidParameter(format!(
                    "rank {r} of vertex {v} is not below {n}"
                )));
            }
            if owner[r] != usize::MAX {
                return Err(Error::NotInjective(owner[r], v));
            }
            owner[r] = v;
        }
        Ok(Self { ranks })
    }

    /// Ranks real values; ties and NaN are rejected.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        if let Some(v) = values.iter().position(|x| x.is_nan()) {
            return Err(Error::Parse(format!("value of vertex {v} is NaN")));
        }
        let mut order: Vec<VertexId> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        for w in order.windows(2) {
            if values[w[0]] == values[w[1]] {
                return Err(Error::NotInjective(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        let mut ranks = vec![0; values.len()];
        for (r, &v) in order.iter().enumerate() {
            ranks[v] = r;
        }
        Ok(Self { ranks })
    }

    /// `f(v) = v`.
    pub fn identity(n: usize) -> Self {
        Self {
            ranks: (0..n).collect(),
        }
    }

    /// Uniformly random ranking.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut ranks: Vec<usize> = (0..n).collect();
        ranks.shuffle(rng);
        Self { ranks }
    }

    /// Random ranking determined by `(seed, stream)`.
    pub fn seeded(n: usize, seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self::random(n, &mut rng)
    }

    /// `-f`.
    pub fn negated(&self) -> Self {
        let n = self.ranks.len();
        Self {
            ranks: self.ranks.iter().map(|&r| n - 1 - r).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, v: VertexId) -> usize {
        self.ranks[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `f(u) < f(v)`.
    pub fn less(&self, u: VertexId, v: VertexId) -> bool {
        self.ranks[u] < self.ranks[v]
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.ranks.len() == n {
            Ok(())
        } else {
            Err(Error::FunctionLength {
                expected: n,
                got: self.ranks.len(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_values() {
        let f = VertexFunction::from_values(&[0.5, -2.0, 7.25]).unwrap();
        assert_eq!(f.ranks(), &[1, 0, 2]);
        assert!(f.less(1, 0));
        assert_eq!(f.negated().ranks(), &[1, 2, 0]);
    }

    #[test]
    fn rejects_ties_and_bad_ranks() {
        assert!(matches!(
            VertexFunction::from_values(&[1.0, 2.0, 1.0]),
            Err(Error::NotInjective(0, 2))
        ));
        assert!(VertexFunction::from_values(&[f64::NAN]).is_err());
        assert!(VertexFunction::from_ranks(vec![0, 0]).is_err());
        assert!(VertexFunction::from_ranks(vec![0, 2]).is_err());
    }

    #[test]
    fn seeded_functions_are_reproducible_permutations() {
        let f = VertexFunction::seeded(20, 9, 3);
        assert_eq!(f, VertexFunction::seeded(20, 9, 3));
        assert_ne!(f, VertexFunction::seeded(20, 9, 4));
        assert!(VertexFunction::from_ranks(f.ranks().to_vec()).is_ok());
    }
}
