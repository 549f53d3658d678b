//! Enumeration and counting of complete subgraphs.
//!
//! Every clique is generated exactly once as a strictly increasing vertex
//! sequence: starting at its smallest vertex, each step extends by a larger
//! common neighbor taken from the sorted intersection of the candidate list
//! with the new vertex's neighbors. Emission order is lexicographic in the
//! sorted vertex lists, whatever the thread count.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{SimpleGraph, VertexId};
use crate::error::{Error, Result};

/// Default cap on the number of cliques materialized by one enumeration.
pub const DEFAULT_CLIQUE_LIMIT: u64 = 100_000_000;

/// Graphs smaller than this are processed on the calling thread.
const PARALLEL_THRESHOLD: usize = 48;

/// A complete subgraph, stored as its strictly increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique(Vec<VertexId>);

impl Clique {
    /// Wraps a vertex list, sorting it. Adjacency is not checked.
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Self(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `len - 1`; a `K_{k+1}` has dimension `k`.
    pub fn dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_clique_in(&self, g: &SimpleGraph) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &u)| self.0[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueOptions {
    /// Largest dimension emitted; `None` emits everything.
    pub max_dim: Option<usize>,
    /// Enumeration fails with [`Error::CliqueLimit`] past this many cliques.
    pub limit: u64,
}

impl Default for CliqueOptions {
    fn default() -> Self {
        Self {
            max_dim: None,
            limit: DEFAULT_CLIQUE_LIMIT,
        }
    }
}

impl CliqueOptions {
    fn max_size(&self) -> usize {
        self.max_dim.map_or(usize::MAX, |d| d + 1)
    }
}

/// Clique counts `[v_0, v_1, ..., v_m]`, `v_k` being the number of `K_{k+1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// Drops trailing zeros.
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// `v_k`, zero past the clique number.
    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// Number of entries, i.e. the clique number.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum (-1)^k v_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

fn intersect_sorted(a: &[VertexId], b: &[VertexId], out: &mut Vec<VertexId>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

fn larger_neighbors(g: &SimpleGraph, v: VertexId) -> &[VertexId] {
    let list = g.neighbors(v);
    &list[list.partition_point(|&u| u < v)..]
}

/// Depth-first extension of `clique` by `candidates`. `visit` returns false
/// to abort; the return value reports whether the walk ran to completion.
fn extend<F>(
    g: &SimpleGraph,
    clique: &mut Vec<VertexId>,
    candidates: &[VertexId],
    max_size: usize,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[VertexId]) -> bool,
{
    if clique.len() >= max_size {
        return true;
    }
    let mut next = Vec::with_capacity(candidates.len());
    for (i, &c) in candidates.iter().enumerate() {
        clique.push(c);
        if !visit(clique) {
            return false;
        }
        intersect_sorted(&candidates[i + 1..], g.neighbors(c), &mut next);
        if !next.is_empty() && !extend(g, clique, &next, max_size, visit) {
            return false;
        }
        clique.pop();
    }
    true
}

/// Walks the cliques whose smallest vertex is `start`.
fn walk_from<F>(g: &SimpleGraph, start: VertexId, max_size: usize, visit: &mut F) -> bool
where
    F: FnMut(&[VertexId]) -> bool,
{
    if max_size == 0 {
        return true;
    }
    let mut clique = vec![start];
    if !visit(&clique) {
        return false;
    }
    extend(g, &mut clique, larger_neighbors(g, start), max_size, visit)
}

/// Streams every clique (sizes `1..=max_dim+1`) to `visit` in canonical
/// order, on the calling thread.
pub fn for_each_clique<F>(g: &SimpleGraph, opts: &CliqueOptions, mut visit: F) -> Result<()>
where
    F: FnMut(&[VertexId]),
{
    let max_size = opts.max_size();
    let mut emitted = 0u64;
    let mut step = |c: &[VertexId]| {
        emitted += 1;
        if emitted > opts.limit {
            return false;
        }
        visit(c);
        true
    };
    for v in g.vertices() {
        if !walk_from(g, v, max_size, &mut step) {
            return Err(Error::CliqueLimit { limit: opts.limit });
        }
    }
    Ok(())
}

/// Materializes every clique in canonical order. Start vertices are
/// processed in parallel for large graphs.
pub fn enumerate_cliques(g: &SimpleGraph, opts: &CliqueOptions) -> Result<Vec<Clique>> {
    if g.order() < PARALLEL_THRESHOLD {
        let mut out = Vec::new();
        for_each_clique(g, opts, |c| out.push(Clique(c.to_vec())))?;
        return Ok(out);
    }
    let max_size = opts.max_size();
    let emitted = AtomicU64::new(0);
    let per_start: Vec<Option<Vec<Clique>>> = g
        .vertices()
        .into_par_iter()
        .map(|v| {
            let mut local = Vec::new();
            let done = walk_from(g, v, max_size, &mut |c: &[VertexId]| {
                if emitted.fetch_add(1, Ordering::Relaxed) >= opts.limit {
                    return false;
                }
                local.push(Clique(c.to_vec()));
                true
            });
            done.then_some(local)
        })
        .collect();
    let mut out = Vec::new();
    for chunk in per_start {
        out.extend(chunk.ok_or(Error::CliqueLimit { limit: opts.limit })?);
    }
    Ok(out)
}

fn count_from(g: &SimpleGraph, start: VertexId, counts: &mut Vec<u64>) {
    walk_from(g, start, usize::MAX, &mut |c: &[VertexId]| {
        if counts.len() < c.len() {
            counts.resize(c.len(), 0);
        }
        counts[c.len() - 1] += 1;
        true
    });
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Counts cliques of every size. Counting keeps no cliques in memory, so no
/// limit applies.
pub fn f_vector(g: &SimpleGraph) -> FVector {
    let counts = if g.order() < PARALLEL_THRESHOLD {
        let mut counts = Vec::new();
        for v in g.vertices() {
            count_from(g, v, &mut counts);
        }
        counts
    } else {
        g.vertices()
            .into_par_iter()
            .map(|v| {
                let mut counts = Vec::new();
                count_from(g, v, &mut counts);
                counts
            })
            .reduce(Vec::new, add_counts)
    };
    FVector::new(counts)
}

/// `chi(G) = sum (-1)^k v_k`; zero for the empty graph.
pub fn euler_characteristic(g: &SimpleGraph) -> i64 {
    f_vector(g).euler_characteristic()
}

/// `[V_0(x), V_1(x), ...]`: the f-vector of the unit sphere of `x`.
pub fn clique_degrees(g: &SimpleGraph, x: VertexId) -> Result<FVector> {
    Ok(f_vector(&g.unit_sphere(x)?.graph))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::generators;
    use std::collections::HashSet;

    #[test]
    fn complete_graph_has_every_subset() {
        let cliques = enumerate_cliques(&generators::complete(4), &CliqueOptions::default()).unwrap();
        assert_eq!(cliques.len(), 15);
        assert_eq!(f_vector(&generators::complete(4)).counts(), &[4, 6, 4, 1]);
    }

    #[test]
    fn pentagon_is_triangle_free() {
        let cliques =
            enumerate_cliques(&generators::cyclic(5).unwrap(), &CliqueOptions::default()).unwrap();
        assert_eq!(cliques.len(), 10);
        assert!(cliques.iter().all(|c| c.len() <= 2));
    }

    #[test]
    fn octahedron_has_no_tetrahedra() {
        let cliques =
            enumerate_cliques(&generators::octahedron(), &CliqueOptions::default()).unwrap();
        assert_eq!(cliques.len(), 26);
        assert!(cliques.iter().all(|c| c.len() <= 3));
    }

    #[test]
    fn cross_polytope_f_vectors() {
        assert_eq!(
            f_vector(&generators::cross_polytope(3).unwrap()).counts(),
            &[8, 24, 32, 16]
        );
        assert_eq!(
            f_vector(&generators::cross_polytope(5).unwrap()).counts(),
            &[12, 60, 160, 240, 192, 64]
        );
    }

    #[test]
    fn empty_graph_conventions() {
        let g = SimpleGraph::empty(0);
        assert!(f_vector(&g).is_empty());
        assert_eq!(euler_characteristic(&g), 0);
    }

    #[test]
    fn euler_characteristics() {
        for n in 1..8 {
            assert_eq!(euler_characteristic(&generators::complete(n)), 1);
        }
        assert_eq!(euler_characteristic(&generators::cross_polytope(3).unwrap()), 0);
        assert_eq!(euler_characteristic(&generators::dodecahedron()), -10);
    }

    #[test]
    fn clique_degree_examples() {
        let cp3 = generators::cross_polytope(3).unwrap();
        let ico = generators::icosahedron();
        let c7 = generators::cyclic(7).unwrap();
        for x in 0..8 {
            assert_eq!(clique_degrees(&cp3, x).unwrap().counts(), &[6, 12, 8]);
        }
        for x in 0..12 {
            assert_eq!(clique_degrees(&ico, x).unwrap().counts(), &[5, 5]);
        }
        assert_eq!(clique_degrees(&c7, 3).unwrap().counts(), &[2]);
        assert!(clique_degrees(&c7, 7).is_err());
    }

    #[test]
    fn max_dim_truncates() {
        let opts = CliqueOptions {
            max_dim: Some(1),
            ..Default::default()
        };
        let cliques = enumerate_cliques(&generators::complete(5), &opts).unwrap();
        assert_eq!(cliques.len(), 5 + 10);
        let opts = CliqueOptions {
            max_dim: Some(0),
            ..Default::default()
        };
        assert_eq!(enumerate_cliques(&generators::complete(5), &opts).unwrap().len(), 5);
    }

    #[test]
    fn limit_is_enforced() {
        let opts = CliqueOptions {
            max_dim: None,
            limit: 14,
        };
        assert!(matches!(
            enumerate_cliques(&generators::complete(4), &opts),
            Err(Error::CliqueLimit { limit: 14 })
        ));
        let opts = CliqueOptions {
            max_dim: None,
            limit: 15,
        };
        assert!(enumerate_cliques(&generators::complete(4), &opts).is_ok());
    }

    #[test]
    fn parallel_path_matches_sequential_order() {
        let g = generators::erdos_renyi(80, 0.3, 11).unwrap();
        let par = enumerate_cliques(&g, &CliqueOptions::default()).unwrap();
        let mut seq = Vec::new();
        for_each_clique(&g, &CliqueOptions::default(), |c| seq.push(Clique(c.to_vec()))).unwrap();
        assert_eq!(par, seq);
        let mut sorted = seq.clone();
        sorted.sort();
        assert_eq!(sorted, seq);
        let distinct: HashSet<_> = seq.iter().collect();
        assert_eq!(distinct.len(), seq.len());
        assert!(seq.iter().all(|c| c.is_clique_in(&g)));

        let limited = CliqueOptions {
            max_dim: None,
            limit: seq.len() as u64 - 1,
        };
        assert!(enumerate_cliques(&g, &limited).is_err());
    }
}
