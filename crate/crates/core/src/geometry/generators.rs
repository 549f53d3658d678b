//! Example graphs: cycles, complete graphs, cross polytopes, the Platonic
//! solids used throughout, wheels and seeded Erdős–Rényi graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};

fn build(n: usize, edges: &[(VertexId, VertexId)]) -> SimpleGraph {
    SimpleGraph::from_edge_list(n, edges).expect("generator edges are valid")
}

/// Cycle graph `C_n`, `n >= 3`.
pub fn cyclic(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cyclic graph needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

pub fn complete(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges)
}

/// Path graph on `n >= 1` vertices.
pub fn path(n: usize) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path graph needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &edges))
}

/// The `d`-dimensional cross polytope: complete multipartite graph with
/// `d + 1` parts `{2i, 2i + 1}`.
pub fn cross_polytope(d: usize) -> Result<SimpleGraph> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "cross polytope needs d >= 1".into(),
        ));
    }
    let n = 2 * d + 2;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).filter(move |v| v / 2 != u / 2).map(move |v| (u, v)))
        .collect();
    Ok(build(n, &edges))
}

pub fn octahedron() -> SimpleGraph {
    cross_polytope(2).expect("d = 2 is valid")
}

/// Apex 0, upper pentagon 1..=5, lower pentagon 6..=10, apex 11.
pub fn icosahedron() -> SimpleGraph {
    let mut edges = Vec::with_capacity(30);
    for j in 0..5 {
        let up = 1 + j;
        let up_next = 1 + (j + 1) % 5;
        let low = 6 + j;
        let low_next = 6 + (j + 1) % 5;
        edges.extend([
            (0, up),
            (up, up_next),
            (up, low),
            (up, low_next),
            (low, low_next),
            (low, 11),
        ]);
    }
    build(12, &edges)
}

/// The generalized Petersen graph GP(10, 2): outer 10-cycle `0..10`,
/// spokes `i -- 10 + i`, inner edges `10 + i -- 10 + (i + 2) % 10`.
pub fn dodecahedron() -> SimpleGraph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..10 {
        edges.extend([
            (i, (i + 1) % 10),
            (i, 10 + i),
            (10 + i, 10 + (i + 2) % 10),
        ]);
    }
    build(20, &edges)
}

/// The 3-cube `Q_3`; vertices are 3-bit words, edges flip one bit.
pub fn cube() -> SimpleGraph {
    let edges: Vec<_> = (0..8usize)
        .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    build(8, &edges)
}

/// Wheel `W_n`: rim `C_n` on `0..n` plus hub `n`.
pub fn wheel(n: usize) -> Result<SimpleGraph> {
    let rim = cyclic(n)?;
    Ok(super::pyramid_extension(&rim))
}

/// `G(n, p)` with every pair included independently with probability `p`.
/// The same seed always yields the same graph.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<SimpleGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{euler_characteristic, f_vector, iso};

    fn regular(g: &SimpleGraph, d: usize) -> bool {
        g.vertices().all(|v| g.degree(v) == d)
    }

    #[test]
    fn parameter_checks() {
        assert!(cyclic(2).is_err());
        assert!(path(0).is_err());
        assert!(cross_polytope(0).is_err());
        assert!(wheel(2).is_err());
        assert!(erdos_renyi(5, 1.5, 0).is_err());
        assert!(erdos_renyi(5, f64::NAN, 0).is_err());
    }

    #[test]
    fn octahedron_is_second_cross_polytope() {
        let oct = octahedron();
        assert_eq!(f_vector(&oct).counts(), &[6, 12, 8]);
        assert!(regular(&oct, 4));
    }

    #[test]
    fn icosahedron_counts() {
        let ico = icosahedron();
        assert_eq!(f_vector(&ico).counts(), &[12, 30, 20]);
        assert!(regular(&ico, 5));
        assert_eq!(euler_characteristic(&ico), 2);
    }

    #[test]
    fn dodecahedron_and_cube() {
        let dod = dodecahedron();
        assert_eq!(f_vector(&dod).counts(), &[20, 30]);
        assert!(regular(&dod, 3));
        let q3 = cube();
        assert_eq!(f_vector(&q3).counts(), &[8, 12]);
        assert!(regular(&q3, 3));
    }

    #[test]
    fn wheel_and_small_cases() {
        assert_eq!(f_vector(&wheel(4).unwrap()).counts(), &[5, 8, 4]);
        assert!(iso::are_isomorphic(&wheel(3).unwrap(), &complete(4)));
        assert_eq!(cyclic(3).unwrap(), complete(3));
        assert_eq!(path(1).unwrap().order(), 1);
    }

    #[test]
    fn erdos_renyi_is_reproducible() {
        let a = erdos_renyi(40, 0.3, 7).unwrap();
        assert_eq!(a, erdos_renyi(40, 0.3, 7).unwrap());
        assert_ne!(a, erdos_renyi(40, 0.3, 8).unwrap());
        assert_eq!(erdos_renyi(10, 0.0, 1).unwrap().size(), 0);
        assert_eq!(erdos_renyi(10, 1.0, 1).unwrap(), complete(10));
    }
}
