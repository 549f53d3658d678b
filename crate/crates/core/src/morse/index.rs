use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::VertexFunction;
use crate::error::Result;
use crate::graph::{clique_degrees, euler_characteristic, SimpleGraph, Subgraph, VertexId};
use crate::hypersurface::{sphere_hypersurface, w_vector, SignPartition, WVector};
use crate::rational::{frac, int, Rational};

/// Which half of the unit sphere to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `S^-_f(x) = {y in S(x) : f(y) < f(x)}`.
    Below,
    /// `S^+_f(x) = {y in S(x) : f(y) > f(x)}`.
    Above,
}

pub fn sub_level_sphere(
    g: &SimpleGraph,
    f: &VertexFunction,
    x: VertexId,
    side: Side,
) -> Result<Subgraph> {
    f.check_len(g.order())?;
    g.check_vertex(x)?;
    let keep: Vec<VertexId> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| match side {
            Side::Below => f.less(y, x),
            Side::Above => f.less(x, y),
        })
        .collect();
    Ok(g.induced_subgraph(&keep))
}

/// `i_f(x) = 1 - chi(S^-_f(x))`.
pub fn index(g: &SimpleGraph, f: &VertexFunction, x: VertexId) -> Result<i64> {
    Ok(1 - euler_characteristic(&sub_level_sphere(g, f, x, Side::Below)?.graph))
}

/// `j_f(x) = (i_f(x) + i_{-f}(x)) / 2`. Half-integers occur on
/// non-geometric graphs.
pub fn symmetric_index(g: &SimpleGraph, f: &VertexFunction, x: VertexId) -> Result<Rational> {
    let below = index(g, f, x)?;
    // i_{-f} only needs the upper half of the sphere
    let above = 1 - euler_characteristic(&sub_level_sphere(g, f, x, Side::Above)?.graph);
    Ok(frac(below + above, 2))
}

/// `K(x) = sum_k (-1)^k V_{k-1}(x) / (k + 1)` with `V_{-1}(x) = 1`.
pub fn curvature(g: &SimpleGraph, x: VertexId) -> Result<Rational> {
    let degrees = clique_degrees(g, x)?;
    let mut k = Rational::one();
    for (i, &v) in degrees.counts().iter().enumerate() {
        // V_i enters with sign (-1)^(i+1) over i + 2
        let term = frac(v as i64, i as i64 + 2);
        if i % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    Ok(k)
}

/// Curvature at every vertex.
pub fn curvatures(g: &SimpleGraph) -> Vec<Rational> {
    g.vertices()
        .into_par_iter()
        .map(|x| curvature(g, x).expect("vertex in range"))
        .collect()
}

/// Everything the index formula relates at one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexReport {
    pub vertex: VertexId,
    /// `i_f(x)`.
    pub index: i64,
    /// `i_{-f}(x)`.
    pub reverse_index: i64,
    #[serde(serialize_with = "crate::morse::ser_rational")]
    pub symmetric_index: Rational,
    /// `[W_1(x), W_2(x), ...]` in `S(x)` split at `f(x)`.
    pub w: WVector,
    pub chi_sphere: i64,
    /// `chi(B_f(x))`.
    pub chi_b: i64,
    #[serde(serialize_with = "crate::morse::ser_rational")]
    pub curvature: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub vertices: Vec<VertexReport>,
}

impl IndexReport {
    pub fn index_sum(&self) -> i64 {
        self.vertices.iter().map(|r| r.index).sum()
    }

    pub fn curvature_sum(&self) -> Rational {
        self.vertices
            .iter()
            .fold(Rational::zero(), |acc, r| acc + r.curvature)
    }

    pub fn symmetric_index_sum(&self) -> Rational {
        self.vertices
            .iter()
            .fold(Rational::zero(), |acc, r| acc + r.symmetric_index)
    }
}

/// Builds the report for one vertex; `B_f(x)` is constructed and its Euler
/// characteristic counted from cliques.
pub fn vertex_report(g: &SimpleGraph, f: &VertexFunction, x: VertexId) -> Result<VertexReport> {
    let index = index(g, f, x)?;
    let reverse_index = 1 - euler_characteristic(&sub_level_sphere(g, f, x, Side::Above)?.graph);
    let partition = SignPartition::around_vertex(g, f, x)?;
    let b = sphere_hypersurface(g, f, x, true)?;
    Ok(VertexReport {
        vertex: x,
        index,
        reverse_index,
        symmetric_index: frac(index + reverse_index, 2),
        w: w_vector(&partition),
        chi_sphere: euler_characteristic(partition.host()),
        chi_b: euler_characteristic(&b.graph),
        curvature: curvature(g, x)?,
    })
}

/// Per-vertex reports, computed in parallel and ordered by vertex id.
pub fn index_report(g: &SimpleGraph, f: &VertexFunction) -> Result<IndexReport> {
    f.check_len(g.order())?;
    let vertices = g
        .vertices()
        .into_par_iter()
        .map(|x| vertex_report(g, f, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(IndexReport { vertices })
}

/// Right-hand side of the index formula, `(2 - chi(S(x)) - chi(B_f(x))) / 2`.
pub fn index_formula_rhs(chi_sphere: i64, chi_b: i64) -> Rational {
    (int(2) - int(chi_sphere) - int(chi_b)) / int(2)
}
