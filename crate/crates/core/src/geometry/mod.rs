//! Inductive dimension, recognition of geometric graphs, and the graph
//! constructions and generators.

mod constructions;
pub mod generators;

use std::collections::HashMap;

use num_traits::{One, Zero};

pub use constructions::{
    chordless_cycles, graph_product, pyramid_extension, stellate_cycles,
    stellate_cycles_with_limit, suspension, DEFAULT_CYCLE_LIMIT, DEFAULT_MAX_CYCLE_LEN,
};

use crate::graph::{euler_characteristic, SimpleGraph, VertexId};
use crate::rational::{int, Rational};

/// Inductive dimension: `-1` for the empty graph, otherwise one plus the
/// average dimension of the unit spheres.
///
/// A sphere of an induced subgraph on `U` is the subgraph induced on
/// `U ∩ N(x)`, so results are memoized by vertex set.
pub fn inductive_dimension(g: &SimpleGraph) -> Rational {
    let mut memo = HashMap::new();
    let all: Vec<VertexId> = g.vertices().collect();
    dimension_of_set(g, &all, &mut memo)
}

fn dimension_of_set(
    g: &SimpleGraph,
    set: &[VertexId],
    memo: &mut HashMap<Vec<VertexId>, Rational>,
) -> Rational {
    if set.is_empty() {
        return -Rational::one();
    }
    if let Some(d) = memo.get(set) {
        return *d;
    }
    let mut total = Rational::zero();
    let mut sphere = Vec::new();
    for &x in set {
        sphere.clear();
        // both lists are sorted
        let nbrs = g.neighbors(x);
        let (mut i, mut j) = (0, 0);
        while i < set.len() && j < nbrs.len() {
            match set[i].cmp(&nbrs[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    sphere.push(set[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        let sphere = std::mem::take(&mut sphere);
        total += dimension_of_set(g, &sphere, memo);
    }
    let d = Rational::one() + total / int(set.len() as i64);
    memo.insert(set.to_vec(), d);
    d
}

/// Evidence that a graph is `d`-geometric: every unit sphere checked, with
/// its Euler characteristic and (for `d >= 2`) its own witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricWitness {
    pub dimension: usize,
    pub spheres: Vec<SphereCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereCheck {
    pub vertex: VertexId,
    pub euler_characteristic: i64,
    /// `None` at dimension 1, where the sphere is two isolated points.
    pub witness: Option<Box<GeometricWitness>>,
}

/// Why a graph failed [`is_geometric`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotGeometric {
    /// Chain of vertices (host ids) whose nested unit spheres lead to the
    /// failure; empty when the graph itself is rejected.
    pub path: Vec<VertexId>,
    /// Dimension being tested where the check failed.
    pub dimension: usize,
    pub reason: String,
}

impl std::fmt::Display for NotGeometric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "not {}-geometric at sphere path {:?}: {}",
            self.dimension, self.path, self.reason
        )
    }
}

/// Sphere Euler characteristic required in dimension `d`: `1 - (-1)^d`.
pub fn sphere_euler_characteristic(d: usize) -> i64 {
    if d.is_multiple_of(2) {
        0
    } else {
        2
    }
}

/// Checks that `g` is `d`-dimensional geometric.
///
/// At `d = 1` every unit sphere must be exactly two isolated vertices. For
/// `d >= 2` every unit sphere must have Euler characteristic `1 - (-1)^d`
/// and be `(d-1)`-geometric itself. Spheres need not be connected. The
/// empty graph is not geometric.
pub fn is_geometric(g: &SimpleGraph, d: usize) -> Result<GeometricWitness, NotGeometric> {
    let labels: Vec<VertexId> = g.vertices().collect();
    check_geometric(g, &labels, d)
}

fn check_geometric(
    g: &SimpleGraph,
    labels: &[VertexId],
    d: usize,
) -> Result<GeometricWitness, NotGeometric> {
    let fail = |path: Vec<VertexId>, reason: String| NotGeometric {
        path,
        dimension: d,
        reason,
    };
    if d == 0 {
        return Err(fail(vec![], "dimension must be at least 1".into()));
    }
    if g.is_empty() {
        return Err(fail(vec![], "empty graph".into()));
    }
    let mut spheres = Vec::with_capacity(g.order());
    for x in g.vertices() {
        let sphere = g.unit_sphere(x).expect("vertex in range");
        let chi = euler_characteristic(&sphere.graph);
        let witness = if d == 1 {
            if sphere.graph.order() != 2 || sphere.graph.size() != 0 {
                return Err(fail(
                    vec![labels[x]],
                    format!(
                        "unit sphere has {} vertices and {} edges, expected two isolated vertices",
                        sphere.graph.order(),
                        sphere.graph.size()
                    ),
                ));
            }
            None
        } else {
            let want = sphere_euler_characteristic(d);
            if chi != want {
                return Err(fail(
                    vec![labels[x]],
                    format!("unit sphere has Euler characteristic {chi}, expected {want}"),
                ));
            }
            let sub_labels: Vec<VertexId> =
                sphere.provenance.iter().map(|&v| labels[v]).collect();
            match check_geometric(&sphere.graph, &sub_labels, d - 1) {
                Ok(w) => Some(Box::new(w)),
                Err(mut inner) => {
                    inner.path.insert(0, labels[x]);
                    return Err(inner);
                }
            }
        };
        spheres.push(SphereCheck {
            vertex: labels[x],
            euler_characteristic: chi,
            witness,
        });
    }
    Ok(GeometricWitness {
        dimension: d,
        spheres,
    })
}
