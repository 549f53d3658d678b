//! Level sets of vertex functions as graphs.
//!
//! A function that is nowhere equal to the level splits the vertices into a
//! positive and a negative side. Cliques meeting both sides are *mixed*. The
//! hypersurface graph has one vertex per mixed edge and one edge per mixed
//! triangle (each mixed triangle holds exactly two mixed edges).
//!
//! The faces of the hypersurface are clique products: a mixed simplex with
//! `s` positive and `t` negative vertices spans a copy of `K_s x K_t`. Those
//! with `s, t >= 2` are not simplices, and completion cones each of them
//! with a center vertex:
//!
//! - the center of `σ` is joined to every mixed edge contained in `σ`;
//! - centers of `σ` and `τ` are joined iff one simplex strictly contains the
//!   other.
//!
//! Centers of incomparable simplices stay apart, so the cliques of the
//! completed graph are exactly the simplices of a subdivision of the product
//! cells, and its Euler characteristic is `W_1 - W_2 + W_3 - ...`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{for_each_clique, Clique, CliqueOptions, SimpleGraph, VertexId};
use crate::morse::VertexFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// A host graph with every vertex assigned to the positive or negative side
/// of a level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPartition {
    host: SimpleGraph,
    signs: Vec<Sign>,
    /// Ids of the host's vertices in an enclosing graph (identity unless the
    /// host is a unit sphere).
    labels: Vec<VertexId>,
}

impl SignPartition {
    pub fn new(host: SimpleGraph, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != host.order() {
            return Err(Error::FunctionLength {
                expected: host.order(),
                got: signs.len(),
            });
        }
        let labels = host.vertices().collect();
        Ok(Self {
            host,
            signs,
            labels,
        })
    }

    /// `V^+ = {f > level}`, `V^- = {f < level}`; a value equal to the level
    /// is an error.
    pub fn at_level(host: SimpleGraph, values: &[f64], level: f64) -> Result<Self> {
        if values.len() != host.order() {
            return Err(Error::FunctionLength {
                expected: host.order(),
                got: values.len(),
            });
        }
        let signs = values
            .iter()
            .enumerate()
            .map(|(v, &value)| {
                if value > level {
                    Ok(Sign::Plus)
                } else if value < level {
                    Ok(Sign::Minus)
                } else {
                    Err(Error::DegenerateLevel {
                        vertex: v,
                        level: level.to_string(),
                    })
                }
            })
            .collect::<Result<_>>()?;
        Self::new(host, signs)
    }

    /// The unit sphere `S(x)` split by `g(y) = f(y) - f(x)`.
    pub fn around_vertex(g: &SimpleGraph, f: &VertexFunction, x: VertexId) -> Result<Self> {
        f.check_len(g.order())?;
        let sphere = g.unit_sphere(x)?;
        let signs = sphere
            .provenance
            .iter()
            .map(|&y| if f.less(x, y) { Sign::Plus } else { Sign::Minus })
            .collect();
        Ok(Self {
            host: sphere.graph,
            signs,
            labels: sphere.provenance,
        })
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    pub fn sign(&self, v: VertexId) -> Sign {
        self.signs[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn plus(&self) -> Vec<VertexId> {
        self.side(Sign::Plus)
    }

    pub fn minus(&self) -> Vec<VertexId> {
        self.side(Sign::Minus)
    }

    fn side(&self, sign: Sign) -> Vec<VertexId> {
        self.host
            .vertices()
            .filter(|&v| self.signs[v] == sign)
            .collect()
    }

    /// `(s, t)`: positive and negative vertices among `vertices`.
    pub fn split(&self, vertices: &[VertexId]) -> (usize, usize) {
        let s = vertices
            .iter()
            .filter(|&&v| self.signs[v] == Sign::Plus)
            .count();
        (s, vertices.len() - s)
    }
}

/// Convenience for [`SignPartition::at_level`].
pub fn sign_partition(g: &SimpleGraph, values: &[f64], level: f64) -> Result<SignPartition> {
    SignPartition::at_level(g.clone(), values, level)
}

/// A clique meeting both sides, with `plus = s >= 1` and `minus = t >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedSimplex {
    pub clique: Clique,
    pub plus: usize,
    pub minus: usize,
}

impl MixedSimplex {
    pub fn dimension(&self) -> usize {
        self.clique.dimension()
    }
}

/// `[W_1, W_2, ...]`: numbers of mixed `k`-simplices (`K_{k+1}`). `W_0` is
/// always zero and not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WVector(Vec<u64>);

impl WVector {
    /// `counts[i]` is `W_{i+1}`; trailing zeros are dropped.
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// `W_k`; zero for `k = 0` and past the end.
    pub fn get(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.0.get(k - 1).copied().unwrap_or(0)
        }
    }

    /// Largest `k` with `W_k` possibly nonzero.
    pub fn top(&self) -> usize {
        self.0.len()
    }

    /// `W_1 - W_2 + W_3 - ...`, the face count of the completed hypersurface.
    pub fn alternating_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &w)| if i % 2 == 0 { w as i64 } else { -(w as i64) })
            .sum()
    }

    fn bump(&mut self, k: usize) {
        if self.0.len() < k {
            self.0.resize(k, 0);
        }
        self.0[k - 1] += 1;
    }
}

/// Counts mixed simplices by dimension without storing them.
pub fn w_vector(p: &SignPartition) -> WVector {
    let mut w = WVector::default();
    let opts = CliqueOptions {
        max_dim: None,
        limit: u64::MAX,
    };
    for_each_clique(&p.host, &opts, |c| {
        let (s, t) = p.split(c);
        if s > 0 && t > 0 {
            w.bump(c.len() - 1);
        }
    })
    .expect("counting has no limit");
    w
}

/// Every mixed simplex (up to `max_dim`) in canonical clique order, with
/// their counts.
pub fn mixed_simplices(
    p: &SignPartition,
    opts: &CliqueOptions,
) -> Result<(Vec<MixedSimplex>, WVector)> {
    let mut out = Vec::new();
    let mut w = WVector::default();
    for_each_clique(&p.host, opts, |c| {
        let (s, t) = p.split(c);
        if s > 0 && t > 0 {
            w.bump(c.len() - 1);
            out.push(MixedSimplex {
                clique: Clique::new(c.to_vec()),
                plus: s,
                minus: t,
            });
        }
    })?;
    Ok((out, w))
}

/// Where a hypersurface vertex comes from, in host ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Mixed edge `(u, v)` with `u < v`.
    MixedEdge(VertexId, VertexId),
    /// Completion center of a mixed simplex with `s, t >= 2`.
    Center(MixedSimplex),
}

/// The hypersurface graph of a sign partition, optionally completed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceGraph {
    pub graph: SimpleGraph,
    pub provenance: Vec<Provenance>,
    partition: SignPartition,
    completed: bool,
}

impl HypersurfaceGraph {
    pub fn partition(&self) -> &SignPartition {
        &self.partition
    }

    pub fn is_completed(&self) -> bool {
        self.completed
    }

    pub fn center_count(&self) -> usize {
        self.provenance
            .iter()
            .filter(|p| matches!(p, Provenance::Center(_)))
            .count()
    }

    /// Provenance with host ids translated through the partition's labels.
    pub fn labelled_provenance(&self) -> Vec<Provenance> {
        let labels = self.partition.labels();
        self.provenance
            .iter()
            .map(|p| match p {
                Provenance::MixedEdge(u, v) => {
                    let (a, b) = (labels[*u], labels[*v]);
                    Provenance::MixedEdge(a.min(b), a.max(b))
                }
                Provenance::Center(m) => Provenance::Center(MixedSimplex {
                    clique: Clique::new(m.clique.vertices().iter().map(|&v| labels[v]).collect()),
                    plus: m.plus,
                    minus: m.minus,
                }),
            })
            .collect()
    }
}

/// Vertices are the mixed edges of the host, edges the mixed triangles.
pub fn hypersurface_graph(p: &SignPartition) -> HypersurfaceGraph {
    let host = &p.host;
    let mut index: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let mut provenance = Vec::new();
    for (u, v) in host.edges() {
        if p.signs[u] != p.signs[v] {
            index.insert((u, v), provenance.len());
            provenance.push(Provenance::MixedEdge(u, v));
        }
    }
    let mut adj = vec![Vec::new(); provenance.len()];
    let opts = CliqueOptions {
        max_dim: Some(2),
        limit: u64::MAX,
    };
    for_each_clique(host, &opts, |c| {
        if c.len() != 3 {
            return;
        }
        let mixed: Vec<usize> = [(c[0], c[1]), (c[0], c[2]), (c[1], c[2])]
            .iter()
            .filter_map(|e| index.get(e).copied())
            .collect();
        match mixed.as_slice() {
            [] => {}
            [a, b] => {
                adj[*a].push(*b);
                adj[*b].push(*a);
            }
            _ => unreachable!("a mixed triangle has exactly two mixed edges"),
        }
    })
    .expect("triangle walk has no limit");
    HypersurfaceGraph {
        graph: SimpleGraph::from_adjacency(adj),
        provenance,
        partition: p.clone(),
        completed: false,
    }
}

/// Adds one center per mixed simplex with `s, t >= 2` (see the module docs).
/// Completing an already completed graph returns it unchanged.
pub fn complete_hypersurface(h: &HypersurfaceGraph) -> Result<HypersurfaceGraph> {
    complete_hypersurface_with(h, &CliqueOptions::default())
}

pub fn complete_hypersurface_with(
    h: &HypersurfaceGraph,
    opts: &CliqueOptions,
) -> Result<HypersurfaceGraph> {
    if h.completed {
        return Ok(h.clone());
    }
    let p = &h.partition;
    let edge_index: HashMap<(VertexId, VertexId), usize> = h
        .provenance
        .iter()
        .enumerate()
        .filter_map(|(i, prov)| match prov {
            Provenance::MixedEdge(u, v) => Some(((*u, *v), i)),
            Provenance::Center(_) => None,
        })
        .collect();

    let full = CliqueOptions {
        max_dim: None,
        limit: opts.limit,
    };
    let (mixed, _) = mixed_simplices(p, &full)?;
    let cells: Vec<MixedSimplex> = mixed
        .into_iter()
        .filter(|m| m.plus >= 2 && m.minus >= 2)
        .collect();

    let base = h.graph.order();
    let center_index: HashMap<&[VertexId], usize> = cells
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clique.vertices(), base + i))
        .collect();

    let mut adj: Vec<Vec<VertexId>> = h
        .graph
        .vertices()
        .map(|v| h.graph.neighbors(v).to_vec())
        .collect();
    adj.resize(base + cells.len(), Vec::new());

    let mut subset = Vec::new();
    for (i, cell) in cells.iter().enumerate() {
        let c = base + i;
        let verts = cell.clique.vertices();
        for (a, &u) in verts.iter().enumerate() {
            for &v in &verts[a + 1..] {
                if p.signs[u] != p.signs[v] {
                    let e = edge_index[&(u, v)];
                    adj[c].push(e);
                    adj[e].push(c);
                }
            }
        }
        let m = verts.len();
        if m >= u64::BITS as usize {
            return Err(Error::InvalidParameter(format!(
                "mixed simplex with {m} vertices is too large to complete"
            )));
        }
        let full_mask = (1u64 << m) - 1;
        // proper subsets with at least four vertices
        for mask in 1..full_mask {
            if mask.count_ones() < 4 {
                continue;
            }
            subset.clear();
            subset.extend((0..m).filter(|b| mask >> b & 1 == 1).map(|b| verts[b]));
            let (s, t) = p.split(&subset);
            if s >= 2 && t >= 2 {
                let d = center_index[subset.as_slice()];
                adj[c].push(d);
                adj[d].push(c);
            }
        }
    }

    let mut provenance = h.provenance.clone();
    provenance.extend(cells.into_iter().map(Provenance::Center));
    Ok(HypersurfaceGraph {
        graph: SimpleGraph::from_adjacency(adj),
        provenance,
        partition: p.clone(),
        completed: true,
    })
}

/// `A_f(x)` (or its completion `B_f(x)`): the hypersurface of `S(x)` at the
/// level `f(x)`.
pub fn sphere_hypersurface(
    g: &SimpleGraph,
    f: &VertexFunction,
    x: VertexId,
    completed: bool,
) -> Result<HypersurfaceGraph> {
    let p = SignPartition::around_vertex(g, f, x)?;
    let a = hypersurface_graph(&p);
    if completed {
        complete_hypersurface(&a)
    } else {
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{generators::*, graph_product, is_geometric};
    use crate::graph::{euler_characteristic, f_vector, iso::are_isomorphic};

    fn split_complete(n: usize, s: usize) -> SignPartition {
        let signs = (0..n)
            .map(|v| if v < s { Sign::Plus } else { Sign::Minus })
            .collect();
        SignPartition::new(complete(n), signs).unwrap()
    }

    fn antipodal_octahedron() -> SignPartition {
        // vertices 0 and 1 form an antipodal pair
        let values = [1.0, 1.0, -1.0, -1.0, -1.0, -1.0];
        sign_partition(&octahedron(), &values, 0.0).unwrap()
    }

    #[test]
    fn partition_examples() {
        let p = antipodal_octahedron();
        assert_eq!((p.plus().len(), p.minus().len()), (2, 4));

        let all_pos = sign_partition(&octahedron(), &[1.0; 6], 0.0).unwrap();
        assert!(all_pos.minus().is_empty());
        assert!(hypersurface_graph(&all_pos).graph.is_empty());

        let p = split_complete(4, 2);
        assert_eq!(p.split(&[0, 1, 2, 3]), (2, 2));
    }

    #[test]
    fn degenerate_level_is_rejected() {
        let err = sign_partition(&complete(3), &[0.0, 1.0, 2.0], 1.0).unwrap_err();
        assert!(matches!(err, Error::DegenerateLevel { vertex: 1, .. }));
        assert!(sign_partition(&complete(3), &[0.0, 1.0], 0.5).is_err());
    }

    #[test]
    fn mixed_simplices_of_k4() {
        let (mixed, w) = mixed_simplices(&split_complete(4, 2), &CliqueOptions::default()).unwrap();
        assert_eq!(w.counts(), &[4, 4, 1]);
        assert_eq!(mixed.len(), 9);
        assert!(mixed.iter().all(|m| m.plus >= 1 && m.minus >= 1));
        assert_eq!(w.get(0), 0);
        assert_eq!(w.alternating_sum(), 1);
    }

    #[test]
    fn alternating_square() {
        let signs = vec![Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus];
        let p = SignPartition::new(cyclic(4).unwrap(), signs).unwrap();
        assert_eq!(w_vector(&p).counts(), &[4]);
        let p = SignPartition::new(cyclic(4).unwrap(), vec![Sign::Plus; 4]).unwrap();
        let (mixed, w) = mixed_simplices(&p, &CliqueOptions::default()).unwrap();
        assert!(mixed.is_empty() && w.counts().is_empty());
    }

    #[test]
    fn octahedron_antipodal_level_is_two_squares() {
        let h = hypersurface_graph(&antipodal_octahedron());
        assert_eq!(h.graph.order(), 8);
        assert_eq!(h.graph.component_count(), 2);
        assert!(h.graph.vertices().all(|v| h.graph.degree(v) == 2));
        assert!(is_geometric(&h.graph, 1).is_ok());
    }

    #[test]
    fn complete_graph_products() {
        let prism = hypersurface_graph(&split_complete(5, 2));
        assert!(are_isomorphic(
            &prism.graph,
            &graph_product(&complete(2), &complete(3))
        ));
        let k33 = hypersurface_graph(&split_complete(6, 3));
        assert_eq!((k33.graph.order(), k33.graph.size()), (9, 18));
        let k24 = hypersurface_graph(&split_complete(6, 2));
        assert_eq!(k24.graph.order(), 8);
    }

    #[test]
    fn completing_k4_gives_wheel() {
        let b = complete_hypersurface(&hypersurface_graph(&split_complete(4, 2))).unwrap();
        assert!(are_isomorphic(&b.graph, &wheel(4).unwrap()));
        assert_eq!(euler_characteristic(&b.graph), 1);
        assert_eq!(b.center_count(), 1);
    }

    #[test]
    fn completing_k5_gives_ten_vertex_ball() {
        let b = complete_hypersurface(&hypersurface_graph(&split_complete(5, 2))).unwrap();
        assert_eq!(b.graph.order(), 10);
        assert_eq!(f_vector(&b.graph).counts(), &[10, 30, 35, 14]);
        assert_eq!(euler_characteristic(&b.graph), 1);
    }

    #[test]
    fn completion_without_square_faces_changes_nothing() {
        let h = hypersurface_graph(&split_complete(5, 1));
        let b = complete_hypersurface(&h).unwrap();
        assert_eq!(b.graph, h.graph);
        assert!(are_isomorphic(&b.graph, &complete(4)));
    }

    #[test]
    fn completion_is_idempotent() {
        let b = complete_hypersurface(&hypersurface_graph(&split_complete(6, 3))).unwrap();
        let again = complete_hypersurface(&b).unwrap();
        assert_eq!(again.graph.order(), b.graph.order());
        assert_eq!(again, b);
    }

    #[test]
    fn completed_product_cells_are_balls() {
        for n in 2..=7 {
            for s in 1..n {
                let p = split_complete(n, s);
                let b = complete_hypersurface(&hypersurface_graph(&p)).unwrap();
                assert_eq!(euler_characteristic(&b.graph), 1, "n={n} s={s}");
                assert_eq!(w_vector(&p).alternating_sum(), 1);
            }
        }
    }

    #[test]
    fn sphere_level_in_k5() {
        // x = 0 has the lowest-but-two value among its neighbors' split 2/2
        let f = VertexFunction::from_ranks(vec![2, 0, 1, 3, 4]).unwrap();
        let b = sphere_hypersurface(&complete(5), &f, 0, true).unwrap();
        assert!(are_isomorphic(&b.graph, &wheel(4).unwrap()));
        let labels = b.labelled_provenance();
        assert!(labels.iter().any(|p| matches!(p,
            Provenance::Center(m) if m.clique.vertices() == [1, 2, 3, 4])));
    }

    #[test]
    fn local_minimum_has_empty_level() {
        let f = VertexFunction::from_ranks((0..12).collect()).unwrap();
        let b = sphere_hypersurface(&icosahedron(), &f, 0, true).unwrap();
        assert!(b.graph.is_empty());
        assert_eq!(euler_characteristic(&b.graph), 0);
    }
}
