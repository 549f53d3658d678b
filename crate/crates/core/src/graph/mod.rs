//! Immutable simple graphs, derived subgraphs and clique counting.

mod clique;
pub mod io;
pub mod iso;

pub use clique::{
    clique_degrees, enumerate_cliques, euler_characteristic, f_vector, for_each_clique, Clique,
    CliqueOptions, FVector, DEFAULT_CLIQUE_LIMIT,
};

use crate::error::{Error, Result};

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Finite undirected graph without loops or multi-edges.
///
/// Neighbor lists are sorted and symmetric. Graphs never change after
/// construction, so they can be shared freely across threads.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<VertexId>>,
}

/// A graph derived from a host graph together with the map from its vertex
/// ids back to the host's ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: SimpleGraph,
    /// `provenance[new] == old`.
    pub provenance: Vec<VertexId>,
}

impl SimpleGraph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Sorts and dedups the lists. Callers guarantee symmetry and no loops.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<VertexId>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let g = Self { adj };
        debug_assert!(g.is_well_formed());
        g
    }

    /// Symmetry and irreflexivity of the adjacency lists.
    pub fn is_well_formed(&self) -> bool {
        self.adj.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&u| u != v && u < self.order() && self.adj[u].binary_search(&v).is_ok())
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Subgraph induced on `vertices`; new ids follow the sorted order of the
    /// set. Ids outside the graph are ignored.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Subgraph {
        let mut keep: Vec<VertexId> = vertices
            .iter()
            .copied()
            .filter(|&v| v < self.order())
            .collect();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (new_id[u] != usize::MAX).then_some(new_id[u]))
                    .collect()
            })
            .collect();
        Subgraph {
            graph: Self { adj },
            provenance: keep,
        }
    }

    /// The unit sphere S(x): the subgraph induced on the neighbors of `x`.
    pub fn unit_sphere(&self, x: VertexId) -> Result<Subgraph> {
        self.check_vertex(x)?;
        Ok(self.induced_subgraph(&self.adj[x]))
    }

    /// Number of connected components. The empty graph has none.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut stack = Vec::new();
        let mut count = 0;
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }
}
