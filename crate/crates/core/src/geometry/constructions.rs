//! Cones, suspensions, products and cycle stellation.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexId};

/// Default cap for [`chordless_cycles`].
pub const DEFAULT_CYCLE_LIMIT: usize = 1_000_000;

/// Default longest cycle stellated by the CLI.
pub const DEFAULT_MAX_CYCLE_LEN: usize = 8;

fn with_apexes(g: &SimpleGraph, apexes: usize) -> SimpleGraph {
    let n = g.order();
    let mut adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    for a in 0..apexes {
        for list in adj.iter_mut().take(n) {
            list.push(n + a);
        }
    }
    for _ in 0..apexes {
        adj.push((0..n).collect());
    }
    SimpleGraph::from_adjacency(adj)
}

/// Cone over `g`: a new vertex `n` joined to every vertex.
pub fn pyramid_extension(g: &SimpleGraph) -> SimpleGraph {
    with_apexes(g, 1)
}

/// Two non-adjacent apexes `n` and `n + 1`, each joined to every vertex.
pub fn suspension(g: &SimpleGraph) -> SimpleGraph {
    with_apexes(g, 2)
}

/// Cartesian product; vertex `(v, w)` gets id `v * |H| + w`.
pub fn graph_product(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    let m = h.order();
    let id = |v: VertexId, w: VertexId| v * m + w;
    let mut adj = vec![Vec::new(); g.order() * m];
    for v in g.vertices() {
        for w in h.vertices() {
            let list = &mut adj[id(v, w)];
            list.extend(h.neighbors(w).iter().map(|&w2| id(v, w2)));
            list.extend(g.neighbors(v).iter().map(|&v2| id(v2, w)));
        }
    }
    SimpleGraph::from_adjacency(adj)
}

/// Induced cycles with length in `min_len..=max_len` (`min_len` is raised to
/// 4; triangles are cliques, not holes).
///
/// Each cycle is reported once, rotated to start at its smallest vertex and
/// oriented so the second vertex is smaller than the last.
pub fn chordless_cycles(
    g: &SimpleGraph,
    min_len: usize,
    max_len: usize,
    limit: usize,
) -> Result<Vec<Vec<VertexId>>> {
    let min_len = min_len.max(4);
    let mut found = Vec::new();
    if max_len < min_len {
        return Ok(found);
    }
    let mut on_path = vec![false; g.order()];
    for s in g.vertices() {
        on_path[s] = true;
        for &v1 in g.neighbors(s).iter().filter(|&&v| v > s) {
            on_path[v1] = true;
            let mut path = vec![s, v1];
            let mut search = CycleSearch {
                g,
                min_len,
                max_len,
                limit,
                on_path: &mut on_path,
                found: &mut found,
            };
            search.extend(&mut path)?;
            on_path[v1] = false;
        }
        on_path[s] = false;
    }
    Ok(found)
}

struct CycleSearch<'a> {
    g: &'a SimpleGraph,
    min_len: usize,
    max_len: usize,
    limit: usize,
    on_path: &'a mut [bool],
    found: &'a mut Vec<Vec<VertexId>>,
}

impl CycleSearch<'_> {
    /// `path` is induced and starts at its minimum vertex.
    fn extend(&mut self, path: &mut Vec<VertexId>) -> Result<()> {
        let s = path[0];
        let last = *path.last().expect("path is non-empty");
        let interior = &path[1..path.len() - 1];
        let next: Vec<VertexId> = self
            .g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&w| w > s && !self.on_path[w])
            .filter(|&w| interior.iter().all(|&u| !self.g.has_edge(u, w)))
            .collect();
        for w in next {
            let len = path.len() + 1;
            if self.g.has_edge(w, s) {
                if len >= self.min_len && path[1] < w {
                    if self.found.len() >= self.limit {
                        return Err(Error::CycleLimit { limit: self.limit });
                    }
                    let mut cycle = path.clone();
                    cycle.push(w);
                    self.found.push(cycle);
                }
            } else if len < self.max_len {
                self.on_path[w] = true;
                path.push(w);
                self.extend(path)?;
                path.pop();
                self.on_path[w] = false;
            }
        }
        Ok(())
    }
}

/// Cones every chordless cycle of length `4..=max_len` with its own center
/// vertex; original vertices and edges are kept, centers are appended in the
/// order the cycles are found.
pub fn stellate_cycles(g: &SimpleGraph, max_len: usize) -> Result<SimpleGraph> {
    stellate_cycles_with_limit(g, max_len, DEFAULT_CYCLE_LIMIT)
}

pub fn stellate_cycles_with_limit(
    g: &SimpleGraph,
    max_len: usize,
    limit: usize,
) -> Result<SimpleGraph> {
    let cycles = chordless_cycles(g, 4, max_len, limit)?;
    let mut adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    for cycle in cycles {
        let center = adj.len();
        for &v in &cycle {
            adj[v].push(center);
        }
        adj.push(cycle);
    }
    Ok(SimpleGraph::from_adjacency(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::generators::{self, complete, cyclic};
    use crate::graph::{euler_characteristic, f_vector, iso::are_isomorphic};

    #[test]
    fn pyramid_examples() {
        assert!(are_isomorphic(
            &pyramid_extension(&cyclic(4).unwrap()),
            &generators::wheel(4).unwrap()
        ));
        for n in 1..7 {
            assert_eq!(pyramid_extension(&complete(n)), complete(n + 1));
        }
        let cone = pyramid_extension(&generators::icosahedron());
        assert_eq!((cone.order(), cone.size()), (13, 42));
        assert_eq!(euler_characteristic(&cone), 1);
    }

    #[test]
    fn suspension_examples() {
        let c4 = suspension(&SimpleGraph::empty(2));
        assert!(are_isomorphic(&c4, &cyclic(4).unwrap()));
        let s = suspension(&generators::octahedron());
        assert!(are_isomorphic(&s, &generators::cross_polytope(3).unwrap()));
        assert!(!s.has_edge(6, 7));
    }

    #[test]
    fn product_examples() {
        let prism = graph_product(&complete(2), &complete(3));
        assert_eq!((prism.order(), prism.size()), (6, 9));
        assert!(are_isomorphic(
            &graph_product(&complete(2), &complete(2)),
            &cyclic(4).unwrap()
        ));
        let grid = graph_product(&cyclic(4).unwrap(), &cyclic(4).unwrap());
        assert_eq!((grid.order(), grid.size()), (16, 32));
        assert_eq!(euler_characteristic(&grid), -16);
    }

    #[test]
    fn chordless_cycles_of_solids() {
        let cube = generators::cube();
        assert_eq!(chordless_cycles(&cube, 4, 4, 100).unwrap().len(), 6);
        // removing an antipodal pair leaves an induced 6-cycle
        assert_eq!(chordless_cycles(&cube, 6, 6, 100).unwrap().len(), 4);
        let dod = generators::dodecahedron();
        let pentagons = chordless_cycles(&dod, 4, 5, 100).unwrap();
        assert_eq!(pentagons.len(), 12);
        assert!(pentagons.iter().all(|c| c.len() == 5));
        assert!(chordless_cycles(&complete(5), 4, 8, 100).unwrap().is_empty());
        assert!(matches!(
            chordless_cycles(&cube, 4, 4, 5),
            Err(Error::CycleLimit { limit: 5 })
        ));
    }

    #[test]
    fn stellation_examples() {
        let w4 = stellate_cycles(&cyclic(4).unwrap(), 4).unwrap();
        assert!(are_isomorphic(&w4, &generators::wheel(4).unwrap()));

        let cube = stellate_cycles(&generators::cube(), 4).unwrap();
        assert_eq!(f_vector(&cube).counts(), &[14, 36, 24]);

        let dod = stellate_cycles(&generators::dodecahedron(), 5).unwrap();
        assert_eq!(f_vector(&dod).counts(), &[32, 90, 60]);
        assert_eq!(euler_characteristic(&dod), 2);
    }
}
