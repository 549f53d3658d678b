//! Backtracking isomorphism test for small graphs.
//!
//! Vertices are matched in descending-degree order; each candidate image must
//! have the same degree and agree with every adjacency already fixed. Fast
//! enough for the product graphs and generated solids used in tests (up to a
//! few dozen vertices), not a general-purpose solver.

use super::{SimpleGraph, VertexId};

pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Returns `map` with `g.has_edge(u, v) == h.has_edge(map[u], map[v])`.
pub fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<VertexId>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    // Order g's vertices so each one (after the first of its component) has
    // an already-placed neighbor, which prunes early.
    let mut order = Vec::with_capacity(g.order());
    let mut placed = vec![false; g.order()];
    while order.len() < g.order() {
        let seed = g
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| g.degree(v))
            .expect("unplaced vertex remains");
        placed[seed] = true;
        order.push(seed);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            for &u in g.neighbors(v) {
                if !placed[u] {
                    placed[u] = true;
                    order.push(u);
                }
            }
            i += 1;
        }
    }
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    extend(g, h, &order, 0, &mut map, &mut used).then_some(map)
}

fn extend(
    g: &SimpleGraph,
    h: &SimpleGraph,
    order: &[VertexId],
    depth: usize,
    map: &mut [VertexId],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in h.vertices() {
        if used[w] || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
