//! Test corpus and independent oracles shared by the integration targets.
#![allow(dead_code)]

use hopf_core::geometry::{generators, graph_product, stellate_cycles, suspension};
use hopf_core::{SimpleGraph, VertexId};

/// The named generator graphs.
pub fn generator_graphs() -> Vec<(String, SimpleGraph)> {
    let ico = generators::icosahedron();
    let mut out = vec![
        ("cyclic(7)".to_string(), generators::cyclic(7).unwrap()),
        ("complete(6)".into(), generators::complete(6)),
        ("path(5)".into(), generators::path(5).unwrap()),
        ("octahedron".into(), generators::octahedron()),
        ("icosahedron".into(), ico.clone()),
        ("dodecahedron".into(), generators::dodecahedron()),
        ("cube".into(), generators::cube()),
        ("wheel(5)".into(), generators::wheel(5).unwrap()),
        ("suspension(icosahedron)".into(), suspension(&ico)),
        ("stellated cube".into(), stellate_cycles(&generators::cube(), 4).unwrap()),
        (
            "stellated dodecahedron".into(),
            stellate_cycles(&generators::dodecahedron(), 5).unwrap(),
        ),
        (
            "K2 x K3".into(),
            graph_product(&generators::complete(2), &generators::complete(3)),
        ),
        (
            "C4 x C4".into(),
            graph_product(&generators::cyclic(4).unwrap(), &generators::cyclic(4).unwrap()),
        ),
    ];
    for d in 1..=5 {
        out.push((
            format!("cross_polytope({d})"),
            generators::cross_polytope(d).unwrap(),
        ));
    }
    out
}

/// `count` Erdős–Rényi graphs with `n` cycling through `5..=25` and `p`
/// through `{0.2, 0.4, 0.6}`; graph `i` uses seed `i`.
pub fn random_graphs(count: usize) -> Vec<(String, SimpleGraph)> {
    const PS: [f64; 3] = [0.2, 0.4, 0.6];
    (0..count)
        .map(|i| {
            let n = 5 + (i * 7) % 21;
            let p = PS[i % 3];
            (
                format!("er({n}, {p}, seed {i})"),
                generators::erdos_renyi(n, p, i as u64).unwrap(),
            )
        })
        .collect()
}

/// Euler characteristic by testing every vertex subset for completeness.
pub fn exhaustive_euler(g: &SimpleGraph) -> i64 {
    let n = g.order();
    assert!(n <= 16, "exhaustive oracle is for small graphs");
    let mut chi = 0i64;
    for mask in 1u32..(1u32 << n) {
        let verts: Vec<VertexId> = (0..n).filter(|b| mask >> b & 1 == 1).collect();
        let complete = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if complete {
            chi += if verts.len() % 2 == 1 { 1 } else { -1 };
        }
    }
    chi
}

/// Clique counts by size, by testing every vertex subset.
pub fn exhaustive_f_vector(g: &SimpleGraph) -> Vec<u64> {
    let n = g.order();
    let mut counts = vec![0u64; n];
    for mask in 1u32..(1u32 << n) {
        let verts: Vec<VertexId> = (0..n).filter(|b| mask >> b & 1 == 1).collect();
        let complete = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if complete {
            counts[verts.len() - 1] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Average of `i_f(x)` over all `(deg + 1)!` orders of the closed
/// neighborhood, as `(numerator, denominator)`.
pub fn full_enumeration_expectation(g: &SimpleGraph, x: VertexId) -> (i64, i64) {
    let nbrs = g.neighbors(x).to_vec();
    let d = nbrs.len();
    assert!(d <= 7, "full enumeration is for small degrees");
    let mut items: Vec<usize> = (0..=d).collect();
    let (mut total, mut count) = (0i64, 0i64);
    permutations(&mut items, 0, &mut |order| {
        let below: Vec<VertexId> = order
            .iter()
            .take_while(|&&v| v != d)
            .map(|&v| nbrs[v])
            .collect();
        let sub = g.induced_subgraph(&below).graph;
        total += 1 - exhaustive_euler(&sub);
        count += 1;
    });
    (total, count)
}

/// Brute-force isomorphism by trying every bijection; `n <= 9`.
pub fn brute_force_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    assert!(g.order() <= 9);
    let mut items: Vec<usize> = (0..g.order()).collect();
    let mut found = false;
    permutations(&mut items, 0, &mut |map| {
        if !found && g.edges().all(|(u, v)| h.has_edge(map[u], map[v])) {
            found = true;
        }
    });
    found
}
