//! Fixture graphs shared by the criterion benchmarks.

use hopf_core::geometry::{generators, suspension};
use hopf_core::SimpleGraph;

/// Named inputs, small to moderately dense.
pub fn fixtures() -> Vec<(&'static str, SimpleGraph)> {
    vec![
        ("cross_polytope_5", generators::cross_polytope(5).expect("valid")),
        ("suspended_icosahedron", suspension(&generators::icosahedron())),
        ("er_25_0.6", generators::erdos_renyi(25, 0.6, 1).expect("valid")),
        ("er_60_0.3", generators::erdos_renyi(60, 0.3, 1).expect("valid")),
    ]
}
