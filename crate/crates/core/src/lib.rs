//! Discrete curvature, Poincaré–Hopf indices and hypersurface graphs on
//! finite simple graphs, computed with exact arithmetic.
//!
//! - [`graph`]: immutable simple graphs, induced subgraphs, unit spheres,
//!   clique enumeration, f-vectors and Euler characteristic.
//! - [`geometry`]: inductive dimension, geometric-graph recognition, cones,
//!   suspensions, products, cycle stellation and generators.
//! - [`hypersurface`]: sign partitions, mixed simplices, the hypersurface
//!   graph of a level and its completion.
//! - [`morse`]: vertex functions, indices, curvature, index expectation and
//!   verifiers of the global identities.
//!
//! ```
//! use hopf_core::geometry::generators::icosahedron;
//! use hopf_core::morse::{curvature, VertexFunction, verify::verify_index_formula};
//! use hopf_core::rational::frac;
//!
//! let g = icosahedron();
//! assert_eq!(curvature(&g, 0).unwrap(), frac(1, 6));
//! let f = VertexFunction::seeded(g.order(), 42, 0);
//! assert!(verify_index_formula(&g, &f).unwrap().pass);
//! ```

pub mod error;
pub mod geometry;
pub mod graph;
pub mod hypersurface;
pub mod morse;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{Clique, FVector, SimpleGraph, Subgraph, VertexId};
pub use hypersurface::{HypersurfaceGraph, SignPartition, WVector};
pub use morse::{IndexReport, VertexFunction};
pub use rational::Rational;
