//! Vertex functions, indices, curvature, and the verifiers tying them to the
//! Euler characteristic.

mod expectation;
mod function;
mod index;
pub mod verify;

pub use expectation::{
    index_expectation, index_expectation_exact, index_expectation_monte_carlo, Expectation,
    ExpectationMode, MonteCarloEstimate, DEFAULT_EXACT_DEGREE_BOUND,
};
pub use function::VertexFunction;
pub use index::{
    curvature, curvatures, index, index_formula_rhs, index_report, sub_level_sphere,
    symmetric_index, vertex_report, IndexReport, Side, VertexReport,
};

use crate::rational::{self, Rational};

pub(crate) fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational::to_string(r))
}
