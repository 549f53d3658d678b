//! Executable checks of the global identities.
//!
//! Every check returns a [`Report`] whose rows hold both sides of an exact
//! equality. A mismatch marks the row and the report as failed; checks never
//! stop at the first failure.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    curvature, index, index_expectation_exact, index_expectation_monte_carlo, index_formula_rhs,
    vertex_report, VertexFunction,
};
use crate::error::{Error, Result};
use crate::geometry::is_geometric;
use crate::graph::{clique_degrees, f_vector, SimpleGraph, VertexId};
use crate::hypersurface::{w_vector, SignPartition};
use crate::rational::{self, int, Rational};

/// One compared pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Detail {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
    pub vertex: Option<VertexId>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub pass: bool,
    pub details: Vec<Detail>,
}

impl Report {
    pub fn new(check: &str) -> Self {
        Self {
            check: check.to_string(),
            pass: true,
            details: Vec::new(),
        }
    }

    /// Records `lhs == rhs`.
    pub fn compare<T: PartialEq + ToReportString>(
        &mut self,
        label: &str,
        vertex: Option<VertexId>,
        lhs: T,
        rhs: T,
    ) -> bool {
        let ok = lhs == rhs;
        self.push(label, vertex, lhs.to_report_string(), rhs.to_report_string(), ok);
        ok
    }

    pub fn push(&mut self, label: &str, vertex: Option<VertexId>, lhs: String, rhs: String, ok: bool) {
        self.pass &= ok;
        self.details.push(Detail {
            label: label.to_string(),
            trial: None,
            vertex,
            lhs,
            rhs,
            pass: ok,
        });
    }

    /// Appends another report's rows, tagged with a trial number.
    pub fn absorb(&mut self, other: Report, trial: Option<u64>) {
        self.pass &= other.pass;
        self.details.extend(other.details.into_iter().map(|mut d| {
            d.trial = d.trial.or(trial);
            d
        }));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| !d.pass)
    }
}

/// How report values are rendered: integers plainly, rationals as `p/q`.
pub trait ToReportString {
    fn to_report_string(&self) -> String;
}

impl ToReportString for i64 {
    fn to_report_string(&self) -> String {
        self.to_string()
    }
}

impl ToReportString for u64 {
    fn to_report_string(&self) -> String {
        self.to_string()
    }
}

impl ToReportString for Rational {
    fn to_report_string(&self) -> String {
        rational::to_string(self)
    }
}

/// `sum_x K(x) = chi(G)`.
pub fn verify_gauss_bonnet(g: &SimpleGraph) -> Report {
    let mut report = Report::new("gauss-bonnet");
    let total = super::curvatures(g)
        .iter()
        .fold(Rational::zero(), |acc, k| acc + k);
    report.compare("sum K(x) = chi(G)", None, total, int(f_vector(g).euler_characteristic()));
    report
}

/// `sum_x i_f(x) = chi(G)`.
pub fn verify_poincare_hopf(g: &SimpleGraph, f: &VertexFunction) -> Result<Report> {
    f.check_len(g.order())?;
    let mut report = Report::new("poincare-hopf");
    let indices = g
        .vertices()
        .into_par_iter()
        .map(|x| index(g, f, x))
        .collect::<Result<Vec<_>>>()?;
    report.compare(
        "sum i_f(x) = chi(G)",
        None,
        indices.iter().sum::<i64>(),
        f_vector(g).euler_characteristic(),
    );
    Ok(report)
}

/// At every vertex: `j_f(x) = (2 - chi(S(x)) - chi(B_f(x))) / 2`, and the
/// counting identity `chi(B_f(x)) = W_1(x) - W_2(x) + ...`.
pub fn verify_index_formula(g: &SimpleGraph, f: &VertexFunction) -> Result<Report> {
    f.check_len(g.order())?;
    let rows = g
        .vertices()
        .into_par_iter()
        .map(|x| vertex_report(g, f, x))
        .collect::<Result<Vec<_>>>()?;
    let mut report = Report::new("index-formula");
    for r in rows {
        report.compare(
            "j_f(x) = (2 - chi(S(x)) - chi(B_f(x)))/2",
            Some(r.vertex),
            r.symmetric_index,
            index_formula_rhs(r.chi_sphere, r.chi_b),
        );
        report.compare(
            "chi(B_f(x)) = W_1 - W_2 + ...",
            Some(r.vertex),
            r.chi_b,
            r.w.alternating_sum(),
        );
    }
    Ok(report)
}

/// `sum_x V_{k-1}(x) = (k + 1) v_k` for `k = 0 ..= clique number`.
pub fn verify_transfer(g: &SimpleGraph) -> Report {
    let mut report = Report::new("transfer");
    let fv = f_vector(g);
    let degrees: Vec<_> = g
        .vertices()
        .into_par_iter()
        .map(|x| clique_degrees(g, x).expect("vertex in range"))
        .collect();
    for k in 0..=fv.len() {
        let lhs: u64 = if k == 0 {
            g.order() as u64
        } else {
            degrees.iter().map(|d| d.get(k - 1)).sum()
        };
        report.compare(
            &format!("sum V_{}(x) = {} v_{k}", k as i64 - 1, k + 1),
            None,
            lhs,
            (k as u64 + 1) * fv.get(k),
        );
    }
    report
}

/// `sum_x W_k(x) = k v_{k+1}` for `k = 1 ..= clique number`.
pub fn verify_intermediate(g: &SimpleGraph, f: &VertexFunction) -> Result<Report> {
    f.check_len(g.order())?;
    let mut report = Report::new("intermediate");
    let fv = f_vector(g);
    let ws = g
        .vertices()
        .into_par_iter()
        .map(|x| SignPartition::around_vertex(g, f, x).map(|p| w_vector(&p)))
        .collect::<Result<Vec<_>>>()?;
    for k in 1..=fv.len().max(1) {
        report.compare(
            &format!("sum W_{k}(x) = {k} v_{}", k + 1),
            None,
            ws.iter().map(|w| w.get(k)).sum::<u64>(),
            k as u64 * fv.get(k + 1),
        );
    }
    Ok(report)
}

/// `sum_x i_f(x) = sum_x i_g(x)`.
pub fn verify_index_stability(
    g: &SimpleGraph,
    f: &VertexFunction,
    h: &VertexFunction,
) -> Result<Report> {
    f.check_len(g.order())?;
    h.check_len(g.order())?;
    let mut report = Report::new("index-stability");
    let sum = |func: &VertexFunction| -> Result<i64> {
        g.vertices().map(|x| index(g, func, x)).sum()
    };
    report.compare("sum i_f(x) = sum i_g(x)", None, sum(f)?, sum(h)?);
    Ok(report)
}

/// Exact expectation where the degree allows, otherwise a Monte-Carlo
/// estimate required to lie within `z` standard errors of `K(x)`.
pub fn verify_index_expectation(
    g: &SimpleGraph,
    degree_bound: usize,
    mc_trials: u64,
    seed: u64,
    z: f64,
) -> Result<Report> {
    let rows = g
        .vertices()
        .into_par_iter()
        .map(|x| -> Result<(VertexId, String, String, bool, &'static str)> {
            let k = curvature(g, x)?;
            match index_expectation_exact(g, x, degree_bound) {
                Ok(e) => Ok((
                    x,
                    rational::to_string(&e),
                    rational::to_string(&k),
                    e == k,
                    "E[i_f(x)] = K(x)",
                )),
                Err(Error::DegreeTooLarge { .. }) => {
                    let est = index_expectation_monte_carlo(g, x, mc_trials, seed ^ x as u64)?;
                    let target = *k.numer() as f64 / *k.denom() as f64;
                    Ok((
                        x,
                        format!("{:.6} ± {:.6}", est.mean, est.std_error),
                        rational::to_string(&k),
                        est.within(target, z),
                        "MC E[i_f(x)] ~ K(x)",
                    ))
                }
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = Report::new("index-expectation");
    for (x, lhs, rhs, ok, label) in rows {
        report.push(label, Some(x), lhs, rhs, ok);
    }
    Ok(report)
}

/// For a certified odd-dimensional geometric graph: `K = 0` everywhere,
/// `chi(G) = 0`, and `j_f = 0` at every vertex for each supplied function.
/// A failed precondition is reported as a failed row.
pub fn verify_zero_curvature(
    g: &SimpleGraph,
    d: usize,
    functions: &[VertexFunction],
) -> Result<Report> {
    let mut report = Report::new("zero-curvature");
    if d.is_multiple_of(2) {
        report.push("dimension is odd", None, d.to_string(), "odd".into(), false);
        return Ok(report);
    }
    if let Err(why) = is_geometric(g, d) {
        report.push("is geometric", None, why.to_string(), format!("{d}-geometric"), false);
        return Ok(report);
    }
    for f in functions {
        f.check_len(g.order())?;
    }
    for (x, k) in super::curvatures(g).into_iter().enumerate() {
        report.compare("K(x) = 0", Some(x), k, int(0));
    }
    report.compare("chi(G) = 0", None, f_vector(g).euler_characteristic(), 0);
    for (t, f) in functions.iter().enumerate() {
        let mut trial = Report::new("zero-curvature");
        let rows = g
            .vertices()
            .into_par_iter()
            .map(|x| vertex_report(g, f, x))
            .collect::<Result<Vec<_>>>()?;
        for r in &rows {
            trial.compare("j_f(x) = 0", Some(r.vertex), r.symmetric_index, int(0));
        }
        let w_total: i64 = rows.iter().map(|r| r.w.alternating_sum()).sum();
        trial.compare("sum_x sum_k (-1)^(k+1) W_k(x) = 0", None, w_total, 0);
        report.absorb(trial, Some(t as u64));
    }
    Ok(report)
}
