use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;

use hopf_core::geometry::{inductive_dimension, is_geometric};
use hopf_core::morse::verify::{
    verify_gauss_bonnet, verify_index_expectation, verify_index_formula, verify_index_stability,
    verify_intermediate, verify_poincare_hopf, verify_transfer, verify_zero_curvature, Detail,
    Report,
};
use hopf_core::morse::DEFAULT_EXACT_DEGREE_BOUND;
use hopf_core::rational::is_integer;
use hopf_core::{SimpleGraph, VertexFunction};

use crate::input::{bail, read_values, seeded_function, GraphSource, InputError};
use crate::output::{emit, Envelope};
use crate::{Cli, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    GaussBonnet,
    PoincareHopf,
    IndexFormula,
    IndexExpectation,
    Transfer,
    Intermediate,
    IndexStability,
    ZeroCurvature,
    All,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: Check,

    #[command(flatten)]
    pub source: GraphSource,

    /// Check this function instead of --trials random ones.
    #[arg(long, value_name = "FILE")]
    pub function: Option<PathBuf>,

    /// Number of random functions drawn from --seed.
    #[arg(long, default_value_t = 10)]
    pub trials: u64,

    /// Monte-Carlo trials per vertex above the exact degree bound.
    #[arg(long, default_value_t = 100_000)]
    pub mc_trials: u64,

    /// Largest degree whose index expectation is computed exactly.
    #[arg(long, default_value_t = DEFAULT_EXACT_DEGREE_BOUND)]
    pub degree_bound: usize,

    /// Width of the Monte-Carlo acceptance band in standard errors.
    #[arg(long, default_value_t = 4.0)]
    pub z: f64,

    /// Dimension for zero-curvature (defaults to the inductive dimension).
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Serialize)]
struct CheckSummary {
    check: String,
    pass: bool,
    rows: usize,
}

#[derive(Serialize)]
struct VerifyOutput {
    check: String,
    pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CheckSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    skipped: Vec<String>,
    details: Vec<Detail>,
}

const ALL: [Check; 8] = [
    Check::GaussBonnet,
    Check::PoincareHopf,
    Check::IndexFormula,
    Check::IndexExpectation,
    Check::Transfer,
    Check::Intermediate,
    Check::IndexStability,
    Check::ZeroCurvature,
];

pub fn run(cli: &Cli, args: &VerifyArgs) -> Result<Status, InputError> {
    let g = args.source.load(cli.seed)?;
    let functions = match &args.function {
        Some(path) => vec![VertexFunction::from_values(&read_values(path, g.order())?)?],
        None => {
            if args.trials == 0 {
                bail!("--trials must be at least 1");
            }
            (0..args.trials)
                .map(|t| seeded_function(g.order(), cli.seed, t))
                .collect()
        }
    };
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    if args.check == Check::All {
        for check in ALL {
            // zero-curvature only makes sense on odd-dimensional geometric graphs
            if check == Check::ZeroCurvature && args.dim.is_none() && odd_geometric(&g).is_none() {
                skipped.push("zero-curvature: not an odd-dimensional geometric graph".to_string());
                continue;
            }
            reports.push(run_check(check, &g, &functions, cli.seed, args)?);
        }
    } else {
        reports.push(run_check(args.check, &g, &functions, cli.seed, args)?);
    }

    let output = combine(args.check, reports, skipped);
    let status = if output.pass { Status::Pass } else { Status::Fail };
    let text = summary(&output);
    let json = Envelope::new(&cli.command, cli.seed, output).to_json();
    emit(cli.out.as_deref(), cli.json, &json, &text)?;
    Ok(status)
}

fn odd_geometric(g: &SimpleGraph) -> Option<usize> {
    let d = inductive_dimension(g);
    if !is_integer(&d) || *d.numer() < 1 || *d.numer() % 2 == 0 {
        return None;
    }
    let d = *d.numer() as usize;
    is_geometric(g, d).ok().map(|_| d)
}

fn run_check(
    check: Check,
    g: &SimpleGraph,
    functions: &[VertexFunction],
    seed: u64,
    args: &VerifyArgs,
) -> Result<Report, InputError> {
    let per_function = |name: &str,
                        f: &dyn Fn(&VertexFunction) -> hopf_core::Result<Report>|
     -> Result<Report, InputError> {
        let mut report = Report::new(name);
        for (t, func) in functions.iter().enumerate() {
            report.absorb(f(func)?, Some(t as u64));
        }
        Ok(report)
    };
    let report = match check {
        Check::GaussBonnet => verify_gauss_bonnet(g),
        Check::Transfer => verify_transfer(g),
        Check::PoincareHopf => per_function("poincare-hopf", &|f| verify_poincare_hopf(g, f))?,
        Check::IndexFormula => per_function("index-formula", &|f| verify_index_formula(g, f))?,
        Check::Intermediate => per_function("intermediate", &|f| verify_intermediate(g, f))?,
        Check::IndexStability => {
            let first = &functions[0];
            per_function("index-stability", &|f| verify_index_stability(g, first, f))?
        }
        Check::IndexExpectation => {
            if args.mc_trials < 2 {
                bail!("--mc-trials must be at least 2");
            }
            verify_index_expectation(g, args.degree_bound, args.mc_trials, seed, args.z)?
        }
        Check::ZeroCurvature => {
            let d = match args.dim.or_else(|| odd_geometric(g)) {
                Some(d) => d,
                None => {
                    let dim = inductive_dimension(g);
                    let mut report = Report::new("zero-curvature");
                    report.push(
                        "odd-dimensional geometric graph",
                        None,
                        format!("inductive dimension {dim}"),
                        "odd d, d-geometric".into(),
                        false,
                    );
                    return Ok(report);
                }
            };
            verify_zero_curvature(g, d, functions)?
        }
        Check::All => unreachable!("expanded by the caller"),
    };
    Ok(report)
}

fn combine(check: Check, reports: Vec<Report>, skipped: Vec<String>) -> VerifyOutput {
    if check != Check::All {
        let report = reports.into_iter().next().expect("one report");
        return VerifyOutput {
            check: report.check,
            pass: report.pass,
            checks: Vec::new(),
            skipped,
            details: report.details,
        };
    }
    let mut output = VerifyOutput {
        check: "all".into(),
        pass: true,
        checks: Vec::new(),
        skipped,
        details: Vec::new(),
    };
    for report in reports {
        output.pass &= report.pass;
        output.checks.push(CheckSummary {
            check: report.check.clone(),
            pass: report.pass,
            rows: report.details.len(),
        });
        output.details.extend(report.details.into_iter().map(|mut d| {
            d.label = format!("{}: {}", report.check, d.label);
            d
        }));
    }
    output
}

const MAX_LISTED_FAILURES: usize = 20;

fn summary(output: &VerifyOutput) -> String {
    let mut s = String::new();
    let verdict = |pass: bool| if pass { "PASS" } else { "FAIL" };
    if output.checks.is_empty() {
        let _ = writeln!(
            s,
            "{} {} ({} rows)",
            verdict(output.pass),
            output.check,
            output.details.len()
        );
    } else {
        for c in &output.checks {
            let _ = writeln!(s, "{} {} ({} rows)", verdict(c.pass), c.check, c.rows);
        }
    }
    for note in &output.skipped {
        let _ = writeln!(s, "skipped {note}");
    }
    let failures: Vec<&Detail> = output.details.iter().filter(|d| !d.pass).collect();
    for d in failures.iter().take(MAX_LISTED_FAILURES) {
        let _ = write!(s, "  failed {}", d.label);
        if let Some(t) = d.trial {
            let _ = write!(s, " trial {t}");
        }
        if let Some(v) = d.vertex {
            let _ = write!(s, " vertex {v}");
        }
        let _ = writeln!(s, ": {} != {}", d.lhs, d.rhs);
    }
    if failures.len() > MAX_LISTED_FAILURES {
        let _ = writeln!(s, "  ... {} more", failures.len() - MAX_LISTED_FAILURES);
    }
    if !output.checks.is_empty() {
        let _ = writeln!(s, "{} all", verdict(output.pass));
    }
    s
}
