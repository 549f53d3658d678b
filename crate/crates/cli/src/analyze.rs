use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use hopf_core::geometry::inductive_dimension;
use hopf_core::graph::f_vector;
use hopf_core::morse::{curvatures, index_report, VertexReport};
use hopf_core::rational;
use hopf_core::VertexFunction;

use crate::input::{read_values, seeded_function, GraphSource, InputError};
use crate::output::{emit, Envelope};
use crate::{Cli, Status};

#[derive(Args, Debug, Serialize)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Function file (JSON array, or object mapping vertex id to value).
    #[arg(long, value_name = "FILE", conflicts_with = "random_function")]
    pub function: Option<PathBuf>,

    /// Also report indices for a random function drawn from --seed.
    #[arg(long)]
    pub random_function: bool,
}

#[derive(Serialize)]
struct Analysis {
    vertices: usize,
    edges: usize,
    f_vector: Vec<u64>,
    euler_characteristic: i64,
    dimension: String,
    curvature: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    function: Option<FunctionAnalysis>,
}

#[derive(Serialize)]
struct FunctionAnalysis {
    ranks: Vec<usize>,
    index_sum: i64,
    symmetric_index_sum: String,
    vertices: Vec<VertexReport>,
}

pub fn run(cli: &Cli, args: &AnalyzeArgs) -> Result<Status, InputError> {
    let g = args.source.load(cli.seed)?;
    let f = match (&args.function, args.random_function) {
        (Some(path), _) => Some(VertexFunction::from_values(&read_values(path, g.order())?)?),
        (None, true) => Some(seeded_function(g.order(), cli.seed, 0)),
        (None, false) => None,
    };
    let fv = f_vector(&g);
    let function = match &f {
        Some(f) => {
            let report = index_report(&g, f)?;
            Some(FunctionAnalysis {
                ranks: f.ranks().to_vec(),
                index_sum: report.index_sum(),
                symmetric_index_sum: rational::to_string(&report.symmetric_index_sum()),
                vertices: report.vertices,
            })
        }
        None => None,
    };
    let analysis = Analysis {
        vertices: g.order(),
        edges: g.size(),
        f_vector: fv.counts().to_vec(),
        euler_characteristic: fv.euler_characteristic(),
        dimension: rational::to_string(&inductive_dimension(&g)),
        curvature: curvatures(&g).iter().map(rational::to_string).collect(),
        function,
    };
    let text = summary(&analysis);
    let json = Envelope::new(&cli.command, cli.seed, analysis).to_json();
    emit(cli.out.as_deref(), cli.json, &json, &text)?;
    Ok(Status::Pass)
}

fn summary(a: &Analysis) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertices   {}", a.vertices);
    let _ = writeln!(s, "edges      {}", a.edges);
    let _ = writeln!(s, "f-vector   {:?}", a.f_vector);
    let _ = writeln!(s, "chi        {}", a.euler_characteristic);
    let _ = writeln!(s, "dimension  {}", a.dimension);
    let _ = writeln!(s, "curvature");
    for (x, k) in a.curvature.iter().enumerate() {
        let _ = writeln!(s, "  {x:>4}  {k}");
    }
    if let Some(f) = &a.function {
        let _ = writeln!(s, "index sum  {}", f.index_sum);
        let _ = writeln!(s, "vertex  i_f  i_-f  j_f  chi(S)  chi(B)  W");
        for r in &f.vertices {
            let _ = writeln!(
                s,
                "  {:>4}  {:>3}  {:>4}  {:>3}  {:>6}  {:>6}  {:?}",
                r.vertex,
                r.index,
                r.reverse_index,
                rational::to_string(&r.symmetric_index),
                r.chi_sphere,
                r.chi_b,
                r.w.counts()
            );
        }
    }
    s
}
