use clap::{Args, ValueEnum};
use serde::Serialize;

use hopf_core::geometry::{pyramid_extension, stellate_cycles, suspension};
use hopf_core::graph::io::{to_dot, GraphJson};

use crate::input::{generate, InputError};
use crate::output::{write, Envelope};
use crate::{Cli, Status};

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Json,
    Dot,
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    /// Family and parameters: cyclic N, complete N, path N, cross-polytope D,
    /// wheel N, octahedron, icosahedron, dodecahedron, cube, er N P.
    #[arg(required = true, num_args = 1.., value_name = "FAMILY")]
    pub spec: Vec<String>,

    /// Cone every chordless cycle of length 4..=MAX_LEN.
    #[arg(long, value_name = "MAX_LEN")]
    pub stellate: Option<usize>,

    /// Suspend the graph N times (applied after --stellate).
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub suspend: usize,

    /// Add a cone point (applied last).
    #[arg(long)]
    pub pyramid: bool,

    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    pub format: GraphFormat,
}

#[derive(Serialize)]
struct GeneratedGraph<'a> {
    #[serde(flatten)]
    graph: GraphJson,
    meta: Envelope<'a, ()>,
}

pub fn run(cli: &Cli, args: &GenArgs) -> Result<Status, InputError> {
    let mut g = generate(&args.spec, cli.seed)?;
    if let Some(max_len) = args.stellate {
        g = stellate_cycles(&g, max_len)?;
    }
    for _ in 0..args.suspend {
        g = suspension(&g);
    }
    if args.pyramid {
        g = pyramid_extension(&g);
    }
    let text = match args.format {
        GraphFormat::Json => {
            let doc = GeneratedGraph {
                graph: GraphJson::from(&g),
                meta: Envelope::new(&cli.command, cli.seed, ()),
            };
            let mut s = serde_json::to_string(&doc).expect("graph serializes");
            s.push('\n');
            s
        }
        GraphFormat::Dot => to_dot(&g),
    };
    write(cli.out.as_deref(), &text)?;
    Ok(Status::Pass)
}
