//! `hopf hypersurface` and `hopf sphere`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Serialize;

use hopf_core::graph::{f_vector, io::GraphJson};
use hopf_core::hypersurface::{complete_hypersurface, hypersurface_graph, Provenance, SignPartition};
use hopf_core::{SimpleGraph, VertexFunction, VertexId};

use crate::input::{read_values, seeded_values, GraphSource, InputError};
use crate::output::{write, Envelope};
use crate::{Cli, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Args, Debug, Serialize)]
pub struct HypersurfaceArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Function file (JSON array, or object mapping vertex id to value).
    /// Without it a random function is drawn from --seed.
    #[arg(long, value_name = "FILE")]
    pub function: Option<PathBuf>,

    /// Level c of the hypersurface f = c.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub level: f64,

    /// Add the centers of mixed simplices with at least two vertices of
    /// each sign.
    #[arg(long)]
    pub complete: bool,

    /// Work in the unit sphere of this vertex at the level f(x) instead.
    #[arg(long, value_name = "X")]
    pub sphere: Option<VertexId>,

    /// Format of the main output; with --out a CSV summary is also written
    /// next to it.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum ProvenanceJson {
    MixedEdge {
        edge: [VertexId; 2],
    },
    Center {
        simplex: Vec<VertexId>,
        plus: usize,
        minus: usize,
    },
}

impl From<&Provenance> for ProvenanceJson {
    fn from(p: &Provenance) -> Self {
        match p {
            Provenance::MixedEdge(u, v) => Self::MixedEdge { edge: [*u, *v] },
            Provenance::Center(m) => Self::Center {
                simplex: m.clique.vertices().to_vec(),
                plus: m.plus,
                minus: m.minus,
            },
        }
    }
}

#[derive(Serialize)]
struct Summary {
    components: usize,
    euler_characteristic: i64,
    vertices: usize,
    edges: usize,
    centers: usize,
    f_vector: Vec<u64>,
}

impl Summary {
    fn of(g: &SimpleGraph, centers: usize) -> Self {
        let fv = f_vector(g);
        Self {
            components: g.component_count(),
            euler_characteristic: fv.euler_characteristic(),
            vertices: g.order(),
            edges: g.size(),
            centers,
            f_vector: fv.counts().to_vec(),
        }
    }

    fn to_csv(&self) -> String {
        let fv: Vec<String> = self.f_vector.iter().map(u64::to_string).collect();
        format!(
            "components,euler_characteristic,vertices,edges,centers,f_vector\n{},{},{},{},{},{}\n",
            self.components,
            self.euler_characteristic,
            self.vertices,
            self.edges,
            self.centers,
            fv.join(" ")
        )
    }
}

#[derive(Serialize)]
struct HypersurfaceJson {
    #[serde(flatten)]
    graph: GraphJson,
    provenance: Vec<ProvenanceJson>,
    level: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    sphere: Option<VertexId>,
    completed: bool,
    summary: Summary,
}

pub fn run(cli: &Cli, args: &HypersurfaceArgs) -> Result<Status, InputError> {
    let g = args.source.load(cli.seed)?;
    let values = match &args.function {
        Some(path) => read_values(path, g.order())?,
        None => seeded_values(g.order(), cli.seed),
    };
    let (partition, level) = match args.sphere {
        Some(x) => {
            let f = VertexFunction::from_values(&values)?;
            (SignPartition::around_vertex(&g, &f, x)?, values[x])
        }
        None => (SignPartition::at_level(g, &values, args.level)?, args.level),
    };
    if partition.plus().is_empty() || partition.minus().is_empty() {
        eprintln!("warning: f - c has one sign everywhere; the hypersurface is empty");
    }
    let mut h = hypersurface_graph(&partition);
    if args.complete {
        h = complete_hypersurface(&h)?;
    }
    let summary = Summary::of(&h.graph, h.center_count());
    let provenance = h.labelled_provenance();
    let csv = summary.to_csv();
    let main = match args.format {
        Format::Json => Envelope::new(
            &cli.command,
            cli.seed,
            HypersurfaceJson {
                graph: GraphJson::from(&h.graph),
                provenance: provenance.iter().map(ProvenanceJson::from).collect(),
                level,
                sphere: args.sphere,
                completed: h.is_completed(),
                summary,
            },
        )
        .to_json(),
        Format::Dot => provenance_dot(&h.graph, &provenance),
        Format::Csv => csv.clone(),
    };
    write(cli.out.as_deref(), &main)?;
    if let Some(path) = cli.out.as_deref() {
        if args.format != Format::Csv {
            write(Some(&csv_sibling(path)), &csv)?;
        }
    }
    Ok(Status::Pass)
}

fn csv_sibling(path: &Path) -> PathBuf {
    path.with_extension("csv")
}

/// Mixed-edge vertices are round and labelled `u-v`; centers are square and
/// labelled with their simplex.
fn provenance_dot(g: &SimpleGraph, provenance: &[Provenance]) -> String {
    let mut s = String::from("graph G {\n");
    for (v, p) in provenance.iter().enumerate() {
        let (label, shape) = match p {
            Provenance::MixedEdge(a, b) => (format!("{a}-{b}"), "circle"),
            Provenance::Center(m) => {
                let ids: Vec<String> = m.clique.vertices().iter().map(|v| v.to_string()).collect();
                (format!("{{{}}}", ids.join(",")), "square")
            }
        };
        let _ = writeln!(s, "  {v} [label=\"{label}\", shape={shape}];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[derive(Args, Debug, Serialize)]
pub struct SphereArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Center vertex.
    #[arg(long, short = 'x', value_name = "X")]
    pub vertex: VertexId,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Serialize)]
struct SphereJson {
    #[serde(flatten)]
    graph: GraphJson,
    center: VertexId,
    provenance: Vec<VertexId>,
    summary: Summary,
}

pub fn run_sphere(cli: &Cli, args: &SphereArgs) -> Result<Status, InputError> {
    let g = args.source.load(cli.seed)?;
    let sphere = g.unit_sphere(args.vertex)?;
    let summary = Summary::of(&sphere.graph, 0);
    let text = match args.format {
        Format::Json => Envelope::new(
            &cli.command,
            cli.seed,
            SphereJson {
                graph: GraphJson::from(&sphere.graph),
                center: args.vertex,
                provenance: sphere.provenance.clone(),
                summary,
            },
        )
        .to_json(),
        Format::Csv => summary.to_csv(),
        Format::Dot => {
            let mut s = String::from("graph G {\n");
            for (v, orig) in sphere.provenance.iter().enumerate() {
                let _ = writeln!(s, "  {v} [label=\"{orig}\"];");
            }
            for (u, v) in sphere.graph.edges() {
                let _ = writeln!(s, "  {u} -- {v};");
            }
            s.push_str("}\n");
            s
        }
    };
    write(cli.out.as_deref(), &text)?;
    Ok(Status::Pass)
}
