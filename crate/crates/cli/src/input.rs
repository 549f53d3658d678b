//! Graph and function sources shared by the subcommands.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use serde::Serialize;
use serde_json::Value;

use hopf_core::geometry::generators;
use hopf_core::graph::io;
use hopf_core::{SimpleGraph, VertexFunction};

/// Bad input of any kind; the process exits with status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<hopf_core::Error> for InputError {
    fn from(e: hopf_core::Error) -> Self {
        Self(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        Self(e.to_string())
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        Self(format!("invalid JSON: {e}"))
    }
}

macro_rules! bail {
    ($($arg:tt)*) => {
        return Err(InputError(format!($($arg)*)))
    };
}
pub(crate) use bail;

#[derive(Args, Debug, Serialize)]
pub struct GraphSource {
    /// Graph JSON file (`{"n": .., "edges": [[u, v], ..]}`).
    #[arg(long, value_name = "FILE", conflicts_with = "gen", required_unless_present = "gen")]
    pub graph: Option<PathBuf>,

    /// Generate the input instead: a family name and its parameters, as for
    /// `hopf gen`.
    #[arg(long, value_name = "FAMILY", num_args = 1..)]
    pub gen: Option<Vec<String>>,
}

impl GraphSource {
    pub fn load(&self, seed: u64) -> Result<SimpleGraph, InputError> {
        match (&self.graph, &self.gen) {
            (Some(path), _) => read_graph(path),
            (None, Some(spec)) => generate(spec, seed),
            (None, None) => bail!("either --graph or --gen is required"),
        }
    }
}

pub fn read_graph(path: &Path) -> Result<SimpleGraph, InputError> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    io::from_json(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Builds a graph from `[family, params..]`. The `er` family draws its edges
/// from `seed`.
pub fn generate(spec: &[String], seed: u64) -> Result<SimpleGraph, InputError> {
    let Some((family, params)) = spec.split_first() else {
        bail!("missing generator family");
    };
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(InputError(format!(
                "{family} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let int = |i: usize| {
        params[i]
            .parse::<usize>()
            .map_err(|_| InputError(format!("{family}: '{}' is not a count", params[i])))
    };
    let g = match family.as_str() {
        "cyclic" => {
            arity(1)?;
            generators::cyclic(int(0)?)?
        }
        "complete" => {
            arity(1)?;
            generators::complete(int(0)?)
        }
        "path" => {
            arity(1)?;
            generators::path(int(0)?)?
        }
        "cross-polytope" => {
            arity(1)?;
            generators::cross_polytope(int(0)?)?
        }
        "wheel" => {
            arity(1)?;
            generators::wheel(int(0)?)?
        }
        "octahedron" => {
            arity(0)?;
            generators::octahedron()
        }
        "icosahedron" => {
            arity(0)?;
            generators::icosahedron()
        }
        "dodecahedron" => {
            arity(0)?;
            generators::dodecahedron()
        }
        "cube" => {
            arity(0)?;
            generators::cube()
        }
        "er" | "erdos-renyi" => {
            arity(2)?;
            let p: f64 = params[1]
                .parse()
                .map_err(|_| InputError(format!("{family}: '{}' is not a probability", params[1])))?;
            generators::erdos_renyi(int(0)?, p, seed)?
        }
        other => bail!(
            "unknown family '{other}' (expected cyclic, complete, path, cross-polytope, wheel, \
             octahedron, icosahedron, dodecahedron, cube, er)"
        ),
    };
    Ok(g)
}

/// Random function number `trial` under `seed`. Stream 0 is left to the
/// graph generators so a generated graph and its functions stay independent.
pub fn seeded_function(n: usize, seed: u64, trial: u64) -> VertexFunction {
    VertexFunction::seeded(n, seed, trial + 1)
}

/// Values of a seeded function: ranks shifted so that level 0 splits the
/// vertices in half and never hits a value.
pub fn seeded_values(n: usize, seed: u64) -> Vec<f64> {
    let half = (n / 2) as f64;
    seeded_function(n, seed, 0)
        .ranks()
        .iter()
        .map(|&r| r as f64 - half + 0.5)
        .collect()
}

/// Reads a function file: either a JSON array of `n` numbers or an object
/// mapping every vertex id to a number.
pub fn read_values(path: &Path, n: usize) -> Result<Vec<f64>, InputError> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)?;
    let number = |v: &Value, at: &str| {
        v.as_f64()
            .filter(|x| x.is_finite())
            .ok_or_else(|| InputError(format!("function value at {at} is not a finite number")))
    };
    match value {
        Value::Array(items) => {
            if items.len() != n {
                bail!("function has {} values for {n} vertices", items.len());
            }
            items
                .iter()
                .enumerate()
                .map(|(i, v)| number(v, &i.to_string()))
                .collect()
        }
        Value::Object(map) => {
            let mut values = vec![None; n];
            for (key, v) in &map {
                let id: usize = key
                    .parse()
                    .map_err(|_| InputError(format!("function key '{key}' is not a vertex id")))?;
                if id >= n {
                    bail!("function key {id} is out of range for {n} vertices");
                }
                values[id] = Some(number(v, key)?);
            }
            values
                .into_iter()
                .enumerate()
                .map(|(i, v)| v.ok_or_else(|| InputError(format!("function has no value for vertex {i}"))))
                .collect()
        }
        _ => bail!("function file must hold an array or an object"),
    }
}
