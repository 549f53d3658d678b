use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::input::InputError;
use crate::Command;

/// Wraps every JSON report so that it can be reproduced: the tool version,
/// the parsed subcommand and the master seed.
#[derive(Serialize)]
pub struct Envelope<'a, T> {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: &'a Command,
    pub seed: u64,
    #[serde(flatten)]
    pub body: T,
}

impl<'a, T: Serialize> Envelope<'a, T> {
    pub fn new(config: &'a Command, seed: u64, body: T) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            config,
            seed,
            body,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Writes `text` to `path`, or to stdout when there is no path.
pub fn write(path: Option<&Path>, text: &str) -> Result<(), InputError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// Reports go to `--out` as JSON; stdout gets JSON with `--json` and the
/// plain-text summary otherwise.
pub fn emit(
    out: Option<&Path>,
    json_flag: bool,
    json: &str,
    text: &str,
) -> Result<(), InputError> {
    if let Some(path) = out {
        write(Some(path), json)?;
    }
    if json_flag {
        if out.is_none() {
            write(None, json)?;
        }
    } else {
        write(None, text)?;
    }
    Ok(())
}
