use std::io::Read;

use anyhow::{bail, Context};
use lgz_core::loosegraph::{generate, parse_with, Family, LooseGraph, ParseOptions};

use crate::{Common, Failure};

/// Reads the graph named by `INPUT`: a path, `-` for stdin, or
/// `gen:FAMILY[:ARG...]`.
pub fn load(c: &Common) -> Result<LooseGraph, Failure> {
    if let Some(generator) = c.input.strip_prefix("gen:") {
        return from_generator(generator).map_err(Failure::Usage);
    }
    let text = if c.input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")
            .map_err(Failure::Usage)?;
        s
    } else {
        std::fs::read_to_string(&c.input)
            .with_context(|| format!("reading {}", c.input))
            .map_err(Failure::Usage)?
    };
    parse_with(&text, ParseOptions { strict: c.strict })
        .with_context(|| format!("parsing {}", if c.input == "-" { "stdin" } else { &c.input }))
        .map_err(Failure::Usage)
}

fn from_generator(text: &str) -> anyhow::Result<LooseGraph> {
    let mut parts = text.split(':');
    let name = parts.next().unwrap_or_default();
    let mut params = Vec::new();
    for p in parts {
        match p.parse::<usize>() {
            Ok(v) => params.push(v),
            Err(_) => bail!("generator parameter {p:?} is not a non-negative integer"),
        }
    }
    Ok(generate(Family::from_name(name, &params)?)?)
}
