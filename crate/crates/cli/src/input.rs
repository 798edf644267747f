//! Graph input: a family string, a graph6 string, a file, or stdin. File and
//! stdin contents may be graph6 or an edge list.

use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use spex_core::family::parse_family;
use spex_core::{graph6, Graph};

/// Graph6 bytes lie in `?..~`, so a leading digit means an edge list.
fn parse_text(text: &str) -> Result<Graph> {
    let first = text.trim_start();
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        Ok(Graph::parse_edge_list(text)?)
    } else {
        let line = first.lines().next().unwrap_or("");
        Ok(graph6::decode(line)?)
    }
}

pub fn load(arg: Option<&str>) -> Result<Graph> {
    match arg {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
            parse_text(&text).context("parsing graph from stdin")
        }
        Some(s) if Path::new(s).is_file() => {
            let text = std::fs::read_to_string(s).with_context(|| format!("reading {s}"))?;
            parse_text(&text).with_context(|| format!("parsing {s}"))
        }
        Some(s) => match parse_family(s) {
            Ok(g) => Ok(g),
            Err(family_err) => graph6::decode(s)
                .with_context(|| format!("{s:?} is neither a family string ({family_err}) nor graph6")),
        },
    }
}
