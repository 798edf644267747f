//! Compact family strings.
//!
//! ```text
//! family   := path | cycle | complete | bipartite | join | extremal
//! path     := "P" int                      path on int vertices
//! cycle    := "C" int
//! complete := "K" int
//! bipartite:= "K" int "," int
//! join     := ("k2" | "K2") "+" list       hubs adjacent
//!           | ("2k1" | "2K1") "+" list     hubs non-adjacent
//! extremal := "extremal(" int "," int ")"  order n, deficiency k
//! list     := "[" int ("," int)* "]"
//! ```
//!
//! Whitespace is ignored everywhere.

use crate::error::{arg_err, Result};
use crate::forest::{extremal_graph, k2_join, LinearForest};
use crate::graph::{complete, complete_bipartite, cycle, path, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Join { forest: LinearForest, dominating_edge: bool },
    Extremal { n: usize, k: usize },
}

fn int(s: &str, what: &str) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return arg_err(format!("expected a non-negative integer for {what}, got {s:?}"));
    }
    s.parse().or_else(|_| arg_err(format!("{what} out of range: {s}")))
}

fn list(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| crate::error::SpexError::Argument(format!("expected [..], got {s:?}")))?;
    inner.split(',').map(|p| int(p, "path order")).collect()
}

impl Family {
    pub fn parse(text: &str) -> Result<Family> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        for (prefix, edge) in [("k2+", true), ("K2+", true), ("2k1+", false), ("2K1+", false)] {
            if let Some(rest) = s.strip_prefix(prefix) {
                return Ok(Family::Join {
                    forest: LinearForest::new(&list(rest)?)?,
                    dominating_edge: edge,
                });
            }
        }
        if let Some(rest) = s.strip_prefix("extremal(").and_then(|r| r.strip_suffix(')')) {
            let (n, k) = rest
                .split_once(',')
                .ok_or_else(|| crate::error::SpexError::Argument("extremal needs (n,k)".into()))?;
            return Ok(Family::Extremal {
                n: int(n, "n")?,
                k: int(k, "k")?,
            });
        }
        if let Some(rest) = s.strip_prefix('P') {
            return Ok(Family::Path(int(rest, "path order")?));
        }
        if let Some(rest) = s.strip_prefix('C') {
            return Ok(Family::Cycle(int(rest, "cycle order")?));
        }
        if let Some(rest) = s.strip_prefix('K') {
            return match rest.split_once(',') {
                Some((a, b)) => Ok(Family::CompleteBipartite(int(a, "part size")?, int(b, "part size")?)),
                None => Ok(Family::Complete(int(rest, "order")?)),
            };
        }
        arg_err(format!("unrecognised family string {text:?}"))
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Path(0) | Family::Complete(0) => arg_err("order must be positive"),
            Family::Path(n) => Ok(path(*n)),
            Family::Cycle(n) => cycle(*n),
            Family::Complete(n) => Ok(complete(*n)),
            Family::CompleteBipartite(a, b) => {
                if *a == 0 || *b == 0 {
                    return arg_err("part sizes must be positive");
                }
                Ok(complete_bipartite(*a, *b))
            }
            Family::Join {
                forest,
                dominating_edge,
            } => Ok(k2_join(forest, *dominating_edge)),
            Family::Extremal { n, k } => extremal_graph(*n, *k),
        }
    }
}

/// Parses and builds in one step.
pub fn parse_family(text: &str) -> Result<Graph> {
    Family::parse(text)?.build()
}
