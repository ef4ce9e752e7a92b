//! Line-oriented text formats.
//!
//! Graph: a header line `n m`, then `m` lines `u v` in edge-id order.
//! Coloring: one integer color per line in edge-id order.

use std::io::{BufRead, Write};

use super::{EdgeColoring, MultiGraph};
use crate::error::{Error, Result};

pub fn write_graph<W: Write>(mut out: W, g: &MultiGraph) -> Result<()> {
    writeln!(out, "{} {}", g.n(), g.m())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()?;
    Ok(())
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse {
                line: lineno,
                msg: format!("missing {what}"),
            })?
            .parse()
            .map_err(|e| Error::Parse {
                line: lineno,
                msg: format!("bad {what}: {e}"),
            })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            msg: "trailing fields".into(),
        });
    }
    Ok((a, b))
}

pub fn read_graph<R: BufRead>(input: R) -> Result<MultiGraph> {
    let mut lines = input.lines().enumerate();
    let (n, m) = match lines.next() {
        Some((_, line)) => parse_pair(&line?, 1)?,
        None => {
            return Err(Error::Parse {
                line: 1,
                msg: "missing header".into(),
            })
        }
    };
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        edges.push(parse_pair(&line, idx + 1)?);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    MultiGraph::new(n, edges)
}

pub fn write_coloring<W: Write>(mut out: W, coloring: &EdgeColoring) -> Result<()> {
    for &c in coloring.colors() {
        writeln!(out, "{c}")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a coloring; `r` defaults to the largest color present.
pub fn read_coloring<R: BufRead>(input: R, r: Option<u32>) -> Result<EdgeColoring> {
    let mut colors = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        colors.push(t.parse::<u32>().map_err(|e| Error::Parse {
            line: idx + 1,
            msg: format!("bad color: {e}"),
        })?);
    }
    let r = r.unwrap_or_else(|| colors.iter().copied().max().unwrap_or(1));
    EdgeColoring::new(colors, r)
}
