//! The `HG1` text format.
//!
//! ```text
//! # comments run from '#' to end of line; blank lines are ignored
//! HG1 <n> <m>
//! <u> <v> <label>      (exactly m lines; 0-based vertex ids)
//! ```
//!
//! Labels are whitespace-free tokens. [`emit`] writes the header and the
//! edges in edge-list order with single spaces, so `parse(emit(g)) == g` for
//! any parsed graph and `emit(parse(text))` is the canonical form of `text`.

use crate::error::{HedgeError, Result};
use crate::graph::HedgeGraph;

struct Data {
    n: usize,
    edges: Vec<(usize, usize, String)>,
    lines: Vec<usize>,
    header_line: usize,
}

fn err(line: usize, message: impl Into<String>) -> HedgeError {
    HedgeError::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| err(line, format!("bad {what} {tok:?}")))
}

fn tokenize(text: &str) -> Result<Data> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match header {
            None => {
                if toks.len() != 3 || toks[0] != "HG1" {
                    return Err(err(line, "expected header `HG1 <n> <m>`"));
                }
                let n = number(toks[1], line, "vertex count")?;
                let m = number(toks[2], line, "edge count")?;
                header = Some((n, m, line));
            }
            Some((_, m, _)) => {
                if toks.len() != 3 {
                    return Err(err(line, "expected `<u> <v> <label>`"));
                }
                if edges.len() == m {
                    return Err(err(
                        line,
                        format!("more than the {m} edges declared in the header"),
                    ));
                }
                let u = number(toks[0], line, "vertex")?;
                let v = number(toks[1], line, "vertex")?;
                edges.push((u, v, toks[2].to_string()));
                lines.push(line);
            }
        }
    }
    let (n, m, header_line) = header.ok_or_else(|| err(last_line.max(1), "missing `HG1` header"))?;
    if edges.len() != m {
        return Err(err(
            last_line.max(1),
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Ok(Data {
        n,
        edges,
        lines,
        header_line,
    })
}

fn located(data: &Data, e: HedgeError) -> HedgeError {
    let at = |edge: usize| data.lines.get(edge).copied().unwrap_or(data.header_line);
    match e {
        HedgeError::VertexOutOfRange { edge, .. }
        | HedgeError::SelfLoop { edge, .. }
        | HedgeError::DuplicateEdge { edge, .. }
        | HedgeError::InvalidLabel { edge, .. } => err(at(edge), e.to_string()),
        other => err(data.header_line, other.to_string()),
    }
}

/// Parses a simple hedge graph; loops and repeated vertex pairs are errors.
pub fn parse(text: &str) -> Result<HedgeGraph> {
    let data = tokenize(text)?;
    HedgeGraph::build(data.n, data.edges.iter().map(|(u, v, l)| (*u, *v, l))).map_err(|e| located(&data, e))
}

/// Parses a hedge multigraph, accepting loops and parallel edges.
pub fn parse_multigraph(text: &str) -> Result<HedgeGraph> {
    let data = tokenize(text)?;
    HedgeGraph::build_multigraph(data.n, data.edges.iter().map(|(u, v, l)| (*u, *v, l)))
        .map_err(|e| located(&data, e))
}

pub fn emit(g: &HedgeGraph) -> String {
    let mut out = format!("HG1 {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, g.label_name(e.label)));
    }
    out
}
