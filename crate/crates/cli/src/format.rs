//! The `.mg` text format.
//!
//! ```text
//! # comment
//! vertices 3
//! 0 -- 1
//! 1 -> 2
//! ```
//!
//! `u -- v` declares a digon and `u -> v` an arc. Each unordered pair may be
//! declared at most once.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use mixed_spectra::{Edge, MixedGraph};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing \"vertices N\" header")]
    MissingHeader,
    #[error("{0}")]
    Graph(#[from] mixed_spectra::Error),
}

fn parse_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

fn parse_vertex(token: &str, n: usize, line: usize) -> Result<usize, FormatError> {
    let v: usize = token
        .parse()
        .map_err(|_| parse_error(line, format!("expected a vertex label, found {token:?}")))?;
    if v >= n {
        return Err(parse_error(line, format!("vertex {v} out of range for {n} vertices")));
    }
    Ok(v)
}

/// Parses the text of a `.mg` file.
pub fn parse_graph(text: &str) -> Result<MixedGraph, FormatError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut declared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some(count) = n else {
            match tokens.as_slice() {
                ["vertices", count] => {
                    let count: usize = count
                        .parse()
                        .map_err(|_| parse_error(line, format!("invalid vertex count {count:?}")))?;
                    if count == 0 {
                        return Err(parse_error(line, "a graph needs at least one vertex"));
                    }
                    n = Some(count);
                    continue;
                }
                _ => return Err(parse_error(line, "expected \"vertices N\" before any edge")),
            }
        };
        let edge = match tokens.as_slice() {
            [u, "--", v] => Edge::digon(parse_vertex(u, count, line)?, parse_vertex(v, count, line)?),
            [u, "->", v] => Edge::arc(parse_vertex(u, count, line)?, parse_vertex(v, count, line)?),
            ["vertices", _] => return Err(parse_error(line, "duplicate \"vertices\" header")),
            _ => return Err(parse_error(line, format!("expected \"u -- v\" or \"u -> v\", found {content:?}"))),
        };
        let (u, v) = edge.endpoints();
        if u == v {
            return Err(parse_error(line, format!("self-loop at vertex {u}")));
        }
        if let Some(first) = declared.insert((u, v), line) {
            let what = match (edges.iter().find(|e: &&Edge| e.endpoints() == (u, v)), edge) {
                (Some(Edge::Arc { tail, .. }), Edge::Arc { tail: t2, .. }) if *tail != t2 => "anti-parallel arcs",
                _ => "duplicate declaration",
            };
            return Err(parse_error(
                line,
                format!("{what}: pair {{{u}, {v}}} already declared on line {first}"),
            ));
        }
        edges.push(edge);
    }
    let n = n.ok_or(FormatError::MissingHeader)?;
    Ok(MixedGraph::from_edges(n, edges)?)
}

/// Reads and parses a `.mg` file.
pub fn load(path: &Path) -> anyhow::Result<MixedGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn write_edge(out: &mut String, e: &Edge) {
    match *e {
        Edge::Digon(u, v) => writeln!(out, "{u} -- {v}"),
        Edge::Arc { tail, head } => writeln!(out, "{tail} -> {head}"),
    }
    .expect("writing to a String");
}

/// Canonical text: header, digons sorted, then arcs sorted.
pub fn emit_graph(x: &MixedGraph) -> String {
    emit_graph_with_comments(x, &[])
}

/// Like [`emit_graph`], with `# ` comment lines after the header.
pub fn emit_graph_with_comments(x: &MixedGraph, comments: &[String]) -> String {
    let mut out = format!("vertices {}\n", x.vertex_count());
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for e in x.edges() {
        write_edge(&mut out, e);
    }
    out
}

/// `u -- v` or `u -> v`.
pub fn edge_label(e: &Edge) -> String {
    let mut s = String::new();
    write_edge(&mut s, e);
    s.trim_end().to_string()
}
