//! Hypergraph files.
//!
//! The text format is a header line `k n m` followed by `m` lines of `k`
//! vertex indices. The JSON format is `{"k":..,"n":..,"edges":[[..],..]}`.
//! Both parsers normalize vertex and edge order, so serializing a parsed
//! file is canonical (sorted) regardless of how the input was written.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use hyperspectral_core::transforms::EdgeMove;
use hyperspectral_core::{Hypergraph, HypergraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid hypergraph: {0}")]
    Invalid(#[from] HypergraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonHypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for JsonHypergraph {
    fn from(g: &Hypergraph) -> Self {
        Self {
            k: g.k(),
            n: g.n(),
            edges: g.edges().map(<[usize]>::to_vec).collect(),
        }
    }
}

pub fn to_text(g: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", g.k(), g.n(), g.m());
    for e in g.edges() {
        let mut sep = "";
        for v in e {
            write!(out, "{sep}{v}").unwrap();
            sep = " ";
        }
        out.push('\n');
    }
    out
}

pub fn to_json(g: &Hypergraph) -> String {
    let mut out = serde_json::to_string(&JsonHypergraph::from(g)).expect("plain data");
    out.push('\n');
    out
}

/// A JSON array of hypergraphs, one per line.
pub fn to_json_array(graphs: &[Hypergraph]) -> String {
    if graphs.is_empty() {
        return "[]\n".into();
    }
    let mut out = String::from("[\n");
    for (i, g) in graphs.iter().enumerate() {
        out.push_str(&serde_json::to_string(&JsonHypergraph::from(g)).expect("plain data"));
        out.push_str(if i + 1 < graphs.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

pub fn serialize(g: &Hypergraph, format: Format) -> String {
    match format {
        Format::Text => to_text(g),
        Format::Json => to_json(g),
    }
}

pub fn parse_text(input: &str) -> Result<Hypergraph, FormatError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(FormatError::Syntax {
        line: 1,
        message: "missing header `k n m`".into(),
    })?;
    let header = numbers(line, header)?;
    let [k, n, m] = header[..] else {
        return Err(FormatError::Syntax {
            line,
            message: format!("header needs 3 numbers, found {}", header.len()),
        });
    };
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let e = numbers(line, text)?;
        if e.len() != k {
            return Err(FormatError::Syntax {
                line,
                message: format!("edge has {} vertices, expected {k}", e.len()),
            });
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(FormatError::Syntax {
            line: input.lines().count().max(1),
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Ok(Hypergraph::new(k, n, edges)?)
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| FormatError::Syntax {
                line,
                message: format!("`{t}` is not a non-negative integer"),
            })
        })
        .collect()
}

pub fn parse_json(input: &str) -> Result<Hypergraph, FormatError> {
    let j: JsonHypergraph = serde_json::from_str(input)?;
    Ok(Hypergraph::new(j.k, j.n, j.edges)?)
}

/// Parses either format; JSON is recognized by a leading `{`.
pub fn parse(input: &str) -> Result<Hypergraph, FormatError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn read(path: &Path) -> Result<Hypergraph, FormatError> {
    parse(&fs::read_to_string(path)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonMove {
    edge_index: usize,
    from_vertex: usize,
    to_vertex: usize,
}

/// A JSON array of `{"edge_index", "from_vertex", "to_vertex"}` objects.
/// Edge indices refer to the sorted edge order of the target hypergraph.
pub fn parse_moves(input: &str) -> Result<Vec<EdgeMove>, FormatError> {
    let moves: Vec<JsonMove> = serde_json::from_str(input)?;
    Ok(moves
        .into_iter()
        .map(|m| EdgeMove {
            edge_index: m.edge_index,
            from_vertex: m.from_vertex,
            to_vertex: m.to_vertex,
        })
        .collect())
}
