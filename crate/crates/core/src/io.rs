//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v
//! ...
//! ```
//!
//! Vertices are 0-based. Writers emit each edge once as `u v` with `u < v`,
//! sorted lexicographically.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let malformed = |message: String| ParseError::Malformed { line, message };
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = fields
            .next()
            .ok_or_else(|| malformed(format!("expected two integers, missing {what}")))?;
        tok.parse()
            .map_err(|_| malformed(format!("`{tok}` is not a non-negative integer")))
    };
    let a = next("first")?;
    let b = next("second")?;
    if let Some(extra) = fields.next() {
        return Err(malformed(format!("unexpected trailing token `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = data.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(line, header)?;
    let edges = data
        .map(|(line, l)| parse_pair(line, l))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Serialises `g`, prefixing each `comments` entry with `# `.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let edges = g.edges();
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
