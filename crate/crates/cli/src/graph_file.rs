//! Plain-text graph files.
//!
//! ```text
//! # K3
//! 3 3
//! 0 1
//! 0 2
//! 1 2
//! ```
//!
//! The first line is `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! Anything after `#` is a comment; blank lines are skipped.

use std::fmt;
use std::path::Path;

use setmap::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let [a, b] = fields[..] else {
        return Err(err(line, format!("expected two integers, found {:?}", text.trim())));
    };
    let parse =
        |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("not a nonnegative integer: {s:?}")));
    Ok((parse(a)?, parse(b)?))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| err(0, "empty graph file"))?;
    let (n, m) = two_numbers(header_line, header)?;
    if n > Graph::MAX_VERTICES {
        return Err(err(header_line, format!("{n} vertices exceeds the limit of {}", Graph::MAX_VERTICES)));
    }

    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = two_numbers(line, text)?;
        if u >= v {
            return Err(err(line, format!("edge {u} {v}: need u < v")));
        }
        if v >= n {
            return Err(err(line, format!("edge {u} {v}: vertex {v} out of range for {n} vertices")));
        }
        if edges.contains(&(u, v)) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(header_line, format!("header declares {m} edges, file lists {}", edges.len())));
    }
    Graph::new(n, &edges).map_err(|e| err(0, e.to_string()))
}

pub fn read_graph(path: &Path) -> Result<Graph, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| err(0, format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| ParseError { message: format!("{}: {}", path.display(), e.message), ..e })
}
