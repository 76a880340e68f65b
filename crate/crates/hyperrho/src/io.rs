//! Plain-text hypergraph files.
//!
//! The first line is `k n m`; each of the next `m` lines lists the `k` vertex ids
//! (0-based) of one edge, separated by whitespace. Blank lines after the edges and
//! trailing whitespace are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hyperrho_core::Hypergraph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] hyperrho_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| syntax(line, format!("`{tok}` is not a non-negative integer"))))
        .collect()
}

pub fn parse(text: &str) -> Result<Hypergraph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    let (first, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let header = numbers(first, header)?;
    let [k, n, m] = header[..] else {
        return Err(syntax(first, "header must be `k n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| syntax(first + edges.len() + 1, format!("expected {m} edge lines, found {}", edges.len())))?;
        let edge = numbers(no, line)?;
        if edge.len() != k {
            return Err(syntax(no, format!("edge has {} vertices, expected {k}", edge.len())));
        }
        edges.push(edge);
    }
    if let Some((no, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(syntax(no, format!("unexpected content after {m} edges")));
    }
    Ok(Hypergraph::new(k, n, edges)?)
}

pub fn render(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.k(), h.n(), h.m());
    for e in h.edges() {
        let ids: Vec<String> = e.vertices().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    out
}

pub fn read_file(path: &Path) -> Result<Hypergraph, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

pub fn write_file(path: &Path, h: &Hypergraph) -> Result<(), FormatError> {
    fs::write(path, render(h)).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperrho_core::{build, FamilySpec};

    #[test]
    fn round_trip() {
        let h = build(&FamilySpec::C2(1, 2, 1), 4).unwrap();
        assert_eq!(parse(&render(&h)).unwrap(), h);
    }

    #[test]
    fn tolerates_trailing_whitespace_and_order() {
        let h = parse("3 5 2  \n4 3 2\t\n0 1 2 \n\n").unwrap();
        assert_eq!(h.m(), 2);
        assert_eq!(h.edges()[0].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse(""), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse("3 3\n0 1 2\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse("3 3 1\n0 1\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse("3 3 2\n0 1 2\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse("3 3 1\n0 1 x\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse("3 3 1\n0 1 2\n0 1 2\n"), Err(FormatError::Syntax { line: 3, .. })));
        assert!(matches!(parse("3 4 2\n0 1 2\n2 1 0\n"), Err(FormatError::Invalid(_))));
    }
}
