//! Signed edge-list text format.
//!
//! ```text
//! # comment
//! 4
//! 0 1 +
//! 1 2 +
//! 2 3 +
//! 0 3 -
//! ```
//!
//! The first non-comment line holds the vertex count. Each further line is
//! `u v s` with 0-based indices and `s ∈ {+, -, +1, -1}`.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use super::{GraphError, Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex count")]
    MissingHeader,
    #[error("invalid vertex count {0:?}")]
    BadCount(String),
    #[error("expected `u v s`, got {0:?}")]
    BadLine(String),
    #[error("invalid vertex index {0:?}")]
    BadIndex(String),
    #[error("invalid sign {0:?}")]
    BadSign(String),
    #[error("self-loop")]
    SelfLoop,
    #[error("vertex index out of range")]
    IndexOutOfRange,
    #[error("duplicate edge with conflicting sign")]
    DuplicateEdge,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {kind}")]
    Syntax { line: usize, kind: ParseErrorKind },
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl ParseError {
    pub fn kind(&self) -> Option<&ParseErrorKind> {
        match self {
            ParseError::Syntax { kind, .. } => Some(kind),
            ParseError::Io(_) => None,
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. } => Some(*line),
            ParseError::Io(_) => None,
        }
    }
}

fn syntax(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError::Syntax { line, kind }
}

fn parse_sign(tok: &str) -> Option<Sign> {
    match tok {
        "+" | "+1" => Some(Sign::Positive),
        "-" | "-1" => Some(Sign::Negative),
        _ => None,
    }
}

/// Parses the edge-list format from a string.
pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(count) = n else {
            let count = line
                .parse::<usize>()
                .map_err(|_| syntax(lineno, ParseErrorKind::BadCount(line.to_string())))?;
            n = Some(count);
            continue;
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(syntax(lineno, ParseErrorKind::BadLine(line.to_string())));
        }
        let index = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| syntax(lineno, ParseErrorKind::BadIndex(t.to_string())))
        };
        let (u, v) = (index(toks[0])?, index(toks[1])?);
        let sign =
            parse_sign(toks[2]).ok_or_else(|| syntax(lineno, ParseErrorKind::BadSign(toks[2].into())))?;
        if u >= count || v >= count {
            return Err(syntax(lineno, ParseErrorKind::IndexOutOfRange));
        }
        if u == v {
            return Err(syntax(lineno, ParseErrorKind::SelfLoop));
        }
        let key = (u.min(v), u.max(v));
        match seen.insert(key, sign) {
            Some(prev) if prev != sign => return Err(syntax(lineno, ParseErrorKind::DuplicateEdge)),
            _ => {}
        }
        edges.push((u, v, sign));
    }
    let n = n.ok_or_else(|| syntax(text.lines().count().max(1), ParseErrorKind::MissingHeader))?;
    SignedGraph::from_signed_edges(n, edges).map_err(|e| {
        // Per-line checks above already catch these; keep a mapping anyway.
        let kind = match e {
            GraphError::SelfLoop(_) => ParseErrorKind::SelfLoop,
            GraphError::DuplicateEdge { .. } => ParseErrorKind::DuplicateEdge,
            _ => ParseErrorKind::IndexOutOfRange,
        };
        syntax(0, kind)
    })
}

/// Renders a graph in the edge-list format.
pub fn format_graph(g: &SignedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.order()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.sign).unwrap();
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<SignedGraph, ParseError> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn write_graph(g: &SignedGraph, path: impl AsRef<Path>) -> io::Result<()> {
    fs::write(path, format_graph(g))
}
