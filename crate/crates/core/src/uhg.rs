//! The `.uhg` text format and its JSON mirror.
//!
//! ```text
//! # comment lines start with '#'
//! k n m
//! v v ... v      (m lines, k zero-based vertex indices each)
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for HypergraphJson {
    fn from(g: &Hypergraph) -> Self {
        HypergraphJson { n: g.n(), edges: g.edges().to_vec() }
    }
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;

    fn try_from(j: HypergraphJson) -> Result<Self> {
        Hypergraph::build(j.n, j.edges)
    }
}

fn parse_line(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("expected a nonnegative integer, got `{tok}`"),
            })
        })
        .collect()
}

pub fn parse_uhg(text: &str) -> Result<Hypergraph> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = content.next().ok_or(Error::Parse { line: 1, msg: "missing header `k n m`".into() })?;
    let header = parse_line(header, hline)?;
    let [k, n, m] = header[..] else {
        return Err(Error::Parse { line: hline, msg: format!("header needs 3 fields `k n m`, got {}", header.len()) });
    };
    if k < 2 {
        return Err(Error::Parse { line: hline, msg: format!("k must be at least 2, got {k}") });
    }
    if n == 0 {
        return Err(Error::Parse { line: hline, msg: "n must be at least 1".into() });
    }

    let mut edges = Vec::with_capacity(m);
    let mut lines = Vec::with_capacity(m);
    let mut last_line = hline;
    for (lineno, l) in content {
        last_line = lineno;
        if edges.len() == m {
            return Err(Error::Parse { line: lineno, msg: format!("more than the declared {m} edges") });
        }
        let e = parse_line(l, lineno)?;
        if e.len() != k {
            return Err(Error::Parse { line: lineno, msg: format!("edge has {} vertices, expected {k}", e.len()) });
        }
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(Error::Parse { line: lineno, msg: format!("vertex {v} out of range (n = {n})") });
        }
        edges.push(e);
        lines.push(lineno);
    }
    if edges.len() < m {
        return Err(Error::Parse {
            line: last_line + 1,
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Hypergraph::uniform(n, edges, k).map_err(|e| {
        let line = match e {
            Error::RepeatedVertex { edge, .. } | Error::EmptyEdge(edge) => lines[edge],
            Error::DuplicateEdge { second, .. } => lines[second],
            Error::EdgeOutOfRange { edge, .. } | Error::WrongEdgeSize { edge, .. } => lines[edge],
            _ => hline,
        };
        Error::Parse { line, msg: e.to_string() }
    })
}

/// Serializes a uniform hypergraph. Output depends only on the edge list.
pub fn to_uhg(g: &Hypergraph) -> Result<String> {
    let k = g.uniformity()?;
    let mut s = format!("{k} {} {}\n", g.n(), g.m());
    for e in g.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    Ok(s)
}

pub fn read_uhg(path: impl AsRef<Path>) -> Result<Hypergraph> {
    parse_uhg(&fs::read_to_string(path)?)
}

pub fn write_uhg(path: impl AsRef<Path>, g: &Hypergraph) -> Result<()> {
    fs::write(path, to_uhg(g)?)?;
    Ok(())
}

pub fn to_json(g: &Hypergraph) -> String {
    serde_json::to_string(&HypergraphJson::from(g)).expect("plain struct serializes")
}

pub fn from_json(text: &str) -> Result<Hypergraph> {
    let j: HypergraphJson = serde_json::from_str(text)?;
    j.try_into()
}
