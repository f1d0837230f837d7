//! Graph file formats: graph6, plain edge lists, and a JSON form.
//!
//! * graph6 — header-less, bit-exact; the upper triangle of the adjacency
//!   matrix in column-major order, packed 6 bits per printable byte (+63).
//!   A leading `>>graph6<<` marker is tolerated on input, never written.
//! * edge list — first line `n m`, then `m` lines `u v`.
//! * JSON — `{"n": .., "edges": [[u, v], ..], "labels": {..}}`; the only
//!   format that carries labels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    Json,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphFormat> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" => Ok(GraphFormat::EdgeList),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::InvalidInput(format!(
                "unknown graph format '{other}' (expected graph6|edgelist|json)"
            ))),
        }
    }
}

/// Cheap content sniff for when no explicit format is given.
pub fn detect_format(text: &str) -> GraphFormat {
    let t = text.trim_start();
    if t.starts_with('{') {
        GraphFormat::Json
    } else {
        let first = t.lines().next().unwrap_or("");
        let ints = first
            .split_whitespace()
            .all(|w| w.parse::<usize>().is_ok());
        if ints && first.split_whitespace().count() == 2 {
            GraphFormat::EdgeList
        } else {
            GraphFormat::Graph6
        }
    }
}

pub fn parse_graph(text: &str, fmt: GraphFormat) -> Result<Graph> {
    match fmt {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Json => parse_json(text),
    }
}

pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    parse_graph(text, detect_format(text))
}

/// Render in the given format. graph6 and edge list drop labels.
pub fn write_graph(g: &Graph, fmt: GraphFormat) -> String {
    match fmt {
        GraphFormat::Graph6 => write_graph6(g),
        GraphFormat::EdgeList => write_edgelist(g),
        GraphFormat::Json => write_json(g),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.is_empty() {
        return Err(Error::InvalidInput("empty graph6 string".into()));
    }
    for &b in &bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::InvalidInput(format!(
                "invalid graph6 byte {b} (must be 63..=126)"
            )));
        }
    }
    let (n, mut pos) = decode_g6_size(&bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::InvalidInput(format!(
            "graph6 body has {} bytes, expected {nbytes} for n = {n}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                cur = bytes[pos] - 63;
                pos += 1;
            }
            if (cur >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // Bit-exactness: padding must be zero.
    if bit % 6 != 0 && cur & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err(Error::InvalidInput("nonzero padding bits in graph6 body".into()));
    }
    Graph::from_edge_list(n, &edges)
}

fn decode_g6_size(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::InvalidInput("truncated graph6 size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        Ok((n, 8))
    } else {
        if bytes.len() < 4 {
            return Err(Error::InvalidInput("truncated graph6 size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        Ok((n, 4))
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut cur = 0u8;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                cur |= 1 << (5 - bit % 6);
            }
            bit += 1;
            if bit % 6 == 0 {
                out.push(63 + cur);
                cur = 0;
            }
        }
    }
    if bit % 6 != 0 {
        out.push(63 + cur);
    }
    String::from_utf8(out).unwrap()
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty edge list".into()))?;
    let mut it = header.split_whitespace();
    let parse_int = |tok: Option<&str>, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::InvalidInput(format!("missing {what}")))?
            .parse::<usize>()
            .map_err(|_| Error::InvalidInput(format!("bad {what} in edge list")))
    };
    let n = parse_int(it.next(), "vertex count")?;
    let m = parse_int(it.next(), "edge count")?;
    if it.next().is_some() {
        return Err(Error::InvalidInput("edge list header must be 'n m'".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u = parse_int(it.next(), "edge endpoint")?;
        let v = parse_int(it.next(), "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::InvalidInput(format!("edge line '{line}' must be 'u v'")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::InvalidInput(format!(
            "edge list declares {m} edges but contains {}",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "std::collections::BTreeMap::is_empty")]
    labels: std::collections::BTreeMap<usize, String>,
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let gj: GraphJson = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("bad graph JSON: {e}")))?;
    let mut g = Graph::from_edge_list(gj.n, &gj.edges)?;
    for (v, lab) in gj.labels {
        if v >= gj.n {
            return Err(Error::InvalidInput(format!("label for out-of-range vertex {v}")));
        }
        g.set_label(v, lab);
    }
    Ok(g)
}

pub fn write_json(g: &Graph) -> String {
    let gj = GraphJson {
        n: g.n(),
        edges: g.edges(),
        labels: g.labels().clone(),
    };
    serde_json::to_string(&gj).unwrap()
}

/// The graph as a JSON value, for embedding in reports.
pub fn graph_json_value(g: &Graph) -> serde_json::Value {
    serde_json::from_str(&write_json(g)).unwrap()
}
