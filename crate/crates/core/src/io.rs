//! Text formats: graph6 for simple graphs, a plain edge list for multigraphs,
//! and DOT for rendering.
//!
//! Multigraph edge list:
//!
//! ```text
//! multigraph <n>
//! <u> <v> <multiplicity>
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{edge_key, EdgeKey, MultiGraph};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn graph6_size(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![
            126,
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    } else {
        let mut out = vec![126, 126];
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 63) as u8 + 63);
        }
        out
    }
}

/// Encodes a simple graph as a graph6 line (without trailing newline).
pub fn write_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::format("graph6 can only encode simple graphs"));
    }
    let n = g.vertex_count();
    let mut out = graph6_size(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses one graph6 line. Sparse6 and digraph6 lines are rejected, as are
/// payloads of the wrong length or with nonzero padding bits.
pub fn parse_graph6(line: &str) -> Result<MultiGraph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    match bytes.first() {
        None => return Err(Error::format("empty graph6 line")),
        Some(b':') | Some(b';') => {
            return Err(Error::format("sparse6 input is not supported"));
        }
        Some(b'&') => return Err(Error::format("digraph6 input is not supported")),
        _ => {}
    }
    if let Some(bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::format(format!("byte {bad:#04x} outside the graph6 range")));
    }
    let (n, rest) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::format("truncated graph6 size field"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::format("non-canonical graph6 size field"));
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::format("truncated graph6 size field"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 258_047 {
            return Err(Error::format("non-canonical graph6 size field"));
        }
        (n, &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if rest.len() != want {
        return Err(Error::format(format!(
            "graph6 payload for {n} vertices needs {want} bytes, found {}",
            rest.len()
        )));
    }
    let bit = |k: usize| -> bool { ((rest[k / 6] - 63) >> (5 - k % 6)) & 1 == 1 };
    if (bits..want * 6).any(bit) {
        return Err(Error::format("nonzero graph6 padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    MultiGraph::new(n, edges)
}

/// Writes the plain-text multigraph format.
pub fn write_edge_list(g: &MultiGraph) -> String {
    let mut out = format!("multigraph {}\n", g.vertex_count());
    for (u, v, m) in g.edges() {
        writeln!(out, "{u} {v} {m}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<MultiGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let at = |line: usize, msg: String| Error::Format {
        line: Some(line),
        msg,
    };
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::format("empty multigraph input"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["multigraph", n] => n
            .parse::<usize>()
            .map_err(|e| at(hl, format!("bad vertex count: {e}")))?,
        _ => return Err(at(hl, "expected header `multigraph <n>`".into())),
    };
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let nums: Vec<usize> = match fields.len() {
            2 | 3 => fields
                .iter()
                .map(|f| f.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| at(ln, format!("bad number: {e}")))?,
            _ => return Err(at(ln, "expected `u v [multiplicity]`".into())),
        };
        let m = nums.get(2).copied().unwrap_or(1) as u32;
        if nums[0] >= n || nums[1] >= n {
            return Err(at(
                ln,
                Error::EdgeOutOfRange {
                    u: nums[0],
                    v: nums[1],
                    n,
                }
                .to_string(),
            ));
        }
        edges.push((nums[0], nums[1], m));
    }
    MultiGraph::with_multiplicities(n, edges)
}

/// Renders `g` as an undirected DOT graph. Every copy of a parallel edge is
/// emitted separately; pairs in `highlights` are drawn blue and dashed.
pub fn to_dot(g: &MultiGraph, highlights: &BTreeSet<EdgeKey>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v, m) in g.edges() {
        let style = if highlights.contains(&edge_key(u, v)) {
            " [style=dashed, color=blue]"
        } else {
            ""
        };
        for _ in 0..m {
            writeln!(out, "  {u} -- {v}{style};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
