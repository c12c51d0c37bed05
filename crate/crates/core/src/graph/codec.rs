//! Graph serialization: graph6 and an edge-list text format.
//!
//! graph6 (for n <= 62): first byte is `n + 63`; the upper-triangle bits in
//! column order (0,1),(0,2),(1,2),(0,3),... are packed big-endian into 6-bit
//! groups, zero-padded, and each group is emitted as `group + 63`.
//!
//! Edge-list text: a line `n <N>`, then zero or more `e <u> <v>` lines with
//! 0-indexed endpoints, `u != v`. `#` starts a comment. Duplicate edges are
//! rejected.

use super::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("graph6 supports up to 62 vertices, got {0}")]
    Graph6Size(usize),
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: invalid byte {byte:#x} at position {pos}")]
    InvalidByte { byte: u8, pos: usize },
    #[error("graph6: expected {expected} body bytes, got {got}")]
    BodyLength { expected: usize, got: usize },
    #[error("graph6: nonzero padding bits in final group at position {pos}")]
    Padding { pos: usize },
    #[error("edge list, line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

pub fn encode(g: &Graph, format: GraphFormat) -> Result<Vec<u8>, GraphError> {
    match format {
        GraphFormat::Graph6 => encode_graph6(g),
        GraphFormat::EdgeList => Ok(encode_edgelist(g)),
    }
}

pub fn decode(bytes: &[u8], format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::Graph6 => decode_graph6(bytes),
        GraphFormat::EdgeList => decode_edgelist(bytes),
    }
}

fn encode_graph6(g: &Graph) -> Result<Vec<u8>, GraphError> {
    let n = g.n();
    if n > 62 {
        return Err(CodecError::Graph6Size(n).into());
    }
    let mut out = vec![n as u8 + 63];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(out)
}

fn decode_graph6(bytes: &[u8]) -> Result<Graph, GraphError> {
    let first = *bytes.first().ok_or(CodecError::Empty)?;
    if !(63..=125).contains(&first) {
        return Err(CodecError::InvalidByte { byte: first, pos: 0 }.into());
    }
    let n = (first - 63) as usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    let expected = total_bits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != expected {
        return Err(CodecError::BodyLength {
            expected,
            got: body.len(),
        }
        .into());
    }
    let mut g = Graph::empty(n)?;
    let mut t = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[t / 6];
            if !(63..=126).contains(&byte) {
                return Err(CodecError::InvalidByte {
                    byte,
                    pos: 1 + t / 6,
                }
                .into());
            }
            let bit = (byte - 63) >> (5 - (t % 6)) & 1;
            if bit == 1 {
                g.adj[i] |= 1 << j;
                g.adj[j] |= 1 << i;
            }
            t += 1;
            if t == total_bits {
                break 'outer;
            }
        }
    }
    if !total_bits.is_multiple_of(6) {
        let last = body[expected - 1];
        if !(63..=126).contains(&last) {
            return Err(CodecError::InvalidByte {
                byte: last,
                pos: expected,
            }
            .into());
        }
        let pad = 6 - total_bits % 6;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(CodecError::Padding { pos: expected }.into());
        }
    }
    Ok(g)
}

fn encode_edgelist(g: &Graph) -> Vec<u8> {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out.into_bytes()
}

fn decode_edgelist(bytes: &[u8]) -> Result<Graph, GraphError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CodecError::EdgeList {
        line: 0,
        msg: format!("not valid UTF-8: {e}"),
    })?;
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        let err = |msg: String| CodecError::EdgeList { line, msg };
        match parts.next() {
            Some("n") => {
                if n.is_some() {
                    return Err(err("duplicate `n` line".into()).into());
                }
                let val = parts
                    .next()
                    .ok_or_else(|| err("`n` requires a count".into()))?;
                let count: usize = val
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{val}`")))?;
                if parts.next().is_some() {
                    return Err(err("trailing tokens after `n`".into()).into());
                }
                n = Some(count);
            }
            Some("e") => {
                let nv = n.ok_or_else(|| err("`e` before `n` line".into()))?;
                let u: usize = parse_endpoint(parts.next(), line)?;
                let v: usize = parse_endpoint(parts.next(), line)?;
                if parts.next().is_some() {
                    return Err(err("trailing tokens after `e`".into()).into());
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")).into());
                }
                if u >= nv || v >= nv {
                    return Err(err(format!("endpoint out of range in `e {u} {v}`")).into());
                }
                let key = (u.min(v), u.max(v));
                if edges.contains(&key) {
                    return Err(err(format!("duplicate edge {} {}", key.0, key.1)).into());
                }
                edges.push(key);
            }
            Some(other) => {
                return Err(err(format!("unknown directive `{other}`")).into());
            }
            None => unreachable!(),
        }
    }
    let n = n.ok_or(CodecError::EdgeList {
        line: 0,
        msg: "missing `n` line".into(),
    })?;
    Graph::build(n, &edges)
}

fn parse_endpoint(tok: Option<&str>, line: usize) -> Result<usize, GraphError> {
    let tok = tok.ok_or(CodecError::EdgeList {
        line,
        msg: "`e` requires two endpoints".into(),
    })?;
    tok.parse().map_err(|_| {
        CodecError::EdgeList {
            line,
            msg: format!("bad endpoint `{tok}`"),
        }
        .into()
    })
}
