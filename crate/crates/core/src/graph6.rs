//! graph6 short form (orders 0..=62).
//!
//! One header byte `n + 63`, then the upper triangle in column order
//! `(0,1),(0,2),(1,2),(0,3),...`, six bits per byte, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const FORMAT: &str = "graph6";
const MAX_SHORT: usize = 62;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses a single graph6 line. A trailing newline is accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    parse_line(text.strip_suffix('\n').unwrap_or(text), 1)
}

/// Parses one graph per non-empty line.
pub fn read_graph6(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(k, l)| parse_line(l.trim_end_matches('\r'), k + 1))
        .collect()
}

/// Newline-terminated graph6 lines.
pub fn write_graph6<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<String> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&to_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}

fn parse_line(line: &str, lineno: usize) -> Result<Graph> {
    let err = |message: String| Error::Parse {
        format: FORMAT,
        line: lineno,
        message,
    };
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(format!(
            "byte {:#04x} at offset {pos} is outside the printable graph6 range",
            bytes[pos]
        )));
    }
    let (&header, body) = bytes
        .split_first()
        .ok_or_else(|| err("empty line".into()))?;
    if header == 126 {
        return Err(err("long-form header (n > 62) is not supported".into()));
    }
    let n = (header - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::edgeless(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if !pairs.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits".into()));
        }
    }
    Ok(g)
}
