//! graph6 encoding (bit-exact with nauty's `showg`/`geng`) and DOT export.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write as _;

const HEADER: &str = ">>graph6<<";

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` without the optional `>>graph6<<` header or trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sixbits(bytes: &[u8]) -> Result<usize> {
    bytes.iter().try_fold(0usize, |acc, &b| {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
        }
        Ok(acc << 6 | (b - 63) as usize)
    })
}

fn parse_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte order header".into()));
            }
            Ok((sixbits(&rest[..6])?, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte order header".into()));
            }
            let n = sixbits(&rest[..3])?;
            if n <= 62 {
                return Err(Error::Graph6(format!("order {n} must use the 1-byte header")));
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((sixbits(&[*b])?, rest)),
    }
}

/// Decodes one graph6 line, accepting an optional `>>graph6<<` header and surrounding whitespace.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let (n, body) = parse_order(text.as_bytes())?;
    if n == 0 {
        return Err(Error::Graph6("order 0 is not a graph here".into()));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n).map_err(|e| Error::Graph6(e.to_string()))?;
    let values = body.iter().map(|&b| sixbits(&[b])).collect::<Result<Vec<_>>>()?;
    let mut bits = values.iter().flat_map(|&v| (0..6).rev().map(move |k| v >> k & 1 == 1));
    for j in 1..n {
        for i in 0..j {
            if bits.next() == Some(true) {
                g.set_edge(i, j);
            }
        }
    }
    if bits.any(|b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(g)
}

/// Graphviz DOT for `g` under the given graph name.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
