//! graph6 and plain edge-list encodings.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_SMALL: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_ORDER: usize = 68_719_476_735;

fn size_bytes(n: usize) -> Vec<u8> {
    if n <= MAX_SMALL {
        vec![n as u8 + BIAS]
    } else if n <= MAX_MEDIUM {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
        out
    }
}

/// Encodes `g` in graph6 (no trailing newline).
///
/// Panics if the order exceeds the format limit of 2^36 - 1 vertices.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_ORDER, "graph6 cannot encode {n} vertices");
    let mut out = size_bytes(n);
    let adj = g.adjacency_lists();
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        let mut row = adj[v].iter().copied().filter(|&u| u < v).peekable();
        for u in 0..v {
            let bit = row.peek() == Some(&u);
            if bit {
                row.next();
            }
            acc = (acc << 1) | bit as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 line. A single trailing newline is accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.strip_suffix(b"\n").unwrap_or(text);
    let text = text.strip_suffix(b"\r").unwrap_or(text);
    for (offset, &byte) in text.iter().enumerate() {
        if !(BIAS..=126).contains(&byte) {
            return Err(Error::NonPrintableByte { byte, offset });
        }
    }
    let (n, body) = match text {
        [] => return Err(Error::MalformedHeader("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::MalformedHeader("truncated 8-byte size field".into()));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            if n <= MAX_MEDIUM {
                return Err(Error::MalformedHeader(format!("non-minimal size field for n = {n}")));
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::MalformedHeader("truncated 4-byte size field".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            if n <= MAX_SMALL {
                return Err(Error::MalformedHeader(format!("non-minimal size field for n = {n}")));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - BIAS) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Error::TruncatedBitVector {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Error::TrailingBytes(body.len() - expected));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Edge-list text: first non-comment line `n m`, then `m` lines `u v`.
/// Lines starting with `#` and blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, msg: &str| Error::EdgeListParse {
        line,
        msg: msg.to_string(),
    };
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(line, "expected two nonnegative integers")),
        }
    };
    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing `n m` header"))?;
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(err(line, "more edge lines than declared"));
        }
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(err(0, &format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
