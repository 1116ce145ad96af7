//! graph6 and DIMACS serialization.

use crate::error::{Error, Result};

use super::DenseGraph;

fn encode_n(n: usize, out: &mut Vec<u8>) {
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

/// Encodes the graph in graph6 format (no trailing newline).
pub fn to_graph6(g: &DenseGraph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_n(n, &mut out);
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Decodes a graph6 string. A leading `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<DenseGraph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("invalid graph6 byte {b:#x}")));
    }
    let take = |range: std::ops::Range<usize>| -> Result<usize> {
        let chunk = bytes
            .get(range)
            .ok_or_else(|| Error::Parse("truncated graph6 header".into()))?;
        Ok(chunk.iter().fold(0, |n, &b| n << 6 | (b - 63) as usize))
    };
    let (n, start) = match bytes.first() {
        None => return Err(Error::Parse("empty graph6 string".into())),
        Some(126) if bytes.get(1) == Some(&126) => (take(2..8)?, 8),
        Some(126) => (take(1..4)?, 4),
        Some(_) => (take(0..1)?, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let body = &bytes[start..];
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            pairs.div_ceil(6)
        )));
    }
    let mut g = DenseGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// DIMACS edge format with 1-based vertices.
pub fn to_dimacs(g: &DenseGraph) -> String {
    let mut out = String::new();
    if !g.label().family.is_empty() {
        out.push_str(&format!("c {}\n", g.label().family));
    }
    out.push_str(&format!("p edge {} {}\n", g.order(), g.edge_count()));
    for u in 0..g.order() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
    }
    out
}
