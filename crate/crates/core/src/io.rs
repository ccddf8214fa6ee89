//! graph6 and edge-list readers and writers.
//!
//! graph6 follows the public nauty format: a size prefix followed by the upper
//! triangle of the adjacency matrix in column-major order (`(0,1), (0,2), (1,2),
//! (0,3), ...`), packed big-endian into 6-bit groups, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn size_prefix(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        out
    }
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = size_prefix(n);
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

fn sextet(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Error::at_byte(at, format!("byte 0x{b:02x} is outside the graph6 range 63..=126"))),
        None => Err(Error::at_byte(at, "record truncated")),
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(record: &str) -> Result<Graph> {
    let trimmed = record.trim_end_matches(['\n', '\r']);
    let (offset, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let at = |i: usize| offset + i;
    if body.is_empty() {
        return Err(Error::at_byte(offset, "empty record"));
    }

    let (n, mut pos) = if body[0] != 126 {
        (sextet(body, 0).map_err(|_| Error::at_byte(at(0), "invalid size byte"))? as usize, 1)
    } else if body.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(body, i).map_err(|e| shift(e, offset))? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = n << 6 | sextet(body, i).map_err(|e| shift(e, offset))? as usize;
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if body.len() < expected {
        return Err(Error::at_byte(at(body.len()), format!("record truncated: expected {expected} bytes for n = {n}")));
    }
    if body.len() > expected {
        return Err(Error::at_byte(at(expected), "trailing bytes after graph6 record"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    let mut chunk = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                chunk = sextet(body, pos).map_err(|e| shift(e, offset))?;
                pos += 1;
            }
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && chunk & ((1u8 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::at_byte(at(pos - 1), "nonzero padding bits"));
    }
    Graph::from_edges(n, edges)
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { location: crate::error::ParseLocation::Byte(b), message } => Error::at_byte(b + offset, message),
        other => other,
    }
}

/// Parses the edge-list format: a line `n <count>` followed by `u v` lines.
/// Blank lines and lines starting with `#` are ignored. Duplicate edges collapse.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first_line, header) = lines.next().ok_or_else(|| Error::at_line(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => {
            count.parse::<usize>().map_err(|_| Error::at_line(first_line, format!("invalid vertex count `{count}`")))?
        }
        _ => return Err(Error::at_line(first_line, "expected `n <count>` header")),
    };

    let mut edges = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(Error::at_line(line, "expected two vertex indices `u v`"));
        };
        let parse =
            |s: &str| s.parse::<usize>().map_err(|_| Error::at_line(line, format!("invalid vertex index `{s}`")));
        let (u, v) = (parse(u)?, parse(v)?);
        if u >= n || v >= n {
            return Err(Error::at_line(line, format!("vertex index out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::at_line(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
