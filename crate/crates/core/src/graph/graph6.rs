//! graph6 encoding (McKay's format): `N(n)` followed by the upper triangle of
//! the adjacency matrix in column order, six bits per printable byte.

use std::fmt;
use std::io::BufRead;

use thiserror::Error;

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 {kind} at byte {offset}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    MalformedLength,
    NonPrintable(u8),
    Truncated,
    TrailingGarbage,
    OrderTooLarge(usize),
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6ErrorKind::Empty => f.write_str("empty input"),
            Graph6ErrorKind::MalformedLength => f.write_str("malformed length header"),
            Graph6ErrorKind::NonPrintable(b) => write!(f, "non-printable byte 0x{b:02x}"),
            Graph6ErrorKind::Truncated => f.write_str("truncated adjacency data"),
            Graph6ErrorKind::TrailingGarbage => f.write_str("trailing garbage"),
            Graph6ErrorKind::OrderTooLarge(n) => {
                write!(f, "order {n} above the supported maximum {MAX_ORDER}")
            }
        }
    }
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(err(offset, Graph6ErrorKind::Truncated)),
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(err(offset, Graph6ErrorKind::NonPrintable(b))),
    }
}

/// Parses one graph6 string. A leading `>>graph6<<` header is stripped; byte
/// offsets in errors count from the start of `text` including the header.
/// Nonzero padding bits in the final byte are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let start = if text.starts_with(HEADER.as_bytes()) {
        HEADER.len()
    } else {
        0
    };
    let bytes = text;
    let first = match bytes.get(start) {
        None => return Err(err(start, Graph6ErrorKind::Empty)),
        Some(&b) => b,
    };
    if !(63..=126).contains(&first) {
        return Err(err(start, Graph6ErrorKind::NonPrintable(first)));
    }

    let (n, mut pos) = if first != 126 {
        (u64::from(first - 63), start + 1)
    } else if bytes.get(start + 1) != Some(&126) {
        let mut n = 0;
        for i in 1..=3 {
            n = (n << 6) | sextet(bytes, start + i).map_err(|e| length_error(e, start))?;
        }
        if n < 63 {
            return Err(err(start, Graph6ErrorKind::MalformedLength));
        }
        (n, start + 4)
    } else {
        let mut n = 0;
        for i in 2..=7 {
            n = (n << 6) | sextet(bytes, start + i).map_err(|e| length_error(e, start))?;
        }
        if n < 258_048 {
            return Err(err(start, Graph6ErrorKind::MalformedLength));
        }
        (n, start + 8)
    };
    let n = n as usize;
    if n > MAX_ORDER {
        return Err(err(start, Graph6ErrorKind::OrderTooLarge(n)));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let mut g = Graph::new(n).expect("order checked");
    let mut idx = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = sextet(bytes, pos + idx / 6)?;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            idx += 1;
            if idx == bits {
                break 'outer;
            }
        }
    }
    // Validate the printable range of every data byte, padding included.
    for i in 0..data_len {
        sextet(bytes, pos + i)?;
    }
    pos += data_len;
    if pos != bytes.len() {
        return Err(err(pos, Graph6ErrorKind::TrailingGarbage));
    }
    Ok(g)
}

fn length_error(e: Graph6Error, start: usize) -> Graph6Error {
    match e.kind {
        Graph6ErrorKind::Truncated => err(start, Graph6ErrorKind::MalformedLength),
        _ => e,
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Reads one graph per line. Blank lines are skipped; errors carry 1-based line numbers.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line.as_bytes()).map_err(|source| Error::Ingest {
            line: i + 1,
            source,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}
