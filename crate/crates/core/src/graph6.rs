//! graph6 codec, short form only (`n < 63`).
//!
//! A record is one size byte `63 + n` followed by the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed six bits per byte (most significant first) and offset by 63.

use thiserror::Error;

use crate::graph::Graph;

/// Largest `n` accepted by the short form.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("long-form graph6 size header at offset 0 is not supported")]
    LongForm,
    #[error("record truncated: expected {expected} bytes, found {found} (offset {found})")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage starting at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits in final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph has {0} vertices; graph6 short form needs n < 63")]
    UnsupportedSize(usize),
}

impl Graph6Error {
    /// Byte offset the error refers to, when there is one.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            Graph6Error::Empty | Graph6Error::LongForm => Some(0),
            Graph6Error::ByteOutOfRange { offset, .. }
            | Graph6Error::TrailingData { offset }
            | Graph6Error::NonZeroPadding { offset } => Some(offset),
            Graph6Error::Truncated { found, .. } => Some(found),
            Graph6Error::UnsupportedSize(_) => None,
        }
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 record. A single trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text
        .strip_suffix('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::ByteOutOfRange {
            offset,
            byte: bytes[offset],
        });
    }
    if head == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (head - 63) as usize;
    let expected = 1 + body_len(n);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData { offset: expected });
    }

    let mut g = Graph::empty(n).expect("n < 63");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: expected - 1,
            });
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 record without a line terminator.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(63 + (acc << (6 - k % 6)));
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}
