//! graph6 codec.
//!
//! Layout: a size header followed by the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! big-endian into 6-bit groups, each offset by 63 and zero padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the 4-byte size header.
pub const MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::CapExceeded { what: "graph6 encode", n, cap: MAX_ORDER });
    }
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
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

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} outside the printable range 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, ..] => return Err(bad(format!("orders above {MAX_ORDER} are not supported"))),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated size header"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n < 63 {
                return Err(bad(format!("non-canonical size header for n = {n}")));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!("expected {expected} data bytes for n = {n}, found {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Graph::new(n, &edges)
}
