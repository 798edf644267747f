//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, packed column by column into 6-bit groups offset by 63.

use crate::error::{Result, SpexError};
use crate::graph::Graph;

const BIAS: u8 = 63;
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LARGE_MAX: usize = 68_719_476_735;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= SMALL_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        assert!(n <= LARGE_MAX, "graph6 cannot represent {n} vertices");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(SpexError::Parse {
            offset,
            message: format!("byte {b:#04x} outside the graph6 range 63..=126"),
        }),
        None => Err(SpexError::Parse {
            offset,
            message: "unexpected end of input".into(),
        }),
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let read = |count: usize, from: usize| -> Result<usize> {
        (from..from + count).try_fold(0usize, |acc, i| Ok((acc << 6) | sextet(bytes, i)? as usize))
    };
    match bytes {
        [126, 126, ..] => Ok((read(6, 2)?, 8)),
        [126, ..] => Ok((read(3, 1)?, 4)),
        [] => Err(SpexError::Parse {
            offset: 0,
            message: "empty graph6 string".into(),
        }),
        _ => Ok((sextet(bytes, 0)? as usize, 1)),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end();
    let (skip, body) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    let locate = |e: SpexError| match e {
        SpexError::Parse { offset, message } => SpexError::Parse {
            offset: offset + skip,
            message,
        },
        other => other,
    };
    let (n, header) = decode_size(bytes).map_err(locate)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(SpexError::Parse {
            offset: skip + bytes.len().min(expected),
            message: format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        });
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = sextet(bytes, header + k / 6).map_err(locate)?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = header + bits / 6;
        let pad = 6 - bits % 6;
        if sextet(bytes, last).map_err(locate)? & ((1 << pad) - 1) != 0 {
            return Err(SpexError::Parse {
                offset: skip + last,
                message: "non-zero padding bits".into(),
            });
        }
    }
    Ok(Graph::from_raw_adjacency(adj))
}
