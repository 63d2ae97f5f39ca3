//! graph6 encoding: header byte(s) for `n`, then the upper triangle in
//! column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits
//! per byte, each byte offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(parse_error(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_error(i, format!("byte {b:#04x} outside 63..126")));
        }
    }

    let (n, body_start) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(parse_error(1, "8-byte size header is not supported"));
        }
        if bytes.len() < 4 {
            return Err(parse_error(bytes.len(), "truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(parse_error(0, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(parse_error(
            body_start + body.len().min(expected),
            format!("expected {expected} body bytes for n = {n}, found {}", body.len()),
        ));
    }

    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_error(body_start + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                acc |= 0x20 >> (k % 6);
            }
            k += 1;
            if k % 6 == 0 {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(acc + OFFSET);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
