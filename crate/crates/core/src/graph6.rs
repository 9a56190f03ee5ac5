//! graph6 text codec, short form only (n <= 62).
//!
//! Layout: one byte N(n) = n + 63, then the upper triangle x(i,j) for
//! j = 1..n-1, i = 0..j-1 packed into big-endian 6-bit groups, each
//! group offset by 63. Padding bits must be zero; the writer emits
//! exactly that form and the parser rejects anything else, so
//! parse(write(g)) == g byte for byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_VERTICES: usize = 62;

const OPTIONAL_HEADER: &[u8] = b">>graph6<<";

fn malformed(offset: usize, reason: &str) -> Error {
    Error::Malformed { offset, reason: reason.to_string() }
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::BadVertexCount { n, cap: GRAPH6_MAX_VERTICES });
    }
    let mut out = vec![(n + 63) as u8];
    let mut value = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            if g.adjacent(i, j) {
                value |= 1 << (5 - filled);
            }
            filled += 1;
            if filled == 6 {
                out.push(value + 63);
                value = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(value + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0usize;
    if bytes.starts_with(OPTIONAL_HEADER) {
        bytes = &bytes[OPTIONAL_HEADER.len()..];
        base = OPTIONAL_HEADER.len();
    }
    if bytes.is_empty() {
        return Err(malformed(base, "empty input"));
    }
    let b0 = bytes[0];
    if b0 == b'~' {
        return Err(malformed(base, "long form (n > 62) not supported"));
    }
    if !(63..=125).contains(&b0) {
        return Err(malformed(base, "vertex count byte outside 63..=125"));
    }
    let n = (b0 - 63) as usize;
    if n == 0 {
        return Err(malformed(base, "empty graph (n = 0) not supported"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(malformed(
            base + bytes.len(),
            &format!("truncated: need {} edge bytes, found {}", nbytes, body.len()),
        ));
    }
    if body.len() > nbytes {
        return Err(malformed(base + 1 + nbytes, "trailing data after edge bytes"));
    }
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(base + 1 + k, "edge byte outside 63..=126"));
        }
    }
    let bit = |t: usize| -> bool {
        let group = (body[t / 6] - 63) as u32;
        group >> (5 - t % 6) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit(t) {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    for pad in nbits..nbytes * 6 {
        if bit(pad) {
            return Err(malformed(base + 1 + pad / 6, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}
