//! The graph6 format for graphs with at most 62 vertices.

use girthgen_core::CubicGraph;

use crate::error::{Error, Result};

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// The graph6 line of `g`, without the trailing newline.
pub fn encode(g: &CubicGraph) -> String {
    let n = g.order();
    assert!(n <= 62, "graph6 short form only");
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("printable ASCII")
}

/// Parses one graph6 line (a trailing newline is allowed).
pub fn decode(line: &str) -> Result<CubicGraph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_error(0, "empty line"));
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_error(i, format!("byte {b} outside 63..=126")));
        }
    }
    if first == 126 {
        return Err(parse_error(0, "orders above 62 are not supported"));
    }
    let n = (first - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let want = pairs.div_ceil(6);
    if bytes.len() != 1 + want {
        return Err(parse_error(
            bytes.len().min(1 + want),
            format!(
                "expected {} bytes for {n} vertices, found {}",
                1 + want,
                bytes.len()
            ),
        ));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    if !pairs.is_multiple_of(6) {
        let last = bytes[want] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(parse_error(want, "padding bits are not zero"));
        }
    }
    let mut rows = Vec::with_capacity(n);
    for (v, nb) in adj.iter().enumerate() {
        if nb.len() != 3 {
            return Err(parse_error(
                0,
                format!("vertex {v} has degree {}", nb.len()),
            ));
        }
        rows.push([nb[0], nb[1], nb[2]]);
    }
    Ok(CubicGraph::from_adjacency(&rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use girthgen_core::named::*;

    #[test]
    fn k4_by_hand() {
        assert_eq!(encode(&k4()), "C~");
        assert_eq!(decode("C~\n").unwrap().edges(), k4().edges());
    }

    #[test]
    fn round_trips() {
        for g in [k33(), petersen(), heawood(), cube(), prism()] {
            assert_eq!(decode(&encode(&g)).unwrap().edges(), g.edges());
        }
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(decode(""), Err(Error::Graph6 { offset: 0, .. })));
        // K4 needs six bits, so "C" alone is short
        assert!(matches!(decode("C"), Err(Error::Graph6 { .. })));
        // a 4-cycle is not cubic
        assert!(decode("Cl").is_err());
    }
}
