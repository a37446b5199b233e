//! Text formats: graph6 and a plain edge list.
//!
//! graph6 follows the nauty definition: the vertex count is one byte
//! `63 + n` for `n <= 62`, `126` followed by three 6-bit groups for
//! `n <= 258047`, or `126 126` followed by six groups beyond that. The
//! upper triangle is then packed column by column (`(0,1), (0,2), (1,2),
//! (0,3), ...`) six bits per byte, each byte offset by 63.
//!
//! The edge list is an `n m` header line followed by `m` lines `u v`
//! (0-indexed). Blank lines and lines starting with `#` are skipped.

use crate::graph::{Graph, GraphError};

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
}

/// graph6 encoding without a trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(63 + acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(63 + (acc << (6 - bits)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 string (an optional `>>graph6<<` header and
/// surrounding whitespace are accepted).
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let line_no = 1;
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(line_no, "empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(line_no, format!("invalid graph6 byte {b:#04x}")));
    }
    let group = |k: &[u8]| k.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(parse_err(line_no, "truncated graph6 size"));
        }
        (group(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(parse_err(line_no, "truncated graph6 size"));
        }
        (group(&bytes[2..8]), &bytes[8..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(
            line_no,
            format!("graph6 body has {} bytes, expected {expected} for n={n}", body.len()),
        ));
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
    if pairs % 6 != 0 {
        let pad = body[body.len() - 1] - 63;
        if pad & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(parse_err(line_no, "non-zero graph6 padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Edge-list text: header `n m` then one `u v` per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let nums = parse_pair(hline, header)?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range for n={n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        edges.push((line, u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let mut g = Graph::empty(n);
    for (line, u, v) in edges {
        g = g.with_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line, format!("invalid integer `{tok}`")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if it.next().is_some() {
        return Err(parse_err(line, "expected exactly two integers"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // reference strings as produced by nauty's geng / showg
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::path(4)), "Ch");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(from_graph6(">>graph6<<Dhc\n").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn long_size_header() {
        let g = Graph::path(100);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 1, 63 + 36]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_bad_graph6() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::cycle(4);
        assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        let text = "# comment\n3 2\n0 1\n\n1 2\n";
        assert_eq!(from_edge_list(text).unwrap(), Graph::path(3));
        match from_edge_list("3 2\n0 1\n1 x\n") {
            Err(GraphError::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match from_edge_list("3 2\n0 1\n1 0\n") {
            Err(GraphError::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(from_edge_list("3 1\n0 3\n").is_err());
        assert!(from_edge_list("3 2\n0 1\n").is_err());
        assert!(from_edge_list("").is_err());
    }
}
