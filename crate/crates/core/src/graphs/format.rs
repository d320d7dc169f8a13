//! graph6 and the `n; i j; i j` edge-list text format.

use super::Graph;
use crate::error::{Error, Result};

const LONG_LIMIT: usize = 258_047;

/// Encodes `g` in graph6. Orders above 62 use the `~` long header.
pub fn graph6_emit(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= LONG_LIMIT, "graph6 order limit");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adj0(i, j) as u8;
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

/// Decodes one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are ignored.
pub fn graph6_parse(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(">>graph6<<") {
        body = rest;
        base += ">>graph6<<".len();
    }
    let bytes = body.as_bytes();
    let get = |i: usize| -> Result<u32> {
        match bytes.get(i) {
            None => Err(Error::parse(base + i, "truncated graph6 string")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u32),
            Some(&b) => Err(Error::parse(base + i, format!("byte {b} outside the graph6 range"))),
        }
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(Error::parse(base, "empty graph6 string")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(Error::parse(base + 1, "eight-byte graph6 headers are not supported"));
            }
            let n = (get(1)? << 12 | get(2)? << 6 | get(3)?) as usize;
            if n < 63 {
                return Err(Error::parse(base, "long graph6 header used for a small order"));
            }
            (n, 4)
        }
        Some(_) => (get(0)? as usize, 1),
    };
    let l = n * n.saturating_sub(1) / 2;
    let need = l.div_ceil(6);
    if bytes.len() > pos + need {
        return Err(Error::parse(base + pos + need, "trailing bytes after graph6 data"));
    }
    let mut g = Graph::empty(n);
    let mut t = 0;
    for _ in 0..need {
        let chunk = get(pos)?;
        for bit in (0..6).rev() {
            if t < l && chunk >> bit & 1 == 1 {
                let (i, j) = pair_of(t);
                g.add_edge0(i, j);
            }
            t += 1;
        }
        pos += 1;
    }
    Ok(g)
}

// Column-major index t -> (i, j) with i < j.
fn pair_of(t: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= t {
        start += j;
        j += 1;
    }
    (t - start, j)
}

/// `n; i j; i j; ...` with 1-based endpoints.
pub fn edge_list_emit(g: &Graph) -> String {
    let mut s = g.n().to_string();
    for (a, b) in g.edges() {
        s.push_str(&format!("; {a} {b}"));
    }
    s
}

pub fn edge_list_parse(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for field in text.split(';') {
        let at = offset + (field.len() - field.trim_start().len());
        offset += field.len() + 1;
        let f = field.trim();
        if f.is_empty() {
            if n.is_none() {
                return Err(Error::parse(at, "missing vertex count"));
            }
            continue;
        }
        let nums: Vec<&str> = f.split_whitespace().collect();
        let parsed: std::result::Result<Vec<usize>, _> = nums.iter().map(|x| x.parse::<usize>()).collect();
        let Ok(parsed) = parsed else {
            return Err(Error::parse(at, format!("expected integers, found `{f}`")));
        };
        match (n, parsed.as_slice()) {
            (None, [v]) => n = Some(*v),
            (None, _) => return Err(Error::parse(at, "expected the vertex count first")),
            (Some(m), [a, b]) => {
                if a == b || *a == 0 || *b == 0 || *a > m || *b > m {
                    return Err(Error::parse(at, format!("bad edge {a} {b} for {m} vertices")));
                }
                edges.push((*a, *b));
            }
            (Some(_), _) => return Err(Error::parse(at, format!("expected `i j`, found `{f}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing vertex count"))?;
    Graph::from_edges(n, edges)
}
