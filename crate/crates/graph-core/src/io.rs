//! Text formats: a plain edge list, graph6, and DOT output.

use crate::{Graph, GraphError};

/// Parses either format. Input whose first meaningful line looks like a
/// graph6 word (or carries the `>>graph6<<` header) is read as graph6,
/// anything else as an edge list.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with(">>graph6<<") => parse_graph6(l),
        Some(l) if looks_like_graph6(l) => parse_graph6(l),
        _ => parse_edge_list(text),
    }
}

fn looks_like_graph6(line: &str) -> bool {
    // Edge lists always contain whitespace-separated decimal ids. A graph6
    // word is a single token; "0" alone is ambiguous and treated as an edge
    // list vertex declaration.
    !line.contains(char::is_whitespace)
        && line.bytes().all(|b| (63..=126).contains(&b))
        && !line.bytes().all(|b| b.is_ascii_digit())
}

/// Edge list: one `u v` pair per line, `#` starts a comment. A line holding
/// a single id declares that vertex, which is how isolated vertices with the
/// largest ids survive a round trip.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let ids: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    reason: format!("expected a vertex id, found {t:?}"),
                })
            })
            .collect::<Result<_, _>>()?;
        match ids[..] {
            [v] => n = n.max(v + 1),
            [a, b] => {
                n = n.max(a.max(b) + 1);
                edges.push((a, b));
            }
            _ => {
                return Err(GraphError::Parse {
                    line: line_no,
                    reason: format!("expected 1 or 2 ids, found {}", ids.len()),
                })
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let mut covered = vec![false; g.n()];
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
        covered[a] = true;
        covered[b] = true;
    }
    for v in (0..g.n()).filter(|&v| !covered[v]) {
        out.push_str(&format!("{v}\n"));
    }
    out
}

fn g6_err(reason: &str) -> GraphError {
    GraphError::Parse {
        line: 1,
        reason: reason.to_string(),
    }
}

/// Reads one graph6 word (header optional, trailing whitespace ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(&format!("byte {b} outside the graph6 range")));
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (val(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = (val(bytes[1]) << 12) | (val(bytes[2]) << 6) | val(bytes[3]);
        (n, &bytes[4..])
    } else if bytes.len() >= 8 {
        let mut n = 0;
        for &b in &bytes[2..8] {
            n = (n << 6) | val(b);
        }
        (n, &bytes[8..])
    } else {
        return Err(g6_err("truncated size header"));
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    if body.len() != bits_needed.div_ceil(6) {
        return Err(g6_err(&format!(
            "body has {} bytes, expected {} for n={n}",
            body.len(),
            bits_needed.div_ceil(6)
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = val(body[k / 6]);
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// DOT rendering. `edge_attr` may decorate individual edges, e.g. with a
/// color per path.
pub fn to_dot(g: &Graph, edge_attr: impl Fn(usize, usize) -> Option<String>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(a, b) in g.edges() {
        match edge_attr(a, b) {
            Some(attr) => out.push_str(&format!("  {a} -- {b} [{attr}];\n")),
            None => out.push_str(&format!("  {a} -- {b};\n")),
        }
    }
    out.push_str("}\n");
    out
}
