//! Edge-list and graph6 text formats.
//!
//! Edge lists start with a header line `n <count>` followed by one `u v`
//! pair per line. Blank lines and lines starting with `#` are ignored.

use std::collections::HashSet;
use std::str::FromStr;

use super::{Graph, GraphError, ParseErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "graph6" => Ok(Format::Graph6),
            other => Err(format!("unknown graph format `{other}` (expected edgelist or graph6)")),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, GraphError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Graph6 => write_graph6(g) + "\n",
    }
}

fn malformed(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::at_line(line, ParseErrorKind::Malformed(msg.into()))
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some(count) = n else {
            match fields.as_slice() {
                ["n", count] => {
                    let count =
                        count.parse::<usize>().map_err(|_| malformed(line, format!("bad vertex count `{count}`")))?;
                    n = Some(count);
                    continue;
                }
                _ => return Err(malformed(line, "expected header `n <count>`")),
            }
        };
        let [a, b] = fields.as_slice() else {
            return Err(malformed(line, format!("expected `u v`, got `{content}`")));
        };
        let parse_id = |s: &str| s.parse::<usize>().map_err(|_| malformed(line, format!("bad vertex id `{s}`")));
        let (u, v) = (parse_id(a)?, parse_id(b)?);
        for w in [u, v] {
            if w >= count {
                return Err(GraphError::at_line(line, ParseErrorKind::VertexOutOfRange { vertex: w, n: count }));
            }
        }
        if u == v {
            return Err(GraphError::at_line(line, ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(GraphError::at_line(line, ParseErrorKind::DuplicateEdge(key.0, key.1)));
        }
        edges.push(key);
    }
    let n = n.ok_or_else(|| malformed(text.lines().count().max(1), "missing header `n <count>`"))?;
    Graph::from_edges(n, edges)
}

fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let (line, body) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| malformed(1, "empty graph6 input"))?;
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    let bytes = body.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(line, format!("invalid graph6 byte 0x{bad:02x}")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, rest) = match bytes {
        [] => return Err(malformed(line, "empty graph6 input")),
        [126, 126, tail @ ..] => {
            if tail.len() < 6 {
                return Err(malformed(line, "truncated graph6 size"));
            }
            (tail[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b)), &tail[6..])
        }
        [126, tail @ ..] => {
            if tail.len() < 3 {
                return Err(malformed(line, "truncated graph6 size"));
            }
            (tail[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b)), &tail[3..])
        }
        [first, tail @ ..] => (six(*first), tail),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(malformed(
            line,
            format!("graph6 body has {} bytes, expected {} for n = {n}", rest.len(), bits.div_ceil(6)),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if (six(rest[k / 6]) >> (5 - k % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}
