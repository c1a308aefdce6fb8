//! Text formats: graph6, plain edge lists, and spanning-tree edge lists.
//!
//! Edge lists are one `u v` pair per line with 0-based ids. Blank lines and
//! `#` comments are ignored. An optional first data line holding a single
//! integer fixes the vertex count; without it `n` is one more than the
//! largest id seen.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{ordered, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

impl Format {
    /// `.g6` selects graph6, `.el` selects edge lists.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "g6" => Some(Format::Graph6),
            "el" => Some(Format::Edgelist),
            _ => None,
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, GraphError> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::Edgelist => parse_edgelist(text),
    }
}

pub fn encode_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => {
            let mut s = encode_graph6(g);
            s.push('\n');
            s
        }
        Format::Edgelist => encode_edgelist(g),
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_id(tok: &str, line: usize) -> Result<usize, GraphError> {
    tok.parse::<usize>().map_err(|_| GraphError::Malformed {
        line,
        message: format!("expected a vertex id, found {tok:?}"),
    })
}

pub fn parse_edgelist(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    for (idx, (line, content)) in data_lines(text).enumerate() {
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [n] if idx == 0 => declared = Some(parse_id(n, line)?),
            [a, b] => {
                let (u, v) = (parse_id(a, line)?, parse_id(b, line)?);
                if u == v {
                    return Err(GraphError::Malformed {
                        line,
                        message: format!("self-loop at vertex {u}"),
                    });
                }
                edges.push((line, (u, v)));
            }
            _ => {
                return Err(GraphError::Malformed {
                    line,
                    message: "expected two whitespace-separated vertex ids".into(),
                })
            }
        }
    }
    let n = match declared {
        Some(n) => {
            for &(line, (u, v)) in &edges {
                let vertex = u.max(v);
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex, n });
                }
            }
            n
        }
        None => edges.iter().map(|&(_, (u, v))| u.max(v) + 1).max().unwrap_or(0),
    };
    Graph::from_edges(n, edges.into_iter().map(|(_, e)| e))
}

/// Edge list with arbitrary string labels. Labels are mapped to `0..n` in
/// order of first appearance; the returned vector maps ids back to labels.
pub fn parse_labeled_edgelist(text: &str) -> Result<(Graph, Vec<String>), GraphError> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (line, content) in data_lines(text) {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(GraphError::Malformed {
                line,
                message: "expected two whitespace-separated labels".into(),
            });
        };
        let mut ends = [0usize; 2];
        for (slot, t) in ends.iter_mut().zip([*a, *b]) {
            *slot = *ids.entry(t).or_insert_with(|| {
                labels.push(t.to_string());
                labels.len() - 1
            });
        }
        let [u, v] = ends;
        if u == v {
            return Err(GraphError::Malformed {
                line,
                message: format!("self-loop at {a}"),
            });
        }
        edges.push((u, v));
    }
    Ok((Graph::from_edges(labels.len(), edges)?, labels))
}

pub fn encode_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Decodes a single graph6 string (short or long size form). Surrounding
/// whitespace and the optional `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let s = text.trim();
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("invalid byte {b:#x}")));
    }
    let (n, rest) = match bytes {
        [126, 126, r @ ..] => {
            if r.len() < 6 {
                return Err(GraphError::Graph6("truncated 8-byte size".into()));
            }
            let n = r[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &r[6..])
        }
        [126, r @ ..] => {
            if r.len() < 3 {
                return Err(GraphError::Graph6("truncated 4-byte size".into()));
            }
            let n = r[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &r[3..])
        }
        [b, r @ ..] => ((b - 63) as usize, r),
        [] => unreachable!(),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if rest.len() != need {
        return Err(GraphError::Graph6(format!(
            "expected {need} data bytes for n = {n}, found {}",
            rest.len()
        )));
    }
    let bit = |k: usize| -> bool { (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1 };
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in nbits..need * 6 {
        if bit(pad) {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses a tree given either as a JSON array of pairs or as `u v` lines.
pub fn parse_tree_edges(text: &str) -> Result<Vec<Edge>, GraphError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let pairs: Vec<(usize, usize)> =
            serde_json::from_str(trimmed).map_err(|e| GraphError::Malformed {
                line: e.line(),
                message: e.to_string(),
            })?;
        return Ok(pairs.into_iter().map(|(u, v)| ordered(u, v)).collect());
    }
    let mut out = Vec::new();
    for (line, content) in data_lines(text) {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(GraphError::Malformed {
                line,
                message: "expected two whitespace-separated vertex ids".into(),
            });
        };
        out.push(ordered(parse_id(a, line)?, parse_id(b, line)?));
    }
    Ok(out)
}

/// Sorted edge list, one `u v` pair per line.
pub fn encode_tree_edges(edges: &[Edge]) -> String {
    let mut sorted: Vec<Edge> = edges.iter().map(|&(u, v)| ordered(u, v)).collect();
    sorted.sort_unstable();
    sorted.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), g);
    }

    #[test]
    fn graph6_known_strings() {
        // Reference encodings of the Petersen graph and P4.
        assert_eq!(encode_graph6(&Graph::path(4)), "Ch");
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(p.m(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
    }

    #[test]
    fn graph6_long_form() {
        let g = Graph::path(100);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn edgelist_examples() {
        let g = parse_edgelist("0 1\n1 2\n2 3").unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        let g = parse_edgelist("0 1\n1 0").unwrap();
        assert_eq!(g.m(), 1);
        let g = parse_edgelist("# comment\n5\n0 1 # trailing\n\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 1));
    }

    #[test]
    fn edgelist_errors() {
        assert_eq!(
            parse_edgelist("0 1\n1 x\n"),
            Err(GraphError::Malformed {
                line: 2,
                message: "expected a vertex id, found \"x\"".into()
            })
        );
        assert_eq!(
            parse_edgelist("3\n0 1\n1 3\n"),
            Err(GraphError::VertexOutOfRange { line: 3, vertex: 3, n: 3 })
        );
        assert!(matches!(
            parse_edgelist("0 1 2\n"),
            Err(GraphError::Malformed { line: 1, .. })
        ));
        assert!(parse_edgelist("2 2\n").is_err());
    }

    #[test]
    fn labeled_edgelist_remaps() {
        let (g, labels) = parse_labeled_edgelist("a b\nb c\n# x\nc a\n").unwrap();
        assert_eq!(labels, vec!["a", "b", "c"]);
        assert_eq!(g, Graph::cycle(3));
    }

    #[test]
    fn tree_formats() {
        let e = parse_tree_edges("1 0\n0 2\n").unwrap();
        assert_eq!(e, vec![(0, 1), (0, 2)]);
        assert_eq!(parse_tree_edges("[[2,0],[0,1]]").unwrap(), vec![(0, 2), (0, 1)]);
        assert_eq!(encode_tree_edges(&[(2, 0), (1, 0)]), "0 1\n0 2\n");
    }
}
