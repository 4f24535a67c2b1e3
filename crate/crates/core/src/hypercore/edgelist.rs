//! Line-oriented text formats for hypergraphs and permutations.
//!
//! Hypergraph files start with `p hsc <n> <k>`, may carry `c <text>` comment
//! lines, and list one edge per line as `e <v1> ... <vk>`. The writer emits
//! vertices ascending and edges in colex order, so equal hypergraphs always
//! serialize to identical bytes.

use std::fmt::Write as _;
use std::io;

use super::hypergraph::Hypergraph;
use super::permutation::Permutation;
use super::subset::KSubset;
use crate::error::{Error, Result};

/// Serializes `h`, placing each entry of `comments` on its own `c ` line after the header.
pub fn to_edge_list(h: &Hypergraph, comments: &[&str]) -> String {
    let mut out = String::with_capacity(16 + h.edge_count() * (4 * h.uniformity() + 2));
    let _ = writeln!(out, "p hsc {} {}", h.order(), h.uniformity());
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    for e in h.edges() {
        out.push('e');
        for v in e.vertices() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn write_edge_list<W: io::Write>(
    h: &Hypergraph,
    comments: &[&str],
    mut w: W,
) -> io::Result<()> {
    w.write_all(to_edge_list(h, comments).as_bytes())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, found {tok:?}"),
        )
    })
}

fn is_comment(line: &str) -> bool {
    line == "c" || line.starts_with("c ")
}

/// Parses the hypergraph edge-list format.
///
/// Edge lines may appear in any order; vertices within a line may be unsorted.
/// Repeated edges are rejected.
pub fn parse_edge_list(text: &str) -> Result<Hypergraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (n, k) = loop {
        let Some((no, line)) = lines.next() else {
            return Err(parse_err(0, "missing `p hsc <n> <k>` header"));
        };
        if is_comment(line) || line.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["p", "hsc", n, k] => break (parse_usize(n, no)?, parse_usize(k, no)?),
            _ => return Err(parse_err(no, "expected header `p hsc <n> <k>`")),
        }
    };
    // Validates (n, k) before reading edges.
    Hypergraph::empty(n, k).map_err(|e| parse_err(1, e.to_string()))?;

    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (no, line) in lines {
        if is_comment(line) || line.trim().is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        if toks.next() != Some("e") {
            return Err(parse_err(no, "expected an `e` edge line or a `c` comment"));
        }
        let verts = toks
            .map(|t| parse_usize(t, no))
            .collect::<Result<Vec<_>>>()?;
        if verts.len() != k {
            return Err(parse_err(
                no,
                format!("edge has {} vertices, expected {k}", verts.len()),
            ));
        }
        let e = KSubset::from_unsorted(verts, n).map_err(|e| parse_err(no, e.to_string()))?;
        if !seen.insert(e.clone()) {
            return Err(parse_err(no, format!("repeated edge {e}")));
        }
        edges.push(e);
    }
    Hypergraph::from_edges(n, k, &edges)
}

pub fn read_edge_list<R: io::Read>(mut r: R) -> Result<Hypergraph> {
    let mut text = String::new();
    r.read_to_string(&mut text)
        .map_err(|e| parse_err(0, format!("read failed: {e}")))?;
    parse_edge_list(&text)
}

/// Parses a permutation file: the images of `0, 1, ..., n-1` as whitespace-separated
/// integers, over any number of lines. Lines starting with `c ` or `#` are ignored.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let mut images = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if is_comment(line) || line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            images.push(parse_usize(tok, i + 1)?);
        }
    }
    Permutation::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_exact_bytes() {
        let h = Hypergraph::from_ranks(5, 3, [3, 0]).unwrap();
        assert_eq!(to_edge_list(&h, &[]), "p hsc 5 3\ne 0 1 2\ne 1 2 3\n");
        assert_eq!(
            to_edge_list(&h, &["hello"]),
            "p hsc 5 3\nc hello\ne 0 1 2\ne 1 2 3\n"
        );
        assert_eq!(
            to_edge_list(&Hypergraph::empty(4, 2).unwrap(), &[]),
            "p hsc 4 2\n"
        );
    }

    #[test]
    fn parses_unsorted_with_comments() {
        let h = parse_edge_list("c leading\np hsc 5 3\nc x\ne 3 2 1\n\ne 0 1 2\n").unwrap();
        assert_eq!(h.ranks(), &[0, 3]);
    }

    #[test]
    fn rejects_malformed_input() {
        let bad = [
            "",
            "p hsc 5\n",
            "p graph 5 3\n",
            "p hsc 5 3\ne 0 1\n",
            "p hsc 5 3\ne 0 1 5\n",
            "p hsc 5 3\ne 0 1 1\n",
            "p hsc 5 3\ne 0 1 2\ne 2 1 0\n",
            "p hsc 5 3\nx 0 1 2\n",
            "p hsc 5 3\ne 0 1 -2\n",
            "p hsc 3 5\n",
        ];
        for text in bad {
            assert!(
                matches!(parse_edge_list(text), Err(Error::Parse { .. })),
                "accepted {text:?}"
            );
        }
    }

    #[test]
    fn permutation_files() {
        let p = parse_permutation("# swap\n3 4 5\n0 1 2\n").unwrap();
        assert_eq!(p.images(), &[3, 4, 5, 0, 1, 2]);
        assert!(parse_permutation("0 0 1").is_err());
        assert!(parse_permutation("0 x").is_err());
    }
}
