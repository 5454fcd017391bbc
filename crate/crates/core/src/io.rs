//! DIMACS and edge-list graph files.
//!
//! DIMACS uses 1-based ids with a `p edge <n> <m>` header. Edge lists are
//! 0-based `u v` pairs, with an optional `# vertices <n>` line so isolated
//! trailing vertices survive a round trip.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Dimacs,
    Edgelist,
}

impl Format {
    /// Guesses from the file extension; anything but `.col`/`.dimacs` is an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col" | "dimacs") => Format::Dimacs,
            _ => Format::Edgelist,
        }
    }
}

pub fn parse_graph(path: &Path, format: Format) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse(&text, format)
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::Edgelist => parse_edgelist(text),
    }
}

pub fn serialize(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        Format::Edgelist => {
            writeln!(out, "# vertices {}", g.n()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
    }
    out
}

pub fn write_graph(path: &Path, g: &Graph, format: Format) -> Result<()> {
    std::fs::write(path, serialize(g, format))?;
    Ok(())
}

fn malformed(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn number(line: usize, token: Option<&str>, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| malformed(line, format!("{what} `{token}` is not a non-negative integer")))
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(malformed(line, "second problem line"));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    other => return Err(malformed(line, format!("unsupported problem type {other:?}"))),
                }
                n = Some(number(line, tokens.next(), "vertex count")?);
                number(line, tokens.next(), "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| malformed(line, "edge before the problem line"))?;
                let u = number(line, tokens.next(), "endpoint")?;
                let v = number(line, tokens.next(), "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(malformed(line, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop { line, vertex: u });
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(malformed(line, format!("unknown line type `{other}`"))),
        }
        if tokens.next().is_some() {
            return Err(malformed(line, "trailing tokens"));
        }
    }
    let n = n.ok_or_else(|| malformed(0, "missing problem line"))?;
    Graph::from_edges(n, &edges)
}

fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut n = 0;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if let Some(comment) = body.strip_prefix('#') {
            let mut tokens = comment.split_whitespace();
            if tokens.next() == Some("vertices") {
                n = n.max(number(line, tokens.next(), "vertex count")?);
            }
            continue;
        }
        if body.is_empty() {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let u = number(line, tokens.next(), "endpoint")?;
        let v = number(line, tokens.next(), "endpoint")?;
        if tokens.next().is_some() {
            return Err(malformed(line, "trailing tokens"));
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn dimacs_examples() {
        let g = parse("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", Format::Dimacs).unwrap();
        assert_eq!(g, complete(3));
        assert!(matches!(
            parse("p edge 2 1\ne 1 1\n", Format::Dimacs),
            Err(Error::SelfLoop { line: 2, vertex: 1 })
        ));
        assert!(matches!(
            parse("p edge 2 1\ne 1 3\n", Format::Dimacs),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse("e 1 2\n", Format::Dimacs),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse("", Format::Dimacs), Err(Error::Parse { .. })));
    }

    #[test]
    fn edgelist_examples() {
        assert_eq!(parse("", Format::Edgelist).unwrap().n(), 0);
        let g = parse("0 1\n1 2\n\n2 1\n", Format::Edgelist).unwrap();
        assert_eq!(g, path(3));
        assert!(matches!(
            parse("0 x\n", Format::Edgelist),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse("0 1\n4 4\n", Format::Edgelist),
            Err(Error::SelfLoop { line: 2, vertex: 4 })
        ));
        assert_eq!(parse("# vertices 5\n0 1\n", Format::Edgelist).unwrap().n(), 5);
    }

    #[test]
    fn round_trips() {
        let g = path(3).disjoint_union(&Graph::new(2));
        for format in [Format::Dimacs, Format::Edgelist] {
            let text = serialize(&g, format);
            let back = parse(&text, format).unwrap();
            assert_eq!(back, g);
            assert_eq!(serialize(&back, format), text);
        }
    }
}
