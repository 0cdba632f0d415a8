//! Graph JSON and plain edge-list formats.
//!
//! JSON: `{"n": 4, "colours": ["red", "blue"], "edges": [[0, 1, 0], ...]}`.
//! Edge list: one `u v colour` per line, colour given as an index or a
//! palette name; `#` starts a comment and an optional `n <count>` line
//! declares the vertex count.

use serde::{Deserialize, Serialize};

use super::{default_palette, Colour, ColouredGraph, ColouredMultiGraph, EdgeColouring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default)]
    pub colours: Vec<String>,
    pub edges: Vec<(usize, usize, Colour)>,
}

impl GraphJson {
    #[must_use]
    pub fn from_colouring(g: &EdgeColouring) -> Self {
        Self { n: g.n(), colours: g.palette().to_vec(), edges: g.coloured_edges() }
    }

    fn palette(&self) -> Vec<String> {
        if self.colours.is_empty() {
            let needed = self.edges.iter().map(|e| usize::from(e.2) + 1).max().unwrap_or(2);
            default_palette(needed)
        } else {
            self.colours.clone()
        }
    }

    pub fn to_graph(&self) -> Result<ColouredGraph> {
        ColouredGraph::new(self.n, self.palette(), &self.edges)
    }

    pub fn to_multigraph(&self) -> Result<ColouredMultiGraph> {
        ColouredMultiGraph::new(self.n, self.palette(), &self.edges)
    }
}

pub fn graph_from_json(text: &str) -> Result<ColouredGraph> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

pub fn multigraph_from_json(text: &str) -> Result<ColouredMultiGraph> {
    serde_json::from_str::<GraphJson>(text)?.to_multigraph()
}

#[must_use]
pub fn graph_to_json(g: &EdgeColouring) -> String {
    serde_json::to_string(&GraphJson::from_colouring(g)).expect("serializable")
}

/// Whitespace-separated fields with their 1-based starting columns.
fn fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// Parses the edge-list format into a [`GraphJson`] description.
pub fn parse_edge_list(text: &str) -> Result<GraphJson> {
    let names = default_palette(3);
    let mut declared_n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens = fields(line);
        if tokens.is_empty() {
            continue;
        }
        let err = |column: usize, message: String| Error::Parse { line: lineno + 1, column, message };
        if tokens[0].1 == "n" {
            if tokens.len() != 2 {
                return Err(err(tokens[0].0, "expected `n <count>`".into()));
            }
            let n = tokens[1].1.parse().map_err(|_| err(tokens[1].0, format!("bad vertex count {:?}", tokens[1].1)))?;
            declared_n = Some(n);
            continue;
        }
        if tokens.len() != 3 {
            return Err(err(tokens[0].0, format!("expected `u v colour`, found {} fields", tokens.len())));
        }
        let u: usize = tokens[0].1.parse().map_err(|_| err(tokens[0].0, format!("bad vertex {:?}", tokens[0].1)))?;
        let v: usize = tokens[1].1.parse().map_err(|_| err(tokens[1].0, format!("bad vertex {:?}", tokens[1].1)))?;
        let c: Colour = match tokens[2].1.parse() {
            Ok(c) => c,
            Err(_) => names
                .iter()
                .position(|s| s == tokens[2].1)
                .map(|c| c as Colour)
                .ok_or_else(|| err(tokens[2].0, format!("unknown colour {:?}", tokens[2].1)))?,
        };
        edges.push((u, v, c));
    }
    let inferred = edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared_n.unwrap_or(inferred);
    Ok(GraphJson { n, colours: Vec::new(), edges })
}

#[must_use]
pub fn to_edge_list(g: &EdgeColouring) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v, c) in g.coloured_edges() {
        out.push_str(&format!("{u} {v} {c}\n"));
    }
    out
}

/// Reads either format, deciding by the first non-blank character.
pub fn parse_graph_text(text: &str) -> Result<GraphJson> {
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(text)?)
    } else {
        parse_edge_list(text)
    }
}

pub fn read_graph_file(path: &std::path::Path) -> Result<GraphJson> {
    parse_graph_text(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let g = ColouredGraph::two_coloured(4, &[(0, 1, 0), (2, 1, 1), (3, 0, 1)]).unwrap();
        let text = graph_to_json(&g);
        assert_eq!(graph_from_json(&text).unwrap(), g);
    }

    #[test]
    fn json_errors_carry_position() {
        match graph_from_json("{\"n\": 3,\n \"edges\": [[0,1,]]}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = ColouredGraph::two_coloured(5, &[(0, 1, 0), (2, 3, 1)]).unwrap();
        let parsed = parse_edge_list(&to_edge_list(&g)).unwrap().to_graph().unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn edge_list_names_and_errors() {
        let j = parse_edge_list("# triangle\n0 1 red\n1 2 blue\n2 0 0\n").unwrap();
        assert_eq!(j.n, 3);
        assert_eq!(j.edges[1], (1, 2, 1));
        match parse_edge_list("0 1 red\n0  x blue\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
