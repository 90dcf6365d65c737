//! Edge-list text format and JSON export.
//!
//! ```text
//! # comment
//! vertex a1
//! a1 b1
//! ```
//!
//! `vertex L` declares a vertex (needed for isolated ones); any other
//! non-empty line is an edge `L1 L2`. Vertices are numbered in order of
//! first appearance.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{Graph, LabeledFamilyGraph, Role};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut intern = |label: &str, labels: &mut Vec<String>| -> usize {
        *index.entry(label.to_string()).or_insert_with(|| {
            labels.push(label.to_string());
            labels.len() - 1
        })
    };
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", label] => {
                intern(label, &mut labels);
            }
            ["vertex", ..] => {
                return Err(Error::Parse { line, msg: "expected `vertex LABEL`".into() });
            }
            [u, v] => {
                if u == v {
                    return Err(Error::Parse { line, msg: format!("loop at `{u}`") });
                }
                let a = intern(u, &mut labels);
                let b = intern(v, &mut labels);
                edges.push((a, b));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `LABEL LABEL` or `vertex LABEL`, got `{content}`"),
                })
            }
        }
    }
    let mut g = Graph::edgeless(labels).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    for (u, v) in edges {
        g.insert_edge(u, v)?;
    }
    Ok(g)
}

/// Writes every vertex as a `vertex` line (preserving order), then the edges.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for l in g.labels() {
        out.push_str("vertex ");
        out.push_str(l);
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub roles: BTreeMap<String, Role>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            roles: BTreeMap::new(),
        }
    }
}

impl From<&LabeledFamilyGraph> for GraphJson {
    fn from(g: &LabeledFamilyGraph) -> Self {
        GraphJson { roles: g.roles.clone(), ..GraphJson::from(&g.graph) }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::edgeless(self.vertices.iter().cloned())?;
        for &[u, v] in &self.edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct_gpcq;

    #[test]
    fn parses_comments_and_isolated_vertices() {
        let text = "# a path plus a point\nvertex z\na b   # first edge\n\nb c\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.labels(), ["z", "a", "b", "c"]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("a b\nb\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("a b\n\nc c\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn text_and_json_round_trip() {
        let g = construct_gpcq(2, 3, 4).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g.graph)).unwrap(), g.graph);
        let json = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_graph().unwrap(), g.graph);
        assert_eq!(back.roles, g.roles);
        assert!(json.contains("\"roles\":{\"a1\":{\"role\":\"a\",\"index\":1}"));
    }
}
