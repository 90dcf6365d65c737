//! Reading graphs and ideals from files or stdin.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use serde_json::Value;
use sqpow_core::monomial::IdealJson;
use sqpow_core::{parse_edge_list, squarefree_power, Graph, GraphJson, MonomialIdeal};

use crate::Failure;

pub enum Input {
    Graph(Graph),
    Ideal(MonomialIdeal),
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Edge-list text, graph JSON, or ideal JSON, told apart by content.
pub fn load(path: &Path) -> Result<Input, Failure> {
    let text = read(path)?;
    let at = |e: String| Failure::usage(format!("{}: {e}", path.display()));
    if !text.trim_start().starts_with('{') {
        return parse_edge_list(&text).map(Input::Graph).map_err(|e| at(e.to_string()));
    }
    let value: Value = serde_json::from_str(&text).map_err(|e| at(e.to_string()))?;
    if value.get("generators").is_some() {
        let json: IdealJson = serde_json::from_value(value).map_err(|e| at(e.to_string()))?;
        MonomialIdeal::from_json(&json).map(Input::Ideal).map_err(|e| at(e.to_string()))
    } else {
        let json: GraphJson = serde_json::from_value(value).map_err(|e| at(e.to_string()))?;
        json.to_graph().map(Input::Graph).map_err(|e| at(e.to_string()))
    }
}

pub fn load_graph(path: &Path) -> Result<Graph, Failure> {
    match load(path)? {
        Input::Graph(g) => Ok(g),
        Input::Ideal(_) => Err(Failure::usage(format!("{}: expected a graph, found an ideal", path.display()))),
    }
}

/// An ideal file as is, or `I(G)^[k]` for a graph file (`k` defaults to 1).
pub fn load_ideal(path: &Path, k: Option<usize>) -> Result<(MonomialIdeal, Option<usize>), Failure> {
    match load(path)? {
        Input::Ideal(i) if k.is_none() => Ok((i, None)),
        Input::Ideal(_) => Err(Failure::usage("a power can only be taken of a graph, not an ideal file")),
        Input::Graph(g) => {
            let k = k.unwrap_or(1);
            Ok((squarefree_power(&g, k)?, Some(k)))
        }
    }
}
