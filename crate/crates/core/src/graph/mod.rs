//! Finite simple graphs over string-labelled vertices.
//!
//! Vertices are addressed by their position in the label list; adjacency is
//! kept as one `u64` bitmask per vertex, so a graph has at most
//! [`MAX_VERTICES`] vertices. Graphs are immutable values: every operation
//! returns a new graph.

mod census;
mod family;
mod io;

pub use census::{all_graphs, canonical_form, connected_graphs, forests, CanonicalForm, MAX_CANONICAL_VERTICES};
pub use family::{
    construct_gpcq, construct_lemma_graph, whiskered_complete, LabeledFamilyGraph, Role, RoleKind,
};
pub use io::{parse_edge_list, write_edge_list, GraphJson};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count (one bit per vertex in a `u64`).
pub const MAX_VERTICES: usize = 64;

/// Edge as a pair of vertex indices with `.0 < .1`.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<Edge>,
    adj: Vec<u64>,
}

/// A label that was changed while composing two graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    pub from: String,
    pub to: String,
}

fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn edgeless<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices { max: MAX_VERTICES, got: labels.len() });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let adj = vec![0; labels.len()];
        Ok(Graph { labels, index, edges: BTreeSet::new(), adj })
    }

    /// Graph on `n` vertices labelled `1..=n` with the given index edges.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::edgeless((1..=n).map(|i| i.to_string()))?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph with the given labels and edges given by label.
    pub fn with_labeled_edges<S: AsRef<str>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Self> {
        let mut g = Graph::edgeless(labels.into_iter().map(|s| s.as_ref().to_string()))?;
        for (a, b) in edges {
            let u = g.vertex(a.as_ref())?;
            let v = g.vertex(b.as_ref())?;
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
        }
        if u == v {
            return Err(Error::Loop(self.labels[u].clone()));
        }
        self.edges.insert(normalize(u, v));
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Complete graph `K_m` labelled `1..=m`; `K_0` is the empty graph.
    pub fn complete(m: usize) -> Result<Self> {
        Self::complete_with_labels((1..=m).map(|i| i.to_string()))
    }

    pub fn complete_with_labels<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let mut g = Graph::edgeless(labels)?;
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Path on `n` vertices `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Edges in increasing lexicographic order of `(min, max)` index pairs.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask over vertex indices.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Bitmask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        mask_of_len(self.vertex_count())
    }

    /// Number of edges with both endpoints in `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        bits(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn combine(g: &Graph, h: &Graph) -> (Vec<String>, Vec<Relabel>) {
        let clash = h.labels.iter().any(|l| g.index.contains_key(l));
        if !clash {
            let labels = g.labels.iter().chain(&h.labels).cloned().collect();
            return (labels, Vec::new());
        }
        let mut relabels = Vec::new();
        let mut labels = Vec::with_capacity(g.vertex_count() + h.vertex_count());
        for (prefix, src) in [("L.", g), ("R.", h)] {
            for l in &src.labels {
                let to = format!("{prefix}{l}");
                relabels.push(Relabel { from: l.clone(), to: to.clone() });
                labels.push(to);
            }
        }
        (labels, relabels)
    }

    /// Disjoint union; see [`Graph::disjoint_union_reported`] for label handling.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.disjoint_union_reported(other).map(|(g, _)| g)
    }

    /// Disjoint union. If any label occurs in both graphs, every label is
    /// prefixed with `L.` (left) or `R.` (right) and the renames are returned.
    pub fn disjoint_union_reported(&self, other: &Graph) -> Result<(Graph, Vec<Relabel>)> {
        let (labels, relabels) = Graph::combine(self, other);
        let mut g = Graph::edgeless(labels)?;
        let shift = self.vertex_count();
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + shift, v + shift)?;
        }
        Ok((g, relabels))
    }

    /// Join `G * H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.join_reported(other).map(|(g, _)| g)
    }

    pub fn join_reported(&self, other: &Graph) -> Result<(Graph, Vec<Relabel>)> {
        let (mut g, relabels) = self.disjoint_union_reported(other)?;
        let shift = self.vertex_count();
        for u in 0..shift {
            for v in 0..other.vertex_count() {
                g.insert_edge(u, v + shift)?;
            }
        }
        Ok((g, relabels))
    }

    /// Attaches a whisker to every vertex; the whisker of `v` is labelled `v'`.
    pub fn whisker_all(&self) -> Result<Graph> {
        self.whisker_all_with(|l| format!("{l}'"))
    }

    /// Attaches a whisker to every vertex, naming whiskers with `name`.
    /// Whiskers are appended after the original vertices in the same order.
    pub fn whisker_all_with(&self, name: impl Fn(&str) -> String) -> Result<Graph> {
        let n = self.vertex_count();
        let labels = self
            .labels
            .iter()
            .cloned()
            .chain(self.labels.iter().map(|l| name(l)));
        let mut g = Graph::edgeless(labels)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for v in 0..n {
            g.insert_edge(v, v + n)?;
        }
        Ok(g)
    }

    /// Induced subgraph on the given labels; vertex order follows this graph.
    pub fn induced_subgraph<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        let mut mask = 0u64;
        for l in labels {
            mask |= 1 << self.vertex(l.as_ref())?;
        }
        self.induced_by_mask(mask)
    }

    /// Induced subgraph on the vertices in `mask`; vertex order follows this graph.
    pub fn induced_by_mask(&self, mask: u64) -> Result<Graph> {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        self.reindexed(&keep)
    }

    /// Graph on the listed vertices, in the listed order, with induced edges.
    pub fn reindexed(&self, order: &[usize]) -> Result<Graph> {
        let mut g = Graph::edgeless(order.iter().map(|&v| self.labels[v].clone()))?;
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// The same graph with vertices listed in the order of `labels`.
    pub fn permuted<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidParameters(format!(
                "permutation lists {} labels, graph has {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        let order = labels
            .iter()
            .map(|l| self.vertex(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let mut seen = 0u64;
        for &v in &order {
            if seen >> v & 1 == 1 {
                return Err(Error::DuplicateVertex(self.labels[v].clone()));
            }
            seen |= 1 << v;
        }
        self.reindexed(&order)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::edgeless(self.labels.iter().cloned()).expect("labels already valid");
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v).expect("indices in range");
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let all = self.vertex_mask();
        if all == 0 {
            return true;
        }
        self.component_of(0) == all
    }

    /// Vertex mask of the connected component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_forest(&self) -> bool {
        let mut components = 0;
        let mut seen = 0u64;
        for v in 0..self.vertex_count() {
            if seen >> v & 1 == 0 {
                seen |= self.component_of(v);
                components += 1;
            }
        }
        self.edge_count() + components == self.vertex_count()
    }

    /// Maximum cardinality search order, reversed so that it is a perfect
    /// elimination ordering whenever the graph is chordal.
    pub fn mcs_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut weight = vec![0usize; n];
        let mut numbered = 0u64;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| numbered >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("an unnumbered vertex remains");
            numbered |= 1 << v;
            visit.push(v);
            for u in bits(self.adj[v] & !numbered) {
                weight[u] += 1;
            }
        }
        visit.reverse();
        visit
    }

    /// A perfect elimination ordering, if one exists.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let order = self.mcs_order();
        let mut later = self.vertex_mask();
        for &v in &order {
            later &= !(1 << v);
            let nbrs = self.adj[v] & later;
            if !self.is_clique(nbrs) {
                return None;
            }
        }
        Some(order)
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| mask & !(1 << v) & !self.adj[v] == 0)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// Whether the complement is chordal.
    pub fn is_cochordal(&self) -> bool {
        self.complement().is_chordal()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

pub(crate) fn mask_of_len(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of `mask`, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
