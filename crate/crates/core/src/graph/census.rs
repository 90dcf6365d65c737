//! Isomorphism classes of small graphs.
//!
//! A canonical form is the lexicographically largest adjacency bit string
//! over all vertex orders compatible with colour refinement. Classes are
//! enumerated by vertex augmentation: every graph on `n` vertices is some
//! graph on `n - 1` vertices plus one vertex with an arbitrary neighbourhood.

use std::collections::BTreeSet;

use super::{bits, Graph};

/// Largest vertex count with a canonical form (`16 * 15 / 2 <= 128` bits).
pub const MAX_CANONICAL_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertices: u8,
    /// Adjacency of the canonical order, column by column, most significant first.
    pub bits: u128,
}

impl CanonicalForm {
    /// The graph in canonical vertex order, labelled `1..=n`.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertices as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut k = total;
        for j in 1..n {
            for i in 0..j {
                k -= 1;
                if self.bits >> k & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("canonical forms decode to simple graphs")
    }
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(g.neighbors_mask(v)).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("signature is present"))
            .collect();
        colors = next;
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    cell_of_position: Vec<usize>,
    cells: Vec<u64>,
    order: Vec<usize>,
    best: Option<u128>,
}

impl Search<'_> {
    fn go(&mut self, pos: usize, used: u64, value: u128, filled: usize) {
        if let Some(best) = self.best {
            let shift = self.total - filled;
            let prefix = if shift >= 128 { 0 } else { best >> shift };
            if value < prefix {
                return;
            }
        }
        if pos == self.n {
            if self.best.is_none_or(|b| value > b) {
                self.best = Some(value);
            }
            return;
        }
        let cell = self.cells[self.cell_of_position[pos]] & !used;
        for v in bits(cell) {
            let mut val = value;
            for &u in &self.order {
                val = val << 1 | u128::from(self.g.has_edge(u, v));
            }
            self.order.push(v);
            self.go(pos + 1, used | 1 << v, val, filled + pos);
            self.order.pop();
        }
    }
}

/// Canonical form of a graph with at most [`MAX_CANONICAL_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.vertex_count();
    assert!(n <= MAX_CANONICAL_VERTICES, "canonical forms need <= {MAX_CANONICAL_VERTICES} vertices");
    let colors = refine(g);
    let ncolors = colors.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![0u64; ncolors];
    for (v, &c) in colors.iter().enumerate() {
        cells[c] |= 1 << v;
    }
    let mut cell_of_position = Vec::with_capacity(n);
    for (c, m) in cells.iter().enumerate() {
        cell_of_position.extend(std::iter::repeat_n(c, m.count_ones() as usize));
    }
    let mut search = Search {
        g,
        n,
        total: n * n.saturating_sub(1) / 2,
        cell_of_position,
        cells,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.go(0, 0, 0, 0);
    CanonicalForm { vertices: n as u8, bits: search.best.unwrap_or(0) }
}

fn augment(max_n: usize, keep: &dyn Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::from_edges(0, &[]).expect("empty graph")]];
    for n in 1..=max_n {
        let mut found = BTreeSet::new();
        for g in &levels[n - 1] {
            for nbrs in 0u64..1 << (n - 1) {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend(bits(nbrs).map(|u| (u, n - 1)));
                let h = Graph::from_edges(n, &edges).expect("valid edges");
                if keep(&h) {
                    found.insert(canonical_form(&h));
                }
            }
        }
        levels.push(found.into_iter().map(|c| c.to_graph()).collect());
    }
    levels
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, sorted by canonical form.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    augment(n, &|_| true).pop().unwrap_or_default()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Forests on exactly `n` vertices up to isomorphism.
pub fn forests(n: usize) -> Vec<Graph> {
    augment(n, &Graph::is_forest).pop().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequences() {
        let graphs: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(graphs, [1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112]);
        let forests: Vec<usize> = (1..=8).map(|n| forests(n).len()).collect();
        assert_eq!(forests, [1, 2, 3, 6, 10, 20, 37, 76]);
    }

    #[test]
    fn canonical_form_ignores_labelling() {
        let a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let b = Graph::from_edges(5, &[(4, 3), (3, 0), (0, 2), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let c = Graph::path(5).unwrap();
        assert_ne!(canonical_form(&a), canonical_form(&c));
        let round = canonical_form(&a).to_graph();
        assert_eq!(canonical_form(&round), canonical_form(&a));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&c5.complement()));
    }
}
