//! Matchings and the matching invariants `nu`, `nu1` (induced) and `nu2`
//! (smallest maximal matching).
//!
//! Everything here is exhaustive search; graphs of interest have at most a
//! dozen or so vertices.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph};

/// Pairwise disjoint edges, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates that `edges` are edges of `g` and pairwise disjoint.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut used = 0u64;
        let mut out = Vec::new();
        for (u, v) in edges {
            let (u, v) = (u.min(v), u.max(v));
            if !g.has_edge(u, v) {
                return Err(Error::NotAMatching(format!("{u}-{v} is not an edge")));
            }
            let m = 1u64 << u | 1u64 << v;
            if used & m != 0 {
                return Err(Error::NotAMatching(format!("{u}-{v} meets another edge")));
            }
            used |= m;
            out.push((u, v));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertex set covered by the matching.
    pub fn support(&self) -> u64 {
        self.edges.iter().fold(0, |m, &(u, v)| m | 1 << u | 1 << v)
    }
}

fn collect_matchings(
    edges: &[Edge],
    start: usize,
    k: usize,
    used: u64,
    current: &mut Vec<Edge>,
    out: &mut Vec<Matching>,
) {
    if current.len() == k {
        out.push(Matching { edges: current.clone() });
        return;
    }
    let need = k - current.len();
    for i in start..edges.len() {
        if edges.len() - i < need {
            break;
        }
        let (u, v) = edges[i];
        let m = 1u64 << u | 1u64 << v;
        if used & m == 0 {
            current.push((u, v));
            collect_matchings(edges, i + 1, k, used | m, current, out);
            current.pop();
        }
    }
}

/// All `k`-matchings, in lexicographic order of their (sorted) edge lists.
pub fn enumerate_matchings(g: &Graph, k: usize) -> Vec<Matching> {
    let edges: Vec<Edge> = g.edges().collect();
    let mut out = Vec::new();
    collect_matchings(&edges, 0, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Maximum matching size within the vertex set `mask`.
pub fn matching_number_within(g: &Graph, mask: u64) -> usize {
    fn go(g: &Graph, mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if mask.count_ones() < 2 {
            return 0;
        }
        if let Some(&m) = memo.get(&mask) {
            return m;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(g, rest, memo);
        for u in bits(g.neighbors_mask(v) & rest) {
            best = best.max(1 + go(g, rest & !(1 << u), memo));
            if 2 * best >= mask.count_ones() as usize - 1 {
                break;
            }
        }
        memo.insert(mask, best);
        best
    }
    go(g, mask, &mut HashMap::new())
}

pub fn matching_number(g: &Graph) -> usize {
    matching_number_within(g, g.vertex_mask())
}

/// Whether the vertices of `mask` are exactly covered by some matching.
pub fn has_perfect_matching(g: &Graph, mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    bits(g.neighbors_mask(v) & rest).any(|u| has_perfect_matching(g, rest & !(1 << u)))
}

pub fn is_induced_matching(g: &Graph, m: &Matching) -> Result<bool> {
    // Re-validate against this graph.
    Matching::new(g, m.edges.iter().copied())?;
    let sub = g.induced_by_mask(m.support())?;
    Ok(sub.edge_count() == m.len())
}

pub fn induced_matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, edges: &[Edge], start: usize, blocked: u64, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if blocked >> u & 1 == 1 || blocked >> v & 1 == 1 {
                continue;
            }
            // Closed neighbourhood of the edge.
            let closed = 1u64 << u | 1u64 << v | g.neighbors_mask(u) | g.neighbors_mask(v);
            go(g, edges, i + 1, blocked | closed, size + 1, best);
        }
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut best = 0;
    go(g, &edges, 0, 0, 0, &mut best);
    best
}

/// Minimum size of a maximal matching; 0 for an edgeless graph.
pub fn min_maximal_matching_number(g: &Graph) -> usize {
    fn go(edges: &[Edge], used: u64, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        let free: Vec<&Edge> = edges
            .iter()
            .filter(|&&(u, v)| used & (1 << u | 1 << v) == 0)
            .collect();
        if free.is_empty() {
            *best = size;
            return;
        }
        // Some edge touching the first free edge's endpoints must be in any
        // maximal extension, so branching on those edges is exhaustive.
        let (a, b) = *free[0];
        for &&(u, v) in &free {
            if u == a || u == b || v == a || v == b {
                go(edges, used | 1 << u | 1 << v, size + 1, best);
            }
        }
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut best = usize::MAX;
    go(&edges, 0, 0, &mut best);
    if best == usize::MAX {
        0
    } else {
        best
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingInvariants {
    pub nu: usize,
    pub nu1: usize,
    pub nu2: usize,
}

impl MatchingInvariants {
    pub fn of(g: &Graph) -> Self {
        MatchingInvariants {
            nu: matching_number(g),
            nu1: induced_matching_number(g),
            nu2: min_maximal_matching_number(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_graphs;

    fn p4() -> Graph {
        Graph::with_labeled_edges(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap()
    }

    /// Brute force over all edge subsets.
    fn brute(g: &Graph) -> (usize, usize, usize) {
        let edges: Vec<Edge> = g.edges().collect();
        let (mut nu, mut nu1, mut nu2) = (0, 0, usize::MAX);
        for set in 0u64..1 << edges.len() {
            let chosen: Vec<Edge> = bits(set).map(|i| edges[i]).collect();
            let Ok(m) = Matching::new(g, chosen.iter().copied()) else { continue };
            nu = nu.max(m.len());
            if g.edges_within(m.support()) == m.len() {
                nu1 = nu1.max(m.len());
            }
            let maximal = edges.iter().all(|&(u, v)| m.support() & (1 << u | 1 << v) != 0);
            if maximal {
                nu2 = nu2.min(m.len());
            }
        }
        (nu, nu1, if edges.is_empty() { 0 } else { nu2 })
    }

    #[test]
    fn enumeration_examples() {
        assert!(enumerate_matchings(&Graph::path(3).unwrap(), 2).is_empty());
        assert_eq!(enumerate_matchings(&Graph::cycle(4).unwrap(), 2).len(), 2);
        assert_eq!(enumerate_matchings(&Graph::complete(4).unwrap(), 2).len(), 3);
        assert_eq!(enumerate_matchings(&Graph::path(3).unwrap(), 0).len(), 1);
    }

    #[test]
    fn invariant_examples() {
        let p4 = p4();
        assert_eq!(MatchingInvariants::of(&p4), MatchingInvariants { nu: 2, nu1: 1, nu2: 1 });
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(induced_matching_number(&c5), 1);
        assert_eq!(min_maximal_matching_number(&Graph::complete(4).unwrap()), 2);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_maximal_matching_number(&two), 2);
        let empty = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(MatchingInvariants::of(&empty), MatchingInvariants { nu: 0, nu1: 0, nu2: 0 });
    }

    #[test]
    fn induced_matching_examples() {
        let p4 = p4();
        let m = Matching::new(&p4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_induced_matching(&p4, &m).unwrap());
        let p5 = Graph::path(5).unwrap();
        let m = Matching::new(&p5, [(0, 1), (3, 4)]).unwrap();
        assert!(is_induced_matching(&p5, &m).unwrap());
        for e in p5.edges() {
            assert!(is_induced_matching(&p5, &Matching::new(&p5, [e]).unwrap()).unwrap());
        }
        assert!(Matching::new(&p4, [(0, 1), (1, 2)]).is_err());
        assert!(Matching::new(&p4, [(0, 2)]).is_err());
    }

    #[test]
    fn invariants_agree_with_brute_force_up_to_seven_vertices() {
        for n in 1..=7 {
            for g in all_graphs(n) {
                let inv = MatchingInvariants::of(&g);
                assert_eq!((inv.nu, inv.nu1, inv.nu2), brute(&g), "{g:?}");
                assert!(inv.nu1 <= inv.nu2 && inv.nu2 <= inv.nu);
                assert!(!enumerate_matchings(&g, inv.nu).is_empty());
                assert!(enumerate_matchings(&g, inv.nu + 1).is_empty());
            }
        }
    }
}
