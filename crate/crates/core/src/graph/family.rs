//! The whiskered graph families: `G(p,c,q)`, the clique-plus-isolated
//! obstruction graphs and whiskered complete graphs.
//!
//! Vertices carry role labels `a1.., b1.., c1.., d1..` where `b_i` is the
//! whisker of `a_i` and `d_i` the whisker of `c_i`. Vertices are listed in
//! the order `a, b, c, d`, which is also the variable order used for revlex
//! comparisons downstream.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoleKind {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Role {
    pub role: RoleKind,
    /// 1-based position within its role class.
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct LabeledFamilyGraph {
    pub name: String,
    pub graph: Graph,
    pub roles: BTreeMap<String, Role>,
}

impl LabeledFamilyGraph {
    fn role_vertices(&self, kind: RoleKind) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .roles
            .iter()
            .filter(|(_, r)| r.role == kind)
            .map(|(l, r)| (r.index, self.graph.vertex(l).expect("role labels are vertices")))
            .collect();
        out.sort_unstable();
        out
    }

    /// Checks the whisker and counting invariants of the role labelling.
    pub fn check_roles(&self) -> Result<()> {
        let g = &self.graph;
        for (hub, whisker) in [(RoleKind::A, RoleKind::B), (RoleKind::C, RoleKind::D)] {
            let hubs = self.role_vertices(hub);
            let whiskers = self.role_vertices(whisker);
            if hubs.len() != whiskers.len() {
                return Err(Error::InvalidParameters(format!(
                    "{} {hub:?}-vertices but {} {whisker:?}-vertices",
                    hubs.len(),
                    whiskers.len()
                )));
            }
            for (&(i, h), &(j, w)) in hubs.iter().zip(&whiskers) {
                if i != j || g.degree(w) != 1 || !g.has_edge(h, w) {
                    return Err(Error::InvalidParameters(format!(
                        "`{}` is not the whisker of `{}`",
                        g.label(w),
                        g.label(h)
                    )));
                }
            }
        }
        Ok(())
    }
}

fn labels(prefix: char, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn role_of(label: &str) -> Role {
    let (kind, rest) = label.split_at(1);
    let role = match kind {
        "a" | "x" => RoleKind::A,
        "b" | "y" => RoleKind::B,
        "c" => RoleKind::C,
        _ => RoleKind::D,
    };
    Role { role, index: rest.parse().expect("generated labels end in an index") }
}

fn swap_prefix(label: &str, from: char, to: char) -> String {
    label.strip_prefix(from).map(|rest| format!("{to}{rest}")).unwrap_or_else(|| label.to_string())
}

/// `H` = `K_{n-isolated}` on the last labels plus `isolated` isolated vertices
/// on the first labels.
fn clique_plus_isolated(prefix: char, n: usize, isolated: usize) -> Result<Graph> {
    let loose = Graph::edgeless(labels(prefix, 1..=isolated))?;
    let clique = Graph::complete_with_labels(labels(prefix, isolated + 1..=n))?;
    loose.disjoint_union(&clique)
}

/// The whiskered clique-plus-isolated graph: `H` has `c` vertices `x1..xc`
/// where `x1..xd` are isolated and `x{d+1}..xc` form a clique, and `yi` is
/// the whisker of `xi`.
pub fn construct_lemma_graph(c: usize, d: usize) -> Result<LabeledFamilyGraph> {
    if !(1 <= d && d < c) {
        return Err(Error::InvalidParameters(format!(
            "lemma graph needs 1 <= d < c, got c = {c}, d = {d}"
        )));
    }
    let h = clique_plus_isolated('x', c, d)?;
    let graph = h.whisker_all_with(|l| swap_prefix(l, 'x', 'y'))?;
    let roles = graph.labels().iter().map(|l| (l.clone(), role_of(l))).collect();
    Ok(LabeledFamilyGraph { name: format!("lemma({c},{d})"), graph, roles })
}

/// `G(p,c,q)`: whiskers on every vertex of `K_{q-c} * H`, where `H` is
/// `K_{c-p+1}` plus `p-1` isolated vertices.
///
/// `a1..ac` are the vertices of `H` (the isolated ones first), `c1..c{q-c}`
/// those of the clique `K_{q-c}`, and `b`, `d` their whiskers.
pub fn construct_gpcq(p: usize, c: usize, q: usize) -> Result<LabeledFamilyGraph> {
    if !(1 <= p && p <= c && c <= q) {
        return Err(Error::InvalidParameters(format!(
            "G(p,c,q) needs 1 <= p <= c <= q, got ({p},{c},{q})"
        )));
    }
    let h = clique_plus_isolated('a', c, p - 1)?;
    let k = Graph::complete_with_labels(labels('c', 1..=q - c))?;
    let whiskered = h
        .join(&k)?
        .whisker_all_with(|l| swap_prefix(&swap_prefix(l, 'a', 'b'), 'c', 'd'))?;
    let order: Vec<String> = [labels('a', 1..=c), labels('b', 1..=c), labels('c', 1..=q - c), labels('d', 1..=q - c)]
        .concat();
    let graph = whiskered.permuted(&order)?;
    let roles = order.iter().map(|l| (l.clone(), role_of(l))).collect();
    Ok(LabeledFamilyGraph { name: format!("G({p},{c},{q})"), graph, roles })
}

/// `K_q` with a whisker at each vertex, labelled as `G(1,1,q)`.
pub fn whiskered_complete(q: usize) -> Result<LabeledFamilyGraph> {
    let mut g = construct_gpcq(1, 1, q)?;
    g.name = format!("whiskered K{q}");
    Ok(g)
}
