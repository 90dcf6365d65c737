//! Edge ideals and their squarefree powers.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::{enumerate_matchings, has_perfect_matching, matching_number};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial, VariableUniverse};

/// Variables named after the vertices, in vertex order.
pub fn universe_of(g: &Graph) -> Arc<VariableUniverse> {
    Arc::new(VariableUniverse::new(g.labels().iter().cloned()).expect("vertex labels are distinct"))
}

pub fn edge_monomial((u, v): Edge) -> SquarefreeMonomial {
    SquarefreeMonomial::from_indices([u, v])
}

pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal);
    }
    MonomialIdeal::new(universe_of(g), g.edges().map(edge_monomial))
}

/// `I(G)^[k]`, generated by `x_M` over the `k`-matchings `M`. Matchings with
/// the same vertex set give the same generator.
pub fn squarefree_power(g: &Graph, k: usize) -> Result<MonomialIdeal> {
    let nu = matching_number(g);
    if k == 0 || k > nu {
        return Err(Error::PowerOutOfRange { k, nu });
    }
    let supports: BTreeSet<u64> = enumerate_matchings(g, k).iter().map(|m| m.support()).collect();
    MonomialIdeal::new(universe_of(g), supports.into_iter().map(SquarefreeMonomial::from_mask))
}

/// Whether `u` is a minimal generator of `I(G)^[s]`, i.e. its support has
/// exactly `2s` vertices and carries a perfect matching.
pub fn is_power_generator(g: &Graph, s: usize, u: SquarefreeMonomial) -> bool {
    u.degree() == 2 * s && u.mask() & !g.vertex_mask() == 0 && has_perfect_matching(g, u.mask())
}

/// Whether the edge `e` is an `s`-fold component of the generator `u` of
/// `I(G)^[s]`: `u / x_e` is a minimal generator of `I(G)^[s-1]` (for `s = 1`,
/// `u = x_e`).
pub fn is_sfold_component(g: &Graph, s: usize, u: SquarefreeMonomial, e: Edge) -> Result<bool> {
    let universe = universe_of(g);
    if s == 0 || !is_power_generator(g, s, u) {
        return Err(Error::NotAGenerator(universe.format(u)));
    }
    let xe = edge_monomial(e);
    if !g.has_edge(e.0, e.1) || !xe.divides(u) {
        return Err(Error::EdgeDoesNotDivide(universe.format(xe)));
    }
    let rest = xe.quotient_of(u);
    if s == 1 {
        return Ok(rest.is_one());
    }
    Ok(is_power_generator(g, s - 1, rest))
}
