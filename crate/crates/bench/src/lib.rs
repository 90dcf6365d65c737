//! Fixtures shared by the criterion benches.

use sqpow_core::{construct_gpcq, squarefree_power, Graph, MonomialIdeal};

/// The `G(p,c,q)` graph and its `k`-th squarefree power.
pub fn gpcq_power(p: usize, c: usize, q: usize, k: usize) -> (Graph, MonomialIdeal) {
    let g = construct_gpcq(p, c, q).expect("valid triple").graph;
    let ideal = squarefree_power(&g, k).expect("k within the matching number");
    (g, ideal)
}
