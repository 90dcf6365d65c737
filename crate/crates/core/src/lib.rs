//! Squarefree powers of edge ideals.
//!
//! Matching invariants of finite simple graphs, the squarefree powers
//! `I(G)^[k]` generated by products over `k`-matchings, combinatorial tests
//! for linear relations and linear quotients, and an exact linear-resolution
//! oracle built on Stanley–Reisner homology.
//!
//! ```
//! use sqpow_core::{construct_gpcq, linearity_index, BettiOptions};
//!
//! let g = construct_gpcq(2, 3, 4).unwrap();
//! assert_eq!(linearity_index(&g.graph, BettiOptions::default()).unwrap(), 3);
//! ```

pub mod error;
pub mod graph;
pub mod linearity;
pub mod matching;
pub mod monomial;
pub mod power;
pub mod resolution;
pub mod scan;
pub mod theorem;

pub use error::{Error, Result};
pub use graph::{
    construct_gpcq, construct_lemma_graph, parse_edge_list, whiskered_complete, write_edge_list, Graph,
    GraphJson, LabeledFamilyGraph,
};
pub use linearity::{
    build_generator_graph, find_lq_order, is_linearly_related, lemma_witness_check, restricted_generator_graph,
    verify_lq_order, GeneratorGraph, LemmaReport, LinearRelatedness, LqCertificate, LqSearch, LqVerdict,
};
pub use matching::{
    enumerate_matchings, induced_matching_number, is_induced_matching, matching_number,
    min_maximal_matching_number, Matching, MatchingInvariants,
};
pub use monomial::{MonomialIdeal, SquarefreeMonomial, VariableUniverse};
pub use power::{edge_ideal, is_sfold_component, squarefree_power};
pub use resolution::{
    betti_table, has_linear_resolution, linearity_index, regularity, BettiOptions, BettiTable, Field,
};
pub use theorem::{verify_theorem, TheoremReport};
