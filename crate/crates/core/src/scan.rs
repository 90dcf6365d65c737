//! Exhaustive (or seeded random) validation over small graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{all_graphs, canonical_form, Graph, GraphJson};
use crate::linearity::{find_lq_order, is_linearly_related, LqSearch, DEFAULT_LQ_CAP};
use crate::matching::MatchingInvariants;
use crate::power::{edge_ideal, squarefree_power};
use crate::resolution::{betti_table, BettiOptions, Field};
use crate::theorem::SCHEMA_VERSION;

/// Largest exhaustive scan without a cap override.
pub const DEFAULT_SCAN_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanCheck {
    /// Linear resolution of `I(G)` iff the complement is chordal.
    Froberg,
    /// `ν1 ≤ reg ≤ ν2 ≤ ν` and `ν1 ≤ c(G) ≤ ν`.
    Sandwich,
    /// The top squarefree power has linear quotients.
    TopPowerLq,
    /// Generator-graph connectivity agrees with linear first syzygies.
    LrVsBetti,
    /// Per-power linear-resolution verdicts, recorded as data.
    Persistence,
}

impl ScanCheck {
    pub const ALL: [ScanCheck; 5] =
        [ScanCheck::Froberg, ScanCheck::Sandwich, ScanCheck::TopPowerLq, ScanCheck::LrVsBetti, ScanCheck::Persistence];

    fn name(self) -> &'static str {
        match self {
            ScanCheck::Froberg => "froberg",
            ScanCheck::Sandwich => "sandwich",
            ScanCheck::TopPowerLq => "top-power-lq",
            ScanCheck::LrVsBetti => "lr-vs-betti",
            ScanCheck::Persistence => "persistence",
        }
    }
}

impl fmt::Display for ScanCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScanCheck::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub max_vertices: usize,
    pub checks: BTreeSet<ScanCheck>,
    pub betti: BettiOptions,
    pub lq_cap: usize,
    /// Raise the vertex cap above [`DEFAULT_SCAN_CAP`].
    pub vertex_cap: usize,
    /// Draw this many random graphs on exactly `max_vertices` vertices
    /// instead of enumerating all of them.
    pub sample: Option<usize>,
    pub seed: u64,
}

impl ScanOptions {
    pub fn new(max_vertices: usize, checks: impl IntoIterator<Item = ScanCheck>) -> Self {
        ScanOptions {
            max_vertices,
            checks: checks.into_iter().collect(),
            betti: BettiOptions::default(),
            lq_cap: DEFAULT_LQ_CAP,
            vertex_cap: DEFAULT_SCAN_CAP,
            sample: None,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph: GraphJson,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: ScanCheck,
    pub examined: usize,
    /// Graphs where the check could not run (resource caps).
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceRow {
    pub graph: GraphJson,
    pub linearity_index: usize,
    /// Linear resolution of `I(G)^[k]` for `k = 1..=ν`.
    pub linear: Vec<bool>,
    pub persists: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema_version: u32,
    pub max_vertices: usize,
    pub field: Field,
    pub graphs: usize,
    pub checks: Vec<CheckSummary>,
    pub persistence: Vec<PersistenceRow>,
}

impl ScanReport {
    pub fn counterexample_count(&self) -> usize {
        self.checks.iter().map(|c| c.counterexamples.len()).sum()
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skipped,
}

/// Graphs with at least one edge, one per isomorphism class, ordered by
/// vertex count and canonical form.
pub fn graphs_with_edges(max_vertices: usize) -> Vec<Graph> {
    (2..=max_vertices)
        .flat_map(all_graphs)
        .filter(|g| g.edge_count() > 0)
        .collect()
}

fn sampled_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..count {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::from_edges(n, &edges).expect("valid random edges");
        if g.edge_count() > 0 && seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    out
}

fn run_check(g: &Graph, check: ScanCheck, opts: &ScanOptions) -> Result<Outcome> {
    let betti = opts.betti;
    let outcome = match check {
        ScanCheck::Froberg => {
            let i = edge_ideal(g)?;
            let linear = betti_table(&i, betti)?.is_linear(2);
            let cochordal = g.is_cochordal();
            if linear == cochordal {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("linear resolution {linear}, cochordal {cochordal}"))
            }
        }
        ScanCheck::Sandwich => {
            let inv = MatchingInvariants::of(g);
            let reg = betti_table(&edge_ideal(g)?, betti)?.regularity();
            let c = crate::resolution::linearity_index(g, betti)?;
            let ok = inv.nu1 <= reg && reg <= inv.nu2 && inv.nu2 <= inv.nu && inv.nu1 <= c && c <= inv.nu;
            if ok {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("nu1 {} reg {reg} nu2 {} nu {} c {c}", inv.nu1, inv.nu2, inv.nu))
            }
        }
        ScanCheck::TopPowerLq => {
            let nu = crate::matching::matching_number(g);
            let top = squarefree_power(g, nu)?;
            match find_lq_order(&top, opts.lq_cap) {
                Ok(LqSearch::Found { .. }) => Outcome::Pass,
                Ok(LqSearch::Exhausted { .. }) => Outcome::Fail(format!("no linear-quotients order for k = {nu}")),
                Err(Error::CapExceeded { .. }) => Outcome::Skipped,
                Err(e) => return Err(e),
            }
        }
        ScanCheck::LrVsBetti => {
            let nu = crate::matching::matching_number(g);
            let mut bad = Vec::new();
            for k in 1..=nu {
                let i = squarefree_power(g, k)?;
                let combinatorial = is_linearly_related(&i).holds();
                let homological = betti_table(&i, betti)?.is_linearly_related(2 * k);
                if combinatorial != homological {
                    bad.push(format!("k = {k}: graph {combinatorial}, betti {homological}"));
                }
            }
            if bad.is_empty() {
                Outcome::Pass
            } else {
                Outcome::Fail(bad.join("; "))
            }
        }
        ScanCheck::Persistence => Outcome::Pass,
    };
    Ok(outcome)
}

fn persistence_row(g: &Graph, betti: BettiOptions) -> Result<PersistenceRow> {
    let linear = crate::resolution::linear_resolution_profile(g, betti)?;
    let index = linear.iter().position(|&b| b).map_or(linear.len(), |i| i + 1);
    let persists = linear[index - 1..].iter().all(|&b| b);
    Ok(PersistenceRow { graph: GraphJson::from(g), linearity_index: index, linear, persists })
}

pub fn run_scan(opts: &ScanOptions) -> Result<ScanReport> {
    let limit = opts.vertex_cap.max(DEFAULT_SCAN_CAP);
    if opts.sample.is_none() && opts.max_vertices > limit {
        return Err(Error::CapExceeded { what: "scan vertex count", got: opts.max_vertices, cap: limit });
    }
    if opts.max_vertices > crate::graph::MAX_CANONICAL_VERTICES {
        return Err(Error::CapExceeded {
            what: "scan vertex count",
            got: opts.max_vertices,
            cap: crate::graph::MAX_CANONICAL_VERTICES,
        });
    }
    let graphs = match opts.sample {
        Some(count) => sampled_graphs(opts.max_vertices, count, opts.seed),
        None => graphs_with_edges(opts.max_vertices),
    };
    let checks: Vec<ScanCheck> = opts.checks.iter().copied().filter(|&c| c != ScanCheck::Persistence).collect();

    let per_graph: Vec<Vec<Outcome>> = graphs
        .par_iter()
        .map(|g| checks.iter().map(|&c| run_check(g, c, opts)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let mut summaries = Vec::new();
    for (idx, &check) in checks.iter().enumerate() {
        let mut summary = CheckSummary { check, examined: 0, skipped: 0, counterexamples: Vec::new() };
        for (g, outcomes) in graphs.iter().zip(&per_graph) {
            match &outcomes[idx] {
                Outcome::Pass => summary.examined += 1,
                Outcome::Skipped => summary.skipped += 1,
                Outcome::Fail(detail) => {
                    summary.examined += 1;
                    summary.counterexamples.push(Counterexample { graph: GraphJson::from(g), detail: detail.clone() });
                }
            }
        }
        summaries.push(summary);
    }

    let persistence = if opts.checks.contains(&ScanCheck::Persistence) {
        graphs.par_iter().map(|g| persistence_row(g, opts.betti)).collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };

    Ok(ScanReport {
        schema_version: SCHEMA_VERSION,
        max_vertices: opts.max_vertices,
        field: opts.betti.field,
        graphs: graphs.len(),
        checks: summaries,
        persistence,
    })
}
