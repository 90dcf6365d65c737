//! Linear relations and linear quotients, decided combinatorially.
//!
//! An ideal generated in degree `d` is linearly related iff for every pair of
//! generators `u, v` there is a path from `u` to `v` in the graph on the
//! generators dividing `lcm(u, v)` whose edges join generators with
//! `deg lcm = d + 1`. A generator order has linear quotients iff for each
//! `j` and each `i < j` some `t < j` has `u_t : u_j` a single variable
//! dividing `u_i : u_j`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, construct_lemma_graph};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial};
use crate::power::squarefree_power;

/// Default generator cap for [`find_lq_order`].
pub const DEFAULT_LQ_CAP: usize = 22;

fn linked(ideal: &MonomialIdeal, a: SquarefreeMonomial, b: SquarefreeMonomial) -> bool {
    a.lcm(b).degree() == ideal.degree() + 1
}

/// The generator graph `G_I`, or its restriction to a subset of generators.
#[derive(Clone, Debug)]
pub struct GeneratorGraph {
    ideal: MonomialIdeal,
    nodes: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl GeneratorGraph {
    fn on_nodes(ideal: &MonomialIdeal, nodes: Vec<usize>) -> Self {
        let adjacency = nodes
            .iter()
            .map(|&a| {
                nodes
                    .iter()
                    .copied()
                    .filter(|&b| linked(ideal, ideal.generator(a), ideal.generator(b)))
                    .collect()
            })
            .collect();
        GeneratorGraph { ideal: ideal.clone(), nodes, adjacency }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Generator indices present in this graph, increasing.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn contains(&self, generator: usize) -> bool {
        self.nodes.binary_search(&generator).is_ok()
    }

    pub fn neighbors(&self, generator: usize) -> &[usize] {
        match self.nodes.binary_search(&generator) {
            Ok(i) => &self.adjacency[i],
            Err(_) => &[],
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Whether a path joins `from` and `to` inside this graph.
    pub fn connects(&self, from: usize, to: usize) -> bool {
        if !self.contains(from) || !self.contains(to) {
            return false;
        }
        let mut seen = HashSet::from([from]);
        let mut queue = vec![from];
        while let Some(x) = queue.pop() {
            if x == to {
                return true;
            }
            for &y in self.neighbors(x) {
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        false
    }
}

pub fn build_generator_graph(ideal: &MonomialIdeal) -> GeneratorGraph {
    GeneratorGraph::on_nodes(ideal, (0..ideal.len()).collect())
}

/// `G_I^{(u,v)}`: the induced subgraph of `G_I` on generators dividing `lcm(u, v)`.
pub fn restricted_generator_graph(ideal: &MonomialIdeal, u: usize, v: usize) -> Result<GeneratorGraph> {
    for x in [u, v] {
        if x >= ideal.len() {
            return Err(Error::NotAGenerator(format!("#{x}")));
        }
    }
    let l = ideal.generator(u).lcm(ideal.generator(v));
    let nodes = (0..ideal.len()).filter(|&w| ideal.generator(w).divides(l)).collect();
    Ok(GeneratorGraph::on_nodes(ideal, nodes))
}

/// Outcome of the linearly-related test; on failure names a pair of
/// generator indices that are disconnected in their restricted graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LinearRelatedness {
    Related,
    NotRelated { u: usize, v: usize },
}

impl LinearRelatedness {
    pub fn holds(&self) -> bool {
        matches!(self, LinearRelatedness::Related)
    }
}

struct BitRows {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitRows {
    fn adjacency(ideal: &MonomialIdeal) -> Self {
        let m = ideal.len();
        let words = m.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; m];
        for a in 0..m {
            for b in a + 1..m {
                if linked(ideal, ideal.generator(a), ideal.generator(b)) {
                    rows[a][b / 64] |= 1 << (b % 64);
                    rows[b][a / 64] |= 1 << (a % 64);
                }
            }
        }
        BitRows { words, rows }
    }

    fn has(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / 64] >> (b % 64) & 1 == 1
    }

    fn reaches(&self, from: usize, to: usize, allowed: &[u64]) -> bool {
        let mut seen = vec![0u64; self.words];
        seen[from / 64] |= 1 << (from % 64);
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            for w in 0..self.words {
                let mut fresh = self.rows[x][w] & allowed[w] & !seen[w];
                seen[w] |= fresh;
                while fresh != 0 {
                    let b = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    let y = w * 64 + b;
                    if y == to {
                        return true;
                    }
                    stack.push(y);
                }
            }
        }
        false
    }
}

pub fn is_linearly_related(ideal: &MonomialIdeal) -> LinearRelatedness {
    let m = ideal.len();
    let adj = BitRows::adjacency(ideal);
    let gens = ideal.generators();
    let failure = (0..m).into_par_iter().find_map_first(|i| {
        let mut allowed = vec![0u64; adj.words];
        for j in i + 1..m {
            if adj.has(i, j) {
                continue;
            }
            let l = gens[i].lcm(gens[j]);
            allowed.iter_mut().for_each(|w| *w = 0);
            for (w, g) in gens.iter().enumerate() {
                if g.divides(l) {
                    allowed[w / 64] |= 1 << (w % 64);
                }
            }
            if !adj.reaches(i, j, &allowed) {
                return Some((i, j));
            }
        }
        None
    });
    match failure {
        Some((u, v)) => LinearRelatedness::NotRelated { u, v },
        None => LinearRelatedness::Related,
    }
}

/// Evidence that a generator order has linear quotients.
///
/// `witnesses[j][i]`, for `i < j`, is a position `t < j` with
/// `u_t : u_j` a variable dividing `u_i : u_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LqCertificate {
    pub order: Vec<usize>,
    pub witnesses: Vec<Vec<usize>>,
}

impl LqCertificate {
    /// Re-checks every witness against `ideal` without trusting the search.
    pub fn recheck(&self, ideal: &MonomialIdeal) -> bool {
        if check_permutation(ideal, &self.order).is_err() || self.witnesses.len() != self.order.len() {
            return false;
        }
        let at = |p: usize| ideal.generator(self.order[p]);
        (0..self.order.len()).all(|j| {
            self.witnesses[j].len() == j
                && self.witnesses[j].iter().enumerate().all(|(i, &t)| {
                    let var = at(t).colon(at(j));
                    t < j && var.is_variable() && var.divides(at(i).colon(at(j)))
                })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LqVerdict {
    Certified(LqCertificate),
    /// No position before `j` supplies a variable dividing `u_i : u_j`
    /// (positions in the tested order).
    Refuted { i: usize, j: usize },
}

fn check_permutation(ideal: &MonomialIdeal, order: &[usize]) -> Result<()> {
    let m = ideal.len();
    let mut seen = vec![false; m];
    if order.len() != m {
        return Err(Error::NotAPermutation(m));
    }
    for &x in order {
        if x >= m || std::mem::replace(&mut seen[x], true) {
            return Err(Error::NotAPermutation(m));
        }
    }
    Ok(())
}

pub fn verify_lq_order(ideal: &MonomialIdeal, order: &[usize]) -> Result<LqVerdict> {
    check_permutation(ideal, order)?;
    let at = |p: usize| ideal.generator(order[p]);
    let mut witnesses = Vec::with_capacity(order.len());
    for j in 0..order.len() {
        let uj = at(j);
        // variable -> first earlier position whose colon is that variable
        let mut by_var = [usize::MAX; 64];
        for t in 0..j {
            let c = at(t).colon(uj);
            if c.is_variable() {
                let v = c.mask().trailing_zeros() as usize;
                if by_var[v] == usize::MAX {
                    by_var[v] = t;
                }
            }
        }
        let mut row = Vec::with_capacity(j);
        for i in 0..j {
            let wit = at(i).colon(uj).support().map(|v| by_var[v]).find(|&t| t != usize::MAX);
            match wit {
                Some(t) => row.push(t),
                None => return Ok(LqVerdict::Refuted { i, j }),
            }
        }
        witnesses.push(row);
    }
    Ok(LqVerdict::Certified(LqCertificate { order: order.to_vec(), witnesses }))
}

/// Result of the exhaustive order search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LqSearch {
    Found { order: Vec<usize> },
    /// Every prefix set was explored; `dead_sets` prefix sets admit no completion.
    Exhausted { dead_sets: usize },
}

struct OrderSearch<'a> {
    gens: &'a [SquarefreeMonomial],
    full: u64,
    dead: HashSet<u64>,
    order: Vec<usize>,
}

impl OrderSearch<'_> {
    /// Whether `g` may follow the prefix set `set`. Depends only on the set.
    fn extends(&self, set: u64, g: usize) -> bool {
        let ug = self.gens[g];
        let vars = bits(set).fold(0u64, |acc, t| {
            let c = self.gens[t].colon(ug);
            if c.is_variable() {
                acc | c.mask()
            } else {
                acc
            }
        });
        bits(set).all(|i| self.gens[i].colon(ug).mask() & vars != 0)
    }

    fn go(&mut self, set: u64) -> bool {
        if set == self.full {
            return true;
        }
        if self.dead.contains(&set) {
            return false;
        }
        // Candidates in revlex-descending order, which is index order.
        for g in bits(self.full & !set) {
            if self.extends(set, g) {
                self.order.push(g);
                if self.go(set | 1 << g) {
                    return true;
                }
                self.order.pop();
            }
        }
        self.dead.insert(set);
        false
    }
}

/// Searches for a linear-quotients order by backtracking over prefix sets,
/// memoizing sets with no completion. Refuses ideals with more than `cap`
/// generators (hard limit 64).
pub fn find_lq_order(ideal: &MonomialIdeal, cap: usize) -> Result<LqSearch> {
    let m = ideal.len();
    let cap = cap.min(64);
    if m > cap {
        return Err(Error::CapExceeded { what: "generator count", got: m, cap });
    }
    let mut search = OrderSearch {
        gens: ideal.generators(),
        full: crate::graph::mask_of_len(m),
        dead: HashSet::new(),
        order: Vec::with_capacity(m),
    };
    if search.go(0) {
        Ok(LqSearch::Found { order: search.order })
    } else {
        Ok(LqSearch::Exhausted { dead_sets: search.dead.len() })
    }
}

/// The five structural facts behind the obstruction in the whiskered
/// clique-plus-isolated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub c: usize,
    pub d: usize,
    pub generators: usize,
    pub v1_size: usize,
    pub v2_size: usize,
    pub u: String,
    pub v: String,
    pub lcm_is_w: bool,
    pub partition_holds: bool,
    pub v1_independent: bool,
    pub no_v1_v2_edges: bool,
    pub u_isolated: bool,
    pub v_isolated: bool,
    pub restricted_is_whole: bool,
    /// `u` and `v` lie in different components of `G_J^{(u,v)}`.
    pub u_v_disconnected: bool,
}

impl LemmaReport {
    /// All five structural assertions: `lcm(u,v) = w`, the `V1`/`V2`
    /// partition, `V1` independent, no `V1`-`V2` edges, `u` and `v` isolated.
    pub fn all_hold(&self) -> bool {
        self.lcm_is_w
            && self.partition_holds
            && self.v1_independent
            && self.no_v1_v2_edges
            && self.u_isolated
            && self.v_isolated
    }

    /// The consequence actually needed: `J` is not linearly related because
    /// `u` and `v` are not joined inside `G_J^{(u,v)}`.
    pub fn not_linearly_related(&self) -> bool {
        self.lcm_is_w && self.restricted_is_whole && self.u_v_disconnected
    }
}

/// For `J = I(G)^[c-1]` on the lemma graph, with `w` the product of all
/// variables, `u = w/(x1 y1)` and `v = w/(x{d+1} y{d+1})`: checks that
/// `lcm(u,v) = w`, that `G(J)` splits as `V1 = {w/(xi yi)}` and
/// `V2 = {w/(yi yj) : d < i < j <= c}`, that `V1` is independent in `G_J`
/// with no edges into `V2`, and that `u`, `v` are isolated.
pub fn lemma_witness_check(c: usize, d: usize) -> Result<LemmaReport> {
    let family = construct_lemma_graph(c, d)?;
    let g = &family.graph;
    let j = squarefree_power(g, c - 1)?;
    let x = |i: usize| g.vertex(&format!("x{i}")).expect("lemma labels");
    let y = |i: usize| g.vertex(&format!("y{i}")).expect("lemma labels");
    let w = SquarefreeMonomial::from_mask(g.vertex_mask());
    let without = |vs: &[usize]| SquarefreeMonomial::from_mask(vs.iter().fold(w.mask(), |m, &v| m & !(1 << v)));

    let u = without(&[x(1), y(1)]);
    let v = without(&[x(d + 1), y(d + 1)]);
    let v1: Vec<SquarefreeMonomial> = (1..=c).map(|i| without(&[x(i), y(i)])).collect();
    let mut v2 = Vec::new();
    for i in d + 1..=c {
        for k in i + 1..=c {
            v2.push(without(&[y(i), y(k)]));
        }
    }

    let mut expected: Vec<SquarefreeMonomial> = v1.iter().chain(&v2).copied().collect();
    expected.sort_unstable_by_key(|m| m.mask());
    expected.dedup();
    let mut actual = j.generators().to_vec();
    actual.sort_unstable_by_key(|m| m.mask());
    let partition_holds = expected.len() == v1.len() + v2.len() && expected == actual;

    let gj = build_generator_graph(&j);
    let pos = |m: SquarefreeMonomial| j.position(m);
    let adjacent = |a: SquarefreeMonomial, b: SquarefreeMonomial| match (pos(a), pos(b)) {
        (Some(a), Some(b)) => gj.neighbors(a).contains(&b),
        _ => false,
    };
    let v1_independent = v1.iter().all(|&a| v1.iter().all(|&b| !adjacent(a, b)));
    let no_v1_v2_edges = v1.iter().all(|&a| v2.iter().all(|&b| !adjacent(a, b)));
    let isolated = |m: SquarefreeMonomial| pos(m).is_some_and(|p| gj.neighbors(p).is_empty());
    let (restricted_is_whole, u_v_disconnected) = match (pos(u), pos(v)) {
        (Some(pu), Some(pv)) => {
            let r = restricted_generator_graph(&j, pu, pv)?;
            (r.nodes().len() == j.len(), !r.connects(pu, pv))
        }
        _ => (false, false),
    };

    Ok(LemmaReport {
        c,
        d,
        generators: j.len(),
        v1_size: v1.len(),
        v2_size: v2.len(),
        u: j.format(u),
        v: j.format(v),
        lcm_is_w: u.lcm(v) == w,
        partition_holds,
        v1_independent,
        no_v1_v2_edges,
        u_isolated: isolated(u),
        v_isolated: isolated(v),
        restricted_is_whole,
        u_v_disconnected,
    })
}
