//! Exact graded Betti numbers of squarefree monomial ideals.
//!
//! `β_{i,j}(S/I)` is the sum over `|W| = j` of the reduced homology of the
//! restricted Stanley–Reisner complex `Δ_W` in dimension `j - i - 1`
//! (Hochster's formula). Only `W` inside the union of the generator supports
//! contribute: any other variable is a cone point of `Δ_W`.

mod complex;
mod linalg;

pub use complex::{reduced_homology_of_faces, stanley_reisner, HomologyRanks, StanleyReisnerComplex};
pub use linalg::{rank, rank_mod_p, rank_rational};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::matching::matching_number;
use crate::monomial::MonomialIdeal;
use crate::power::squarefree_power;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" | "QQ" | "0" => Ok(Field::Rationals),
            other => {
                let p: u64 = other
                    .trim_start_matches("ZZ/")
                    .parse()
                    .map_err(|_| Error::InvalidParameters(format!("unknown field `{other}`")))?;
                let prime = (2..1 << 31).contains(&p) && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
                if !prime {
                    return Err(Error::InvalidParameters(format!("{p} is not a prime below 2^31")));
                }
                Ok(Field::Prime(p))
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Default cap on the number of variables appearing in generators.
pub const DEFAULT_SUPPORT_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BettiOptions {
    pub field: Field,
    pub support_cap: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions { field: Field::Rationals, support_cap: DEFAULT_SUPPORT_CAP }
    }
}

impl BettiOptions {
    pub fn over(field: Field) -> Self {
        BettiOptions { field, ..Default::default() }
    }
}

/// Graded Betti numbers of `S/I`. Indices of `I` itself are shifted by one:
/// `β_{i,j}(I) = β_{i+1,j}(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
    field: Field,
}

impl BettiTable {
    pub fn field(&self) -> Field {
        self.field
    }

    /// `β_{i,j}(S/I)`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_{i,j}(I)`.
    pub fn ideal_betti(&self, i: usize, j: usize) -> usize {
        self.get(i + 1, j)
    }

    /// Nonzero `((i, j), rank)` entries of `S/I`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `reg(S/I) = max { j - i : β_{i,j}(S/I) ≠ 0 }`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Whether an ideal generated in degree `d` has a `d`-linear resolution.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| i == 0 || j + 1 == i + d)
    }

    /// Whether the first syzygies of an ideal generated in degree `d` are
    /// linear: `β_{1,j}(I) = 0` for `j ≠ d + 1`.
    pub fn is_linearly_related(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| i != 2 || j == d + 1)
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            field: self.field,
            subject: "quotient".into(),
            regularity: self.regularity(),
            entries: self.entries().map(|((i, j), rank)| BettiEntry { i, j, rank }).collect(),
        }
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style: columns are homological degrees, rows are `j - i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let totals: Vec<usize> = (0..=pd)
            .map(|i| self.entries().filter(|((a, _), _)| *a == i).map(|(_, r)| r).sum())
            .collect();
        let width = totals.iter().map(|t| t.to_string().len()).max().unwrap_or(1);
        let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
        let row = |label: String, vals: Vec<String>| {
            let cells: Vec<String> = vals.iter().map(|v| format!("{v:>width$}")).collect();
            format!("{label:>7} {}", cells.join(" "))
        };
        writeln!(f, "{}", row(String::new(), (0..=pd).map(|i| i.to_string()).collect()))?;
        writeln!(f, "{}", row("total:".into(), totals.iter().map(|t| t.to_string()).collect()))?;
        for r in 0..=reg {
            let vals = (0..=pd).map(|i| cell(self.get(i, i + r))).collect();
            writeln!(f, "{}", row(format!("{r}:"), vals))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub field: Field,
    pub subject: String,
    pub regularity: usize,
    pub entries: Vec<BettiEntry>,
}

/// Betti table of `S/I` via Hochster's formula.
pub fn betti_table(ideal: &MonomialIdeal, opts: BettiOptions) -> Result<BettiTable> {
    let support = ideal.support_mask();
    let vars: Vec<usize> = bits(support).collect();
    let n = vars.len();
    let cap = opts.support_cap.min(30);
    if n > cap {
        return Err(Error::CapExceeded { what: "number of variables in generators", got: n, cap });
    }
    let compress = |m: u64| {
        vars.iter().enumerate().fold(0usize, |acc, (k, &v)| acc | (((m >> v) & 1) as usize) << k)
    };
    // contains[s]: some generator divides the compressed squarefree monomial s
    let mut contains = vec![false; 1 << n];
    for g in ideal.generators() {
        contains[compress(g.mask())] = true;
    }
    for s in 0..1usize << n {
        if !contains[s] {
            contains[s] = bits(s as u64).any(|v| contains[s & !(1 << v)]);
        }
    }
    let field = opts.field;
    let contributions: Vec<((usize, usize), usize)> = (0..1u64 << n)
        .into_par_iter()
        .flat_map_iter(|w| {
            let faces = complex::enumerate_faces(w, &|f| !contains[f as usize]);
            let size = w.count_ones() as usize;
            let homology = reduced_homology_of_faces(&faces, field);
            homology
                .nonzero()
                .map(|(dim, r)| ((size - (dim + 1) as usize, size), r))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (key, r) in contributions {
        *entries.entry(key).or_insert(0) += r;
    }
    Ok(BettiTable { entries, field })
}

pub fn has_linear_resolution(ideal: &MonomialIdeal, opts: BettiOptions) -> Result<bool> {
    Ok(betti_table(ideal, opts)?.is_linear(ideal.degree()))
}

/// `reg(S/I)`.
pub fn regularity(ideal: &MonomialIdeal, opts: BettiOptions) -> Result<usize> {
    Ok(betti_table(ideal, opts)?.regularity())
}

/// Linear-resolution verdicts for `I(G)^[k]`, `k = 1..=ν(G)`.
pub fn linear_resolution_profile(g: &Graph, opts: BettiOptions) -> Result<Vec<bool>> {
    let nu = matching_number(g);
    if nu == 0 {
        return Err(Error::ZeroIdeal);
    }
    (1..=nu)
        .map(|k| has_linear_resolution(&squarefree_power(g, k)?, opts))
        .collect()
}

/// The smallest `k` with `I(G)^[k]` having a linear resolution. Stops at
/// the first such `k`; says nothing about larger powers.
pub fn linearity_index(g: &Graph, opts: BettiOptions) -> Result<usize> {
    let nu = matching_number(g);
    if nu == 0 {
        return Err(Error::ZeroIdeal);
    }
    for k in 1..=nu {
        if has_linear_resolution(&squarefree_power(g, k)?, opts)? {
            return Ok(k);
        }
    }
    unreachable!("the top squarefree power has linear quotients, hence a linear resolution")
}
