//! Slow, independent reference implementations used only by tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use sqpow_core::{Graph, MonomialIdeal};

/// Rank over Q by plain Gaussian elimination on big rationals.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in col..cols {
                    let t = &f * &rows[rank][c];
                    rows[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn in_ideal(gens: &[u64], m: u64) -> bool {
    gens.iter().any(|&g| g & m == g)
}

/// Graded Betti numbers of `S/I` from the Koszul complex `K(x; S/I)`.
///
/// In squarefree multidegree `W` the chains of homological degree `i` are
/// `e_F ⊗ x^{W∖F}` with `F ⊆ W`, `|F| = i`, and `x^{W∖F} ∉ I`.
pub fn koszul_betti(ideal: &MonomialIdeal) -> BTreeMap<(usize, usize), usize> {
    let n = ideal.universe().len();
    let gens: Vec<u64> = ideal.generators().iter().map(|g| g.mask()).collect();
    let mut table = BTreeMap::new();
    for w in 0u64..1 << n {
        let size = w.count_ones() as usize;
        let chains: Vec<Vec<u64>> = (0..=size)
            .map(|i| {
                subsets(w)
                    .filter(|f| f.count_ones() as usize == i && !in_ideal(&gens, w & !f))
                    .collect()
            })
            .collect();
        // ranks[i] = rank of d_i : K_i -> K_{i-1}
        let mut ranks = vec![0usize; size + 2];
        for i in 1..=size {
            if chains[i].is_empty() || chains[i - 1].is_empty() {
                continue;
            }
            let matrix: Vec<Vec<BigRational>> = chains[i]
                .iter()
                .map(|&f| {
                    chains[i - 1]
                        .iter()
                        .map(|&g| {
                            if g & f != g || (f & !g).count_ones() != 1 {
                                return BigRational::zero();
                            }
                            let j = (f & !g).trailing_zeros();
                            let before = (f & ((1u64 << j) - 1)).count_ones();
                            let one = BigRational::one();
                            if before % 2 == 0 { one } else { -one }
                        })
                        .collect()
                })
                .collect();
            ranks[i] = rational_rank(matrix);
        }
        for i in 0..=size {
            let h = chains[i].len() - ranks[i] - ranks[i + 1];
            if h > 0 {
                *table.entry((i, size)).or_insert(0) += h;
            }
        }
    }
    table
}

pub fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
        Some(cur)
    })
}

fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn is_matching(edges: &[(usize, usize)], set: u32) -> bool {
    let mut cover = 0u64;
    for (b, &(u, v)) in edges.iter().enumerate() {
        if set >> b & 1 == 1 {
            if cover & (1 << u | 1 << v) != 0 {
                return false;
            }
            cover |= 1 << u | 1 << v;
        }
    }
    true
}

fn cover_of(edges: &[(usize, usize)], set: u32) -> u64 {
    edges
        .iter()
        .enumerate()
        .filter(|(b, _)| set >> b & 1 == 1)
        .fold(0, |acc, (_, &(u, v))| acc | 1 << u | 1 << v)
}

/// `(ν, ν₁, ν₂)` by enumerating every edge subset.
pub fn brute_matching_numbers(g: &Graph) -> (usize, usize, usize) {
    let edges = edge_list(g);
    assert!(edges.len() <= 24);
    let (mut nu, mut nu1, mut nu2) = (0, 0, usize::MAX);
    for set in 0u32..1 << edges.len() {
        if !is_matching(&edges, set) {
            continue;
        }
        let size = set.count_ones() as usize;
        let cover = cover_of(&edges, set);
        nu = nu.max(size);
        let induced = edges
            .iter()
            .filter(|&&(u, v)| cover >> u & 1 == 1 && cover >> v & 1 == 1)
            .count()
            == size;
        if induced {
            nu1 = nu1.max(size);
        }
        let maximal = edges.iter().all(|&(u, v)| cover & (1 << u | 1 << v) != 0);
        if maximal {
            nu2 = nu2.min(size);
        }
    }
    (nu, nu1, if nu2 == usize::MAX { 0 } else { nu2 })
}

/// Chordality of the complement by searching for an induced cycle of
/// length at least four among all vertex subsets.
pub fn brute_cochordal(g: &Graph) -> bool {
    let n = g.vertex_count();
    let adj = |u: usize, v: usize| u != v && !g.has_edge(u, v);
    for set in 0u64..1 << n {
        let k = set.count_ones() as usize;
        if k < 4 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
        // induced cycle iff connected and 2-regular on the subset
        let two_regular = vs.iter().all(|&v| vs.iter().filter(|&&u| adj(u, v)).count() == 2);
        if !two_regular {
            continue;
        }
        let mut seen = 1u64 << vs[0];
        let mut stack = vec![vs[0]];
        while let Some(x) = stack.pop() {
            for &y in &vs {
                if adj(x, y) && seen >> y & 1 == 0 {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
        if seen == set {
            return false;
        }
    }
    true
}

/// Whether `order` gives linear quotients, from the minimal generators
/// `u_i / gcd(u_i, u_j)` of each colon ideal.
pub fn brute_linear_quotients(ideal: &MonomialIdeal, order: &[usize]) -> bool {
    let gens: Vec<u64> = order.iter().map(|&i| ideal.generator(i).mask()).collect();
    (1..gens.len()).all(|j| {
        let colon: Vec<u64> = gens[..j].iter().map(|&u| u & !gens[j]).collect();
        colon
            .iter()
            .all(|&c| colon.iter().any(|&v| v.count_ones() == 1 && v & c == v))
    })
}
