//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Field;

/// Rank of a dense integer matrix, read over `field`.
pub fn rank(matrix: &[Vec<i64>], field: Field) -> usize {
    match field {
        Field::Rationals => rank_rational(matrix),
        Field::Prime(p) => rank_mod_p(matrix, p),
    }
}

pub fn rank_rational(matrix: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match rank_i128(small) {
        Some(r) => r,
        None => rank_bigint(matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn min_abs_pivot<T: Ord>(rows: impl Iterator<Item = (usize, Option<T>)>) -> Option<usize> {
    rows.filter_map(|(r, key)| key.map(|k| (k, r))).min().map(|(_, r)| r)
}

/// Fraction-free elimination with row content removal. `None` on overflow.
fn rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = min_abs_pivot((rank..rows).map(|r| (r, (a[r][col] != 0).then(|| a[r][col].unsigned_abs()))))
        else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col];
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            if pivot.abs() == 1 {
                let scale = f.checked_mul(pivot)?;
                for c in col..cols {
                    row[c] = row[c].checked_sub(scale.checked_mul(pivot_row[c])?)?;
                }
            } else {
                let g = pivot.gcd(&f);
                let (pp, ff) = (pivot / g, f / g);
                let mut content = 0i128;
                for c in col..cols {
                    row[c] = pp.checked_mul(row[c])?.checked_sub(ff.checked_mul(pivot_row[c])?)?;
                    content = content.gcd(&row[c]);
                }
                if content > 1 {
                    row[col..].iter_mut().for_each(|x| *x /= content);
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = min_abs_pivot((rank..rows).map(|r| (r, (!a[r][col].is_zero()).then(|| a[r][col].abs()))))
        else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pivot.gcd(&row[col]);
            let pp = pivot / &g;
            let ff = &row[col] / &g;
            let mut content = BigInt::zero();
            for c in col..cols {
                row[c] = &pp * &row[c] - &ff * &pivot_row[c];
                content = content.gcd(&row[c]);
            }
            if content > BigInt::from(1) {
                row[col..].iter_mut().for_each(|x| *x /= &content);
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let modp = |x: i64| x.rem_euclid(p as i64) as u64;
    let mut a: Vec<Vec<u64>> = matrix.iter().map(|r| r.iter().map(|&x| modp(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let inv = |x: u64| {
        // Fermat
        let (mut base, mut e, mut acc) = (x, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, piv);
        let scale = inv(a[rank][col]);
        for c in col..cols {
            a[rank][c] = mul(a[rank][c], scale);
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col];
            if f != 0 {
                for c in col..cols {
                    row[c] = (row[c] + p - mul(f, pivot_row[c])) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
