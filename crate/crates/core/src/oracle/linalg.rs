//! Exact matrix rank over `Q` and over prime fields.
//!
//! Matrices arrive as sparse rows of `(column, coefficient)` pairs; boundary
//! matrices only ever carry `±1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::FieldChoice;

pub type SparseRow = Vec<(usize, i8)>;

pub fn rank(field: FieldChoice, rows: &[SparseRow], n_cols: usize) -> usize {
    if rows.is_empty() || n_cols == 0 {
        return 0;
    }
    match field {
        FieldChoice::Rationals => rank_rational(rows, n_cols),
        FieldChoice::Prime(2) => rank_f2(rows, n_cols),
        FieldChoice::Prime(p) => rank_mod_p(rows, n_cols, p),
    }
}

fn dense(rows: &[SparseRow], n_cols: usize) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|row| {
            let mut d = vec![0i64; n_cols];
            for &(c, v) in row {
                d[c] += i64::from(v);
            }
            d
        })
        .collect()
}

/// Fraction-free elimination in `i64`, restarting in `BigInt` on overflow.
pub fn rank_rational(rows: &[SparseRow], n_cols: usize) -> usize {
    let m = dense(rows, n_cols);
    rank_i64(m.clone()).unwrap_or_else(|| {
        rank_bigint(
            m.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    })
}

fn pick_pivot<T>(m: &[Vec<T>], from: usize, col: usize, is_zero: impl Fn(&T) -> bool, is_unit: impl Fn(&T) -> bool) -> Option<usize> {
    let mut found = None;
    for (r, row) in m.iter().enumerate().skip(from) {
        let v = &row[col];
        if is_zero(v) {
            continue;
        }
        if is_unit(v) {
            return Some(r);
        }
        found.get_or_insert(r);
    }
    found
}

fn rank_i64(mut m: Vec<Vec<i64>>) -> Option<usize> {
    let n_cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n_cols {
        let Some(p) = pick_pivot(&m, rank, c, |v| *v == 0, |v| v.abs() == 1) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pv = pivot_row[c];
        for row in rest.iter_mut() {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let g = pv.gcd(&a);
            let (mp, ma) = (pv / g, a / g);
            let mut content = 0i64;
            for x in c..n_cols {
                let v = row[x]
                    .checked_mul(mp)?
                    .checked_sub(pivot_row[x].checked_mul(ma)?)?;
                row[x] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                row[c..].iter_mut().for_each(|v| *v /= content);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}

fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let n_cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n_cols {
        let Some(p) = pick_pivot(&m, rank, c, Zero::is_zero, |v: &BigInt| v.abs() == BigInt::from(1)) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            let g = pv.gcd(&a);
            let (mp, ma) = (&pv / &g, &a / &g);
            let mut content = BigInt::zero();
            for x in c..n_cols {
                row[x] = &row[x] * &mp - &pivot_row[x] * &ma;
                content = content.gcd(&row[x]);
            }
            if content > BigInt::from(1) {
                row[c..].iter_mut().for_each(|v| *v /= &content);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Gaussian elimination over `F_2` on bit-packed rows.
pub fn rank_f2(rows: &[SparseRow], n_cols: usize) -> usize {
    let words = n_cols.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            let mut bits = vec![0u64; words];
            for &(c, v) in row {
                if v % 2 != 0 {
                    bits[c / 64] ^= 1 << (c % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for c in 0..n_cols {
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..m.len()).find(|&r| m[r][w] & b != 0) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[w] & b != 0 {
                for (x, y) in row[w..].iter_mut().zip(&pivot_row[w..]) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut exp, mut acc) = (u64::from(a), p - 2, 1u64);
    let p = u64::from(p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc as u32
}

/// Gaussian elimination over `F_p` for an odd prime `p`.
pub fn rank_mod_p(rows: &[SparseRow], n_cols: usize, p: u32) -> usize {
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .map(|row| {
            let mut d = vec![0u32; n_cols];
            for &(c, v) in row {
                d[c] = (d[c] + i64::from(v).rem_euclid(i64::from(p)) as u32) % p;
            }
            d
        })
        .collect();
    let mut rank = 0;
    for c in 0..n_cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inverse_mod(m[rank][c], p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let factor = row[c] * inv % p;
            for x in c..n_cols {
                row[x] = (row[x] + (p - factor) * pivot_row[x] % p) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
