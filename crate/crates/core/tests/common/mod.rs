//! A brute-force first cohomology oracle that shares no code with the
//! library's linear algebra: equations are written out from the structure
//! constants and ranked by fraction-free (Bareiss) elimination over the
//! integers.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use semidirect::algebra::{Algebra, BimoduleAction};
use semidirect::Rational;

/// `dim H¹(A, A)` for `A` acting on itself.
pub fn h1_regular(a: &Algebra<Rational>) -> usize {
    h1_bimodule(a, &BimoduleAction::regular(a))
}

/// `dim Z¹(A, M) - dim N¹(A, M)`.
pub fn h1_bimodule(a: &Algebra<Rational>, m: &BimoduleAction<Rational>) -> usize {
    let n = a.dim();
    let md = m.module_dim();
    let (left, right) = (m.left_tensor(), m.right_tensor());
    let l = |i: usize, p: usize, q: usize| &left[(i * md + p) * md + q];
    let r = |p: usize, i: usize, q: usize| &right[(p * n + i) * md + q];
    let var = |i: usize, q: usize| i * md + q;

    // d(e_i e_j) - e_i d(e_j) - d(e_i) e_j = 0, coordinate k.
    let mut leibniz = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..md {
                let mut row = vec![Rational::zero(); n * md];
                for p in 0..n {
                    row[var(p, k)] += a.constant(i, j, p).clone();
                }
                for q in 0..md {
                    row[var(j, q)] -= l(i, q, k).clone();
                    row[var(i, q)] -= r(q, j, k).clone();
                }
                leibniz.push(row);
            }
        }
    }
    // The inner map of x_s: e_i ↦ e_i x_s - x_s e_i.
    let mut inner = Vec::new();
    for s in 0..md {
        let mut row = vec![Rational::zero(); n * md];
        for i in 0..n {
            for k in 0..md {
                row[var(i, k)] = l(i, s, k).clone() - r(s, i, k).clone();
            }
        }
        inner.push(row);
    }
    let z1 = n * md - bareiss_rank(integer_rows(leibniz));
    z1 - bareiss_rank(integer_rows(inner))
}

fn integer_rows(rows: Vec<Vec<Rational>>) -> Vec<Vec<BigInt>> {
    rows.into_iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect()
        })
        .collect()
}

/// Rank by fraction-free Gaussian elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Regression values the oracle produced before the library existed.
pub const FROZEN_H1: [(&str, usize); 4] = [("M2", 0), ("dual numbers", 1), ("Q", 0), ("T2", 0)];
