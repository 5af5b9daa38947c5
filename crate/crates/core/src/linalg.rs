//! Exact row reduction over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduces `rows` in place to reduced row echelon form using the given
/// column order for pivot selection. Returns the pivot columns in the order
/// they were found; rows beyond the rank are left zero.
pub(crate) fn rref_with_order(rows: &mut Vec<Vec<BigRational>>, column_order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for &col in column_order {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = BigRational::one() / rows[next][col].clone();
        for v in rows[next].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = &*v - &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

/// Rank of a list of row vectors.
pub(crate) fn rank(rows: &[&[BigRational]]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(found) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, found);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[rank][col];
            let (top, rest) = m.split_at_mut(r);
            for (x, p) in rest[0][col..width].iter_mut().zip(&top[rank][col..width]) {
                *x -= &factor * p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
