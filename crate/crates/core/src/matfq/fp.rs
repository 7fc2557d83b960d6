//! Dense linear algebra over a prime field with plain u64 entries.

use crate::arith::inv_mod;

/// In-place reduced row echelon form; returns pivot columns.
pub(crate) fn rref(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][c], p);
        if inv != 1 {
            for v in rows[r][c..].iter_mut() {
                *v = *v * inv % p;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let f = other[c];
            if f == 0 {
                continue;
            }
            if p == 2 {
                for (o, pv) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                    *o ^= pv;
                }
            } else {
                let nf = p - f;
                for (o, pv) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                    *o = (*o + nf * pv) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of {x : x A = 0} in reduced echelon form, A given by rows.
pub(crate) fn left_kernel(a: &[Vec<u64>], n_cols: usize, p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    // transpose: (n_cols x n), null space of A^T
    let mut t: Vec<Vec<u64>> = (0..n_cols)
        .map(|j| (0..n).map(|i| a[i][j]).collect())
        .collect();
    if t.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
    }
    let pivots = rref(&mut t, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<u64>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - t[row][f]) % p;
            }
            v
        })
        .collect();
    rref(&mut basis, p);
    basis
}

/// Solves x B = target for x, B given by rows; None if inconsistent.
/// When B has dependent rows the free coordinates are set to zero.
pub(crate) fn solve_left(b: &[Vec<u64>], target: &[u64], p: u64) -> Option<Vec<u64>> {
    let k = b.len();
    let c = target.len();
    let mut aug: Vec<Vec<u64>> = (0..c)
        .map(|j| {
            let mut row: Vec<u64> = (0..k).map(|i| b[i][j]).collect();
            row.push(target[j] % p);
            row
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![0u64; k];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][k];
    }
    Some(x)
}

pub(crate) fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut r = rows.to_vec();
    rref(&mut r, p).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_solve() {
        let a = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(left_kernel(&a, 2, 2), vec![vec![1, 1]]);
        let b = vec![vec![1, 0, 2], vec![0, 1, 1]];
        assert_eq!(solve_left(&b, &[2, 1, 2], 3), Some(vec![2, 1]));
        assert_eq!(solve_left(&b, &[0, 0, 1], 3), None);
        assert_eq!(rank(&b, 3), 2);
    }
}
