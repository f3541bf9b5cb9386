//! Dense linear algebra over `GF(q)` on label vectors.
//!
//! Characteristic two throughout, so negation is the identity.

use crate::field::BaseField;

/// A vector over `GF(q)` as base-field labels.
pub type CoordVec = Vec<u8>;

/// `y += c·x`.
pub fn axpy(fq: &BaseField, y: &mut [u8], c: u8, x: &[u8]) {
    if c == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = fq.add(*yi, fq.mul(c, xi));
    }
}

pub fn add(fq: &BaseField, a: &[u8], b: &[u8]) -> CoordVec {
    a.iter().zip(b).map(|(&x, &y)| fq.add(x, y)).collect()
}

pub fn scale(fq: &BaseField, c: u8, a: &[u8]) -> CoordVec {
    a.iter().map(|&x| fq.mul(c, x)).collect()
}

pub fn dot(fq: &BaseField, a: &[u8], b: &[u8]) -> u8 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| fq.add(acc, fq.mul(x, y)))
}

pub fn is_zero(v: &[u8]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// `v · M` for a row vector `v` and a matrix given by rows.
pub fn vec_mat(fq: &BaseField, v: &[u8], m: &[CoordVec], ncols: usize) -> CoordVec {
    let mut out = vec![0u8; ncols];
    for (&c, row) in v.iter().zip(m) {
        axpy(fq, &mut out, c, row);
    }
    out
}

pub fn mat_mul(fq: &BaseField, a: &[CoordVec], b: &[CoordVec], ncols: usize) -> Vec<CoordVec> {
    a.iter().map(|row| vec_mat(fq, row, b, ncols)).collect()
}

pub fn transpose(m: &[CoordVec], ncols: usize) -> Vec<CoordVec> {
    (0..ncols)
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

/// Reduced row echelon form; zero rows dropped. Returns rows and pivot columns.
pub fn rref(fq: &BaseField, mut rows: Vec<CoordVec>, ncols: usize) -> (Vec<CoordVec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(p) = (top..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(top, p);
        let inv = fq.inv(rows[top][col]).expect("pivot is nonzero");
        let pivot_row = scale(fq, inv, &rows[top]);
        rows[top] = pivot_row.clone();
        for r in 0..rows.len() {
            if r != top {
                let c = rows[r][col];
                axpy(fq, &mut rows[r], c, &pivot_row);
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    (rows, pivots)
}

pub fn rank(fq: &BaseField, rows: &[CoordVec], ncols: usize) -> usize {
    rref(fq, rows.to_vec(), ncols).1.len()
}

/// Basis of `{x : row · x = 0 for every row}`, one vector per free column.
pub fn nullspace(fq: &BaseField, rows: &[CoordVec], ncols: usize) -> Vec<CoordVec> {
    let (reduced, pivots) = rref(fq, rows.to_vec(), ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![0u8; ncols];
            x[free] = 1;
            for (row, &p) in reduced.iter().zip(&pivots) {
                x[p] = row[free];
            }
            x
        })
        .collect()
}
