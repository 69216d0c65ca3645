//! Dense exact linear algebra over [`Scalar`] matrices (row-major `Vec<Vec<_>>`).

use crate::exactnum::{FieldSpec, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns.
pub fn rref(rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let (pivot_row, row) = if i < r {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, p) in row.iter_mut().zip(pivot_row) {
                    if !p.is_zero() {
                        *x = &*x - &(&factor * p);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : rows * x = 0}`, one vector per free column, with that
/// free coordinate set to 1.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize, field: FieldSpec) -> Matrix {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![Scalar::zero(field); ncols];
        v[f] = Scalar::one(field);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[row][f];
        }
        v
    })
    .collect()
}

/// Solves the square system `a x = b`; `None` if `a` is singular.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.last() == Some(&n) {
        return None;
    }
    Some(
        aug.into_iter()
            .map(|mut row| row.pop().expect("augmented column"))
            .collect(),
    )
}

/// Transposes a matrix given as a list of columns (or rows).
pub fn transpose(m: &[Vec<Scalar>]) -> Matrix {
    let ncols = m.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|c| m.iter().map(|row| row[c].clone()).collect())
        .collect()
}
