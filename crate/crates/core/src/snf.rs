//! Smith normal form of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `P * A * Q = diag(invariants) (padded with zeros)` for unimodular `P`, `Q`.
///
/// Only the column transform `Q` is kept: it is what lattice-basis
/// computations need.
#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub invariants: Vec<BigInt>,
    pub col_transform: Vec<Vec<BigInt>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

pub fn smith_normal_form(matrix: &[Vec<BigInt>], ncols: usize) -> SmithForm {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let nrows = a.len();
    let mut q: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| {
            (0..ncols)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();

    let swap_cols = |a: &mut Vec<Vec<BigInt>>, q: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in a.iter_mut().chain(q.iter_mut()) {
            row.swap(i, j);
        }
    };
    // col_j -= f * col_t
    let col_axpy =
        |a: &mut Vec<Vec<BigInt>>, q: &mut Vec<Vec<BigInt>>, j: usize, t: usize, f: &BigInt| {
            for row in a.iter_mut().chain(q.iter_mut()) {
                let delta = &row[t] * f;
                row[j] -= delta;
            }
        };

    let mut invariants = Vec::new();
    for t in 0..nrows.min(ncols) {
        // Smallest nonzero entry of the trailing block goes to the pivot.
        let Some((pi, pj)) = smallest_entry(&a, t, ncols) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, &mut q, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if !a[i][t].is_zero() {
                    let f = &a[i][t] / &a[t][t];
                    let pivot_row = a[t].clone();
                    for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= p * &f;
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..ncols {
                if !a[t][j].is_zero() {
                    let f = &a[t][j] / &a[t][t];
                    col_axpy(&mut a, &mut q, j, t, &f);
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                let (pi, pj) = smallest_in_cross(&a, t, ncols);
                a.swap(t, pi);
                swap_cols(&mut a, &mut q, t, pj);
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let offender =
                (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
        }
        invariants.push(a[t][t].clone());
    }
    SmithForm {
        invariants,
        col_transform: q,
    }
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize, ncols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().take(ncols).skip(t) {
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` beyond the pivot.
fn smallest_in_cross(a: &[Vec<BigInt>], t: usize, ncols: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cands = (t..a.len())
        .map(|i| (i, t))
        .chain((t..ncols).map(|j| (t, j)));
    for (i, j) in cands {
        if !a[i][j].is_zero()
            && (a[best.0][best.1].is_zero() || a[i][j].abs() < a[best.0][best.1].abs())
        {
            best = (i, j);
        }
    }
    best
}
