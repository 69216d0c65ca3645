//! Betti numbers of the quasitoric space, by the closed form `b_2j = h_j`
//! and by replaying the Mayer-Vietoris induction over the chart filtration
//! `W_1 ⊂ W_2 ⊂ ... ⊂ W_f0`.
//!
//! Adding the chart of a vertex of index `i` glues in a piece whose overlap
//! with the previous union has the cohomology of a sphere of dimension
//! `2i - 1`; the net effect is one new class in degree `2i`.

use std::fmt;

use thiserror::Error;

use crate::combinatorics::{HVector, MorseData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error("Betti vector must have odd length 2n+1, got {0}")]
    Length(usize),
    #[error("odd Betti number b_{0} is nonzero")]
    OddDegree(usize),
    #[error("b_0 and b_2n must both be 1")]
    Endpoints,
    #[error("negative entry {value} at position {pos}")]
    Negative { pos: usize, value: i64 },
    #[error("first vertex of the filtration has index {0}, expected 0")]
    FirstIndex(usize),
    #[error("vertex {step} of the filtration has index 0")]
    RepeatedMinimum { step: usize },
    #[error("filtration is empty")]
    Empty,
}

/// `b_0, ..., b_2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector(Vec<u64>);

impl BettiVector {
    /// Checks the invariants: odd entries zero, `b_0 = b_2n = 1`.
    pub fn new(entries: Vec<u64>) -> Result<Self, BettiError> {
        if entries.len().is_multiple_of(2) {
            return Err(BettiError::Length(entries.len()));
        }
        if let Some(i) = (1..entries.len()).step_by(2).find(|&i| entries[i] != 0) {
            return Err(BettiError::OddDegree(i));
        }
        if entries[0] != 1 || entries[entries.len() - 1] != 1 {
            return Err(BettiError::Endpoints);
        }
        Ok(BettiVector(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Complex dimension `n`.
    pub fn dim(&self) -> usize {
        (self.0.len() - 1) / 2
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `b_2j = h_j`, odd Betti numbers zero.
pub fn betti_from_h(h: &HVector) -> Result<BettiVector, BettiError> {
    let mut b = Vec::with_capacity(2 * h.entries().len() - 1);
    for (j, &hj) in h.entries().iter().enumerate() {
        if hj < 0 {
            return Err(BettiError::Negative { pos: j, value: hj });
        }
        if j > 0 {
            b.push(0);
        }
        b.push(hj as u64);
    }
    BettiVector::new(b)
}

/// Even Betti numbers of `W_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationState {
    pub step: usize,
    /// `b_0(W_k), b_2(W_k), ..., b_2n(W_k)`.
    pub even: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub betti: BettiVector,
    pub trace: Vec<FiltrationState>,
}

/// `W_1` is a single contractible chart; each later vertex `nu_k` adds a
/// class in degree `2 ind(nu_k)` and leaves every other degree unchanged.
pub fn mv_filtration(md: &MorseData) -> Result<Filtration, BettiError> {
    let first = md.order.first().ok_or(BettiError::Empty)?;
    if first.index != 0 {
        return Err(BettiError::FirstIndex(first.index));
    }
    let mut even = vec![0u64; md.n + 1];
    even[0] = 1;
    let mut trace = vec![FiltrationState {
        step: 1,
        even: even.clone(),
    }];
    for (k, v) in md.order.iter().enumerate().skip(1) {
        if v.index == 0 {
            return Err(BettiError::RepeatedMinimum { step: k + 1 });
        }
        even[v.index] += 1;
        trace.push(FiltrationState {
            step: k + 1,
            even: even.clone(),
        });
    }
    let mut b = Vec::with_capacity(2 * md.n + 1);
    for (j, &e) in even.iter().enumerate() {
        if j > 0 {
            b.push(0);
        }
        b.push(e);
    }
    Ok(Filtration {
        betti: BettiVector::new(b)?,
        trace,
    })
}

pub fn euler_characteristic(b: &BettiVector) -> i64 {
    b.entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Coefficients of `sum b_i t^i`, lowest degree first.
pub fn poincare_polynomial(b: &BettiVector) -> Vec<u64> {
    b.entries().to_vec()
}

/// Human-readable form such as `1 + 2t^2 + t^4`.
pub fn format_polynomial(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".into(),
            (1, c) => format!("{c}t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}t^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
