use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Stirling numbers of the second kind `S(n, 0..=n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StirlingRow {
    pub n: usize,
    pub values: Vec<BigUint>,
}

impl StirlingRow {
    /// `S(n, i)`, zero outside `0..=n`.
    pub fn get(&self, i: usize) -> BigUint {
        self.values.get(i).cloned().unwrap_or_default()
    }

    /// Smallest `i >= 1` maximising `S(n, i)`; `0` for the empty row.
    pub fn argmax(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut best = 1;
        for i in 2..=self.n {
            if self.values[i] > self.values[best] {
                best = i;
            }
        }
        best
    }

    /// Strictly increasing up to the maximum, which is attained at most at two
    /// consecutive indices, and strictly decreasing afterwards (on `1..=n`).
    pub fn is_unimodal(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let v = &self.values;
        let k = self.argmax();
        if (1..k).any(|i| v[i] >= v[i + 1]) {
            return false;
        }
        if k < self.n && v[k] < v[k + 1] {
            return false;
        }
        (k + 1..self.n).all(|i| v[i] > v[i + 1])
    }
}

/// Row `n` via `S(n,i) = i S(n-1,i) + S(n-1,i-1)`.
pub fn stirling_row(n: usize) -> StirlingRow {
    stirling_rows(n).pop().expect("at least row 0")
}

/// Rows `0..=n_max`.
pub fn stirling_rows(n_max: usize) -> Vec<StirlingRow> {
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut cur = vec![BigUint::one()];
    rows.push(StirlingRow { n: 0, values: cur.clone() });
    for n in 1..=n_max {
        let mut next = vec![BigUint::zero(); n + 1];
        for i in 1..=n {
            let mut v = if i < cur.len() { &cur[i] * i } else { BigUint::zero() };
            v += &cur[i - 1];
            next[i] = v;
        }
        cur = next;
        rows.push(StirlingRow { n, values: cur.clone() });
    }
    rows
}

/// `K_n`: the smallest index maximising `S(n, i)`. Fails if the row is not
/// unimodal.
pub fn stirling_argmax(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument("stirling_argmax needs n >= 1".into()));
    }
    let row = stirling_row(n);
    if !row.is_unimodal() {
        return Err(Error::Invariant(format!("Stirling row {n} is not unimodal")));
    }
    Ok(row.argmax())
}
