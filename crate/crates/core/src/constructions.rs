//! Small explicit codes used throughout the examples and tests.

use crate::algebra::{Field, LinearCode};
use crate::error::{Error, Result};

/// The binary 3×7 simplex-code generator whose columns are all nonzero vectors of GF(2)^3,
/// ordered so the first three columns form the identity.
pub fn simplex_3_7() -> LinearCode {
    LinearCode::from_rows(
        Field::binary(),
        &[
            [1, 0, 0, 1, 1, 0, 1],
            [0, 1, 0, 1, 0, 1, 1],
            [0, 0, 1, 0, 1, 1, 1],
        ],
    )
    .expect("simplex generator has full rank")
}

pub fn identity(field: Field, k: usize) -> Result<LinearCode> {
    let rows: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| usize::from(i == j)).collect())
        .collect();
    LinearCode::from_rows(field, &rows)
}

/// Dimension-one code whose generator is the all-ones row of length `n`.
pub fn repetition(field: Field, n: usize) -> Result<LinearCode> {
    LinearCode::from_rows(field, &[vec![1; n]])
}

/// Each of the `k` information symbols stored `t` times in consecutive
/// coordinates (`n = k·t`).
pub fn replication(field: Field, k: usize, t: usize) -> Result<LinearCode> {
    if t == 0 {
        return Err(Error::InvalidParameters("replication factor must be >= 1".into()));
    }
    let rows: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k * t).map(|j| usize::from(j / t == i)).collect())
        .collect();
    LinearCode::from_rows(field, &rows)
}

/// Binary systematic code with `⌈k/2⌉` extra coordinates: `x_1 + x_2`, `x_3 + x_4`, …,
/// and, when `k` is odd, a second copy of `x_k`.
pub fn systematic_parity(k: usize) -> Result<LinearCode> {
    let n = k + k.div_ceil(2);
    let mut rows = vec![vec![0usize; n]; k];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 1;
    }
    for p in 0..k / 2 {
        rows[2 * p][k + p] = 1;
        rows[2 * p + 1][k + p] = 1;
    }
    if k % 2 == 1 {
        rows[k - 1][n - 1] = 1;
    }
    LinearCode::from_rows(Field::binary(), &rows)
}
