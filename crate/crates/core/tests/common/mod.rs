//! Independent oracles for small binary codes.
//!
//! Nothing here goes through the catalog, span tests or field tables: codes
//! are bitmask rows and every question is answered by enumerating messages.

#![allow(dead_code)]

use batchcode::{Field, LinearCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinCode {
    pub k: usize,
    pub n: usize,
    /// Row `i` as a bitmask over coordinates (bit `j` = column `j`).
    pub rows: Vec<u64>,
}

impl BinCode {
    pub fn encode(&self, message: u64) -> u64 {
        (0..self.k).filter(|i| message >> i & 1 == 1).fold(0, |acc, i| acc ^ self.rows[i])
    }

    pub fn is_injective(&self) -> bool {
        (1..1u64 << self.k).all(|m| self.encode(m) != 0)
    }

    pub fn min_distance(&self) -> usize {
        (1..1u64 << self.k).map(|m| self.encode(m).count_ones() as usize).min().unwrap()
    }

    /// `S` recovers `x_i` iff no message with `x_i = 1` encodes to zero on `S`.
    pub fn recovers(&self, i: usize, s: u64) -> bool {
        (1..1u64 << self.k).filter(|m| m >> i & 1 == 1).all(|m| self.encode(m) & s != 0)
    }

    /// Whether `y_ell` is a function of `y|_fixed` and `x_i` over all codewords.
    pub fn determined(&self, ell: usize, fixed: u64, i: usize) -> bool {
        (1..1u64 << self.k)
            .filter(|m| m >> i & 1 == 0)
            .all(|m| !(self.encode(m) & fixed == 0 && self.encode(m) >> ell & 1 == 1))
    }

    pub fn to_linear(&self) -> LinearCode {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|&row| (0..self.n).map(|j| (row >> j & 1) as usize).collect())
            .collect();
        LinearCode::from_rows(Field::binary(), &rows).expect("full rank")
    }

    pub fn digits(&self) -> String {
        self.rows
            .iter()
            .map(|&row| (0..self.n).map(|j| if row >> j & 1 == 1 { '1' } else { '0' }).collect::<String>())
            .collect::<Vec<_>>()
            .join("/")
    }
}

fn subsets_up_to(n: usize, r: usize) -> Vec<u64> {
    (1..1u64 << n).filter(|s| s.count_ones() as usize <= r).collect()
}

fn multisets(k: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, t: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            go(k, t, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, t, 0, &mut Vec::new(), &mut out);
    out
}

fn serve(code: &BinCode, candidates: &[u64], query: &[usize], used: u64) -> bool {
    let Some((&i, rest)) = query.split_first() else {
        return true;
    };
    candidates
        .iter()
        .filter(|&&s| s & used == 0 && code.recovers(i, s))
        .any(|&s| serve(code, candidates, rest, used | s))
}

/// Exhaustive batch check over every subset of size at most `r`, minimal or not.
pub fn naive_batch(code: &BinCode, r: usize, t: usize) -> bool {
    let candidates = subsets_up_to(code.n, r);
    multisets(code.k, t).iter().all(|q| serve(code, &candidates, q, 0))
}

/// First failing multiset in lexicographic order.
pub fn naive_counterexample(code: &BinCode, r: usize, t: usize) -> Option<Vec<usize>> {
    let candidates = subsets_up_to(code.n, r);
    multisets(code.k, t).into_iter().find(|q| !serve(code, &candidates, q, 0))
}

/// Minimal recovery sets for `x_i` of size at most `r`, as bitmasks in increasing order.
pub fn naive_minimal_sets(code: &BinCode, i: usize, r: usize) -> Vec<u64> {
    subsets_up_to(code.n, r)
        .into_iter()
        .filter(|&s| code.recovers(i, s))
        .filter(|&s| (0..code.n).filter(|j| s >> j & 1 == 1).all(|j| !code.recovers(i, s & !(1 << j))))
        .collect()
}

pub fn random_code(rng: &mut ChaCha8Rng, k: usize, n: usize) -> BinCode {
    loop {
        let rows: Vec<u64> = (0..k).map(|_| rng.random_range(0..1u64 << n)).collect();
        let code = BinCode { k, n, rows };
        if code.is_injective() {
            return code;
        }
    }
}

/// At least 120 distinct binary codes with `k ≤ 3`, `n ≤ 6`, fixed seed.
pub fn corpus() -> Vec<BinCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBA7C_0DE5);
    let mut codes = std::collections::BTreeSet::new();
    for k in 1..=3 {
        codes.insert(BinCode { k, n: k, rows: (0..k).map(|i| 1 << i).collect() });
    }
    // replication with k=2,t=2 and k=3,t=2 (symbol-major)
    codes.insert(BinCode { k: 2, n: 4, rows: vec![0b0011, 0b1100] });
    codes.insert(BinCode { k: 3, n: 6, rows: vec![0b000011, 0b001100, 0b110000] });
    // parity on two symbols plus a repeated parity
    codes.insert(BinCode { k: 2, n: 5, rows: vec![0b11001, 0b11010] });
    while codes.len() < 120 {
        let k = rng.random_range(1..=3);
        let n = rng.random_range(k..=6);
        codes.insert(random_code(&mut rng, k, n));
    }
    codes.into_iter().collect()
}

/// Closed-form asymptotic bound in floating point.
pub fn delta_float(rate: f64, r: usize, t: usize) -> f64 {
    let (r, t) = (r as f64, t as f64);
    1.0 - r * t / (r * t - t + 1.0) * rate
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1) / b
}
