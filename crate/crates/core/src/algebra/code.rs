use std::collections::BTreeSet;

use super::coords::{CoordSet, MAX_LENGTH};
use super::field::{Elem, Field};
use super::matrix::{Echelon, Matrix};
use crate::error::{Error, Result};

/// Maximum number of codewords `min_distance` will enumerate.
pub const DISTANCE_BUDGET: u64 = 1 << 30;

/// Maximum number of codewords materialized as an explicit [`CodewordSet`].
pub const CODEWORD_SET_BUDGET: u64 = 1 << 20;

/// A linear code given by a full-row-rank k×n generator matrix; `x ↦ xG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
    columns: Vec<Vec<Elem>>,
}

impl LinearCode {
    pub fn new(generator: Matrix) -> Result<Self> {
        let (k, n) = (generator.rows(), generator.cols());
        if k == 0 || n < k {
            return Err(Error::InvalidParameters(format!(
                "generator must satisfy 1 <= k <= n, got k={k} n={n}"
            )));
        }
        if n > MAX_LENGTH {
            return Err(Error::InvalidParameters(format!(
                "code length {n} exceeds the supported maximum {MAX_LENGTH}"
            )));
        }
        let rank = generator.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, rows: k });
        }
        let columns = (0..n).map(|j| generator.column(j)).collect();
        Ok(LinearCode { generator, columns })
    }

    pub fn from_rows<R: AsRef<[usize]>>(field: Field, rows: &[R]) -> Result<Self> {
        LinearCode::new(Matrix::from_rows(field, rows)?)
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn q(&self) -> usize {
        self.field().q()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Column `j` of the generator, i.e. the coefficients of `y_j` in terms of `x`.
    pub fn column(&self, j: usize) -> &[Elem] {
        &self.columns[j]
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                got: message.len(),
            });
        }
        let f = self.field();
        Ok(self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .zip(message)
                    .fold(0, |acc, (&g, &x)| f.add(acc, f.mul(g, x)))
            })
            .collect())
    }

    /// `q^k`, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        (self.q() as u64).checked_pow(self.k() as u32)
    }

    fn check_budget(&self, budget: u64, what: &str) -> Result<u64> {
        match self.size() {
            Some(size) if size <= budget => Ok(size),
            _ => Err(Error::Budget(format!(
                "{what} needs {}^{} codewords, budget is {budget}",
                self.q(),
                self.k()
            ))),
        }
    }

    /// Minimum Hamming weight over all nonzero codewords.
    pub fn min_distance(&self) -> Result<usize> {
        self.check_budget(DISTANCE_BUDGET, "minimum distance")?;
        let f = self.field();
        let (k, n, q) = (self.k(), self.n(), self.q());
        // scaled[i][c] = c * G_i
        let scaled: Vec<Vec<Vec<Elem>>> = (0..k)
            .map(|i| {
                let row = self.generator.row(i);
                f.elements()
                    .map(|c| row.iter().map(|&g| f.mul(c, g)).collect())
                    .collect()
            })
            .collect();

        let mut digits = vec![0usize; k];
        let mut word = vec![0 as Elem; n];
        let mut best = n;
        loop {
            // Mixed-radix increment; the codeword tracks the message.
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(best);
                }
                let old = digits[i];
                let new = (old + 1) % q;
                digits[i] = new;
                for (w, (&a, &b)) in word.iter_mut().zip(scaled[i][new].iter().zip(&scaled[i][old])) {
                    *w = f.add(*w, f.sub(a, b));
                }
                if new != 0 {
                    break;
                }
                i += 1;
            }
            let weight = word.iter().filter(|&&y| y != 0).count();
            if weight < best {
                best = weight;
            }
        }
    }

    /// Every codeword together with its message, in message order.
    pub fn codewords(&self) -> Result<CodewordSet> {
        let size = self.check_budget(CODEWORD_SET_BUDGET, "codeword enumeration")?;
        let q = self.q();
        let mut messages = Vec::with_capacity(size as usize);
        let mut words = Vec::with_capacity(size as usize);
        for index in 0..size {
            let mut rest = index as usize;
            // First information symbol is the most significant digit.
            let mut message = vec![0 as Elem; self.k()];
            for x in message.iter_mut().rev() {
                *x = (rest % q) as Elem;
                rest /= q;
            }
            words.push(self.encode(&message)?);
            messages.push(message);
        }
        Ok(CodewordSet {
            n: self.n(),
            messages,
            words,
        })
    }

    /// Codewords with the coordinates in `coords` deleted, as a multiset in message order.
    pub fn puncture(&self, coords: CoordSet) -> Result<Vec<Vec<Elem>>> {
        self.codewords()?.puncture(coords)
    }

    /// Finds, for every information symbol `i`, a column that is a nonzero
    /// multiple of the unit vector `e_i`. Returns the smallest such column per symbol.
    pub fn systematic_columns(&self) -> Option<Vec<usize>> {
        (0..self.k())
            .map(|i| {
                self.columns.iter().position(|col| {
                    col.iter()
                        .enumerate()
                        .all(|(row, &g)| (row == i) == (g != 0))
                })
            })
            .collect()
    }

    pub fn is_systematic(&self) -> bool {
        self.systematic_columns().is_some()
    }

    /// True iff `target` lies in the span of the columns in `coords`, optionally
    /// extended by the unit vector `e_extra`.
    pub(crate) fn span_contains(&self, target: &[Elem], coords: CoordSet, extra: Option<usize>) -> bool {
        let mut echelon = Echelon::new(self.field().clone(), self.k());
        for j in coords.iter() {
            echelon.insert(self.columns[j].clone());
        }
        if let Some(i) = extra {
            echelon.insert(unit(self.k(), i));
        }
        echelon.reduces_to_zero(target)
    }
}

pub(crate) fn unit(len: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// An explicit list of codewords with their messages (a subcode, possibly affine).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodewordSet {
    n: usize,
    messages: Vec<Vec<Elem>>,
    words: Vec<Vec<Elem>>,
}

impl CodewordSet {
    pub fn new(n: usize, messages: Vec<Vec<Elem>>, words: Vec<Vec<Elem>>) -> Result<Self> {
        if messages.len() != words.len() {
            return Err(Error::DimensionMismatch {
                expected: messages.len(),
                got: words.len(),
            });
        }
        if let Some(w) = words.iter().find(|w| w.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: w.len(),
            });
        }
        Ok(CodewordSet { n, messages, words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Vec<Elem>] {
        &self.words
    }

    pub fn messages(&self) -> &[Vec<Elem>] {
        &self.messages
    }

    /// Whether information symbol `i` takes more than one value on this set.
    pub fn varies_in_message(&self, i: usize) -> bool {
        let mut it = self.messages.iter().map(|m| m[i]);
        match it.next() {
            Some(first) => it.any(|x| x != first),
            None => false,
        }
    }

    /// Keeps only the codewords whose restriction to `coords` equals `pattern`.
    pub fn fix(&self, coords: CoordSet, pattern: &[Elem]) -> CodewordSet {
        let (messages, words) = self
            .messages
            .iter()
            .zip(&self.words)
            .filter(|(_, w)| restrict(w, coords) == pattern)
            .map(|(m, w)| (m.clone(), w.clone()))
            .unzip();
        CodewordSet {
            n: self.n,
            messages,
            words,
        }
    }

    pub fn puncture(&self, coords: CoordSet) -> Result<Vec<Vec<Elem>>> {
        if coords.bound() > self.n {
            return Err(Error::IndexOutOfRange {
                what: "coordinate",
                index: coords.bound() - 1,
                limit: self.n,
            });
        }
        Ok(self
            .words
            .iter()
            .map(|w| {
                w.iter()
                    .enumerate()
                    .filter(|(j, _)| !coords.contains(*j))
                    .map(|(_, &y)| y)
                    .collect()
            })
            .collect())
    }

    /// Minimum Hamming distance between distinct members; `None` with fewer than two.
    pub fn min_pairwise_distance(&self) -> Option<usize> {
        min_pairwise_distance(&self.words)
    }
}

/// Symbols of `word` at the coordinates of `coords`, in ascending coordinate order.
pub fn restrict(word: &[Elem], coords: CoordSet) -> Vec<Elem> {
    coords.iter().map(|j| word[j]).collect()
}

/// Renders a word as a digit string for q ≤ 10 (`0101`), else as `(12 0 255)`.
pub fn format_word(word: &[Elem], q: usize) -> String {
    if q <= 10 {
        word.iter().map(|y| char::from(b'0' + y)).collect()
    } else {
        let parts: Vec<String> = word.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(" "))
    }
}

pub fn hamming_distance(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Minimum distance between distinct words of a list (duplicates are collapsed).
pub fn min_pairwise_distance(words: &[Vec<Elem>]) -> Option<usize> {
    let distinct: Vec<&Vec<Elem>> = words.iter().collect::<BTreeSet<_>>().into_iter().collect();
    let mut best: Option<usize> = None;
    for (a, wa) in distinct.iter().enumerate() {
        for wb in &distinct[a + 1..] {
            let d = hamming_distance(wa, wb);
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best
}
