use std::fmt;

use super::field::{Elem, Field};
use crate::error::{Error, Result};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        for &e in &entries {
            field.check(e as usize)?;
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows<R: AsRef<[usize]>>(field: Field, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for &e in row {
                entries.push(field.check(e)?);
            }
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, size: usize) -> Self {
        let mut m = Matrix::zeros(field, size, size);
        for i in 0..size {
            m.entries[i * size + i] = 1;
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.field, self.cols, self.entries.chunks(self.cols.max(1)).map(<[Elem]>::to_vec))
    }
}

/// Rank of the span of `vectors`, each of length `len`, by Gaussian elimination.
pub fn rank_of_rows<I>(field: &Field, len: usize, vectors: I) -> usize
where
    I: IntoIterator<Item = Vec<Elem>>,
{
    if len == 0 {
        return 0;
    }
    let mut echelon = Echelon::new(field.clone(), len);
    for v in vectors {
        echelon.insert(v);
    }
    echelon.rank()
}

/// True iff `v` is a linear combination of `basis`.
pub fn in_span(field: &Field, v: &[Elem], basis: &[Vec<Elem>]) -> Result<bool> {
    for b in basis {
        if b.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                got: b.len(),
            });
        }
    }
    let mut echelon = Echelon::new(field.clone(), v.len());
    for b in basis {
        echelon.insert(b.clone());
    }
    Ok(echelon.reduces_to_zero(v))
}

/// Incrementally maintained row-echelon basis.
///
/// Each stored row has a distinct pivot column and a pivot value of 1.
#[derive(Clone)]
pub(crate) struct Echelon {
    field: Field,
    len: usize,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl Echelon {
    pub(crate) fn new(field: Field, len: usize) -> Self {
        Echelon {
            field,
            len,
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<Elem>) -> Vec<Elem> {
        debug_assert_eq!(v.len(), self.len);
        let f = &self.field;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        v
    }

    /// Adds `v` to the basis; returns whether the rank grew.
    pub(crate) fn insert(&mut self, v: Vec<Elem>) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = &self.field;
        let inv = f.inv(v[pivot]).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.rows.push((pivot, v));
        true
    }

    pub(crate) fn reduces_to_zero(&self, v: &[Elem]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }
}
