//! Table-driven arithmetic in GF(q) for prime powers q ≤ 256.
//!
//! An element of GF(p^m) is stored as the integer `c_0 + c_1 p + … + c_{m-1} p^{m-1}`
//! where `c_0 + c_1 x + … + c_{m-1} x^{m-1}` is its polynomial representative.
//! Extension fields are reduced modulo the monic irreducible polynomial of
//! degree m whose coefficient encoding (same base-p scheme, leading term
//! omitted) is numerically smallest. For the fields most likely to be used:
//!
//! | q   | modulus                     |
//! |-----|-----------------------------|
//! | 4   | x^2 + x + 1                 |
//! | 8   | x^3 + x + 1                 |
//! | 9   | x^2 + 1                     |
//! | 16  | x^4 + x + 1                 |
//! | 25  | x^2 + 2                     |
//! | 27  | x^3 + 2x + 1                |
//! | 32  | x^5 + x^2 + 1               |
//! | 64  | x^6 + x + 1                 |
//! | 128 | x^7 + x + 1                 |
//! | 256 | x^8 + x^4 + x^3 + x + 1     |
//!
//! [`Field::modulus`] returns the full coefficient list for any q.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element. Valid values are `0..q`.
pub type Elem = u8;

/// The four operations exposed by [`Field::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

struct Tables {
    q: usize,
    p: usize,
    m: usize,
    /// Coefficients c_0..c_m of the reduction polynomial (c_m = 1).
    modulus: Vec<usize>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// Handle to the arithmetic tables of GF(q). Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.q == other.0.q
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl Field {
    pub fn new(q: usize) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::InvalidFieldSize(q))?;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            least_irreducible(p, m)
        };

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let pa = digits(a, p, m);
            for b in 0..q {
                let pb = digits(b, p, m);
                let sum: Vec<usize> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum, p) as Elem;
                mul[a * q + b] = undigits(&poly_mul_mod(&pa, &pb, &modulus, p), p) as Elem;
            }
        }

        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem;
            if a != 0 {
                inv[a] = (1..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .expect("nonzero element without inverse; modulus is not irreducible")
                    as Elem;
            }
        }

        Ok(Field(Arc::new(Tables {
            q,
            p,
            m,
            modulus,
            add,
            mul,
            neg,
            inv,
        })))
    }

    pub fn binary() -> Self {
        Field::new(2).unwrap()
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.0.q
    }

    pub fn characteristic(&self) -> usize {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    /// Reduction polynomial coefficients, constant term first.
    pub fn modulus(&self) -> &[usize] {
        &self.0.modulus
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.0.add[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.mul[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.0.inv[a as usize])
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.0.q
    }

    pub fn check(&self, a: usize) -> Result<Elem> {
        if self.contains(a) {
            Ok(a as Elem)
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                q: self.0.q,
            })
        }
    }

    /// Range-checked arithmetic on raw integers.
    pub fn apply(&self, op: FieldOp, a: usize, b: usize) -> Result<Elem> {
        let a = self.check(a)?;
        let b = self.check(b)?;
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Div => self.mul(a, self.inv(b).ok_or(Error::DivisionByZero)?),
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(|a| a as Elem)
    }
}

/// Returns `(p, m)` with `q = p^m`, for 2 ≤ q ≤ 256.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if !(2..=256).contains(&q) {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn digits(mut a: usize, p: usize, m: usize) -> Vec<usize> {
    let mut out = vec![0; m];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two residues modulo a monic polynomial; result has `deg(modulus)` coefficients.
fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let m = modulus.len() - 1;
    let mut prod = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&mut prod, modulus, p);
    prod.truncate(m);
    prod.resize(m, 0);
    prod
}

/// In-place remainder by a monic polynomial.
fn poly_rem(a: &mut [usize], modulus: &[usize], p: usize) {
    let m = modulus.len() - 1;
    for top in (m..a.len()).rev() {
        let c = a[top];
        if c == 0 {
            continue;
        }
        for (i, &mc) in modulus.iter().enumerate() {
            let idx = top - m + i;
            a[idx] = (a[idx] + (p - c) * mc) % p;
        }
    }
}

fn least_irreducible(p: usize, m: usize) -> Vec<usize> {
    (0..p.pow(m as u32))
        .map(|code| {
            let mut poly = digits(code, p, m);
            poly.push(1);
            poly
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial exists for every degree")
}

fn is_irreducible(poly: &[usize], p: usize) -> bool {
    let m = poly.len() - 1;
    for deg in 1..=m / 2 {
        for code in 0..p.pow(deg as u32) {
            let mut divisor = digits(code, p, deg);
            divisor.push(1);
            let mut rem = poly.to_vec();
            poly_rem(&mut rem, &divisor, p);
            if rem[..deg].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(256), Some((2, 8)));
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(257), None);
        assert!(matches!(Field::new(12), Err(Error::InvalidFieldSize(12))));
    }

    #[test]
    fn small_examples() {
        let gf2 = Field::new(2).unwrap();
        assert_eq!(gf2.apply(FieldOp::Add, 1, 1).unwrap(), 0);
        let gf3 = Field::new(3).unwrap();
        assert_eq!(gf3.apply(FieldOp::Mul, 2, 2).unwrap(), 1);
        // x is encoded as 2, x + 1 as 3.
        let gf4 = Field::new(4).unwrap();
        assert_eq!(gf4.modulus(), &[1, 1, 1]);
        assert_eq!(gf4.apply(FieldOp::Mul, 2, 2).unwrap(), 3);
    }

    #[test]
    fn errors() {
        let gf5 = Field::new(5).unwrap();
        assert_eq!(gf5.apply(FieldOp::Div, 3, 0), Err(Error::DivisionByZero));
        assert_eq!(
            gf5.apply(FieldOp::Add, 5, 0),
            Err(Error::ElementOutOfRange { element: 5, q: 5 })
        );
    }

    #[test]
    fn documented_moduli() {
        let expect: &[(usize, &[usize])] = &[
            (8, &[1, 1, 0, 1]),
            (9, &[1, 0, 1]),
            (16, &[1, 1, 0, 0, 1]),
            (25, &[2, 0, 1]),
            (27, &[1, 2, 0, 1]),
            (32, &[1, 0, 1, 0, 0, 1]),
            (64, &[1, 1, 0, 0, 0, 0, 1]),
            (128, &[1, 1, 0, 0, 0, 0, 0, 1]),
            (256, &[1, 1, 0, 1, 1, 0, 0, 0, 1]),
        ];
        for &(q, modulus) in expect {
            assert_eq!(Field::new(q).unwrap().modulus(), modulus, "GF({q})");
        }
    }

    #[test]
    fn axioms_exhaustive_up_to_16() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if let Some(i) = f.inv(a) {
                    assert_eq!(f.mul(a, i), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn every_field_has_inverses() {
        for q in (2..=256).filter(|&q| prime_power(q).is_some()) {
            let f = Field::new(q).unwrap();
            for a in 1..q {
                let i = f.inv(a as Elem).unwrap();
                assert_eq!(f.mul(a as Elem, i), 1, "GF({q}) a={a}");
            }
        }
    }
}
