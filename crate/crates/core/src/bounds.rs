//! Distance and length bounds for linear `(k, n, r, t)` batch codes.
//!
//! All arithmetic is exact. Lengths and distances are `i64` because some
//! intermediate terms (the intersection-counting term `C`) may be negative.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};

use crate::error::{Error, Result};

/// `⌈a / b⌉` for `b > 0`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn positive(name: &str, v: usize) -> Result<i64> {
    if v == 0 {
        Err(Error::InvalidParameters(format!("{name} must be >= 1")))
    } else {
        Ok(v as i64)
    }
}

/// `d ≤ n − k + 1`.
pub fn singleton_d(n: usize, k: usize) -> Result<i64> {
    let k = positive("k", k)?;
    let n = n as i64;
    if n < k {
        return Err(Error::InvalidParameters(format!("need n >= k, got n={n} k={k}")));
    }
    Ok(n - k + 1)
}

/// `d ≤ n − k − (t−1)(⌈k/(rt−t+1)⌉ − 1) + 1`.
pub fn thm1_d_upper(n: usize, k: usize, r: usize, t: usize) -> Result<i64> {
    let singleton = singleton_d(n, k)?;
    let (k, r, t) = (k as i64, positive("r", r)?, positive("t", t)?);
    Ok(singleton - (t - 1) * (ceil_div(k, r * t - t + 1) - 1))
}

/// A length bound maximized over β, with the smallest maximizing β.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BetaBound {
    pub value: i64,
    pub beta: usize,
}

/// `(β−1)(⌈k/(rβ−β+1)⌉ − 1) + k + d − 1`.
pub fn cor1_term(k: usize, d: usize, r: usize, beta: usize) -> i64 {
    let (k, d, r, b) = (k as i64, d as i64, r as i64, beta as i64);
    (b - 1) * (ceil_div(k, r * b - b + 1) - 1) + k + d - 1
}

fn check_kdrt(k: usize, d: usize, r: usize, t: usize) -> Result<()> {
    positive("k", k)?;
    positive("d", d)?;
    positive("r", r)?;
    positive("t", t)?;
    Ok(())
}

fn argmax(terms: impl Iterator<Item = (usize, i64)>) -> Option<BetaBound> {
    terms.fold(None, |best: Option<BetaBound>, (beta, value)| match best {
        Some(b) if b.value >= value => Some(b),
        _ => Some(BetaBound { value, beta }),
    })
}

/// `n ≥ max_{1≤β≤t} cor1_term(β)`.
pub fn cor1_n_lower(k: usize, d: usize, r: usize, t: usize) -> Result<BetaBound> {
    check_kdrt(k, d, r, t)?;
    Ok(argmax((1..=t).map(|b| (b, cor1_term(k, d, r, b)))).expect("t >= 1"))
}

/// `(β−1)(⌈k/(rβ−β−r+2)⌉ − 1) + k + d − 1`, or `None` when the denominator is below 1.
pub fn cor2_term(k: usize, d: usize, r: usize, beta: usize) -> Option<i64> {
    let (ki, di, ri, b) = (k as i64, d as i64, r as i64, beta as i64);
    let denom = ri * b - b - ri + 2;
    (denom >= 1).then(|| (b - 1) * (ceil_div(ki, denom) - 1) + ki + di - 1)
}

/// Length bound for systematic codes, maximized over `2 ≤ β ≤ t`.
///
/// `None` when `t < 2` or no β has a positive denominator.
pub fn cor2_n_lower(k: usize, d: usize, r: usize, t: usize) -> Result<Option<BetaBound>> {
    check_kdrt(k, d, r, t)?;
    Ok(argmax((2..=t).filter_map(|b| cor2_term(k, d, r, b).map(|v| (b, v)))))
}

/// `1 − (rt / (rt − t + 1))·R`; negative results mean no code exists.
pub fn asymptotic_delta_upper(rate: Ratio<i64>, r: usize, t: usize) -> Result<Ratio<i64>> {
    let (r, t) = (positive("r", r)?, positive("t", t)?);
    if rate < Ratio::from_integer(0) || rate > Ratio::from_integer(1) {
        return Err(Error::InvalidParameters(format!("rate {rate} outside [0, 1]")));
    }
    Ok(Ratio::from_integer(1) - Ratio::new(r * t, r * t - t + 1) * rate)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotkinStatus {
    NotApplicable,
    Satisfied,
    Violated,
}

impl fmt::Display for PlotkinStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlotkinStatus::NotApplicable => "not_applicable",
            PlotkinStatus::Satisfied => "satisfied",
            PlotkinStatus::Violated => "violated",
        })
    }
}

/// Evaluation of `q^{k−|Γ|+(t−1)j}·(qd − (q−1)(n−|Γ|)) ≤ qd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotkinCheck {
    pub j: usize,
    pub gamma_size: usize,
    pub status: PlotkinStatus,
    pub lhs: BigRational,
    pub rhs: BigInt,
}

impl PlotkinCheck {
    pub fn applicable(&self) -> bool {
        self.status != PlotkinStatus::NotApplicable
    }

    /// Holds with equality (only meaningful when applicable).
    pub fn tight(&self) -> bool {
        self.applicable() && self.lhs == BigRational::from_integer(self.rhs.clone())
    }
}

/// The Plotkin-type condition on the punctured subcode after `j` steps that fixed
/// `gamma_size` coordinates. Applicable only when `d > (1 − 1/q)(n − |Γ|)`.
pub fn plotkin_condition(
    q: usize,
    k: usize,
    d: usize,
    n: usize,
    gamma_size: usize,
    j: usize,
    t: usize,
) -> Result<PlotkinCheck> {
    if q < 2 {
        return Err(Error::InvalidParameters(format!("q must be >= 2, got {q}")));
    }
    check_kdrt(k, d, 1, t)?;
    if gamma_size >= n {
        return Err(Error::InvalidParameters(format!(
            "|Gamma| = {gamma_size} must be below n = {n}"
        )));
    }
    let (qi, di) = (q as i64, d as i64);
    let remaining = (n - gamma_size) as i64;
    let factor = qi * di - (qi - 1) * remaining;
    let exponent = k as i64 - gamma_size as i64 + (t as i64 - 1) * j as i64;
    let power = BigInt::from(q).pow(exponent.unsigned_abs() as u32);
    let scale = if exponent >= 0 {
        BigRational::from_integer(power)
    } else {
        BigRational::new(BigInt::from(1), power)
    };
    let lhs = scale * BigRational::from_integer(BigInt::from(factor));
    let rhs = BigInt::from(qi * di);
    let status = if factor <= 0 {
        PlotkinStatus::NotApplicable
    } else if lhs <= BigRational::from_integer(rhs.clone()) {
        PlotkinStatus::Satisfied
    } else {
        PlotkinStatus::Violated
    };
    Ok(PlotkinCheck {
        j,
        gamma_size,
        status,
        lhs,
        rhs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Term {
    A,
    B,
    C,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Term::A => "A",
            Term::B => "B",
            Term::C => "C",
        })
    }
}

/// The three terms of the refined length bound at one `(β, ε, λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImprovedTerms {
    pub beta: usize,
    pub epsilon: usize,
    pub lambda_slack: usize,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ImprovedTerms {
    pub fn min(&self) -> i64 {
        self.a.min(self.b).min(self.c)
    }

    /// The first term (A, then B, then C) attaining the minimum.
    pub fn minimizing(&self) -> Term {
        let m = self.min();
        if self.a == m {
            Term::A
        } else if self.b == m {
            Term::B
        } else {
            Term::C
        }
    }
}

fn check_slack(r: usize, beta: usize, epsilon: usize, lambda_slack: usize) -> Result<()> {
    positive("beta", beta)?;
    let top = r * beta - beta;
    for (name, v) in [("epsilon", epsilon), ("lambda", lambda_slack)] {
        if v < 1 || v > top {
            return Err(Error::InvalidParameters(format!(
                "{name} = {v} outside [1, r*beta - beta] = [1, {top}]"
            )));
        }
    }
    Ok(())
}

/// A = (β−1)(⌈(k+ε)/(rβ−β+1)⌉−1)+k+d−1, B likewise with λ, and
/// C = (rβ−λ+1)k − C(k,2)(ε−1).
pub fn improved_terms(
    k: usize,
    d: usize,
    r: usize,
    beta: usize,
    epsilon: usize,
    lambda_slack: usize,
) -> Result<ImprovedTerms> {
    check_kdrt(k, d, r, 1)?;
    check_slack(r, beta, epsilon, lambda_slack)?;
    let (ki, di, ri, b) = (k as i64, d as i64, r as i64, beta as i64);
    let (e, l) = (epsilon as i64, lambda_slack as i64);
    let denom = ri * b - b + 1;
    let a = (b - 1) * (ceil_div(ki + e, denom) - 1) + ki + di - 1;
    let bb = (b - 1) * (ceil_div(ki + l, denom) - 1) + ki + di - 1;
    let c = (ri * b - l + 1) * ki - binom2(ki) * (e - 1);
    Ok(ImprovedTerms {
        beta,
        epsilon,
        lambda_slack,
        a,
        b: bb,
        c,
    })
}

/// Refined length bound with its lexicographically smallest maximizing `(β, ε, λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImprovedBound {
    pub value: i64,
    pub terms: ImprovedTerms,
    pub minimizing: Term,
}

/// Largest admissible β: `min(t, ⌊(k−3)/(2(r−1))⌋)`, or `None` when `r = 1` or `k < 3`.
pub fn improved_beta_cap(k: usize, r: usize, t: usize) -> Option<usize> {
    if r < 2 || k < 3 {
        return None;
    }
    let cap = t.min((k - 3) / (2 * (r - 1)));
    (cap >= 1).then_some(cap)
}

/// `max_β max_{ε,λ} min{A, B, C}` restricted to one β.
pub fn improved_n_lower_at_beta(k: usize, d: usize, r: usize, beta: usize) -> Result<Option<ImprovedBound>> {
    check_kdrt(k, d, r, beta)?;
    let top = r * beta - beta;
    let mut best: Option<ImprovedBound> = None;
    for epsilon in 1..=top {
        for lambda_slack in 1..=top {
            let terms = improved_terms(k, d, r, beta, epsilon, lambda_slack)?;
            let value = terms.min();
            if best.is_none_or(|b| value > b.value) {
                best = Some(ImprovedBound {
                    value,
                    terms,
                    minimizing: terms.minimizing(),
                });
            }
        }
    }
    Ok(best)
}

/// The refined bound over every admissible β; `None` when no β qualifies.
pub fn improved_n_lower(k: usize, d: usize, r: usize, t: usize) -> Result<Option<ImprovedBound>> {
    check_kdrt(k, d, r, t)?;
    let Some(cap) = improved_beta_cap(k, r, t) else {
        return Ok(None);
    };
    let mut best: Option<ImprovedBound> = None;
    for beta in 1..=cap {
        if let Some(candidate) = improved_n_lower_at_beta(k, d, r, beta)? {
            if best.is_none_or(|b| candidate.value > b.value) {
                best = Some(candidate);
            }
        }
    }
    Ok(best)
}

/// `⌈(k+ε)/D⌉ = ⌈(k+λ)/D⌉ ≥ ⌈k/D⌉ + 1` with `D = rβ−β+1`.
///
/// The companion requirement `C ≥ max{A, B}` depends on `d` and is left to the caller.
pub fn improvement_condition(
    k: usize,
    r: usize,
    beta: usize,
    epsilon: usize,
    lambda_slack: usize,
) -> Result<bool> {
    positive("k", k)?;
    positive("r", r)?;
    check_slack(r, beta, epsilon, lambda_slack)?;
    let denom = (r * beta - beta + 1) as i64;
    let ki = k as i64;
    let with_eps = ceil_div(ki + epsilon as i64, denom);
    let with_lambda = ceil_div(ki + lambda_slack as i64, denom);
    Ok(with_eps == with_lambda && with_eps > ceil_div(ki, denom))
}

/// Parameters of a (possibly hypothetical) batch code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CodeParams {
    pub k: usize,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub r: usize,
    pub t: usize,
    pub q: Option<usize>,
    pub systematic: bool,
}

impl CodeParams {
    pub fn validate(&self) -> Result<()> {
        positive("k", self.k)?;
        positive("r", self.r)?;
        positive("t", self.t)?;
        if let Some(d) = self.d {
            positive("d", d)?;
        }
        if let Some(n) = self.n {
            if n < self.k {
                return Err(Error::InvalidParameters(format!("need n >= k, got n={n} k={}", self.k)));
            }
            if let Some(d) = self.d {
                if d > n {
                    return Err(Error::InvalidParameters(format!("need d <= n, got d={d} n={n}")));
                }
            }
        }
        if let Some(q) = self.q {
            if crate::algebra::field::prime_power(q).is_none() {
                return Err(Error::InvalidFieldSize(q));
            }
        }
        Ok(())
    }
}

/// Equality indicators for supplied `n`/`d`; `None` when a bound or the value is absent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TightFlags {
    pub singleton: Option<bool>,
    pub thm1: Option<bool>,
    pub cor1: Option<bool>,
    pub cor2: Option<bool>,
    pub improved: Option<bool>,
    pub plotkin: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub params: CodeParams,
    /// Distance used in the length bounds; `t` when none was supplied (every batch code has `d ≥ t`).
    pub d_used: usize,
    pub d_assumed: bool,
    pub singleton_d: Option<i64>,
    pub thm1_d: Option<i64>,
    pub cor1_n: BetaBound,
    pub cor2_n: Option<BetaBound>,
    pub improved_n: Option<ImprovedBound>,
    pub plotkin: Vec<PlotkinCheck>,
    pub combined_n_lower: i64,
    pub tight: TightFlags,
}

pub fn bounds_report(params: &CodeParams) -> Result<BoundReport> {
    params.validate()?;
    let CodeParams { k, n, d, r, t, q, systematic } = *params;
    let d_used = d.unwrap_or(t);

    let singleton_d = n.map(|n| singleton_d(n, k)).transpose()?;
    let thm1_d = n.map(|n| thm1_d_upper(n, k, r, t)).transpose()?;
    let cor1_n = cor1_n_lower(k, d_used, r, t)?;
    let cor2_n = if systematic {
        cor2_n_lower(k, d_used, r, t)?
    } else {
        None
    };
    let improved_n = improved_n_lower(k, d_used, r, t)?;

    let plotkin = match (q, n, d) {
        (Some(q), Some(n), Some(d)) => vec![plotkin_condition(q, k, d, n, 0, 0, t)?],
        _ => Vec::new(),
    };

    let combined_n_lower = [
        Some(cor1_n.value),
        cor2_n.map(|b| b.value),
        improved_n.map(|b| b.value),
    ]
    .into_iter()
    .flatten()
    .max()
    .expect("cor1 always present");

    let n_eq = |v: i64| n.map(|n| n as i64 == v);
    let d_eq = |v: Option<i64>| v.zip(d).map(|(v, d)| v == d as i64);
    let tight = TightFlags {
        singleton: d_eq(singleton_d),
        thm1: d_eq(thm1_d),
        cor1: if d.is_some() { n_eq(cor1_n.value) } else { None },
        cor2: if d.is_some() { cor2_n.and_then(|b| n_eq(b.value)) } else { None },
        improved: if d.is_some() { improved_n.and_then(|b| n_eq(b.value)) } else { None },
        plotkin: plotkin.first().filter(|p| p.applicable()).map(PlotkinCheck::tight),
    };

    Ok(BoundReport {
        params: params.clone(),
        d_used,
        d_assumed: d.is_none(),
        singleton_d,
        thm1_d,
        cor1_n,
        cor2_n,
        improved_n,
        plotkin,
        combined_n_lower,
        tight,
    })
}
