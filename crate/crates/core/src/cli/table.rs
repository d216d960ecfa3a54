//! Asymptotic relative-distance table.
//!
//! Rows are rates `R`, columns are the Singleton line `1 − R` and the batch
//! bound `1 − rt·R/(rt − t + 1)` for each `(r, t)`. Values are exact rationals
//! rendered with a fixed number of decimals; negative entries print as `--`.

use num_rational::Ratio;

use crate::bounds::asymptotic_delta_upper;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Column {
    Singleton,
    Batch { r: usize, t: usize },
}

impl Column {
    pub fn label(&self) -> String {
        match self {
            Column::Singleton => "Singleton".to_string(),
            Column::Batch { r, t } => format!("r={r},t={t}"),
        }
    }

    pub fn value(&self, rate: Ratio<i64>) -> Result<Ratio<i64>> {
        match *self {
            Column::Singleton => Ok(Ratio::from_integer(1) - rate),
            Column::Batch { r, t } => asymptotic_delta_upper(rate, r, t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSpec {
    pub rates: Vec<Ratio<i64>>,
    pub columns: Vec<Column>,
    pub decimals: usize,
}

impl Default for TableSpec {
    fn default() -> Self {
        TableSpec {
            rates: (0..=10).map(|i| Ratio::new(i, 10)).collect(),
            columns: std::iter::once(Column::Singleton)
                .chain([(3, 2), (3, 3), (3, 5), (5, 2), (5, 3), (5, 5)].map(|(r, t)| Column::Batch { r, t }))
                .collect(),
            decimals: 5,
        }
    }
}

impl TableSpec {
    /// Rates `0, step, 2·step, …` up to and including 1 when it is hit exactly.
    pub fn with_step(mut self, step: Ratio<i64>) -> Result<Self> {
        if step <= Ratio::from_integer(0) || step > Ratio::from_integer(1) {
            return Err(Error::InvalidParameters(format!("step {step} must lie in (0, 1]")));
        }
        let mut rates = Vec::new();
        let mut rate = Ratio::from_integer(0);
        while rate <= Ratio::from_integer(1) {
            rates.push(rate);
            rate += step;
        }
        self.rates = rates;
        Ok(self)
    }

    pub fn values(&self) -> Result<Vec<Vec<Ratio<i64>>>> {
        self.rates
            .iter()
            .map(|&rate| self.columns.iter().map(|c| c.value(rate)).collect())
            .collect()
    }

    pub fn render(&self) -> Result<String> {
        let values = self.values()?;
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(values.len() + 1);
        grid.push(std::iter::once("R".to_string()).chain(self.columns.iter().map(Column::label)).collect());
        for (rate, row) in self.rates.iter().zip(&values) {
            grid.push(
                std::iter::once(format_decimal(*rate, self.decimals))
                    .chain(row.iter().map(|v| format_decimal(*v, self.decimals)))
                    .collect(),
            );
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in grid {
            let line = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            out.push_str(line.trim_end());
            out.push('\n');
        }
        Ok(out)
    }
}

/// Rounds half away from zero to `decimals` places and trims trailing zeros
/// (keeping one). Negative values render as `--`.
pub fn format_decimal(value: Ratio<i64>, decimals: usize) -> String {
    if value < Ratio::from_integer(0) {
        return "--".to_string();
    }
    let scale = 10i128.pow(decimals as u32);
    let numer = *value.numer() as i128 * scale;
    let denom = *value.denom() as i128;
    let scaled = (2 * numer + denom) / (2 * denom);
    let int_part = scaled / scale;
    let mut frac = format!("{:0width$}", scaled % scale, width = decimals);
    while frac.len() > 1 && frac.ends_with('0') {
        frac.pop();
    }
    if frac.is_empty() {
        frac.push('0');
    }
    format!("{int_part}.{frac}")
}

/// Parses a non-negative decimal such as `0.1` or `1` into an exact rational.
pub fn parse_decimal(text: &str) -> Result<Ratio<i64>> {
    let bad = || Error::InvalidParameters(format!("\"{text}\" is not a non-negative decimal"));
    let (int, frac) = text.trim().split_once('.').unwrap_or((text.trim(), ""));
    if (int.is_empty() && frac.is_empty()) || frac.len() > 12 {
        return Err(bad());
    }
    let digits = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    if !digits(int) || !digits(frac) {
        return Err(bad());
    }
    let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let frac_val: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let denom = 10i64.pow(frac.len() as u32);
    int.checked_mul(denom)
        .and_then(|v| v.checked_add(frac_val))
        .map(|n| Ratio::new(n, denom))
        .ok_or_else(bad)
}

/// Parses `singleton,3:2,5:5` style column lists.
pub fn parse_columns(text: &str) -> Result<Vec<Column>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|tok| {
            if tok.eq_ignore_ascii_case("singleton") {
                return Ok(Column::Singleton);
            }
            let bad = || Error::InvalidParameters(format!("column \"{tok}\" is not \"singleton\" or \"r:t\""));
            let (r, t) = tok.split_once(':').ok_or_else(bad)?;
            let r: usize = r.trim().parse().map_err(|_| bad())?;
            let t: usize = t.trim().parse().map_err(|_| bad())?;
            if r == 0 || t == 0 {
                return Err(bad());
            }
            Ok(Column::Batch { r, t })
        })
        .collect()
}
