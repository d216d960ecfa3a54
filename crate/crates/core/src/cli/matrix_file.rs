//! Generator-matrix text files.
//!
//! ```text
//! # optional comment lines
//! q k n
//! row_1
//! ...
//! row_k
//! ```
//!
//! A row is `n` whitespace-separated integers in `[0, q)`. When `q ≤ 10` a row
//! may also be written as one contiguous digit string (`1001101`).

use crate::algebra::{Field, LinearCode, Matrix};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_matrix_file(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line \"q k n\""))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(parse_err(
            header_line,
            format!("header must be \"q k n\", found {} fields", fields.len()),
        ));
    }
    let mut nums = [0usize; 3];
    for (slot, (name, tok)) in nums.iter_mut().zip(["q", "k", "n"].iter().zip(&fields)) {
        *slot = tok
            .parse()
            .map_err(|_| parse_err(header_line, format!("{name} = \"{tok}\" is not a non-negative integer")))?;
        if *slot == 0 {
            return Err(parse_err(header_line, format!("{name} must be positive")));
        }
    }
    let [q, k, n] = nums;
    let field = Field::new(q).map_err(|_| parse_err(header_line, format!("q = {q} is not a prime power in [2, 256]")))?;
    if k > n {
        return Err(parse_err(header_line, format!("k = {k} exceeds n = {n}")));
    }

    let mut entries = Vec::with_capacity(k * n);
    let mut last_line = header_line;
    for row in 0..k {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(last_line + 1, format!("expected {k} rows, found {row}")))?;
        last_line = line_no;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let values: Vec<usize> = if q <= 10 && tokens.len() == 1 && n > 1 {
            let digits = tokens[0];
            if digits.len() != n {
                return Err(parse_err(line_no, format!("row has {} digits, expected {n}", digits.len())));
            }
            digits
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| parse_err(line_no, format!("\"{digits}\" is not a digit string")))?
        } else {
            if tokens.len() != n {
                return Err(parse_err(line_no, format!("row has {} entries, expected {n}", tokens.len())));
            }
            tokens
                .iter()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(line_no, format!("\"{t}\" is not an integer"))))
                .collect::<Result<_>>()?
        };
        for v in values {
            if v >= q {
                return Err(parse_err(line_no, format!("entry {v} is not an element of GF({q})")));
            }
            entries.push(v as u8);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, format!("unexpected content after {k} rows")));
    }

    let matrix = Matrix::new(field, k, n, entries)?;
    LinearCode::new(matrix).map_err(|e| match e {
        Error::RankDeficient { rank, rows } => parse_err(
            last_line,
            format!("generator rows are linearly dependent: rank {rank} but k = {rows}"),
        ),
        Error::InvalidParameters(m) => parse_err(header_line, m),
        other => other,
    })
}

pub fn render_matrix_file(code: &LinearCode) -> String {
    let q = code.q();
    let mut out = format!("{} {} {}\n", q, code.k(), code.n());
    for r in 0..code.k() {
        let row = code.generator().row(r);
        let line = if q <= 10 {
            row.iter().map(|y| char::from(b'0' + y)).collect::<String>()
        } else {
            row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
