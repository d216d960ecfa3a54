//! Step-choice files for the `subcode` command.
//!
//! One choice per line, 1-based, `#` starts a comment line:
//!
//! ```text
//! {1,1}; {1},{2,4}
//! {2,2}; {2},{1,4}; (0,1,1)
//! ```
//!
//! The first group is the query multiset, the second lists one recovery set
//! per multiset entry, and the optional third group is the restriction
//! pattern to fix when several patterns are equally frequent.

use crate::algebra::CoordSet;
use crate::error::{Error, Result};
use crate::subcode::StepChoice;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn one_based_list(body: &str, line: usize) -> Result<Vec<usize>> {
    body.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|tok| match tok.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(err(line, format!("\"{tok}\" is not a positive index"))),
        })
        .collect()
}

/// Splits `{a,b},{c}` into the contents of each brace group.
fn brace_groups(text: &str, line: usize) -> Result<Vec<&str>> {
    let mut groups = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        rest = rest.trim_start_matches([',', ' ', '\t']);
        if rest.is_empty() {
            break;
        }
        let body = rest
            .strip_prefix('{')
            .ok_or_else(|| err(line, format!("expected '{{' at \"{rest}\"")))?;
        let close = body.find('}').ok_or_else(|| err(line, "unclosed '{'"))?;
        groups.push(&body[..close]);
        rest = &body[close + 1..];
    }
    Ok(groups)
}

pub fn parse_choices(text: &str) -> Result<Vec<StepChoice>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = content.split(';').map(str::trim).collect();
        if !(2..=3).contains(&parts.len()) {
            return Err(err(line, "expected \"{multiset}; {set},{set},...\" with an optional \"; (sigma)\""));
        }
        let multiset = brace_groups(parts[0], line)?;
        if multiset.len() != 1 {
            return Err(err(line, "the multiset must be a single {...} group"));
        }
        let indices = one_based_list(multiset[0], line)?;
        let sets = brace_groups(parts[1], line)?
            .into_iter()
            .map(|g| {
                let coords = one_based_list(g, line)?;
                if coords.iter().any(|&c| c >= crate::algebra::MAX_LENGTH) {
                    return Err(err(line, "coordinate index too large"));
                }
                Ok(CoordSet::of(coords))
            })
            .collect::<Result<Vec<_>>>()?;
        if sets.len() != indices.len() {
            return Err(err(
                line,
                format!("{} indices but {} recovery sets", indices.len(), sets.len()),
            ));
        }
        let mut choice = StepChoice::new(indices, sets);
        if let Some(sigma) = parts.get(2) {
            let body = sigma
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| err(line, "sigma must be written as (a,b,...)"))?;
            let values = body
                .split(',')
                .map(str::trim)
                .map(|t| t.parse::<u8>().map_err(|_| err(line, format!("\"{t}\" is not a field element"))))
                .collect::<Result<Vec<_>>>()?;
            choice = choice.with_sigma(values);
        }
        out.push(choice);
    }
    Ok(out)
}
