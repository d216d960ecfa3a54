//! Recovery sets of a linear code.
//!
//! A coordinate set `S` recovers information symbol `x_i` when `x_i` is a
//! function of `y|_S`. For a linear code this happens exactly when the unit
//! vector `e_i` is in the span of the generator columns indexed by `S`.

use crate::algebra::code::unit;
use crate::algebra::coords::subsets_up_to;
use crate::algebra::{CoordSet, LinearCode};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecoverySet {
    pub info_index: usize,
    pub coords: CoordSet,
    pub minimal: bool,
}

fn check_info(code: &LinearCode, i: usize) -> Result<()> {
    if i >= code.k() {
        return Err(Error::IndexOutOfRange {
            what: "information",
            index: i,
            limit: code.k(),
        });
    }
    Ok(())
}

fn check_coords(code: &LinearCode, s: CoordSet) -> Result<()> {
    if s.bound() > code.n() {
        return Err(Error::IndexOutOfRange {
            what: "coordinate",
            index: s.bound() - 1,
            limit: code.n(),
        });
    }
    Ok(())
}

pub fn is_recovery_set(code: &LinearCode, i: usize, s: CoordSet) -> Result<bool> {
    check_info(code, i)?;
    check_coords(code, s)?;
    Ok(recovers(code, i, s))
}

fn recovers(code: &LinearCode, i: usize, s: CoordSet) -> bool {
    code.span_contains(&unit(code.k(), i), s, None)
}

/// Whether a recovery set for `x_i` has no recovering proper subset.
///
/// Recovery is monotone under inclusion, so dropping single elements suffices.
pub fn is_minimal_recovery_set(code: &LinearCode, i: usize, s: CoordSet) -> Result<bool> {
    Ok(is_recovery_set(code, i, s)? && s.iter().all(|l| !recovers(code, i, s.without(l))))
}

/// All minimal recovery sets for `x_i` of size at most `r`, lexicographically ordered.
pub fn minimal_recovery_sets(code: &LinearCode, i: usize, r: usize) -> Result<Vec<RecoverySet>> {
    check_info(code, i)?;
    if r == 0 {
        return Err(Error::InvalidParameters("query size r must be >= 1".into()));
    }
    let mut sets: Vec<RecoverySet> = subsets_up_to(code.n(), r)
        .filter(|&s| recovers(code, i, s) && s.iter().all(|l| !recovers(code, i, s.without(l))))
        .map(|coords| RecoverySet {
            info_index: i,
            coords,
            minimal: true,
        })
        .collect();
    sets.sort_by_key(|s| s.coords);
    Ok(sets)
}

/// Whether `y_ell` is constant on the codewords that agree on `fixed` (and on
/// `x_{fixed_info}` when given).
pub fn is_determined(
    code: &LinearCode,
    ell: usize,
    fixed: CoordSet,
    fixed_info: Option<usize>,
) -> Result<bool> {
    if ell >= code.n() {
        return Err(Error::IndexOutOfRange {
            what: "coordinate",
            index: ell,
            limit: code.n(),
        });
    }
    check_coords(code, fixed)?;
    if let Some(i) = fixed_info {
        check_info(code, i)?;
    }
    Ok(code.span_contains(code.column(ell), fixed, fixed_info))
}

/// For `t` pairwise-disjoint recovery sets of `x_i`, picks `ell_2 ∈ S_2, …, ell_t ∈ S_t`
/// such that fixing `S_1 ∪ (S_2 \ {ell_2}) ∪ … ∪ (S_t \ {ell_t})` determines every `y_{ell_m}`.
///
/// Each witness is the smallest element of its set that works.
pub fn determined_witnesses(code: &LinearCode, i: usize, sets: &[CoordSet]) -> Result<Vec<usize>> {
    check_info(code, i)?;
    for (a, &s) in sets.iter().enumerate() {
        check_coords(code, s)?;
        if !recovers(code, i, s) {
            return Err(Error::Precondition(format!(
                "set {s} does not recover information symbol {}",
                i + 1
            )));
        }
        if let Some(other) = sets[a + 1..].iter().find(|o| !o.is_disjoint(s)) {
            return Err(Error::Precondition(format!("sets {s} and {other} intersect")));
        }
    }
    let Some((_, rest)) = sets.split_first() else {
        return Ok(Vec::new());
    };

    let mut witnesses = Vec::with_capacity(rest.len());
    for &s in rest {
        let ell = s
            .iter()
            .find(|&l| code.span_contains(code.column(l), s.without(l), Some(i)))
            .ok_or_else(|| Error::Internal(format!("no determined coordinate in recovery set {s}")))?;
        witnesses.push(ell);
    }

    // Check against the full fixed set, without assuming x_i: S_1 must supply it.
    let fixed = sets[0].union(
        rest.iter()
            .zip(&witnesses)
            .fold(CoordSet::EMPTY, |acc, (&s, &l)| acc.union(s.without(l))),
    );
    for &l in &witnesses {
        if !code.span_contains(code.column(l), fixed, None) {
            return Err(Error::Internal(format!(
                "coordinate {} not determined by {fixed}",
                l + 1
            )));
        }
    }
    Ok(witnesses)
}

/// Minimal recovery sets of size at most `r` for every information symbol.
#[derive(Clone, Debug)]
pub struct RecoveryCatalog {
    code: LinearCode,
    r: usize,
    sets: Vec<Vec<CoordSet>>,
}

impl RecoveryCatalog {
    pub fn build(code: &LinearCode, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameters("query size r must be >= 1".into()));
        }
        let k = code.k();
        let mut sets: Vec<Vec<CoordSet>> = vec![Vec::new(); k];
        // Sizes ascend, so a recovering set with no recorded subset is minimal.
        for s in subsets_up_to(code.n(), r) {
            for (i, found) in sets.iter_mut().enumerate() {
                if found.iter().all(|m| !m.is_subset(s)) && recovers(code, i, s) {
                    found.push(s);
                }
            }
        }
        for list in &mut sets {
            list.sort();
        }
        Ok(RecoveryCatalog {
            code: code.clone(),
            r,
            sets,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Minimal recovery sets for `x_i`, lexicographically ordered.
    pub fn sets(&self, i: usize) -> &[CoordSet] {
        &self.sets[i]
    }

    pub fn recovery_sets(&self, i: usize) -> impl Iterator<Item = RecoverySet> + '_ {
        self.sets[i].iter().map(move |&coords| RecoverySet {
            info_index: i,
            coords,
            minimal: true,
        })
    }

    /// The lexicographically first family of `count` pairwise-disjoint sets for `x_i`.
    pub fn first_disjoint_family(&self, i: usize, count: usize) -> Option<Vec<CoordSet>> {
        fn go(sets: &[CoordSet], start: usize, used: CoordSet, need: usize, acc: &mut Vec<CoordSet>) -> bool {
            if need == 0 {
                return true;
            }
            for (pos, &s) in sets.iter().enumerate().skip(start) {
                if s.is_disjoint(used) {
                    acc.push(s);
                    if go(sets, pos + 1, used.union(s), need - 1, acc) {
                        return true;
                    }
                    acc.pop();
                }
            }
            false
        }
        let mut acc = Vec::with_capacity(count);
        go(&self.sets[i], 0, CoordSet::EMPTY, count, &mut acc).then_some(acc)
    }
}
