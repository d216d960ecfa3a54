//! Exhaustive verification of the batch property.
//!
//! A code is a `(k, n, r, t)` batch code when every multiset of `t`
//! information indices can be served by `t` pairwise-disjoint coordinate
//! sets, each of size at most `r`, where the `j`-th set recovers the `j`-th
//! requested symbol.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::algebra::{CoordSet, LinearCode};
use crate::recovery::{RecoveryCatalog, RecoverySet};
use crate::error::{Error, Result};

/// Maximum number of query multisets `verify_batch` will examine.
pub const MULTISET_BUDGET: u64 = 1_000_000;

/// A sorted multiset of information indices (0-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QueryMultiset(Vec<usize>);

impl QueryMultiset {
    pub fn new(mut indices: Vec<usize>, k: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidParameters("a query needs at least one index".into()));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= k) {
            return Err(Error::IndexOutOfRange {
                what: "information",
                index: bad,
                limit: k,
            });
        }
        indices.sort_unstable();
        Ok(QueryMultiset(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn t(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for QueryMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().map(|i| i + 1).join(","))
    }
}

impl fmt::Debug for QueryMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Disjoint recovery sets serving a query; `sets[j]` serves `query.indices()[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryAssignment {
    pub query: QueryMultiset,
    pub sets: Vec<RecoverySet>,
}

impl QueryAssignment {
    pub fn used(&self) -> CoordSet {
        self.sets.iter().fold(CoordSet::EMPTY, |acc, s| acc.union(s.coords))
    }
}

impl fmt::Display for QueryAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <- {}", self.query, self.sets.iter().map(|s| s.coords).join(";"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchVerdict {
    pub holds: bool,
    /// Lexicographically least unservable multiset when `holds` is false.
    pub counterexample: Option<QueryMultiset>,
    /// One assignment per multiset, in lexicographic order, when requested and `holds`.
    pub witnesses: Option<Vec<QueryAssignment>>,
}

/// Finds disjoint minimal recovery sets for every index of `query`, or `None`.
///
/// Depth-first search that always branches on the distinct index with the
/// fewest remaining compatible sets. Copies of one index take sets in
/// increasing catalog order, which removes permutation duplicates.
pub fn serve_query(catalog: &RecoveryCatalog, query: &QueryMultiset) -> Option<QueryAssignment> {
    struct Group<'a> {
        index: usize,
        need: usize,
        next: usize,
        sets: &'a [CoordSet],
        chosen: Vec<CoordSet>,
    }

    fn compatible(g: &Group, used: CoordSet) -> usize {
        g.sets[g.next..].iter().filter(|s| s.is_disjoint(used)).count()
    }

    fn search(groups: &mut [Group], used: CoordSet) -> bool {
        let mut pick: Option<(usize, usize)> = None;
        for (gi, g) in groups.iter().enumerate() {
            if g.need == 0 {
                continue;
            }
            let avail = compatible(g, used);
            if avail < g.need {
                return false;
            }
            if pick.is_none_or(|(_, best)| avail < best) {
                pick = Some((gi, avail));
            }
        }
        let Some((gi, _)) = pick else {
            return true;
        };

        let saved_next = groups[gi].next;
        for pos in saved_next..groups[gi].sets.len() {
            let s = groups[gi].sets[pos];
            if !s.is_disjoint(used) {
                continue;
            }
            let g = &mut groups[gi];
            g.chosen.push(s);
            g.need -= 1;
            g.next = pos + 1;
            if search(groups, used.union(s)) {
                return true;
            }
            let g = &mut groups[gi];
            g.chosen.pop();
            g.need += 1;
        }
        groups[gi].next = saved_next;
        false
    }

    let mut groups: Vec<Group> = query
        .indices()
        .iter()
        .chunk_by(|&&i| i)
        .into_iter()
        .map(|(index, copies)| Group {
            index,
            need: copies.count(),
            next: 0,
            sets: catalog.sets(index),
            chosen: Vec::new(),
        })
        .collect();

    if !search(&mut groups, CoordSet::EMPTY) {
        return None;
    }
    let sets = groups
        .into_iter()
        .flat_map(|g| {
            let index = g.index;
            g.chosen.into_iter().map(move |coords| RecoverySet {
                info_index: index,
                coords,
                minimal: true,
            })
        })
        .collect();
    Some(QueryAssignment {
        query: query.clone(),
        sets,
    })
}

/// Number of multisets of size `t` over `k` symbols, `C(k+t-1, t)`, saturating.
pub fn multiset_count(k: usize, t: usize) -> u64 {
    let mut c: u128 = 1;
    for j in 1..=t as u128 {
        c = c * (k as u128 + j - 1) / j;
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

/// All multisets of size `t` over `0..k`, in lexicographic order.
pub fn multisets(k: usize, t: usize) -> impl Iterator<Item = QueryMultiset> {
    (0..k).combinations_with_replacement(t).map(QueryMultiset)
}

fn check_params(code: &LinearCode, r: usize, t: usize) -> Result<()> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParameters(format!("need r >= 1 and t >= 1, got r={r} t={t}")));
    }
    let count = multiset_count(code.k(), t);
    if count > MULTISET_BUDGET {
        return Err(Error::Budget(format!(
            "{count} query multisets for k={} t={t}, budget is {MULTISET_BUDGET}",
            code.k()
        )));
    }
    Ok(())
}

pub fn verify_batch(code: &LinearCode, r: usize, t: usize) -> Result<BatchVerdict> {
    verify(code, r, t, false)
}

/// Like [`verify_batch`], also returning an assignment for every multiset when the property holds.
pub fn verify_batch_with_witnesses(code: &LinearCode, r: usize, t: usize) -> Result<BatchVerdict> {
    verify(code, r, t, true)
}

fn verify(code: &LinearCode, r: usize, t: usize, keep: bool) -> Result<BatchVerdict> {
    check_params(code, r, t)?;
    let catalog = RecoveryCatalog::build(code, r)?;
    verify_with_catalog(&catalog, t, keep)
}

pub fn verify_with_catalog(catalog: &RecoveryCatalog, t: usize, keep: bool) -> Result<BatchVerdict> {
    check_params(catalog.code(), catalog.r(), t)?;
    let queries: Vec<QueryMultiset> = multisets(catalog.code().k(), t).collect();
    let served: Vec<Option<QueryAssignment>> =
        queries.par_iter().map(|q| serve_query(catalog, q)).collect();

    match served.iter().position(Option::is_none) {
        Some(first) => Ok(BatchVerdict {
            holds: false,
            counterexample: Some(queries[first].clone()),
            witnesses: None,
        }),
        None => Ok(BatchVerdict {
            holds: true,
            counterexample: None,
            witnesses: keep.then(|| served.into_iter().flatten().collect()),
        }),
    }
}

/// Largest `t ≤ t_cap` for which the code is a batch code with query size `r`; 0 if none.
pub fn max_t(code: &LinearCode, r: usize, t_cap: usize) -> Result<usize> {
    if t_cap == 0 {
        return Err(Error::InvalidParameters("t_cap must be >= 1".into()));
    }
    let catalog = RecoveryCatalog::build(code, r)?;
    let mut best = 0;
    for t in 1..=t_cap {
        if !verify_with_catalog(&catalog, t, false)?.holds {
            break;
        }
        best = t;
    }
    Ok(best)
}
