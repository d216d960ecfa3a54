//! The subcode-construction loop behind the distance bound.
//!
//! Starting from the full code, each step picks `t` disjoint recovery sets,
//! fixes the union `S_j` to its most frequent restriction `σ_j`, and keeps
//! only the matching codewords. The loop stops once a single codeword is
//! left; the output is the last subcode with at least two codewords,
//! `C_τ`, whose coordinates outside `Γ_τ` form a code of distance at least `d`.
//!
//! Subcodes are affine, so they are handled as explicit codeword lists.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::algebra::code::min_pairwise_distance;
use crate::algebra::{format_word, restrict, CodewordSet, CoordSet, Elem, LinearCode};
use crate::batch::verify_with_catalog;
use crate::bounds::{ceil_div, plotkin_condition, PlotkinCheck};
use crate::error::{Error, Result};
use crate::recovery::{is_recovery_set, RecoveryCatalog};

/// One line-5 choice: `indices[ℓ]` is served by `sets[ℓ]`.
///
/// `sigma` optionally names which of the most frequent restrictions to fix;
/// otherwise the lexicographically smallest one is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepChoice {
    pub indices: Vec<usize>,
    pub sets: Vec<CoordSet>,
    pub sigma: Option<Vec<Elem>>,
}

impl StepChoice {
    pub fn new(indices: Vec<usize>, sets: Vec<CoordSet>) -> Self {
        StepChoice {
            indices,
            sets,
            sigma: None,
        }
    }

    pub fn with_sigma(mut self, sigma: Vec<Elem>) -> Self {
        self.sigma = Some(sigma);
        self
    }

    pub fn support(&self) -> CoordSet {
        self.sets.iter().fold(CoordSet::EMPTY, |acc, &s| acc.union(s))
    }
}

/// Supplies the choice for each step of the loop.
pub trait StepChooser {
    fn choose(&mut self, current: &CodewordSet, catalog: &RecoveryCatalog, t: usize) -> Result<StepChoice>;
}

/// Repeats the smallest information index that still varies on the current subcode,
/// served by the lexicographically first `t` disjoint minimal recovery sets.
#[derive(Clone, Copy, Debug, Default)]
pub struct DefaultChooser;

impl StepChooser for DefaultChooser {
    fn choose(&mut self, current: &CodewordSet, catalog: &RecoveryCatalog, t: usize) -> Result<StepChoice> {
        default_choice(current, catalog, t)
    }
}

pub fn default_choice(current: &CodewordSet, catalog: &RecoveryCatalog, t: usize) -> Result<StepChoice> {
    if current.len() < 2 {
        return Err(Error::Precondition("subcode has fewer than two codewords".into()));
    }
    let k = catalog.code().k();
    let ell = (0..k)
        .find(|&i| current.varies_in_message(i))
        .ok_or_else(|| Error::Internal("distinct codewords with identical messages".into()))?;
    let sets = catalog.first_disjoint_family(ell, t).ok_or_else(|| {
        Error::Precondition(format!(
            "no {t} disjoint recovery sets of size <= {} for symbol {}",
            catalog.r(),
            ell + 1
        ))
    })?;
    Ok(StepChoice::new(vec![ell; t], sets))
}

/// Plays back fixed choices, then defers to [`DefaultChooser`].
#[derive(Clone, Debug, Default)]
pub struct ScriptedChooser {
    script: std::collections::VecDeque<StepChoice>,
}

impl ScriptedChooser {
    pub fn new(script: Vec<StepChoice>) -> Self {
        ScriptedChooser {
            script: script.into(),
        }
    }
}

impl StepChooser for ScriptedChooser {
    fn choose(&mut self, current: &CodewordSet, catalog: &RecoveryCatalog, t: usize) -> Result<StepChoice> {
        match self.script.pop_front() {
            Some(choice) => Ok(choice),
            None => default_choice(current, catalog, t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    /// 1-based step number.
    pub j: usize,
    pub choice: StepChoice,
    /// `S_j`, the union of the chosen sets.
    pub support: CoordSet,
    pub sigma: Vec<Elem>,
    pub previous_size: usize,
    pub subcode_size: usize,
    /// `Γ_j`.
    pub gamma: CoordSet,
    /// `Λ_j` as a sorted multiset.
    pub lambda_multiset: Vec<usize>,
    /// `A_j = Γ_j \ Γ_{j−1}`.
    pub new_coords: CoordSet,
    pub a: usize,
    /// `B_j = Λ_j \ Λ_{j−1}` (multiset difference).
    pub new_indices: Vec<usize>,
    /// `|B_j|`.
    pub lambda: usize,
    /// Distinct symbols in `B_j`.
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgorithmTrace {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub t: usize,
    /// Minimum distance of the starting code.
    pub d: Option<usize>,
    pub initial_size: usize,
    pub steps: Vec<StepRecord>,
    /// Index of the output subcode; the loop exited at `j = τ + 1`.
    pub tau: usize,
    /// `Γ_τ`.
    pub gamma_tau: CoordSet,
    /// `C_τ`.
    pub output: Vec<Vec<Elem>>,
    /// `C_τ` with the coordinates of `Γ_τ` deleted.
    pub punctured: Vec<Vec<Elem>>,
}

/// Runs the loop on the full code. Requires the batch property for `(r, t)`.
pub fn run_algorithm(code: &LinearCode, r: usize, t: usize, chooser: &mut dyn StepChooser) -> Result<AlgorithmTrace> {
    let catalog = RecoveryCatalog::build(code, r)?;
    let verdict = verify_with_catalog(&catalog, t, false)?;
    if !verdict.holds {
        return Err(Error::Precondition(format!(
            "not a batch code for r={r} t={t}: query {} cannot be served",
            verdict.counterexample.expect("failing verdict has a counterexample")
        )));
    }
    let start = code.codewords()?;
    let d = Some(code.min_distance()?);
    run_from(&catalog, start, t, d, chooser)
}

/// Runs the loop from an explicit starting subcode of the catalog's code.
pub fn run_from(
    catalog: &RecoveryCatalog,
    start: CodewordSet,
    t: usize,
    d: Option<usize>,
    chooser: &mut dyn StepChooser,
) -> Result<AlgorithmTrace> {
    let code = catalog.code();
    if t == 0 {
        return Err(Error::InvalidParameters("t must be >= 1".into()));
    }
    if start.n() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            got: start.n(),
        });
    }

    let initial_size = start.len();
    let mut current = start;
    let mut steps: Vec<StepRecord> = Vec::new();
    let mut gamma = CoordSet::EMPTY;
    let mut lambda_multiset: Vec<usize> = Vec::new();
    // (C_τ, Γ_τ): the last subcode with more than one codeword.
    let mut output = (current.clone(), gamma);

    while current.len() > 1 {
        let j = steps.len() + 1;
        let choice = chooser.choose(&current, catalog, t)?;
        check_choice(code, catalog.r(), t, &current, &choice)?;

        let support = choice.support();
        let mut counts: BTreeMap<Vec<Elem>, usize> = BTreeMap::new();
        for w in current.words() {
            *counts.entry(restrict(w, support)).or_default() += 1;
        }
        let top = *counts.values().max().expect("nonempty subcode");
        let sigma = match &choice.sigma {
            Some(s) if counts.get(s) == Some(&top) => s.clone(),
            Some(s) => {
                return Err(Error::Precondition(format!(
                    "step {j}: pattern {} is not a most frequent restriction on {support}",
                    format_word(s, code.q())
                )))
            }
            None => counts
                .iter()
                .find(|(_, &c)| c == top)
                .map(|(p, _)| p.clone())
                .expect("maximum is attained"),
        };

        output = (current.clone(), gamma);
        let next = current.fix(support, &sigma);
        let new_coords = support.difference(gamma);
        gamma = gamma.union(support);
        let mut new_indices = choice.indices.clone();
        new_indices.sort_unstable();
        lambda_multiset.extend_from_slice(&new_indices);
        lambda_multiset.sort_unstable();

        steps.push(StepRecord {
            j,
            support,
            sigma,
            previous_size: current.len(),
            subcode_size: next.len(),
            gamma,
            lambda_multiset: lambda_multiset.clone(),
            new_coords,
            a: new_coords.len(),
            lambda: new_indices.len(),
            mu: new_indices.iter().dedup().count(),
            new_indices,
            choice,
        });
        if next.len() >= current.len() {
            return Err(Error::Internal(format!("step {j} did not shrink the subcode")));
        }
        current = next;
    }

    let (c_tau, gamma_tau) = output;
    let punctured = c_tau.puncture(gamma_tau)?;
    Ok(AlgorithmTrace {
        q: code.q(),
        n: code.n(),
        k: code.k(),
        r: catalog.r(),
        t,
        d,
        initial_size,
        tau: steps.len().saturating_sub(1),
        steps,
        gamma_tau,
        output: c_tau.words().to_vec(),
        punctured,
    })
}

fn check_choice(code: &LinearCode, r: usize, t: usize, current: &CodewordSet, choice: &StepChoice) -> Result<()> {
    let bad = |msg: String| Err(Error::Precondition(msg));
    if choice.indices.len() != t || choice.sets.len() != t {
        return bad(format!(
            "choice must list {t} indices and {t} sets, got {} and {}",
            choice.indices.len(),
            choice.sets.len()
        ));
    }
    for (a, (&i, &s)) in choice.indices.iter().zip(&choice.sets).enumerate() {
        if s.is_empty() || s.len() > r {
            return bad(format!("set {s} must have between 1 and {r} coordinates"));
        }
        if !is_recovery_set(code, i, s)? {
            return bad(format!("set {s} does not recover symbol {}", i + 1));
        }
        if let Some(other) = choice.sets[a + 1..].iter().find(|o| !o.is_disjoint(s)) {
            return bad(format!("sets {s} and {other} intersect"));
        }
    }
    if !choice.indices.iter().any(|&i| current.varies_in_message(i)) {
        return bad("every chosen symbol is constant on the current subcode".into());
    }
    Ok(())
}

fn pow(q: usize, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// `lhs · q^e ≥ rhs` for a possibly negative exponent.
fn scaled_at_least(lhs: usize, q: usize, e: i64, rhs: usize) -> bool {
    if e >= 0 {
        BigUint::from(lhs) * pow(q, e as usize) >= BigUint::from(rhs)
    } else {
        BigUint::from(lhs) >= BigUint::from(rhs) * pow(q, e.unsigned_abs() as usize)
    }
}

impl AlgorithmTrace {
    /// Human-readable descriptions of every failed check; empty for a sound trace.
    pub fn violations(&self, q: usize) -> Vec<String> {
        let mut out = Vec::new();
        let t = self.t;
        let mut previous = self.initial_size;
        for s in &self.steps {
            let j = s.j;
            if s.a > t * self.r {
                out.push(format!("step {j}: a_j = {} exceeds t*r = {}", s.a, t * self.r));
            }
            if s.mu < 1 || s.mu > s.lambda {
                out.push(format!("step {j}: mu_j = {} outside [1, lambda_j = {}]", s.mu, s.lambda));
            }
            if s.previous_size != previous {
                out.push(format!("step {j}: previous size {} does not chain from {previous}", s.previous_size));
            }
            if s.subcode_size > s.previous_size || s.subcode_size == 0 {
                out.push(format!("step {j}: subcode size {} not in [1, {}]", s.subcode_size, s.previous_size));
            }
            let e = s.a as i64 - (t as i64 - s.mu as i64);
            if !scaled_at_least(s.subcode_size, q, e, s.previous_size) {
                out.push(format!(
                    "step {j}: |C_j| = {} below |C_(j-1)| / q^(a_j-(t-mu_j)) = {} / {q}^{e}",
                    s.subcode_size, s.previous_size
                ));
            }
            previous = s.subcode_size;
        }

        if let Some(last) = self.steps.last() {
            if last.subcode_size != 1 {
                out.push(format!("loop ended with {} codewords", last.subcode_size));
            }
            if self.tau + 1 != self.steps.len() {
                out.push(format!("tau = {} but {} steps ran", self.tau, self.steps.len()));
            }
        } else if self.tau != 0 {
            out.push(format!("tau = {} with no steps", self.tau));
        }

        let expected_output = match self.tau {
            0 => self.initial_size,
            tau => self.steps.get(tau - 1).map_or(0, |s| s.subcode_size),
        };
        if self.output.len() != expected_output || self.output.is_empty() {
            out.push(format!(
                "output has {} codewords, expected {expected_output}",
                self.output.len()
            ));
        }
        let gamma_expected = match self.tau {
            0 => CoordSet::EMPTY,
            tau => self.steps.get(tau - 1).map_or(CoordSet::EMPTY, |s| s.gamma),
        };
        if self.gamma_tau != gamma_expected {
            out.push(format!("Gamma_tau = {} but step records give {gamma_expected}", self.gamma_tau));
        }

        let distinct = self.punctured.iter().unique().count();
        if distinct != self.output.len() {
            out.push(format!(
                "puncturing is not injective: {} codewords map to {distinct} words",
                self.output.len()
            ));
        }

        let deficit: usize = self.steps.iter().take(self.tau).map(|s| t.saturating_sub(s.mu)).sum();
        let gamma_size = self.gamma_tau.len();
        // The chain below starts from |C_0| = q^k.
        let full_start = BigUint::from(self.initial_size) == pow(q, self.k);
        // log_q |C_τ| ≥ k − |Γ_τ| + Σ (t − μ_j)
        if full_start && BigUint::from(self.output.len()) * pow(q, gamma_size) < pow(q, self.k + deficit) {
            out.push(format!(
                "|C_tau| = {} below q^(k - |Gamma_tau| + {deficit})",
                self.output.len()
            ));
        }

        if let Some(d) = self.d {
            if let Some(dp) = min_pairwise_distance(&self.punctured) {
                if dp < d {
                    out.push(format!("punctured code has distance {dp} < d = {d}"));
                }
                // Singleton on the punctured code: |C'| ≤ q^(n − |Γ_τ| − d' + 1).
                let length = self.n - gamma_size;
                if BigUint::from(self.punctured.len()) > pow(q, (length + 1).saturating_sub(dp)) {
                    out.push("punctured code violates the Singleton bound".into());
                }
            }
            let chain = self.n as i64 - self.k as i64 + 1 - deficit as i64;
            if full_start && d as i64 > chain {
                out.push(format!("d = {d} exceeds n - k + 1 - sum(t - mu_j) = {chain}"));
            }
        }
        out
    }

    /// Checks every per-step inequality and the distance chain of the output.
    pub fn is_valid(&self) -> bool {
        self.violations(self.q).is_empty()
    }

    /// `τ ≥ ⌈k/(rt−t+1)⌉ − 1`, which holds whenever every step repeats one symbol.
    pub fn meets_step_lower_bound(&self) -> bool {
        let (k, r, t) = (self.k as i64, self.r as i64, self.t as i64);
        self.tau as i64 >= ceil_div(k, r * t - t + 1) - 1
    }

    /// The Plotkin-type condition at `j = 0..=τ` using the traced `|Γ_j|`.
    pub fn plotkin_checks(&self) -> Result<Vec<PlotkinCheck>> {
        let Some(d) = self.d else {
            return Ok(Vec::new());
        };
        let mut sizes = vec![0];
        sizes.extend(self.steps.iter().take(self.tau).map(|s| s.gamma.len()));
        sizes
            .into_iter()
            .enumerate()
            .filter(|&(_, g)| g < self.n)
            .map(|(j, g)| plotkin_condition(self.q, self.k, d, self.n, g, j, self.t))
            .collect()
    }
}

pub fn validate_trace(trace: &AlgorithmTrace, q: usize) -> bool {
    trace.violations(q).is_empty()
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma = self.sigma.iter().join(",");
        write!(
            f,
            "step j={} multiset={{{}}} sets={} sigma=({}) size={} a={} lambda={} mu={} gamma={}",
            self.j,
            self.choice.indices.iter().map(|i| i + 1).join(","),
            self.choice.sets.iter().join(";"),
            sigma,
            self.subcode_size,
            self.a,
            self.lambda,
            self.mu,
            self.gamma,
        )
    }
}

impl fmt::Display for AlgorithmTrace {
    /// One `step` record per line, then `key=value` summary lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code q={} k={} n={} r={} t={}", self.q, self.k, self.n, self.r, self.t)?;
        writeln!(f, "initial_size={}", self.initial_size)?;
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        writeln!(f, "tau={}", self.tau)?;
        writeln!(f, "gamma_tau={}", self.gamma_tau)?;
        let mut words: Vec<String> = self.punctured.iter().map(|w| format_word(w, self.q)).collect();
        words.sort();
        writeln!(f, "punctured={{{}}}", words.join(","))?;
        if let Some(d) = self.d {
            writeln!(f, "d={d}")?;
        }
        if let Some(dp) = min_pairwise_distance(&self.punctured) {
            writeln!(f, "punctured_distance={dp}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::constructions::{replication, simplex_3_7};

    fn set(ones: &[usize]) -> CoordSet {
        CoordSet::of(ones.iter().map(|i| i - 1))
    }

    fn scripted_first_step() -> StepChoice {
        StepChoice::new(vec![0, 0], vec![set(&[1]), set(&[2, 4])]).with_sigma(vec![1, 0, 1])
    }

    #[test]
    fn simplex_with_scripted_choice() {
        let code = simplex_3_7();
        let mut chooser = ScriptedChooser::new(vec![scripted_first_step()]);
        let trace = run_algorithm(&code, 2, 2, &mut chooser).unwrap();
        let first = &trace.steps[0];
        assert_eq!(first.sigma, vec![1, 0, 1]);
        assert_eq!(first.support, set(&[1, 2, 4]));
        assert_eq!(first.subcode_size, 2);
        assert_eq!((first.a, first.lambda, first.mu), (3, 2, 1));
        assert_eq!(trace.tau, 1);
        let mut p = trace.punctured.clone();
        p.sort();
        assert_eq!(p, vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0]]);
        assert!(trace.is_valid(), "{:?}", trace.violations(2));
        assert_eq!(min_pairwise_distance(&trace.punctured), Some(4));
    }

    #[test]
    fn lexicographic_tie_break_without_override() {
        let code = simplex_3_7();
        let mut chooser = ScriptedChooser::new(vec![StepChoice::new(vec![0, 0], vec![set(&[1]), set(&[2, 4])])]);
        let trace = run_algorithm(&code, 2, 2, &mut chooser).unwrap();
        assert_eq!(trace.steps[0].sigma, vec![0, 0, 0]);
        assert!(trace.is_valid());
    }

    #[test]
    fn sigma_override_must_be_most_frequent() {
        let code = simplex_3_7();
        let choice = StepChoice::new(vec![0, 0], vec![set(&[1]), set(&[2, 4])]).with_sigma(vec![1, 1, 1]);
        let err = run_algorithm(&code, 2, 2, &mut ScriptedChooser::new(vec![choice])).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn invalid_choices_are_rejected() {
        let code = simplex_3_7();
        let cases = [
            StepChoice::new(vec![0], vec![set(&[1])]),
            StepChoice::new(vec![0, 0], vec![set(&[1]), set(&[1, 2])]),
            StepChoice::new(vec![0, 0], vec![set(&[1]), set(&[2, 3])]),
            StepChoice::new(vec![0, 0], vec![set(&[1]), set(&[2, 4, 6])]),
        ];
        for choice in cases {
            let err = run_algorithm(&code, 2, 2, &mut ScriptedChooser::new(vec![choice.clone()]));
            assert!(matches!(err, Err(Error::Precondition(_))), "{choice:?}");
        }
        // Not a (3,7,2,5) batch code.
        assert!(matches!(
            run_algorithm(&code, 2, 5, &mut DefaultChooser),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn default_chooser_examples() {
        let code = simplex_3_7();
        let catalog = RecoveryCatalog::build(&code, 2).unwrap();
        let all = code.codewords().unwrap();
        let c = default_choice(&all, &catalog, 2).unwrap();
        assert_eq!(c.indices, vec![0, 0]);
        assert_eq!(c.sets, vec![set(&[1]), set(&[2, 4])]);

        // Fix x_1 = 0 via coordinate 1; x_2 still varies.
        let sub = all.fix(set(&[1]), &[0]);
        let c = default_choice(&sub, &catalog, 2).unwrap();
        assert_eq!(c.indices, vec![1, 1]);

        let c = default_choice(&all, &catalog, 1).unwrap();
        assert_eq!(c.sets, vec![set(&[1])]);
    }

    #[test]
    fn single_codeword_start() {
        let code = simplex_3_7();
        let catalog = RecoveryCatalog::build(&code, 2).unwrap();
        let one = code.codewords().unwrap().fix(CoordSet::full(3), &[0, 0, 0]);
        assert_eq!(one.len(), 1);
        let trace = run_from(&catalog, one, 2, Some(4), &mut DefaultChooser).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.tau, 0);
        assert!(trace.is_valid());
    }

    #[test]
    fn replication_first_step() {
        // Frozen from enumerating the four codewords of [x1 x1 x2 x2] and grouping by (y1, y2).
        let code = replication(Field::binary(), 2, 2).unwrap();
        let trace = run_algorithm(&code, 1, 2, &mut DefaultChooser).unwrap();
        let s = &trace.steps[0];
        assert_eq!(s.choice.sets, vec![set(&[1]), set(&[2])]);
        assert_eq!((s.a, s.mu, s.subcode_size), (2, 1, 2));
        assert!(trace.is_valid());
        assert!(trace.meets_step_lower_bound());
    }

    #[test]
    fn corrupted_trace_is_rejected() {
        let code = simplex_3_7();
        let mut trace = run_algorithm(&code, 2, 2, &mut ScriptedChooser::new(vec![scripted_first_step()])).unwrap();
        assert!(validate_trace(&trace, 2));
        trace.steps[0].subcode_size = 1;
        assert!(!validate_trace(&trace, 2));
    }

    #[test]
    fn plotkin_along_trace() {
        let code = simplex_3_7();
        let trace = run_algorithm(&code, 2, 1, &mut DefaultChooser).unwrap();
        let checks = trace.plotkin_checks().unwrap();
        assert_eq!(checks[0].gamma_size, 0);
        assert!(checks[0].tight());
        assert_eq!(checks.len(), trace.tau + 1);
    }

    #[test]
    fn serialization() {
        let code = simplex_3_7();
        let trace = run_algorithm(&code, 2, 2, &mut ScriptedChooser::new(vec![scripted_first_step()])).unwrap();
        let text = trace.to_string();
        assert!(text.contains("step j=1 multiset={1,1} sets={1};{2,4} sigma=(1,0,1) size=2 a=3 lambda=2 mu=1"));
        assert!(text.contains("punctured={0101,1010}"));
        assert!(text.contains("tau=1"));
    }
}
