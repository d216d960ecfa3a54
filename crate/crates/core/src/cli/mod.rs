//! The `batchcode` command line.
//!
//! Exit codes: 0 when the command succeeds and the checked property holds,
//! 1 when the property fails (or a trace fails validation), 2 on bad input.

pub mod choices;
pub mod matrix_file;
pub mod table;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use itertools::Itertools;

use crate::algebra::LinearCode;
use crate::batch::{max_t, verify_batch, verify_batch_with_witnesses};
use crate::bounds::{bounds_report, BoundReport, CodeParams};
use crate::error::{Error, Result};
use crate::subcode::{run_algorithm, DefaultChooser, ScriptedChooser};

pub use choices::parse_choices;
pub use matrix_file::{parse_matrix_file, render_matrix_file};
pub use table::{format_decimal, parse_columns, parse_decimal, Column, TableSpec};

#[derive(Debug, Parser)]
#[command(name = "batchcode", version, about = "Linear batch codes with restricted query size")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every t-multiset of information symbols is served by disjoint recovery sets of size <= r.
    Verify {
        #[command(flatten)]
        code: CodeArg,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        t: usize,
        /// Print one serving assignment per multiset.
        #[arg(long)]
        witness: bool,
    },
    /// Evaluate distance and length bounds for the given parameters.
    Bounds {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        d: Option<usize>,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        t: usize,
        #[arg(short)]
        q: Option<usize>,
        /// The code is systematic (enables the systematic length bound).
        #[arg(long)]
        systematic: bool,
    },
    /// Compute the minimum distance.
    Mindist {
        #[command(flatten)]
        code: CodeArg,
    },
    /// Largest t (up to a cap) for which the batch property holds.
    Maxt {
        #[command(flatten)]
        code: CodeArg,
        #[arg(short)]
        r: usize,
        #[arg(long, default_value_t = 16)]
        t_cap: usize,
    },
    /// Run the subcode construction and print its trace.
    Subcode {
        #[command(flatten)]
        code: CodeArg,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        t: usize,
        /// Step choices, one per line: `{1,1}; {1},{2,4}` with optional `; (sigma)`.
        #[arg(long)]
        choices: Option<PathBuf>,
    },
    /// Print the asymptotic relative-distance table.
    Table {
        /// Rate increment.
        #[arg(long)]
        step: Option<String>,
        /// Comma-separated columns: `singleton` or `r:t`.
        #[arg(long)]
        columns: Option<String>,
        /// Decimal places.
        #[arg(long, default_value_t = 5)]
        decimals: usize,
    },
}

#[derive(Debug, Args)]
pub struct CodeArg {
    /// Generator-matrix file.
    #[arg(long = "code", value_name = "FILE")]
    pub path: PathBuf,
}

/// Result of one command: exit status plus captured output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: 0, stdout, stderr: String::new() }
    }

    fn status(status: i32, stdout: String) -> Self {
        Outcome { status, stdout, stderr: String::new() }
    }

    fn input_error(err: &Error) -> Self {
        Outcome { status: 2, stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

pub fn load_code(path: &Path) -> Result<LinearCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix_file(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::InvalidParameters(format!("{}:{line}: {message}", path.display())),
        other => other,
    })
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Verify { code, r, t, witness } => cmd_verify(&code.path, r, t, witness),
        Command::Bounds { k, n, d, r, t, q, systematic } => {
            cmd_bounds(&CodeParams { k, n, d, r, t, q, systematic })
        }
        Command::Mindist { code } => cmd_mindist(&code.path),
        Command::Maxt { code, r, t_cap } => cmd_maxt(&code.path, r, t_cap),
        Command::Subcode { code, r, t, choices } => cmd_subcode(&code.path, r, t, choices.as_deref()),
        Command::Table { step, columns, decimals } => cmd_table(step.as_deref(), columns.as_deref(), decimals),
    };
    match result {
        Ok(outcome) => outcome,
        Err(Error::Internal(m)) => Outcome { status: 1, stdout: String::new(), stderr: format!("internal error: {m}\n") },
        Err(e) => Outcome::input_error(&e),
    }
}

/// Parses `args` (including the program name), runs, and returns the outcome.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                Outcome::ok(text)
            } else {
                Outcome { status, stdout: String::new(), stderr: text }
            }
        }
    }
}

fn cmd_verify(path: &Path, r: usize, t: usize, witness: bool) -> Result<Outcome> {
    let code = load_code(path)?;
    let verdict = if witness {
        verify_batch_with_witnesses(&code, r, t)?
    } else {
        verify_batch(&code, r, t)?
    };
    let mut out = format!("code q={} k={} n={}\nr={r} t={t}\n", code.q(), code.k(), code.n());
    if verdict.holds {
        out.push_str("holds\n");
        for w in verdict.witnesses.iter().flatten() {
            let sets = w.sets.iter().map(|s| s.coords.to_string()).join(";");
            let _ = writeln!(out, "witness {} <- {sets}", w.query);
        }
        Ok(Outcome::ok(out))
    } else {
        out.push_str("fails\n");
        if let Some(c) = verdict.counterexample {
            let _ = writeln!(out, "counterexample={c}");
        }
        Ok(Outcome::status(1, out))
    }
}

fn flag(v: Option<bool>) -> String {
    v.map(|b| format!(" tight={b}")).unwrap_or_default()
}

pub fn render_bounds(report: &BoundReport) -> String {
    let p = &report.params;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# (k={}, n={}, r={}, t={}) batch code, d={}{}",
        p.k,
        p.n.map_or("?".to_string(), |n| n.to_string()),
        p.r,
        p.t,
        report.d_used,
        if report.d_assumed { " (assumed: d >= t)" } else { "" }
    );
    if let (Some(s), Some(b)) = (report.singleton_d, report.thm1_d) {
        let _ = writeln!(out, "# distance at most {b} (Singleton allows {s})");
    }
    let _ = writeln!(out, "# length at least {}", report.combined_n_lower);

    let _ = writeln!(out, "k={}", p.k);
    if let Some(n) = p.n {
        let _ = writeln!(out, "n={n}");
    }
    let _ = writeln!(out, "r={}", p.r);
    let _ = writeln!(out, "t={}", p.t);
    if let Some(q) = p.q {
        let _ = writeln!(out, "q={q}");
    }
    let _ = writeln!(out, "d={} assumed={}", report.d_used, report.d_assumed);
    if let Some(v) = report.singleton_d {
        let _ = writeln!(out, "singleton_d={v}{}", flag(report.tight.singleton));
    }
    if let Some(v) = report.thm1_d {
        let _ = writeln!(out, "thm1_d={v}{}", flag(report.tight.thm1));
    }
    let _ = writeln!(out, "cor1_n={} beta={}{}", report.cor1_n.value, report.cor1_n.beta, flag(report.tight.cor1));
    match report.cor2_n {
        Some(b) => {
            let _ = writeln!(out, "cor2_n={} beta={}{}", b.value, b.beta, flag(report.tight.cor2));
        }
        None => {
            let why = if p.systematic { "not_applicable" } else { "not_systematic" };
            let _ = writeln!(out, "cor2_n={why}");
        }
    }
    match &report.improved_n {
        Some(b) => {
            let _ = writeln!(
                out,
                "improved_n={} beta={} epsilon={} lambda={} term={} A={} B={} C={}{}",
                b.value,
                b.terms.beta,
                b.terms.epsilon,
                b.terms.lambda_slack,
                b.minimizing,
                b.terms.a,
                b.terms.b,
                b.terms.c,
                flag(report.tight.improved)
            );
        }
        None => {
            let _ = writeln!(out, "improved_n=not_applicable");
        }
    }
    for pc in &report.plotkin {
        let _ = writeln!(
            out,
            "plotkin j={} gamma={} status={} lhs={} rhs={}{}",
            pc.j,
            pc.gamma_size,
            pc.status,
            pc.lhs,
            pc.rhs,
            if pc.applicable() { flag(Some(pc.tight())) } else { String::new() }
        );
    }
    let _ = writeln!(out, "combined_n_lower={}", report.combined_n_lower);
    out
}

/// Whether supplied `n`/`d` are consistent with every evaluated bound.
pub fn bounds_consistent(report: &BoundReport) -> bool {
    let p = &report.params;
    let d_ok = match p.d {
        Some(d) => [report.singleton_d, report.thm1_d].iter().flatten().all(|&b| d as i64 <= b),
        None => true,
    };
    let n_ok = match (p.n, p.d) {
        (Some(n), Some(_)) => n as i64 >= report.combined_n_lower,
        _ => true,
    };
    let plotkin_ok = report.plotkin.iter().all(|pc| pc.status != crate::bounds::PlotkinStatus::Violated);
    d_ok && n_ok && plotkin_ok
}

fn cmd_bounds(params: &CodeParams) -> Result<Outcome> {
    let report = bounds_report(params)?;
    let mut out = render_bounds(&report);
    let consistent = bounds_consistent(&report);
    let _ = writeln!(out, "consistent={consistent}");
    Ok(Outcome::status(if consistent { 0 } else { 1 }, out))
}

fn cmd_mindist(path: &Path) -> Result<Outcome> {
    let code = load_code(path)?;
    Ok(Outcome::ok(format!("min_distance={}\n", code.min_distance()?)))
}

fn cmd_maxt(path: &Path, r: usize, t_cap: usize) -> Result<Outcome> {
    let code = load_code(path)?;
    let t = max_t(&code, r, t_cap)?;
    let capped = if t == t_cap { " capped=true" } else { "" };
    Ok(Outcome::ok(format!("max_t={t}{capped}\n")))
}

fn cmd_subcode(path: &Path, r: usize, t: usize, choices: Option<&Path>) -> Result<Outcome> {
    let code = load_code(path)?;
    let trace = match choices {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", p.display())))?;
            let script = parse_choices(&text).map_err(|e| match e {
                Error::Parse { line, message } => {
                    Error::InvalidParameters(format!("{}:{line}: {message}", p.display()))
                }
                other => other,
            })?;
            run_algorithm(&code, r, t, &mut ScriptedChooser::new(script))?
        }
        None => run_algorithm(&code, r, t, &mut DefaultChooser)?,
    };
    let mut out = trace.to_string();
    for pc in trace.plotkin_checks()? {
        let _ = writeln!(
            out,
            "plotkin j={} gamma={} status={} lhs={} rhs={}",
            pc.j, pc.gamma_size, pc.status, pc.lhs, pc.rhs
        );
    }
    let violations = trace.violations(code.q());
    for v in &violations {
        let _ = writeln!(out, "violation {v}");
    }
    let valid = violations.is_empty();
    let _ = writeln!(out, "valid={valid}");
    Ok(Outcome::status(if valid { 0 } else { 1 }, out))
}

fn cmd_table(step: Option<&str>, columns: Option<&str>, decimals: usize) -> Result<Outcome> {
    if decimals > 12 {
        return Err(Error::InvalidParameters("at most 12 decimals".into()));
    }
    let mut spec = TableSpec { decimals, ..TableSpec::default() };
    if let Some(step) = step {
        spec = spec.with_step(parse_decimal(step)?)?;
    }
    if let Some(cols) = columns {
        spec.columns = parse_columns(cols)?;
        if spec.columns.is_empty() {
            return Err(Error::InvalidParameters("no columns given".into()));
        }
    }
    Ok(Outcome::ok(spec.render()?))
}
