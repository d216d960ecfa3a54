//! Tools for linear batch codes with restricted query size.
//!
//! A linear `(k, n, r, t)` batch code encodes `k` symbols into `n` so that
//! any multiset of `t` requested information symbols can be read back from
//! `t` pairwise-disjoint groups of at most `r` coordinates each. This crate
//! works on explicit generator matrices over small finite fields:
//!
//! - [`algebra`]: GF(q) arithmetic, rank and span tests, codeword
//!   enumeration, minimum distance, puncturing.
//! - [`recovery`]: recovery sets, minimal recovery sets, determined coordinates.
//! - [`batch`]: exhaustive verification of the batch property.
//! - [`bounds`]: distance and length bounds for batch codes, evaluated exactly.
//! - [`subcode`]: the iterative subcode construction used to prove the
//!   distance bound, with a per-step trace and validation.
//! - [`cli`]: the `batchcode` command line and its matrix/choices file formats.
//!
//! Indices are 0-based in the API and 1-based in every rendered string.
//!
//! ```
//! use batchcode::{batch, constructions};
//!
//! let code = constructions::simplex_3_7();
//! assert_eq!(code.min_distance().unwrap(), 4);
//! assert!(batch::verify_batch(&code, 2, 4).unwrap().holds);
//! assert!(!batch::verify_batch(&code, 2, 5).unwrap().holds);
//! ```
//!
//! The `examples/` directory has one runnable program per capability.

pub mod algebra;
pub mod batch;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod recovery;
pub mod subcode;

pub use algebra::{CoordSet, Field, LinearCode, Matrix};
pub use batch::{max_t, serve_query, verify_batch, BatchVerdict, QueryAssignment, QueryMultiset};
pub use bounds::{bounds_report, BoundReport, CodeParams};
pub use error::{Error, Result};
pub use recovery::RecoveryCatalog;
pub use subcode::{run_algorithm, AlgorithmTrace, DefaultChooser, ScriptedChooser, StepChoice};
