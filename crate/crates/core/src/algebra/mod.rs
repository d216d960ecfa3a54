//! Finite fields, matrices and linear codes.

pub mod code;
pub mod coords;
pub mod field;
pub mod matrix;

pub use code::{format_word, hamming_distance, restrict, CodewordSet, LinearCode};
pub use coords::{CoordSet, MAX_LENGTH};
pub use field::{Elem, Field, FieldOp};
pub use matrix::{in_span, Matrix};
