//! Insertion-deletion codes over finite alphabets.
//!
//! Word metrics and the code file format live in [`metrics`] and [`code`];
//! finite fields, polynomials and residue rings in [`galois`]. The constructions
//! are the pigeonhole constant-weight L1 codes of [`cw_l1`] with their sorted-word
//! [`lift`], and the Reed-Solomon tools of [`rs`]. [`bounds`] evaluates size
//! bounds and finds exact optima on small parameters.

pub mod bigmath;
pub mod bounds;
pub mod cli;
pub mod code;
pub mod cw_l1;
pub mod error;
pub mod galois;
pub mod lift;
pub mod metrics;
pub mod oracle;
pub mod rs;
pub mod selftest;

pub use code::{code_min_distance, Code, CodeKind, Metric, MinDistance};
pub use error::{Error, Result};
pub use metrics::{insdel_distance, lcs_length, Composition, Word};
