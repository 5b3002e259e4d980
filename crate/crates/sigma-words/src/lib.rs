//! Sigma-words: the finite approximations `C_n`, `D_n` of the turn
//! sequence of the unfolded dragon curve, together with exact occurrence
//! counting of generalized patterns in them.
//!
//! The crate has two counting routes that check each other:
//!
//! * [`oracle`] — brute-force counts on explicitly built words; the
//!   ground truth;
//! * [`formula`] — closed forms and affine recurrences that evaluate the
//!   same counts without materializing large words.
//!
//! [`verify`] cross-validates the two over ranges of word orders, and the
//! `sigma-words` binary exposes everything on the command line. See the
//! `examples/` directory for one runnable program per capability.

pub mod formula;
pub mod kernel;
pub mod oracle;
pub mod pattern;
pub mod verify;
pub mod word;

pub mod cli;

pub use oracle::Count;
pub use pattern::{GeneralizedPattern, Semantics};
pub use word::{Letter, Word, WordKind};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("requested word of {requested} letters exceeds the materialization cap of {cap}")]
    CapExceeded { requested: u64, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("kernel requires an odd-length word, got length {len}")]
    OddLengthRequired { len: usize },

    #[error("{0}")]
    Domain(String),

    #[error("pattern {pattern} has overlapping adjacent blocks; no closed form is available")]
    OverlappingBlocks { pattern: String },

    #[error("pattern {pattern} has an overlap at an anchored block; no closed form is available")]
    OverlapAtAnchor { pattern: String },
}
