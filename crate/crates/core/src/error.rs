//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by parsing, substitution, and the ideal-level operations.
///
/// Programming errors (mixing polynomials from different rings in arithmetic,
/// taking the S-polynomial of zero) panic instead; they indicate a bug in the
/// caller, not a condition to recover from.
#[derive(Debug, Error)]
pub enum Error {
    /// The input text violates the polynomial grammar.
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    /// The input names a variable the ring does not contain.
    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },

    /// A substitution was applied to a polynomial that uses a variable
    /// without an assigned image.
    #[error("variable `{name}` occurs in the input but has no image under the substitution")]
    UnmappedVariable { name: String },

    /// An image polynomial belongs to a ring other than the substitution's
    /// target ring.
    #[error("substitution image for `{name}` does not live in the target ring")]
    ImageRingMismatch { name: String },

    /// Requested eliminating more variables than the ring has.
    #[error("cannot eliminate the first {k} of {arity} variables")]
    BadElimination { k: usize, arity: usize },

    /// An operation requires a polynomial invariant under all column
    /// permutations.
    #[error("polynomial is not invariant under the column permutations")]
    NotInvariant,

    /// An operation requires a polynomial invariant under the column-(2,3)
    /// swap.
    #[error("polynomial is not invariant under the column-(2,3) swap")]
    NotSwapInvariant,

    /// A normal form that should lie in a subring still uses an eliminated
    /// variable. With a correct elimination order this cannot happen, so
    /// seeing it signals an internal ordering bug.
    #[error("normal form retained `{variable}`, which the order should have eliminated")]
    NotEliminated { variable: String },

    /// A stored basis file does not describe the expected ring and order.
    #[error("basis file header mismatch: {0}")]
    CacheHeader(String),

    /// Underlying I/O failure while reading or writing polynomial files.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
