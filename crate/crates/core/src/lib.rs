//! Exact polynomial algebra over the rationals with lexicographic Groebner
//! bases, and a verification layer for the symmetric ideal of the perfect
//! cuboid.
//!
//! The crate has three layers:
//!
//! * [`ring`]: sparse multivariate polynomials over arbitrary-precision
//!   rationals, the column action of S3, and the text format.
//! * [`groebner`]: polynomial division with cofactors, Buchberger's
//!   algorithm with canonical reduced output and a transform back to the
//!   original generators, elimination ideals, and ideal membership.
//! * [`cuboid`]: the fixed catalog of cuboid polynomials and the
//!   verification procedures for the kernel of the symmetric-value
//!   substitution, the eight-generator ideal basis, the column-partial
//!   relations, and the factor-equation conversions.
//!
//! All arithmetic is exact; no floating point or modular shortcuts are used
//! anywhere.

pub mod cuboid;
pub mod error;
pub mod groebner;
pub mod rational;
pub mod ring;

pub use error::{Error, Result};
pub use rational::Rational;
