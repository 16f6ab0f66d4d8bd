//! Domain layer for the perfect-cuboid symmetric ideal.
//!
//! The cuboid system couples three edges `x1, x2, x3`, three face diagonals
//! `d1, d2, d3`, and the space diagonal `L`. Permuting the edge/diagonal
//! columns simultaneously leaves the system invariant, so its consequences
//! live naturally in the ring of multisymmetric polynomials. This module
//! holds the named polynomials of that theory as a typed [`catalog`], the
//! substitution homomorphism [`phi`] from the ten-variable E-ring onto the
//! multisymmetric ring together with its section [`e_form`], and the
//! verification procedures that recheck every computational claim of the
//! underlying derivation, reporting per-claim outcomes under stable ids.

mod catalog;
mod maps;
mod qform;
mod report;
mod verify;

pub use catalog::{catalog, Catalog, E_LABELS};
pub use maps::{e_form, phi, sym_cofactors, Session};
pub use qform::{reduce_xd_canonical, QForm, RESIDUAL_EXPONENTS};
pub use report::{Claim, ClaimOutcome, VerificationReport};
pub use verify::{
    verify_all, verify_factor_conversions, verify_kernel_basis, verify_partial_relations,
    verify_phi_kernel, verify_sym_basis,
};
