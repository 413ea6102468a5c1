//! Exact spectral theory for Sylvester-Kac type tridiagonal matrices.
//!
//! The crate constructs the Sylvester-Kac matrix `K_N`, its four-parameter
//! generalization `J_N(alpha, beta, gamma, delta)`, the three-parameter form
//! `B_N(a, b, c)`, the matrices `G_N`, `S_N`, `H_N` and the Hahn recurrence
//! matrix `C_N(alpha)`. Closed-form eigenvalues and eigenvectors are produced
//! in exact arithmetic (rationals or a quadratic extension) and checked by
//! exact residuals and characteristic-polynomial identities. The first-order
//! differential operators whose restrictions these matrices represent are
//! implemented alongside and serve as an independent cross-check.

pub mod appendix;
pub mod diffop;
pub mod error;
pub mod exactnum;
pub mod matrices;
pub mod report;
pub mod serial;
pub mod spectral;

pub use error::{Error, Result};
pub use exactnum::{binomial, parse_rational, pochhammer, Polynomial, QuadExt, Rational};
pub use matrices::{AppendixKind, Tridiagonal};
pub use report::{Family, FamilyKind, SpectralReport};
