//! Exact scalar and polynomial arithmetic.
//!
//! Everything here is exact: rationals are arbitrary precision, elements of
//! a quadratic extension carry their radicand explicitly, and polynomials
//! store their coefficients in the extension.

mod combinatorics;
mod poly;
mod quad;
mod rational;

pub use combinatorics::{binomial, factorial, pochhammer};
pub use poly::Polynomial;
pub use quad::QuadExt;
pub use rational::{int, parse_rational, ratio, rational_sqrt, Rational};
