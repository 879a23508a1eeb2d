//! Truncated generating-function engines.
//!
//! [`ratseries`] holds classical exponential generating functions: truncated
//! series in `x` whose coefficients are polynomials in `t` over exact
//! rationals.  [`qegf`] holds q-exponential generating functions
//! `sum_n a_n x^n / [n]!` represented by their polynomial numerator
//! sequences, multiplied by q-binomial convolution, with the q-derivative,
//! q-logarithm, symbolic powers, and q-composition.

pub mod qegf;
pub mod ratseries;

pub use qegf::{verify_qegf_identities, QEgf};
pub use ratseries::{verify_egf, EgfFamily, RatPoly, RatSeries};
