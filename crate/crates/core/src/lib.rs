//! Exact arithmetic for Stirling numbers of types A and B and their q-analogues.
//!
//! Everything here is computed over the integers (or exact rationals for the
//! classical exponential generating functions): there is no floating point on
//! any verification path.  The crate provides
//!
//! - [`qpoly`]: dense integer polynomials in `q`, q-brackets, q-factorials,
//!   Gaussian binomials, and reduction modulo `q^m - q`;
//! - [`stirling`]: the eight recursion families (first/second kind, types A/B,
//!   plain/q) plus ordered, signed, and barred variants;
//! - [`symmetric`]: elementary/complete homogeneous specializations and the
//!   identities tying them to Stirling numbers;
//! - [`combinat`]: signed partitions, signed permutations, and ordered set
//!   partitions with their `inv` and `maj` statistics;
//! - [`involution`]: split/merge maps, the sign-reversing involution, and the
//!   alternating-sum and divisibility checks they prove;
//! - [`lattice`]: the signed-partition lattice with its Möbius function and
//!   Whitney numbers;
//! - [`series`]: truncated exponential and q-exponential generating functions;
//! - [`artin`]: (super) Artin monomial sets, insertion bijections, and bigraded
//!   Hilbert series;
//! - [`diagnostics`]: coefficient-sequence scanners (log-concavity, unimodality,
//!   bottom-heaviness) and distribution data export.

pub mod artin;
pub mod combinat;
pub mod diagnostics;
pub mod error;
pub mod involution;
pub mod lattice;
pub mod qpoly;
pub mod report;
pub mod series;
pub mod stirling;
pub mod suites;
pub mod symmetric;

pub use error::Error;
pub use qpoly::{QPoly, TPoly};
pub use report::Report;

/// The two Coxeter families the crate works with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A,
    B,
}

impl std::fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoxeterType::A => write!(f, "A"),
            CoxeterType::B => write!(f, "B"),
        }
    }
}
