//! Exact computation around two families of heterogeneous Bernoulli sums
//! and the Stirling triangles they generate.
//!
//! The crate computes, entirely in arbitrary-precision rational
//! arithmetic:
//!
//! * signed Stirling numbers of the first kind and degenerate Stirling
//!   numbers of the second kind ([`stirling`]), each recurrence guarded
//!   by an independent construction;
//! * the laws of the harmonic Bernoulli sum (success probabilities 1/j)
//!   and its two-parameter deformation (probabilities α/(α+λj)) —
//!   PMFs, generating polynomials, moments, binomial moments, and the
//!   exact Gamma ratio ([`dist`]);
//! * mechanical verification of the dimorphic factorization linking the
//!   two families and of its two Stirling-sum consequences, as exact
//!   rational/polynomial equalities plus an equally-spaced quadrature
//!   path ([`verify`]);
//! * seeded, reproducible Monte Carlo sampling with empirical-vs-exact
//!   statistics ([`sim`]).
//!
//! Everything is `no_std` (with `alloc`); IO, file formats, and the CLI
//! live in the companion `dimorphic-cli` crate. All values are immutable
//! after construction and all operations are pure, so types can be shared
//! and sent across threads freely.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dist;
pub mod error;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod sim;
pub mod stirling;
pub mod verify;

pub use dist::{BernoulliSumSpec, Family, Pmf};
pub use error::{Error, Result};
pub use poly::DensePoly;
pub use scalar::Rational;
pub use series::TruncatedSeries;
pub use stirling::StirlingTable;
pub use verify::{Identity, VerificationReport};
