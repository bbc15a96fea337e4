//! Error type shared by every module of the crate.

use core::fmt;

/// Errors from exact computation, verification, and sampling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A triangular query `(n, k)` with `k > n`.
    IndexOutsideTriangle { n: u32, k: u32 },
    /// A table query past the last row the table was built for.
    RowNotBuilt { max_n: u32, n: u32 },
    /// Arithmetic on two series with different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// The factor indexed by `j` vanished (`α + λj = 0`, or `α/λ + j = 0`
    /// in a gamma ratio); the value is undefined there.
    Pole { j: u32 },
    /// λ = 0 where a division by λ is required.
    LambdaZero,
    /// Too few quadrature nodes for the integrand's trigonometric degree;
    /// the equally-spaced rule would alias instead of being exact.
    Aliasing { nodes: u32, needed: u32 },
    /// Parameters that do not describe a valid Bernoulli-sum distribution.
    InvalidSpec(&'static str),
    /// A simulated outcome landed on a point of exact probability zero.
    ImpossibleOutcome { outcome: usize, count: u64 },
    /// A component success probability outside [0, 1]; sampling is not
    /// defined for out-of-range parameters.
    UnsampleableProbability { component: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::IndexOutsideTriangle { n, k } => {
                write!(f, "index k={k} exceeds n={n} in triangular domain")
            }
            Self::RowNotBuilt { max_n, n } => {
                write!(f, "row n={n} requested from a table built up to n={max_n}")
            }
            Self::OrderMismatch { left, right } => {
                write!(f, "series truncation orders differ: {left} vs {right}")
            }
            Self::Pole { j } => write!(f, "pole: factor j={j} vanishes"),
            Self::LambdaZero => write!(f, "lambda must be nonzero"),
            Self::Aliasing { nodes, needed } => {
                write!(f, "{nodes} quadrature nodes alias; need at least {needed}")
            }
            Self::InvalidSpec(msg) => write!(f, "invalid distribution spec: {msg}"),
            Self::ImpossibleOutcome { outcome, count } => {
                write!(f, "outcome {outcome} has probability zero but count {count}")
            }
            Self::UnsampleableProbability { component } => {
                write!(f, "component {component} has success probability outside [0,1]")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
