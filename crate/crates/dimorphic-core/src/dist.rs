//! The two heterogeneous Bernoulli-sum families and their exact laws.
//!
//! Family Y sums independent Bernoulli components with success
//! probabilities 1/j for j = 1..n; family Z uses α/(α+λj). PMFs come from
//! exact products of one-component generating functions — never floating
//! convolution — so downstream identity checks compare exact rationals.
//!
//! The engine underneath ([`bernoulli_sum_pgf`]) takes any rational
//! probability sequence; only the two families above are first-class.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::scalar::Rational;

/// Which Bernoulli-sum family a specification describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Success probabilities 1/j (the CLI family tag `y`).
    Y,
    /// Success probabilities α/(α+λj) (the CLI family tag `z`).
    Z,
}

/// A sum of n independent Bernoulli components from one of the two
/// families.
///
/// Family Z parameters are validated only against poles (α + λj = 0 for
/// some component would leave the law undefined). The stricter ranges
/// α > 0 and 0 < λ < 1 define [`in_paper_range`](Self::in_paper_range);
/// outside them the algebra still goes through and callers flag results
/// as out of range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BernoulliSumSpec {
    Harmonic { n: u32 },
    Degenerate { n: u32, alpha: Rational, lambda: Rational },
}

impl BernoulliSumSpec {
    /// Family Y with components j = 1..=n.
    pub fn harmonic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("a Bernoulli sum needs at least one component"));
        }
        Ok(Self::Harmonic { n })
    }

    /// Family Z with components j = 1..=n; rejects poles α + λj = 0.
    pub fn degenerate(n: u32, alpha: Rational, lambda: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("a Bernoulli sum needs at least one component"));
        }
        for j in 1..=n {
            if (&alpha + &lambda * Rational::from_integer((j as i64).into())).is_zero() {
                return Err(Error::Pole { j });
            }
        }
        Ok(Self::Degenerate { n, alpha, lambda })
    }

    pub fn family(&self) -> Family {
        match self {
            Self::Harmonic { .. } => Family::Y,
            Self::Degenerate { .. } => Family::Z,
        }
    }

    pub fn n(&self) -> u32 {
        match self {
            Self::Harmonic { n } | Self::Degenerate { n, .. } => *n,
        }
    }

    /// Whether the parameters sit in the ranges the identities are stated
    /// for: family Y always, family Z iff α > 0 and 0 < λ < 1.
    pub fn in_paper_range(&self) -> bool {
        match self {
            Self::Harmonic { .. } => true,
            Self::Degenerate { alpha, lambda, .. } => {
                alpha > &Rational::zero()
                    && lambda > &Rational::zero()
                    && lambda < &Rational::one()
            }
        }
    }

    /// Component success probabilities p_1..p_n, exact.
    pub fn success_probabilities(&self) -> Vec<Rational> {
        match self {
            Self::Harmonic { n } => (1..=*n as i64).map(|j| Rational::new(1.into(), j.into())).collect(),
            Self::Degenerate { n, alpha, lambda } => (1..=*n as i64)
                .map(|j| {
                    let denom = alpha + lambda * Rational::from_integer(j.into());
                    alpha / denom
                })
                .collect(),
        }
    }

    /// Probability generating function: coefficient k is P{sum = k}, and
    /// the value at z = 1 is exactly 1.
    pub fn pgf(&self) -> DensePoly {
        bernoulli_sum_pgf(&self.success_probabilities())
    }

    /// Exact probability mass function on outcomes 0..=n.
    pub fn pmf(&self) -> Pmf {
        Pmf::from_pgf(&self.pgf(), self.n())
    }

    /// Σ p_j in closed form; equals the PMF mean.
    pub fn mean(&self) -> Rational {
        self.success_probabilities().into_iter().sum()
    }

    /// Σ p_j(1 − p_j) in closed form; equals the PMF variance.
    pub fn variance(&self) -> Rational {
        self.success_probabilities()
            .into_iter()
            .map(|p| &p * (Rational::one() - &p))
            .sum()
    }
}

/// PGF of a sum of independent Bernoulli components with the given
/// success probabilities: Π_j ((1 − p_j) + p_j·z). The empty product is
/// the constant 1 (a sum of no components is identically zero).
pub fn bernoulli_sum_pgf(probs: &[Rational]) -> DensePoly {
    let mut acc = DensePoly::one();
    for p in probs {
        acc = &acc * &DensePoly::linear(Rational::one() - p, p.clone());
    }
    acc
}

/// Exact probability mass over outcomes 0..=n.
///
/// Entries always sum to exactly 1. They are all nonnegative precisely
/// when every component probability lies in [0, 1]; out-of-range family Z
/// parameters can produce signed entries, which the identity checks use
/// and the sampler refuses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pmf {
    probs: Vec<Rational>,
}

impl Pmf {
    /// Reads coefficients 0..=n off a generating polynomial, padding with
    /// zeros (the polynomial may have lower degree, e.g. at α = 0).
    pub fn from_pgf(pgf: &DensePoly, n: u32) -> Self {
        let probs = (0..=n as usize).map(|k| pgf.coeff(k)).collect();
        let pmf = Self { probs };
        debug_assert!(pmf.total().is_one());
        pmf
    }

    pub fn probabilities(&self) -> &[Rational] {
        &self.probs
    }

    /// P{sum = k}; zero beyond the support.
    pub fn probability(&self, k: usize) -> Rational {
        self.probs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest representable outcome (n).
    pub fn max_outcome(&self) -> usize {
        self.probs.len() - 1
    }

    pub fn total(&self) -> Rational {
        self.probs.iter().sum()
    }

    /// Σ k·p_k.
    pub fn mean(&self) -> Rational {
        self.probs
            .iter()
            .enumerate()
            .map(|(k, p)| p * Rational::from_integer((k as i64).into()))
            .sum()
    }

    /// Σ k²·p_k − (Σ k·p_k)².
    pub fn variance(&self) -> Rational {
        let mean = self.mean();
        let second: Rational = self
            .probs
            .iter()
            .enumerate()
            .map(|(k, p)| p * Rational::from_integer(((k * k) as i64).into()))
            .sum();
        second - &mean * &mean
    }
}

/// All binomial moments of the harmonic family at once: entry l is
/// E[C(Y_n, l)], read as coefficient l of Π_{j=1..n}(1 + t/j).
pub fn binomial_moments(n: u32) -> Vec<Rational> {
    let mut acc = DensePoly::one();
    for j in 1..=n as i64 {
        acc = &acc * &DensePoly::linear(Rational::one(), Rational::new(1.into(), j.into()));
    }
    (0..=n as usize).map(|l| acc.coeff(l)).collect()
}

/// E[C(Y_n, l)] as an exact rational; zero for l > n since Y_n ≤ n.
pub fn binomial_moment(n: u32, l: u32) -> Rational {
    if l > n {
        return Rational::zero();
    }
    binomial_moments(n).swap_remove(l as usize)
}

/// The ratio Γ(n + α/λ + 1)/Γ(α/λ) realized through the functional
/// equation as the rising product (α/λ)(α/λ+1)⋯(α/λ+n) — n+1 exact
/// factors, no transcendental evaluation. A vanishing factor is a pole of
/// the ratio and is refused.
pub fn gamma_ratio(alpha: &Rational, lambda: &Rational, n: u32) -> Result<Rational> {
    if lambda.is_zero() {
        return Err(Error::LambdaZero);
    }
    let base = alpha / lambda;
    let mut acc = Rational::one();
    for j in 0..=n as i64 {
        let factor = &base + Rational::from_integer(j.into());
        if factor.is_zero() {
            return Err(Error::Pole { j: j as u32 });
        }
        acc *= factor;
    }
    Ok(acc)
}
