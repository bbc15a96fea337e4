//! Truncated formal power series.
//!
//! A [`TruncatedSeries`] carries exactly the coefficients of t⁰..tᴺ for a
//! fixed truncation order N. Arithmetic never consults coefficients past
//! N, and mixing two different orders is an error rather than a silent
//! re-truncation. The degenerate exponential series and its powers are
//! built here.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Exactly `order + 1` entries; entry m is the coefficient of t^m.
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds from ascending coefficients, zero-padding or truncating to
    /// exactly `order + 1` entries.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_coeffs(order, vec![Rational::one()])
    }

    /// A polynomial truncated to the given order.
    pub fn from_poly(poly: &DensePoly, order: usize) -> Self {
        Self::from_coeffs(order, poly.coeffs().to_vec())
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of t^index; panics past the truncation order, which is
    /// never knowable from a truncated expansion.
    pub fn coeff(&self, index: usize) -> &Rational {
        &self.coeffs[index]
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.truncation_order() != rhs.truncation_order() {
            return Err(Error::OrderMismatch {
                left: self.truncation_order(),
                right: rhs.truncation_order(),
            });
        }
        Ok(self.mul_same_order(rhs))
    }

    fn mul_same_order(&self, rhs: &Self) -> Self {
        let order = self.truncation_order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// k-th power at the same truncation order (k = 0 gives the constant 1).
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.truncation_order());
        for _ in 0..k {
            acc = acc.mul_same_order(self);
        }
        acc
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn sub_constant(&self, c: &Rational) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] -= c;
        Self { coeffs }
    }
}

/// The degenerate exponential series at x = 1: coefficient of t^m is
/// `(1)_{m,λ} / m!`. At λ = 0 this is the classical exponential series.
pub fn degenerate_exp_series(lambda: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rational::one());
    // c_m = c_{m−1} · (1 − (m−1)λ) / m
    for m in 1..=order {
        let step = (Rational::one() - lambda * Rational::from_integer((m as i64 - 1).into()))
            / Rational::from_integer((m as i64).into());
        let next = &coeffs[m - 1] * step;
        coeffs.push(next);
    }
    TruncatedSeries { coeffs }
}
