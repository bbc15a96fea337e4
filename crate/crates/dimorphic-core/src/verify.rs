//! Mechanical verification of the identities tying the two Bernoulli-sum
//! families to the Stirling triangles.
//!
//! Three identities are checked, each at a concrete parameter point:
//!
//! * `T2` — the dimorphic factorization: the scalar Π(1 + α/(λj)) times
//!   the generating polynomial of the family-Z sum equals the polynomial
//!   Π(1 + αz/(λj)) coefficient for coefficient.
//! * `T3` — Σ_m S₂λ(n+1,m+1)·S₁(m+1,l+1) = (−1)^{n−l} λ^{n−l} n!·E[C(Yₙ,l)].
//! * `T4` — the l-th Fourier coefficient of the family-Z characteristic
//!   function equals (−1)^{n−l} α^{l+1}/λ^{n+1} · Γ(α/λ)/Γ(n+α/λ+1) times
//!   the `T3` sum. Exactly, the Fourier coefficient of an integer-valued
//!   variable is the point mass P{Z=l}; numerically it is recovered by an
//!   equally-spaced quadrature rule.
//!
//! Exact checks pass only on structural equality of rationals or of whole
//! coefficient vectors; the quadrature path is the single place a
//! tolerance appears, and the node count is required to make the rule
//! exact up to roundoff (an M-point equally spaced rule integrates
//! trigonometric polynomials of degree < M exactly, and the integrand
//! here has degree ≤ n). Oracle-agreement and cross-check comparisons
//! (`GF-oracle`, `cross-S1`) reuse the same report shape so sweeps can
//! stream every parameter point instead of stopping at the first failure.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::dist::{bernoulli_sum_pgf, binomial_moments, gamma_ratio, BernoulliSumSpec, Pmf};
use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::scalar::{factorial, to_f64_nearest, Rational};
use crate::stirling::{
    stirling2_by_basis_conversion, stirling2_by_generating_series, stirling_product_sum_with,
    StirlingTable,
};

#[cfg(feature = "serde")]
use crate::scalar::format_fraction;

/// Absolute tolerance for the quadrature path: double-precision roundoff
/// over at most a few hundred accumulated terms, far below any plausible
/// identity violation.
pub const QUADRATURE_TOLERANCE: f64 = 1e-12;

/// Which identity a report refers to. The serialized tags (`T2`, `T3`,
/// `T4-exact`, `T4-quadrature`, `GF-oracle`, `cross-S1`) are the stable
/// wire names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Identity {
    /// Dimorphic generating-function factorization.
    #[cfg_attr(feature = "serde", serde(rename = "T2"))]
    DimorphicPgf,
    /// Stirling product sum against the harmonic binomial moment.
    #[cfg_attr(feature = "serde", serde(rename = "T3"))]
    StirlingMomentSum,
    /// Fourier coefficient as exact point mass.
    #[cfg_attr(feature = "serde", serde(rename = "T4-exact"))]
    FourierPointMassExact,
    /// Fourier coefficient by equally-spaced quadrature.
    #[cfg_attr(feature = "serde", serde(rename = "T4-quadrature"))]
    FourierPointMassQuadrature,
    /// Recurrence-built degenerate Stirling rows against an independent
    /// construction (basis conversion or generating series).
    #[cfg_attr(feature = "serde", serde(rename = "GF-oracle"))]
    GeneratingFunctionOracle,
    /// Harmonic binomial moments against unsigned first-kind numbers.
    #[cfg_attr(feature = "serde", serde(rename = "cross-S1"))]
    FirstKindCrossCheck,
}

impl Identity {
    pub fn tag(self) -> &'static str {
        match self {
            Self::DimorphicPgf => "T2",
            Self::StirlingMomentSum => "T3",
            Self::FourierPointMassExact => "T4-exact",
            Self::FourierPointMassQuadrature => "T4-quadrature",
            Self::GeneratingFunctionOracle => "GF-oracle",
            Self::FirstKindCrossCheck => "cross-S1",
        }
    }
}

/// The parameter point a report was produced at. Unused coordinates stay
/// `None` and are omitted from serialized output.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ParamPoint {
    pub n: u32,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub l: Option<u32>,
    #[cfg_attr(
        feature = "serde",
        serde(
            skip_serializing_if = "Option::is_none",
            serialize_with = "serialize_opt_fraction"
        )
    )]
    pub alpha: Option<Rational>,
    #[cfg_attr(
        feature = "serde",
        serde(
            skip_serializing_if = "Option::is_none",
            serialize_with = "serialize_opt_fraction"
        )
    )]
    pub lambda: Option<Rational>,
    #[cfg_attr(
        feature = "serde",
        serde(rename = "M", skip_serializing_if = "Option::is_none")
    )]
    pub nodes: Option<u32>,
}

impl ParamPoint {
    fn at_n(n: u32) -> Self {
        Self { n, l: None, alpha: None, lambda: None, nodes: None }
    }
}

/// One side of a comparison: an exact rational, a whole coefficient
/// vector, or a float from the quadrature path. Exact values serialize as
/// fraction strings.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(untagged))]
pub enum Value {
    Exact(#[cfg_attr(feature = "serde", serde(serialize_with = "serialize_fraction"))] Rational),
    Coeffs(#[cfg_attr(feature = "serde", serde(serialize_with = "serialize_fractions"))] Vec<Rational>),
    Float(f64),
}

#[cfg(feature = "serde")]
fn serialize_fraction<S: serde::Serializer>(value: &Rational, s: S) -> core::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_fraction(value))
}

#[cfg(feature = "serde")]
fn serialize_fractions<S: serde::Serializer>(values: &[Rational], s: S) -> core::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&format_fraction(v))?;
    }
    seq.end()
}

#[cfg(feature = "serde")]
fn serialize_opt_fraction<S: serde::Serializer>(
    value: &Option<Rational>,
    s: S,
) -> core::result::Result<S::Ok, S::Error> {
    // skip_serializing_if guarantees Some here.
    serialize_fraction(value.as_ref().unwrap(), s)
}

/// Outcome of checking one identity at one parameter point.
///
/// For exact identities `passed` means structural equality and the
/// residual is the exact zero `0/1`; on failure the residual is the float
/// magnitude of the discrepancy. For the quadrature identity the residual
/// is max(|re − exact|, |im|) and `passed` compares it against
/// [`QUADRATURE_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VerificationReport {
    pub identity: Identity,
    pub params: ParamPoint,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: Value,
    pub passed: bool,
    pub in_paper_range: bool,
}

fn exact_report(
    identity: Identity,
    params: ParamPoint,
    lhs: Rational,
    rhs: Rational,
    in_paper_range: bool,
) -> VerificationReport {
    let passed = lhs == rhs;
    let residual = if passed {
        Value::Exact(Rational::zero())
    } else {
        Value::Float(to_f64_nearest(&(&lhs - &rhs).abs()))
    };
    VerificationReport {
        identity,
        params,
        lhs: Value::Exact(lhs),
        rhs: Value::Exact(rhs),
        residual,
        passed,
        in_paper_range,
    }
}

fn coeff_report(
    identity: Identity,
    params: ParamPoint,
    lhs: Vec<Rational>,
    rhs: Vec<Rational>,
    in_paper_range: bool,
) -> VerificationReport {
    let passed = lhs == rhs;
    let residual = if passed {
        Value::Exact(Rational::zero())
    } else {
        let width = lhs.len().max(rhs.len());
        let zero = Rational::zero();
        let worst = (0..width)
            .map(|i| (lhs.get(i).unwrap_or(&zero) - rhs.get(i).unwrap_or(&zero)).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Value::Float(to_f64_nearest(&worst))
    };
    VerificationReport {
        identity,
        params,
        lhs: Value::Coeffs(lhs),
        rhs: Value::Coeffs(rhs),
        residual,
        passed,
        in_paper_range,
    }
}

fn lambda_in_range(lambda: &Rational) -> bool {
    lambda > &Rational::zero() && lambda < &Rational::one()
}

fn pair_in_range(alpha: &Rational, lambda: &Rational) -> bool {
    alpha > &Rational::zero() && lambda_in_range(lambda)
}

fn rational_pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

fn family_z_probabilities(n: u32, alpha: &Rational, lambda: &Rational) -> Result<Vec<Rational>> {
    (1..=n)
        .map(|j| {
            let denom = alpha + lambda * Rational::from_integer((j as i64).into());
            if denom.is_zero() {
                return Err(Error::Pole { j });
            }
            Ok(alpha / denom)
        })
        .collect()
}

/// Checks the dimorphic factorization at (n, α, λ): the scalar
/// Π_{j≤n}(1 + α/(λj)) times the family-Z generating polynomial must
/// equal Π_{j≤n}(1 + αz/(λj)), all coefficients compared exactly.
pub fn verify_dimorphic_pgf(n: u32, alpha: &Rational, lambda: &Rational) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::InvalidSpec("the dimorphic identity is stated for n ≥ 1"));
    }
    if lambda.is_zero() {
        return Err(Error::LambdaZero);
    }
    let z_probs = family_z_probabilities(n, alpha, lambda)?;

    let mut scalar = Rational::one();
    let mut rhs = DensePoly::one();
    for j in 1..=n as i64 {
        let slope = alpha / (lambda * Rational::from_integer(j.into()));
        scalar *= Rational::one() + &slope;
        rhs = &rhs * &DensePoly::linear(Rational::one(), slope);
    }
    let lhs = bernoulli_sum_pgf(&z_probs).scale(&scalar);

    let params = ParamPoint {
        alpha: Some(alpha.clone()),
        lambda: Some(lambda.clone()),
        ..ParamPoint::at_n(n)
    };
    let in_range = pair_in_range(alpha, lambda);
    Ok(coeff_report(
        Identity::DimorphicPgf,
        params,
        lhs.coeffs().to_vec(),
        rhs.coeffs().to_vec(),
        in_range,
    ))
}

fn stirling_moment_rhs(n: u32, l: u32, lambda: &Rational, moment: &Rational) -> Rational {
    let magnitude = rational_pow(lambda, n - l) * Rational::from_integer(factorial(n)) * moment;
    if (n - l) % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// Checks Σ_m S₂λ(n+1,m+1)·S₁(m+1,l+1) = (−1)^{n−l} λ^{n−l} n!·E[C(Yₙ,l)]
/// at a single point, exactly.
pub fn verify_stirling_moment_sum(n: u32, l: u32, lambda: &Rational) -> Result<VerificationReport> {
    if l > n {
        return Err(Error::IndexOutsideTriangle { n, k: l });
    }
    let mut reports = verify_stirling_moment_row(n, lambda)?;
    Ok(reports.swap_remove(l as usize))
}

/// All reports for 0 ≤ l ≤ n at fixed n, sharing one pair of tables.
pub fn verify_stirling_moment_row(n: u32, lambda: &Rational) -> Result<Vec<VerificationReport>> {
    let second = StirlingTable::second_degenerate(n + 1, lambda.clone());
    let first = StirlingTable::first_kind(n + 1);
    let moments = binomial_moments(n);
    let in_range = lambda_in_range(lambda);
    (0..=n)
        .map(|l| {
            let lhs = stirling_product_sum_with(&second, &first, n, l)?;
            let rhs = stirling_moment_rhs(n, l, lambda, &moments[l as usize]);
            let params = ParamPoint {
                l: Some(l),
                lambda: Some(lambda.clone()),
                ..ParamPoint::at_n(n)
            };
            Ok(exact_report(Identity::StirlingMomentSum, params, lhs, rhs, in_range))
        })
        .collect()
}

fn fourier_rhs(
    n: u32,
    l: u32,
    alpha: &Rational,
    lambda: &Rational,
    ratio: &Rational,
    sum: &Rational,
) -> Rational {
    let magnitude = rational_pow(alpha, l + 1) / rational_pow(lambda, n + 1) / ratio * sum;
    if (n - l) % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// Checks the exact form of the Fourier-coefficient identity: the point
/// mass P{Z = l} (which is what the l-th Fourier coefficient of an
/// integer-valued variable extracts) against the Gamma-ratio/Stirling
/// right side. n = 0 is allowed: the empty sum is the point mass at 0.
pub fn verify_fourier_exact(
    n: u32,
    l: u32,
    alpha: &Rational,
    lambda: &Rational,
) -> Result<VerificationReport> {
    if l > n {
        return Err(Error::IndexOutsideTriangle { n, k: l });
    }
    let mut reports = verify_fourier_exact_row(n, alpha, lambda)?;
    Ok(reports.swap_remove(l as usize))
}

/// All exact Fourier reports for 0 ≤ l ≤ n at fixed (n, α, λ), sharing
/// the distribution, tables, and Gamma ratio.
pub fn verify_fourier_exact_row(
    n: u32,
    alpha: &Rational,
    lambda: &Rational,
) -> Result<Vec<VerificationReport>> {
    // Validates λ ≠ 0 and α/λ + j ≠ 0 for j = 0..=n, which covers every
    // pole of the probabilities as well.
    let ratio = gamma_ratio(alpha, lambda, n)?;
    let pgf = bernoulli_sum_pgf(&family_z_probabilities(n, alpha, lambda)?);
    let second = StirlingTable::second_degenerate(n + 1, lambda.clone());
    let first = StirlingTable::first_kind(n + 1);
    let in_range = pair_in_range(alpha, lambda);
    (0..=n)
        .map(|l| {
            let lhs = pgf.coeff(l as usize);
            let sum = stirling_product_sum_with(&second, &first, n, l)?;
            let rhs = fourier_rhs(n, l, alpha, lambda, &ratio, &sum);
            let params = ParamPoint {
                l: Some(l),
                alpha: Some(alpha.clone()),
                lambda: Some(lambda.clone()),
                ..ParamPoint::at_n(n)
            };
            Ok(exact_report(Identity::FourierPointMassExact, params, lhs, rhs, in_range))
        })
        .collect()
}

/// E[e^{iθX}] for a distribution on 0..=n: Σ_k p_k·(cos kθ + i sin kθ).
pub fn characteristic_function(pmf: &Pmf, theta: f64) -> Complex64 {
    pmf.probabilities()
        .iter()
        .enumerate()
        .map(|(k, p)| to_f64_nearest(p) * cis(k as f64 * theta))
        .sum()
}

fn cis(theta: f64) -> Complex64 {
    Complex64::new(libm::cos(theta), libm::sin(theta))
}

/// Numerical counterpart of [`verify_fourier_exact`]: averages
/// φ(θ_t)·e^{−ilθ_t} over the equally spaced nodes θ_t = −π + 2πt/M and
/// compares against the exact point mass as a float.
///
/// The characteristic function of a variable on 0..=n is a trigonometric
/// polynomial of degree n, so the M-point rule is exact up to roundoff
/// whenever M ≥ n+1; smaller M would alias and is refused.
pub fn verify_fourier_quadrature(
    n: u32,
    l: u32,
    alpha: &Rational,
    lambda: &Rational,
    nodes: u32,
) -> Result<VerificationReport> {
    if l > n {
        return Err(Error::IndexOutsideTriangle { n, k: l });
    }
    let mut reports = verify_fourier_quadrature_row(n, alpha, lambda, nodes)?;
    Ok(reports.swap_remove(l as usize))
}

/// Quadrature reports for every 0 ≤ l ≤ n, sharing the sampled
/// characteristic function values across coefficients.
pub fn verify_fourier_quadrature_row(
    n: u32,
    alpha: &Rational,
    lambda: &Rational,
    nodes: u32,
) -> Result<Vec<VerificationReport>> {
    let spec = BernoulliSumSpec::degenerate(n, alpha.clone(), lambda.clone())?;
    if nodes < n + 1 {
        return Err(Error::Aliasing { nodes, needed: n + 1 });
    }
    let pmf = spec.pmf();
    let exact: Vec<f64> = pmf.probabilities().iter().map(to_f64_nearest).collect();

    let thetas: Vec<f64> = (0..nodes)
        .map(|t| -core::f64::consts::PI + 2.0 * core::f64::consts::PI * t as f64 / nodes as f64)
        .collect();
    let phi: Vec<Complex64> = thetas
        .iter()
        .map(|&theta| {
            exact
                .iter()
                .enumerate()
                .map(|(k, &p)| p * cis(k as f64 * theta))
                .sum()
        })
        .collect();

    let in_range = spec.in_paper_range();
    Ok((0..=n)
        .map(|l| {
            let mean: Complex64 = thetas
                .iter()
                .zip(&phi)
                .map(|(&theta, &value)| value * cis(-(l as f64) * theta))
                .sum::<Complex64>()
                / nodes as f64;
            let reference = exact[l as usize];
            let residual = (mean.re - reference).abs().max(mean.im.abs());
            let params = ParamPoint {
                l: Some(l),
                alpha: Some(alpha.clone()),
                lambda: Some(lambda.clone()),
                nodes: Some(nodes),
                ..ParamPoint::at_n(n)
            };
            VerificationReport {
                identity: Identity::FourierPointMassQuadrature,
                params,
                lhs: Value::Float(mean.re),
                rhs: Value::Float(reference),
                residual: Value::Float(residual),
                passed: residual <= QUADRATURE_TOLERANCE,
                in_paper_range: in_range,
            }
        })
        .collect())
}

/// Compares the recurrence-built degenerate second-kind row n against the
/// basis-conversion construction. `in_paper_range` is always true here:
/// the defining expansion holds for every real λ.
pub fn verify_stirling2_basis_oracle(n: u32, lambda: &Rational) -> VerificationReport {
    let table = StirlingTable::second_degenerate(n, lambda.clone());
    let recurrence = table.row(n).expect("row was built").to_vec();
    let oracle = stirling2_by_basis_conversion(n, lambda);
    let params = ParamPoint { lambda: Some(lambda.clone()), ..ParamPoint::at_n(n) };
    coeff_report(Identity::GeneratingFunctionOracle, params, recurrence, oracle, true)
}

/// Compares recurrence values S₂λ(n,k) for n = k..=max_n against the
/// generating-series construction at fixed k (reported as `l`).
pub fn verify_stirling2_series_oracle(
    k: u32,
    max_n: u32,
    lambda: &Rational,
) -> Result<VerificationReport> {
    let oracle = stirling2_by_generating_series(k, max_n, lambda)?;
    let table = StirlingTable::second_degenerate(max_n, lambda.clone());
    let recurrence: Vec<Rational> = (k..=max_n)
        .map(|n| table.value(n, k).map(Rational::clone))
        .collect::<Result<_>>()?;
    let params = ParamPoint {
        l: Some(k),
        lambda: Some(lambda.clone()),
        ..ParamPoint::at_n(max_n)
    };
    Ok(coeff_report(Identity::GeneratingFunctionOracle, params, recurrence, oracle, true))
}

/// Cross-checks E[C(Yₙ,l)] = |S₁(n+1,l+1)|/n! for every 0 ≤ l ≤ n,
/// sharing one first-kind table.
pub fn verify_first_kind_cross_row(n: u32) -> Result<Vec<VerificationReport>> {
    let first = StirlingTable::first_kind(n + 1);
    let moments = binomial_moments(n);
    let scale = Rational::new(1.into(), factorial(n));
    (0..=n)
        .map(|l| {
            let rhs = first.value(n + 1, l + 1)?.abs() * &scale;
            let params = ParamPoint { l: Some(l), ..ParamPoint::at_n(n) };
            Ok(exact_report(
                Identity::FirstKindCrossCheck,
                params,
                moments[l as usize].clone(),
                rhs,
                true,
            ))
        })
        .collect()
}

/// Single-point form of [`verify_first_kind_cross_row`].
pub fn verify_first_kind_cross(n: u32, l: u32) -> Result<VerificationReport> {
    if l > n {
        return Err(Error::IndexOutsideTriangle { n, k: l });
    }
    let mut reports = verify_first_kind_cross_row(n)?;
    Ok(reports.swap_remove(l as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn assert_exact_pass(report: &VerificationReport) {
        assert!(report.passed, "{report:?}");
        assert_eq!(report.residual, Value::Exact(Rational::zero()));
    }

    #[test]
    fn dimorphic_single_factor() {
        // Both sides are 1 + (α/λ)z.
        let report = verify_dimorphic_pgf(1, &rat(2, 3), &rat(5, 7)).unwrap();
        assert_exact_pass(&report);
        assert_eq!(report.lhs, Value::Coeffs(vec![int(1), rat(14, 15)]));
    }

    #[test]
    fn dimorphic_exact_sweep_point() {
        let report = verify_dimorphic_pgf(5, &int(1), &rat(1, 2)).unwrap();
        assert_exact_pass(&report);
        assert!(report.in_paper_range);
    }

    #[test]
    fn dimorphic_zero_alpha_degenerates() {
        let report = verify_dimorphic_pgf(3, &int(0), &rat(1, 2)).unwrap();
        assert_exact_pass(&report);
        assert!(!report.in_paper_range);
        assert_eq!(report.lhs, Value::Coeffs(vec![int(1)]));
    }

    #[test]
    fn dimorphic_rejects_poles_and_zero_lambda() {
        assert_eq!(verify_dimorphic_pgf(3, &int(-2), &int(1), ), Err(Error::Pole { j: 2 }));
        assert_eq!(verify_dimorphic_pgf(3, &int(1), &int(0)), Err(Error::LambdaZero));
        assert!(matches!(verify_dimorphic_pgf(0, &int(1), &rat(1, 2)), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn stirling_moment_sum_top_diagonal_and_hand_point() {
        for n in [0u32, 1, 4, 9] {
            let report = verify_stirling_moment_sum(n, n, &rat(5, 7)).unwrap();
            assert_exact_pass(&report);
            assert_eq!(report.lhs, Value::Exact(int(1)));
        }
        // n=2, l=1: both sides −3λ
        let report = verify_stirling_moment_sum(2, 1, &rat(9, 11)).unwrap();
        assert_exact_pass(&report);
        assert_eq!(report.lhs, Value::Exact(rat(-27, 11)));
    }

    #[test]
    fn stirling_moment_sum_deeper_point() {
        let report = verify_stirling_moment_sum(10, 4, &rat(3, 7)).unwrap();
        assert_exact_pass(&report);
    }

    #[test]
    fn stirling_moment_out_of_range_lambda_is_flagged() {
        let report = verify_stirling_moment_sum(4, 2, &int(2)).unwrap();
        assert_exact_pass(&report);
        assert!(!report.in_paper_range);
    }

    #[test]
    fn fourier_exact_single_factor() {
        let alpha = rat(3, 4);
        let lambda = rat(2, 5);
        let report = verify_fourier_exact(1, 1, &alpha, &lambda).unwrap();
        assert_exact_pass(&report);
        // P{Z=1} = α/(α+λ) = (3/4)/(23/20) = 15/23
        assert_eq!(report.lhs, Value::Exact(rat(15, 23)));
    }

    #[test]
    fn fourier_exact_all_success_corner() {
        let report = verify_fourier_exact(3, 3, &rat(2, 3), &rat(1, 4)).unwrap();
        assert_exact_pass(&report);
    }

    #[test]
    fn fourier_exact_sweep_point_and_empty_sum() {
        assert_exact_pass(&verify_fourier_exact(6, 2, &rat(2, 3), &rat(1, 4)).unwrap());
        let empty = verify_fourier_exact(0, 0, &rat(2, 3), &rat(1, 4)).unwrap();
        assert_exact_pass(&empty);
        assert_eq!(empty.lhs, Value::Exact(int(1)));
    }

    #[test]
    fn fourier_exact_rejects_gamma_poles() {
        // α/λ = −2 pole at j = 2
        assert_eq!(verify_fourier_exact(3, 1, &int(-2), &int(1)), Err(Error::Pole { j: 2 }));
        assert_eq!(verify_fourier_exact(3, 1, &int(0), &rat(1, 2)), Err(Error::Pole { j: 0 }));
    }

    #[test]
    fn quadrature_matches_exact_point_mass() {
        let report = verify_fourier_quadrature(1, 0, &int(1), &rat(1, 2), 4).unwrap();
        assert!(report.passed, "{report:?}");
        let Value::Float(lhs) = report.lhs else { panic!("expected float") };
        assert!((lhs - 1.0 / 3.0).abs() <= QUADRATURE_TOLERANCE);

        let report = verify_fourier_quadrature(8, 3, &int(1), &rat(1, 3), 16).unwrap();
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn quadrature_refuses_aliasing_node_counts() {
        assert_eq!(
            verify_fourier_quadrature(4, 2, &int(1), &rat(1, 2), 4),
            Err(Error::Aliasing { nodes: 4, needed: 5 })
        );
    }

    #[test]
    fn characteristic_function_examples() {
        let point_mass = Pmf::from_pgf(&DensePoly::new(vec![int(0), int(1)]), 1);
        let at_zero = characteristic_function(&point_mass, 0.0);
        assert!((at_zero.re - 1.0).abs() < 1e-15 && at_zero.im.abs() < 1e-15);
        let at_pi = characteristic_function(&point_mass, core::f64::consts::PI);
        assert!((at_pi.re + 1.0).abs() < 1e-15 && at_pi.im.abs() < 1e-12);

        let pmf = Pmf::from_pgf(&DensePoly::new(vec![rat(1, 3), rat(2, 3)]), 1);
        let value = characteristic_function(&pmf, core::f64::consts::FRAC_PI_2);
        assert!((value.re - 1.0 / 3.0).abs() < 1e-15);
        assert!((value.im - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn oracle_reports_pass() {
        let report = verify_stirling2_basis_oracle(7, &rat(2, 3));
        assert_exact_pass(&report);
        let report = verify_stirling2_series_oracle(3, 9, &rat(-1, 5)).unwrap();
        assert_exact_pass(&report);
    }

    #[test]
    fn first_kind_cross_check_passes() {
        for report in verify_first_kind_cross_row(8).unwrap() {
            assert_exact_pass(&report);
        }
        assert_exact_pass(&verify_first_kind_cross(5, 2).unwrap());
    }

    #[test]
    fn fourier_right_sides_sum_to_one() {
        let alpha = rat(5, 3);
        let lambda = rat(3, 10);
        let reports = verify_fourier_exact_row(5, &alpha, &lambda).unwrap();
        let total: Rational = reports
            .iter()
            .map(|r| match &r.rhs {
                Value::Exact(v) => v.clone(),
                _ => unreachable!(),
            })
            .sum();
        assert_eq!(total, int(1));
    }
}
