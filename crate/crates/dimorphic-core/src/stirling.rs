//! Stirling triangles: signed first kind and degenerate second kind.
//!
//! The signed numbers of the first kind S₁(n,k) expand the falling
//! factorial in powers: (x)ₙ = Σ S₁(n,l) xˡ. The degenerate second kind
//! S₂λ(n,k) expands the degenerate falling factorial in the ordinary
//! falling-factorial basis: (x)ₙ,λ = Σ S₂λ(n,l) (x)ₗ, and reduces to the
//! classical second kind at λ = 0.
//!
//! Tables are filled by the triangular recurrences
//!
//! ```text
//! S₁(n+1,k)  = S₁(n,k−1) − n·S₁(n,k)
//! S₂λ(n+1,k) = S₂λ(n,k−1) + (k − nλ)·S₂λ(n,k)
//! ```
//!
//! The recurrences are implementation choices, not definitions, so two
//! independent construction paths guard them: expanding the defining
//! products into the target basis ([`falling_factorial_expand`],
//! [`stirling2_by_basis_conversion`]) and extracting coefficients of the
//! shifted degenerate exponential power series
//! ([`stirling2_by_generating_series`]).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::scalar::{factorial, Rational};
use crate::series::degenerate_exp_series;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableKind {
    /// Signed Stirling numbers of the first kind.
    FirstSigned,
    /// Degenerate Stirling numbers of the second kind at a fixed λ.
    SecondDegenerate { lambda: Rational },
}

/// A cached triangle of values for 0 ≤ k ≤ n ≤ max_n.
///
/// Rows are built once at construction; queries never recompute. λ is a
/// parameter of the table, so a different λ means a different table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    kind: TableKind,
    rows: Vec<Vec<Rational>>,
}

impl StirlingTable {
    /// Triangle of signed S₁(n,k) up to `max_n`.
    pub fn first_kind(max_n: u32) -> Self {
        let rows = build_rows(max_n, |prev, n, k| {
            let carried = if k > 0 { prev[k - 1].clone() } else { Rational::zero() };
            let scaled = if k < prev.len() {
                Rational::from_integer((n as i64 - 1).into()) * &prev[k]
            } else {
                Rational::zero()
            };
            carried - scaled
        });
        Self { kind: TableKind::FirstSigned, rows }
    }

    /// Triangle of degenerate S₂λ(n,k) up to `max_n`.
    pub fn second_degenerate(max_n: u32, lambda: Rational) -> Self {
        let rows = build_rows(max_n, |prev, n, k| {
            let carried = if k > 0 { prev[k - 1].clone() } else { Rational::zero() };
            let scaled = if k < prev.len() {
                let weight = Rational::from_integer((k as i64).into())
                    - &lambda * Rational::from_integer((n as i64 - 1).into());
                weight * &prev[k]
            } else {
                Rational::zero()
            };
            carried + scaled
        });
        Self { kind: TableKind::SecondDegenerate { lambda }, rows }
    }

    pub fn kind(&self) -> &TableKind {
        &self.kind
    }

    pub fn max_n(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn value(&self, n: u32, k: u32) -> Result<&Rational> {
        if k > n {
            return Err(Error::IndexOutsideTriangle { n, k });
        }
        if n > self.max_n() {
            return Err(Error::RowNotBuilt { max_n: self.max_n(), n });
        }
        Ok(&self.rows[n as usize][k as usize])
    }

    /// Row n: the values value(n, 0..=n).
    pub fn row(&self, n: u32) -> Result<&[Rational]> {
        if n > self.max_n() {
            return Err(Error::RowNotBuilt { max_n: self.max_n(), n });
        }
        Ok(&self.rows[n as usize])
    }
}

fn build_rows(
    max_n: u32,
    step: impl Fn(&[Rational], u32, usize) -> Rational,
) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(max_n as usize + 1);
    rows.push(vec![Rational::one()]);
    for n in 1..=max_n {
        let prev = &rows[n as usize - 1];
        let row = (0..=n as usize).map(|k| step(prev, n, k)).collect();
        rows.push(row);
    }
    rows
}

/// Signed S₁(n,k). Builds a table up to n; hold a [`StirlingTable`] when
/// querying many points.
pub fn stirling1(n: u32, k: u32) -> Result<Rational> {
    if k > n {
        return Err(Error::IndexOutsideTriangle { n, k });
    }
    Ok(StirlingTable::first_kind(n).value(n, k)?.clone())
}

/// Degenerate S₂λ(n,k). Builds a table up to n; hold a [`StirlingTable`]
/// when querying many points.
pub fn degenerate_stirling2(n: u32, k: u32, lambda: &Rational) -> Result<Rational> {
    if k > n {
        return Err(Error::IndexOutsideTriangle { n, k });
    }
    Ok(StirlingTable::second_degenerate(n, lambda.clone()).value(n, k)?.clone())
}

/// The falling factorial x(x−1)⋯(x−n+1) expanded in powers of x by
/// repeated products of linear factors. Coefficient l is S₁(n,l) by
/// definition, which makes this the oracle for the first-kind recurrence.
pub fn falling_factorial_expand(n: u32) -> DensePoly {
    let mut acc = DensePoly::one();
    for i in 0..n as i64 {
        acc = &acc * &DensePoly::linear(Rational::from_integer((-i).into()), Rational::one());
    }
    acc
}

/// The degenerate falling factorial x(x−λ)⋯(x−(n−1)λ) expanded in powers
/// of x.
pub fn degenerate_falling_factorial_expand(n: u32, lambda: &Rational) -> DensePoly {
    let mut acc = DensePoly::one();
    for i in 0..n as i64 {
        let root = lambda * Rational::from_integer(i.into());
        acc = &acc * &DensePoly::linear(-root, Rational::one());
    }
    acc
}

/// Brute-force row of degenerate second-kind numbers: expands (x)ₙ,λ in
/// powers of x, then rewrites it in the falling-factorial basis by peeling
/// the top degree with monic [`falling_factorial_expand`] polynomials
/// (division-free). Entry k of the result is S₂λ(n,k).
pub fn stirling2_by_basis_conversion(n: u32, lambda: &Rational) -> Vec<Rational> {
    let mut remainder = degenerate_falling_factorial_expand(n, lambda);
    let mut out = vec![Rational::zero(); n as usize + 1];
    for d in (0..=n as usize).rev() {
        let c = remainder.coeff(d);
        if c.is_zero() {
            continue;
        }
        remainder = &remainder - &falling_factorial_expand(d as u32).scale(&c);
        out[d] = c;
    }
    debug_assert!(remainder.is_zero());
    out
}

/// Generating-series row of degenerate second-kind numbers: expands
/// (e_λ(t)−1)ᵏ/k! to the given truncation order and returns
/// n!·[tⁿ] for n = k..=order. Entry i of the result is S₂λ(k+i, k).
pub fn stirling2_by_generating_series(k: u32, order: u32, lambda: &Rational) -> Result<Vec<Rational>> {
    if k > order {
        return Err(Error::IndexOutsideTriangle { n: order, k });
    }
    let shifted = degenerate_exp_series(lambda, order as usize).sub_constant(&Rational::one());
    let series = shifted
        .pow(k)
        .scale(&Rational::new(1.into(), factorial(k)));
    Ok((k..=order)
        .map(|n| series.coeff(n as usize) * Rational::from_integer(factorial(n)))
        .collect())
}

/// Σ_{m=l}^{n} S₂λ(n+1, m+1) · S₁(m+1, l+1), the mixed sum of products
/// whose closed forms the verifier checks. Builds both tables to n+1.
pub fn stirling_product_sum(n: u32, l: u32, lambda: &Rational) -> Result<Rational> {
    let second = StirlingTable::second_degenerate(n + 1, lambda.clone());
    let first = StirlingTable::first_kind(n + 1);
    stirling_product_sum_with(&second, &first, n, l)
}

/// [`stirling_product_sum`] over prebuilt tables, for sweeps that reuse
/// them across many (n, l) points.
pub fn stirling_product_sum_with(
    second: &StirlingTable,
    first: &StirlingTable,
    n: u32,
    l: u32,
) -> Result<Rational> {
    if l > n {
        return Err(Error::IndexOutsideTriangle { n, k: l });
    }
    match (second.kind(), first.kind()) {
        (TableKind::SecondDegenerate { .. }, TableKind::FirstSigned) => {}
        _ => return Err(Error::InvalidSpec("tables passed in the wrong order or of the wrong kind")),
    }
    let mut acc = Rational::zero();
    for m in l..=n {
        acc += second.value(n + 1, m + 1)? * first.value(m + 1, l + 1)?;
    }
    Ok(acc)
}

/// Classical S₂(n,k) sanity hook: checks that the row of λ=0 degenerate
/// numbers inverts Σ_l S₂(n,l)·(x)_l = xⁿ as polynomials. Used by tests;
/// exposed because it is the defining property rather than a recurrence.
pub fn classical_inversion_holds(n: u32) -> bool {
    let row = match StirlingTable::second_degenerate(n, Rational::zero()).row(n) {
        Ok(r) => r.to_vec(),
        Err(_) => return false,
    };
    let mut acc = DensePoly::zero();
    for (l, c) in row.iter().enumerate() {
        acc = &acc + &falling_factorial_expand(l as u32).scale(c);
    }
    let mut monomial = vec![Rational::zero(); n as usize + 1];
    monomial[n as usize] = Rational::one();
    acc == DensePoly::new(monomial)
}
