//! Randomized invariants for the exact substrate and the distributions.

use dimorphic_core::dist::{bernoulli_sum_pgf, BernoulliSumSpec};
use dimorphic_core::poly::DensePoly;
use dimorphic_core::scalar::{
    degenerate_falling_factorial, format_fraction, int, parse_fraction, rat, Rational,
};
use dimorphic_core::series::{degenerate_exp_series, TruncatedSeries};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..60).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly() -> impl Strategy<Value = DensePoly> {
    proptest::collection::vec(arb_rational(), 0..6).prop_map(DensePoly::new)
}

proptest! {
    #[test]
    fn rational_ring_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn rational_canonical_form(a in arb_rational(), b in arb_rational()) {
        use num_integer::Integer;
        let product = &a * &b;
        prop_assert!(product.denom() > &num_bigint::BigInt::from(0));
        prop_assert!(product.numer().gcd(product.denom()).is_one() || product.numer().is_zero());
    }

    #[test]
    fn poly_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&(&a + &b) + &c), &(&a + &(&b + &c)));
        prop_assert_eq!(&(&a * &b), &(&b * &a));
        prop_assert_eq!(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
        prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
    }

    #[test]
    fn poly_eval_is_a_ring_map(a in arb_poly(), b in arb_poly(), x in arb_rational()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn falling_factorial_lambda_zero_is_power(x in arb_rational(), n in 0u32..8) {
        let power = num_traits::pow(x.clone(), n as usize);
        prop_assert_eq!(degenerate_falling_factorial(&x, n, &int(0)), power);
    }

    #[test]
    fn series_product_matches_truncated_poly_product(a in arb_poly(), b in arb_poly()) {
        let order = 5usize;
        let via_series = TruncatedSeries::from_poly(&a, order)
            .mul(&TruncatedSeries::from_poly(&b, order))
            .unwrap();
        let via_poly = TruncatedSeries::from_poly(&(&a * &b), order);
        prop_assert_eq!(via_series, via_poly);
    }

    #[test]
    fn fraction_strings_round_trip(a in arb_rational()) {
        prop_assert_eq!(parse_fraction(&format_fraction(&a)).unwrap(), a);
    }

    #[test]
    fn harmonic_pmf_is_normalized(n in 1u32..30) {
        let spec = BernoulliSumSpec::harmonic(n).unwrap();
        prop_assert_eq!(spec.pgf().eval(&int(1)), int(1));
        prop_assert_eq!(spec.pmf().total(), int(1));
        prop_assert!(spec.pmf().probability(0).is_zero());
    }

    #[test]
    fn degenerate_pmf_is_normalized_even_out_of_range(
        n in 1u32..14,
        a in arb_rational(),
        l in arb_rational(),
    ) {
        // Skip pole configurations; everything else must normalize.
        if let Ok(spec) = BernoulliSumSpec::degenerate(n, a, l) {
            prop_assert_eq!(spec.pmf().total(), int(1));
            prop_assert_eq!(spec.pgf().eval(&int(1)), int(1));
        }
    }

    #[test]
    fn closed_form_moments_match_pmf_moments(
        n in 1u32..14,
        a in arb_rational(),
        l in arb_rational(),
    ) {
        if let Ok(spec) = BernoulliSumSpec::degenerate(n, a, l) {
            let pmf = spec.pmf();
            prop_assert_eq!(spec.mean(), pmf.mean());
            prop_assert_eq!(spec.variance(), pmf.variance());
        }
    }

    #[test]
    fn paper_range_pmf_entries_strictly_positive(
        n in 1u32..14,
        a_num in 1i64..40, a_den in 1i64..40,
        l_num in 1i64..30,
    ) {
        let alpha = rat(a_num, a_den);
        let lambda = rat(l_num, l_num + 1 + (a_num % 7).abs());
        let spec = BernoulliSumSpec::degenerate(n, alpha, lambda).unwrap();
        prop_assert!(spec.in_paper_range());
        for p in spec.pmf().probabilities() {
            prop_assert!(p > &Rational::zero());
        }
    }

    #[test]
    fn general_engine_degree_matches_support(probs in proptest::collection::vec(0i64..=1, 1..8)) {
        // Degenerate 0/1 probabilities give a point mass at the number of ones.
        let ones = probs.iter().filter(|&&p| p == 1).count();
        let probs: Vec<Rational> = probs.iter().map(|&p| int(p)).collect();
        let pgf = bernoulli_sum_pgf(&probs);
        prop_assert_eq!(pgf.coeff(ones), int(1));
    }
}

#[test]
fn classical_exponential_coefficients() {
    use dimorphic_core::scalar::factorial;
    let series = degenerate_exp_series(&int(0), 12);
    for (m, coeff) in series.coeffs().iter().enumerate() {
        assert_eq!(coeff, &Rational::new(1.into(), factorial(m as u32)));
    }
}
