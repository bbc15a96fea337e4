//! Seeded Monte Carlo sampling of the Bernoulli-sum families, with
//! empirical-vs-exact comparison.
//!
//! # Reproducibility scheme
//!
//! Results are a pure function of `(spec, samples, seed)`:
//!
//! * The 64-bit seed is expanded to a 32-byte ChaCha key by four
//!   SplitMix64 steps (little-endian words).
//! * Sample index i draws from ChaCha8 keyed as above with stream
//!   counter i and word position 0, so each sample owns a disjoint
//!   stream of the generator.
//! * One uniform per component: u = (next_u64 >> 11) · 2⁻⁵³ ∈ [0, 1);
//!   component j succeeds when u < p_j, with p_j the exact success
//!   probability rounded to the nearest double once at setup (relative
//!   rounding below 2⁻⁵², invisible next to statistical noise).
//!
//! Because a sample's outcome depends only on the key and its own index,
//! any partition of the index range can run in parallel and merged counts
//! are identical to a sequential run.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dist::BernoulliSumSpec;
use crate::error::{Error, Result};
use crate::scalar::to_f64_nearest;

/// A reproducible simulation request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimConfig {
    pub spec: BernoulliSumSpec,
    pub samples: u64,
    pub seed: u64,
}

/// Empirical counts plus comparison statistics against the exact law.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EmpiricalSummary {
    /// Outcome counts indexed 0..=n; they sum to the sample count.
    pub counts: Vec<u64>,
    pub empirical_mean: f64,
    /// Population variance of the sample (divides by the sample count).
    pub empirical_variance: f64,
    /// Half the L1 distance between empirical frequencies and the exact
    /// probability masses.
    pub tvd_vs_exact: f64,
    /// Pearson statistic over the outcomes of positive exact probability.
    pub chi_square_stat: f64,
}

/// Per-component success thresholds, converted from exact rationals once.
#[derive(Debug, Clone)]
pub struct Sampler {
    thresholds: Vec<f64>,
}

impl Sampler {
    /// Fails if any component probability lies outside [0, 1]; that can
    /// only happen for family-Z parameters outside the paper ranges, and
    /// no sampling semantics exist there.
    pub fn new(spec: &BernoulliSumSpec) -> Result<Self> {
        let probs = spec.success_probabilities();
        let mut thresholds = Vec::with_capacity(probs.len());
        for (index, p) in probs.iter().enumerate() {
            let p = to_f64_nearest(p);
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::UnsampleableProbability { component: index as u32 + 1 });
            }
            thresholds.push(p);
        }
        Ok(Self { thresholds })
    }

    /// Draws one uniform per component and counts successes.
    pub fn sample_once(&self, rng: &mut impl RngCore) -> u32 {
        self.thresholds
            .iter()
            .filter(|&&threshold| uniform_unit(rng) < threshold)
            .count() as u32
    }
}

fn uniform_unit(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn chacha_key(seed: u64) -> [u8; 32] {
    let mut state = seed;
    let mut key = [0u8; 32];
    for word in 0..4 {
        key[word * 8..(word + 1) * 8].copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    key
}

fn stream_rng(key: [u8; 32], sample_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(sample_index);
    rng
}

/// Outcome counts for the sample indices in `[first, last)`.
///
/// Disjoint ranges can be computed independently; summing their counts
/// with [`merge_counts`] reproduces a single sequential run exactly.
pub fn sample_counts(config: &SimConfig, first: u64, last: u64) -> Result<Vec<u64>> {
    let sampler = Sampler::new(&config.spec)?;
    let key = chacha_key(config.seed);
    let mut counts = vec![0u64; config.spec.n() as usize + 1];
    for index in first..last {
        let outcome = sampler.sample_once(&mut stream_rng(key, index));
        counts[outcome as usize] += 1;
    }
    Ok(counts)
}

/// Elementwise sum of two count vectors of equal length.
pub fn merge_counts(left: &[u64], right: &[u64]) -> Vec<u64> {
    debug_assert_eq!(left.len(), right.len());
    left.iter().zip(right).map(|(a, b)| a + b).collect()
}

/// Runs the configured simulation and compares against the exact law.
pub fn run(config: &SimConfig) -> Result<EmpiricalSummary> {
    if config.samples == 0 {
        return Err(Error::InvalidSpec("a simulation needs at least one sample"));
    }
    let counts = sample_counts(config, 0, config.samples)?;
    summarize(&config.spec, counts)
}

/// Builds the summary statistics for previously collected counts.
///
/// A nonzero count on an outcome of exact probability zero is reported as
/// an error: it cannot arise from a correct sampler.
pub fn summarize(spec: &BernoulliSumSpec, counts: Vec<u64>) -> Result<EmpiricalSummary> {
    use num_traits::Zero;

    let pmf = spec.pmf();
    if counts.len() != pmf.probabilities().len() {
        return Err(Error::InvalidSpec("count vector length does not match the support"));
    }
    let samples: u64 = counts.iter().sum();
    let total = samples as f64;

    let mut tvd = 0.0;
    let mut chi_square = 0.0;
    let mut mean = 0.0;
    let mut second_moment = 0.0;
    for (outcome, (&count, exact)) in counts.iter().zip(pmf.probabilities()).enumerate() {
        if exact.is_zero() && count > 0 {
            return Err(Error::ImpossibleOutcome { outcome, count });
        }
        let frequency = count as f64 / total;
        let probability = to_f64_nearest(exact);
        tvd += (frequency - probability).abs();
        if !exact.is_zero() {
            let expected = total * probability;
            let gap = count as f64 - expected;
            chi_square += gap * gap / expected;
        }
        mean += outcome as f64 * frequency;
        second_moment += (outcome * outcome) as f64 * frequency;
    }

    Ok(EmpiricalSummary {
        counts,
        empirical_mean: mean,
        empirical_variance: second_moment - mean * mean,
        tvd_vs_exact: tvd / 2.0,
        chi_square_stat: chi_square,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn harmonic_config(n: u32, samples: u64, seed: u64) -> SimConfig {
        SimConfig { spec: BernoulliSumSpec::harmonic(n).unwrap(), samples, seed }
    }

    #[test]
    fn single_certain_component_is_deterministic() {
        let summary = run(&harmonic_config(1, 100, 7)).unwrap();
        assert_eq!(summary.counts, vec![0, 100]);
        assert_eq!(summary.tvd_vs_exact, 0.0);
        assert_eq!(summary.chi_square_stat, 0.0);
        assert_eq!(summary.empirical_mean, 1.0);
    }

    #[test]
    fn reruns_are_identical() {
        let config = harmonic_config(6, 10_000, 0xD1CE);
        assert_eq!(run(&config).unwrap(), run(&config).unwrap());
    }

    #[test]
    fn different_seeds_differ() {
        let a = run(&harmonic_config(6, 10_000, 1)).unwrap();
        let b = run(&harmonic_config(6, 10_000, 2)).unwrap();
        assert_ne!(a.counts, b.counts);
    }

    #[test]
    fn split_runs_merge_to_the_sequential_counts() {
        let config = harmonic_config(5, 9_001, 42);
        let whole = sample_counts(&config, 0, config.samples).unwrap();
        let head = sample_counts(&config, 0, 4_000).unwrap();
        let tail = sample_counts(&config, 4_000, config.samples).unwrap();
        assert_eq!(merge_counts(&head, &tail), whole);
    }

    #[test]
    fn harmonic_never_lands_on_zero() {
        let summary = run(&harmonic_config(4, 50_000, 99)).unwrap();
        assert_eq!(summary.counts[0], 0);
    }

    #[test]
    fn empirical_frequencies_approach_the_exact_law() {
        let spec = BernoulliSumSpec::degenerate(1, int(1), rat(1, 2)).unwrap();
        let summary = run(&SimConfig { spec, samples: 50_000, seed: 11 }).unwrap();
        let freq_one = summary.counts[1] as f64 / 50_000.0;
        assert!((freq_one - 2.0 / 3.0).abs() < 0.02, "{freq_one}");
        assert!(summary.tvd_vs_exact < 0.02);
    }

    #[test]
    fn impossible_outcome_is_detected() {
        let spec = BernoulliSumSpec::harmonic(2).unwrap();
        let result = summarize(&spec, vec![5, 500, 495]);
        assert_eq!(result, Err(Error::ImpossibleOutcome { outcome: 0, count: 5 }));
    }

    #[test]
    fn out_of_range_probabilities_cannot_be_sampled() {
        // p_1 = α/(α+λ) = 4/3
        let spec = BernoulliSumSpec::degenerate(1, int(2), rat(-1, 2)).unwrap();
        assert_eq!(
            Sampler::new(&spec).unwrap_err(),
            Error::UnsampleableProbability { component: 1 }
        );
        let negative = BernoulliSumSpec::degenerate(1, rat(-1, 3), rat(1, 2)).unwrap();
        assert!(Sampler::new(&negative).is_err());
    }

    #[test]
    fn zero_samples_is_invalid() {
        assert!(run(&harmonic_config(3, 0, 5)).is_err());
    }
}
