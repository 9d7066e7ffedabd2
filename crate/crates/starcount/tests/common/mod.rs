//! Helpers shared by the integration suites.

use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Pearson chi-square statistic of observed counts against expected
/// probabilities (which must sum to ~1 over the bins).
pub fn chi_square_statistic(observed: &[u64], expected_probability: &[f64], draws: u64) -> f64 {
    assert_eq!(observed.len(), expected_probability.len());
    let mut statistic = 0.0;
    for (&seen, &prob) in observed.iter().zip(expected_probability) {
        let expected = prob * draws as f64;
        assert!(
            expected >= 5.0,
            "bin expectation {expected} too small for a chi-square test"
        );
        let diff = seen as f64 - expected;
        statistic += diff * diff / expected;
    }
    statistic
}

/// Critical value of the chi-square distribution with `dof` degrees of
/// freedom at the given significance level (upper tail).
pub fn chi_square_critical(dof: usize, significance: f64) -> f64 {
    ChiSquared::new(dof as f64)
        .expect("valid dof")
        .inverse_cdf(1.0 - significance)
}
