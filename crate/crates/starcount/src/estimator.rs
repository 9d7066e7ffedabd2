//! The unbiased star-count estimator and its guess-halving driver.
//!
//! One weighted sample with magnitude `X` yields the value
//! `Y = (W / X) * C(X, p)`, which satisfies `E[Y] = S_p` because the
//! `magnitude / W` sampling probability cancels against the `W / magnitude`
//! factor. [`unbiased_estimate`] averages `k` such values, where `k` is
//! chosen from a guess for `S_p`; the average obeys a two-regime contract
//! with probability at least 2/3:
//!
//! * if the guess is within `[S_p / 2, 6 S_p]`, the average lands within
//!   `(1 ± epsilon) S_p`;
//! * if the guess exceeds `6 S_p`, the average falls below half the guess,
//!   exposing the guess as too large.
//!
//! [`count_stars`] exploits that contract: it starts from the largest value
//! `S_p` could possibly take on its oracle (the complete-graph count
//! `n * C(n-1, p)` for degree oracles, `C(W, p)` in general), halves the
//! guess until the median of several independent averages certifies it, and
//! returns that median. The median step amplifies the per-call 2/3 success
//! probability enough to survive the logarithmic number of rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::binomial_u64;
use crate::oracle::{QueryLedger, TableColumn, WeightedOracle};
use crate::rng::{derive_rng, StarRng};

pub use crate::numbers::binomial;

/// Parameters shared by the estimation entry points.
///
/// `epsilon` is clamped to `1/2` (larger values do not help the analysis and
/// the clamp is reported); `p` must be at least 2.
#[derive(Debug, Clone)]
pub struct EstimatorParams {
    p: u32,
    epsilon: f64,
    seed: u64,
    k_override: Option<u64>,
    epsilon_clamped: bool,
}

impl EstimatorParams {
    pub fn new(p: u32, epsilon: f64, seed: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::invalid(format!("p must be at least 2, got {p}")));
        }
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(Error::invalid(format!(
                "epsilon must be a positive real, got {epsilon}"
            )));
        }
        let epsilon_clamped = epsilon > 0.5;
        Ok(EstimatorParams {
            p,
            epsilon: if epsilon_clamped { 0.5 } else { epsilon },
            seed,
            k_override: None,
            epsilon_clamped,
        })
    }

    /// Fixes the per-call sample count instead of deriving it from the
    /// guess; intended for tests.
    pub fn with_k_override(mut self, k: u64) -> Self {
        self.k_override = Some(k.max(1));
        self
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// The working accuracy parameter, after clamping.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn epsilon_clamped(&self) -> bool {
        self.epsilon_clamped
    }

    pub fn k_override(&self) -> Option<u64> {
        self.k_override
    }
}

/// Outcome of a full estimation run, including the query traffic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EstimateReport {
    pub estimate: f64,
    pub p: u32,
    pub epsilon: f64,
    pub seed: u64,
    /// Guess-halving rounds executed.
    pub iterations: u64,
    /// The last guess in play when the run returned.
    pub final_guess: f64,
    pub queries: QueryLedger,
    /// True when the requested epsilon exceeded 1/2 and was clamped.
    pub epsilon_clamped: bool,
}

#[inline]
fn value_f64(magnitude: u64, total_weight: f64, p: u32) -> f64 {
    let c = match binomial_u64(magnitude, p) {
        Some(c) => c as f64,
        None => binomial(magnitude, u64::from(p))
            .to_f64()
            .unwrap_or(f64::INFINITY),
    };
    c * total_weight / magnitude as f64
}

/// The per-sample estimator value `Y = (W / magnitude) * C(magnitude, p)`.
///
/// Under magnitude-proportional sampling this is an unbiased estimator of
/// `S_p`. The binomial coefficient is computed exactly before the final
/// floating-point scaling.
pub fn estimator_value(magnitude: u64, total_weight: u64, p: u32) -> Result<f64> {
    if magnitude == 0 {
        return Err(Error::invalid(
            "a zero-magnitude item cannot be sampled; estimator value undefined",
        ));
    }
    Ok(value_f64(magnitude, total_weight as f64, p))
}

/// [`estimator_value`] in exact rational arithmetic, for unbiasedness and
/// scale checks that must hold with zero error.
pub fn estimator_value_rational(magnitude: u64, total_weight: u64, p: u32) -> Result<BigRational> {
    if magnitude == 0 {
        return Err(Error::invalid(
            "a zero-magnitude item cannot be sampled; estimator value undefined",
        ));
    }
    let c = BigInt::from(binomial(magnitude, u64::from(p)));
    Ok(BigRational::new(
        BigInt::from(total_weight) * c,
        BigInt::from(magnitude),
    ))
}

/// Number of weighted samples for one estimator call given a guess for
/// `S_p`: `ceil(18 W / (p epsilon^2 guess^{1/p}))`, at least one.
///
/// With `W = 2m` this is the `36 m / (p epsilon^2 guess^{1/p})` schedule
/// that backs the two-regime contract.
pub fn sample_count_k(total_weight: u64, p: u32, epsilon: f64, guess: f64) -> Result<u64> {
    if !guess.is_finite() || guess < 1.0 {
        return Err(Error::invalid(format!(
            "guess must be a finite real at least 1, got {guess}"
        )));
    }
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::invalid(format!(
            "epsilon must be a positive real, got {epsilon}"
        )));
    }
    let k = 18.0 * total_weight as f64
        / (f64::from(p) * epsilon * epsilon * guess.powf(1.0 / f64::from(p)));
    Ok((k.ceil() as u64).max(1))
}

/// Number of repetitions whose median survives all halving rounds:
/// `ceil(40 (log2 p + log2 log2 n))`. Requires `n >= 4` so the inner
/// logarithm is positive.
pub fn amplification_count_l(n: usize, p: u32) -> Result<u64> {
    if n < 4 {
        return Err(Error::invalid(format!(
            "amplification count requires n >= 4, got {n}"
        )));
    }
    if p < 2 {
        return Err(Error::invalid(format!("p must be at least 2, got {p}")));
    }
    let l = 40.0 * (f64::from(p).log2() + (n as f64).log2().log2());
    Ok(l.ceil() as u64)
}

/// Averages `k` per-sample estimator values, `k` taken from the guess (or
/// from the test override).
///
/// The returned mean obeys the two-regime contract with probability at
/// least 2/3: accurate within `(1 ± epsilon) S_p` when the guess is within
/// `[S_p / 2, 6 S_p]`, and below half the guess when the guess exceeds
/// `6 S_p`.
pub fn unbiased_estimate<O: WeightedOracle + ?Sized>(
    oracle: &O,
    params: &EstimatorParams,
    guess: f64,
    rng: &mut StarRng,
    ledger: &mut QueryLedger,
) -> Result<f64> {
    let w = oracle.total_weight();
    if w == 0 {
        return Err(Error::invalid("oracle has zero total weight"));
    }
    let k = match params.k_override() {
        Some(k) => k,
        None => sample_count_k(w, params.p(), params.epsilon(), guess)?,
    };
    let w_f64 = w as f64;
    let p = params.p();
    let mut sum = 0.0f64;
    for _ in 0..k {
        let (_, magnitude) = oracle.sample(rng, ledger)?;
        debug_assert!(magnitude >= 1, "sampled items have positive magnitude");
        sum += value_f64(magnitude, w_f64, p);
    }
    Ok(sum / k as f64)
}

/// Runs [`unbiased_estimate`] `trials` times on independent derived RNG
/// streams and returns the median value.
///
/// An even `trials` is bumped to the next odd number so the median is a
/// single sample value. Trials run in parallel; each owns a private ledger,
/// merged into `ledger` afterwards, so results are order-independent.
pub fn median_estimate<O: WeightedOracle>(
    oracle: &O,
    params: &EstimatorParams,
    guess: f64,
    trials: u64,
    rng: &mut StarRng,
    ledger: &mut QueryLedger,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::invalid("trial count must be at least 1"));
    }
    let trials = if trials.is_multiple_of(2) {
        trials + 1
    } else {
        trials
    };
    let mut streams: Vec<StarRng> = (0..trials).map(|_| derive_rng(rng)).collect();
    let outcomes: Vec<Result<(f64, QueryLedger)>> = streams
        .par_iter_mut()
        .map(|stream| {
            let mut trial_ledger = QueryLedger::default();
            unbiased_estimate(oracle, params, guess, stream, &mut trial_ledger)
                .map(|value| (value, trial_ledger))
        })
        .collect();
    let mut values = Vec::with_capacity(outcomes.len());
    for outcome in outcomes {
        let (value, trial_ledger) = outcome?;
        ledger.merge(&trial_ledger);
        values.push(value);
    }
    values.sort_by(f64::total_cmp);
    Ok(values[values.len() / 2])
}

/// Estimates `S_p` over any weighted oracle with `n` items.
///
/// Starts the guess at the oracle's certified maximum for `S_p` — the
/// complete-graph value `n * C(n-1, p)` for degree oracles, `C(W, p)` in
/// general — and halves it until the median of the repeated averages
/// certifies the current guess (`Z >= (1 - epsilon) * guess`). With
/// probability at least 2/3 the returned estimate lies within
/// `(1 ± epsilon) S_p`. If the guess would drop below 1 — which happens
/// when `S_p = 0`, e.g. every magnitude is below `p` — the last median
/// (zero in that case) is returned instead of looping forever.
pub fn count_stars<O: WeightedOracle>(
    oracle: &O,
    n: usize,
    params: &EstimatorParams,
    rng: &mut StarRng,
) -> Result<EstimateReport> {
    if n == 0 {
        return Err(Error::invalid("item count must be at least 1"));
    }
    let p = params.p();
    let mut guess = oracle.max_star_count(p).to_f64().unwrap_or(f64::INFINITY);
    if !guess.is_finite() {
        guess = f64::MAX;
    }
    // The repetition schedule needs log2 log2 n > 0; tiny inputs reuse the
    // n = 4 count.
    let trials = amplification_count_l(n.max(4), p)?;
    let threshold = 1.0 - params.epsilon();

    let mut ledger = QueryLedger::default();
    let mut iterations = 0u64;
    let mut last_median = 0.0f64;
    let mut final_guess = guess;
    while guess >= 1.0 {
        iterations += 1;
        final_guess = guess;
        let median = median_estimate(oracle, params, guess, trials, rng, &mut ledger)?;
        last_median = median;
        if median >= threshold * guess {
            break;
        }
        guess /= 2.0;
    }
    Ok(EstimateReport {
        estimate: last_median,
        p,
        epsilon: params.epsilon(),
        seed: params.seed(),
        iterations,
        final_guess,
        queries: ledger,
        epsilon_clamped: params.epsilon_clamped(),
    })
}

/// Estimates the self-join size proxy `S_2` of a table column: the number
/// of unordered pairs of distinct rows sharing a label.
pub fn self_join_estimate(
    t: &TableColumn,
    params: &EstimatorParams,
    rng: &mut StarRng,
) -> Result<EstimateReport> {
    let pair_params = EstimatorParams {
        p: 2,
        ..params.clone()
    };
    let oracle = t.weighted_oracle()?;
    count_stars(&oracle, t.label_count(), &pair_params, rng)
}
