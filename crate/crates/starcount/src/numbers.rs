//! Exact binomial coefficients shared by the estimator and the oracles.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact binomial coefficient `C(x, p)` in arbitrary precision, with
/// `C(x, p) = 0` whenever `x < p`.
pub fn binomial(x: u64, p: u64) -> BigUint {
    if x < p {
        return BigUint::zero();
    }
    let mut r = BigUint::one();
    for i in 1..=p {
        r = r * (x - p + i) / i;
    }
    r
}

/// `C(x, p)` in `u64` when every partial product fits.
#[inline]
pub(crate) fn binomial_u64(x: u64, p: u32) -> Option<u64> {
    let p = u64::from(p);
    if x < p {
        return Some(0);
    }
    let mut r = 1u64;
    for i in 1..=p {
        // The running value is the exact binomial C(x-p+i, i), so the
        // division leaves no remainder.
        r = r.checked_mul(x - p + i)? / i;
    }
    Some(r)
}
