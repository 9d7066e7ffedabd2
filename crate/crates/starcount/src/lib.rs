//! Query-efficient estimation of star counts and join sizes.
//!
//! This crate estimates sums of the form `S_p = sum_i C(x_i, p)` when items
//! can only be sampled with probability proportional to their magnitude
//! `x_i`. Two concrete readings of the same problem are supported:
//!
//! * **Graphs.** With `x_i = deg(v_i)`, `S_p` is the number of p-stars. The
//!   oracle model offers degree queries and uniform random-edge queries, so
//!   a vertex can be drawn with probability `deg(v) / 2m`.
//! * **Tables.** With `x_i` the row count of label `i` in one column, `S_2`
//!   counts the unordered pairs of distinct rows sharing a label, the
//!   quantity behind self-join selectivity. Uniform row sampling is the
//!   magnitude-proportional sampler.
//!
//! The estimator draws weighted samples, averages the unbiased per-sample
//! value `Y = (W / x) * C(x, p)`, and wraps that subroutine in a
//! guess-halving driver with median amplification, so the number of queries
//! adapts to the (unknown) value of `S_p`. Directed graphs get a separate
//! estimator for the number of length-two paths under a bounded in/out
//! degree ratio, via square-root-weighted rejection sampling.
//!
//! Everything stochastic takes an explicit seeded RNG handle and meters its
//! oracle traffic in a [`QueryLedger`](oracle::QueryLedger), so runs are
//! reproducible and their query complexity is measurable. The `instances`
//! module generates reference fixtures (including adversarial families that
//! look alike to sampling algorithms while having very different star
//! counts), and the `exact` module provides brute-force ground truth.

pub mod bench;
pub mod directed;
pub mod error;
pub mod estimator;
pub mod exact;
pub mod instances;
pub mod oracle;
pub mod rng;

pub mod book;
mod numbers;

pub use error::{Error, Result};
pub use oracle::{DegreeSide, Graph, QueryLedger, TableColumn, WeightedOracle};
pub use rng::{derive_rng, rng_from_seed, StarRng};
