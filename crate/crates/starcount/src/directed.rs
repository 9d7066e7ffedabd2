//! Estimation of directed length-two paths under a bounded degree ratio.
//!
//! For a directed graph let `l(v) = deg_in(v) * deg_out(v)`, the number of
//! length-two paths whose middle vertex is `v`, and `L = sum_v l(v)`. In
//! general no sublinear algorithm can approximate `L` (a single back edge
//! can move it from 0 to `n`), but when every vertex satisfies
//! `1/r <= deg_in(v)/deg_out(v) <= r` the problem reduces to the
//! square-weighted setting:
//!
//! 1. [`sqrt_weighted_sample`] draws the tail of a uniform random arc
//!    (probability proportional to `deg_out`) and keeps it with probability
//!    `sqrt(deg_in / (r * deg_out))`, which lands on the distribution
//!    `sqrt(l(v)) / L'` with `L' = sum_v sqrt(l(v))`, at an expected `O(r)`
//!    attempts per accepted sample.
//! 2. [`estimate_path2`] averages `Y = sqrt(l(v)) * L'` over
//!    `ceil(3 sqrt(n) / epsilon^2)` accepted samples. `E[Y] = L`, and the
//!    variance bound `Var[Y] <= sqrt(n) L^2` gives a `(1 ± epsilon)`
//!    approximation with probability at least 2/3.
//!
//! The same machinery estimates the join size `sum_i x_i * y_i` between two
//! table columns: [`join_size_exact_mapping`] views label `i` as a vertex
//! with `deg_in = x_i` and `deg_out = y_i`.
//!
//! One-sided directed stars (all arcs into, or all out of, the center) need
//! none of this: [`exactly_in_out_stars`] runs the undirected machinery over
//! a one-sided degree oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimator::{count_stars, EstimateReport, EstimatorParams};
use crate::oracle::{
    degree_query, random_edge_query, DegreeSide, DirectedDegreeOracle, Graph, QueryLedger,
    TableColumn,
};
use crate::rng::StarRng;
use rand::Rng;

/// An upper bound `r >= 1` on the in/out degree ratio (both ways) of every
/// non-isolated vertex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioBound(f64);

impl RatioBound {
    pub fn new(r: f64) -> Result<Self> {
        if !r.is_finite() || r < 1.0 {
            return Err(Error::invalid(format!(
                "ratio bound must be a finite real at least 1, got {r}"
            )));
        }
        Ok(RatioBound(r))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Parameters of the length-two-path estimator.
#[derive(Debug, Clone, Copy)]
pub struct Path2Params {
    pub r: RatioBound,
    pub epsilon: f64,
    pub seed: u64,
}

impl Path2Params {
    pub fn new(r: RatioBound, epsilon: f64, seed: u64) -> Result<Self> {
        if !epsilon.is_finite() || epsilon <= 0.0 || epsilon >= 1.0 {
            return Err(Error::invalid(format!(
                "epsilon must lie in (0, 1), got {epsilon}"
            )));
        }
        Ok(Path2Params { r, epsilon, seed })
    }
}

/// Where the supplied normalizer `L'` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LPrimeSource {
    /// Computed by a full scan (a harness convenience, not a sublinear step).
    Exact,
    /// Supplied by the caller, e.g. from an external approximation.
    Provided,
}

/// The normalizer `L' = sum_v sqrt(l(v))`, an explicit input of the
/// estimator, tagged with its provenance for the report.
#[derive(Debug, Clone, Copy)]
pub struct LPrime {
    pub value: f64,
    pub source: LPrimeSource,
}

impl LPrime {
    pub fn exact(value: f64) -> Self {
        LPrime {
            value,
            source: LPrimeSource::Exact,
        }
    }

    pub fn provided(value: f64) -> Self {
        LPrime {
            value,
            source: LPrimeSource::Provided,
        }
    }
}

/// Outcome of a length-two-path estimation run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Path2Report {
    pub estimate: f64,
    #[serde(rename = "L_prime")]
    pub l_prime: f64,
    pub l_prime_source: LPrimeSource,
    pub r: f64,
    pub epsilon: f64,
    /// Accepted samples (the required sample count).
    pub accepted: u64,
    /// Rejected attempts across all samples.
    pub rejected: u64,
    pub queries: QueryLedger,
    pub seed: u64,
}

/// Anything that can play the role of a directed degree sequence: directed
/// graphs, and join views over table pairs.
pub trait PathSource: Sync {
    /// Number of items (vertices or labels).
    fn items(&self) -> usize;

    /// Draws an item with probability proportional to its out-magnitude.
    fn sample_tail(&self, rng: &mut StarRng, ledger: &mut QueryLedger) -> Result<usize>;

    /// The `(in, out)` magnitudes of an item, metered as two queries.
    fn in_out_magnitudes(&self, item: usize, ledger: &mut QueryLedger) -> Result<(u64, u64)>;
}

impl PathSource for Graph {
    fn items(&self) -> usize {
        self.vertex_count()
    }

    fn sample_tail(&self, rng: &mut StarRng, ledger: &mut QueryLedger) -> Result<usize> {
        if !self.is_directed() {
            return Err(Error::invalid("length-two paths need a directed graph"));
        }
        let (tail, _) = random_edge_query(self, rng, ledger)?;
        Ok(tail)
    }

    fn in_out_magnitudes(&self, item: usize, ledger: &mut QueryLedger) -> Result<(u64, u64)> {
        let din = degree_query(self, item, DegreeSide::In, ledger)?;
        let dout = degree_query(self, item, DegreeSide::Out, ledger)?;
        Ok((din, dout))
    }
}

/// The degree view of a join between two table columns: label `i` gets
/// `deg_in = x_i` (rows in the first column) and `deg_out = y_i` (rows in
/// the second), so the length-two-path count is the join size
/// `sum_i x_i * y_i`.
#[derive(Debug, Clone)]
pub struct JoinDegreeView {
    labels: Vec<String>,
    x: Vec<u64>,
    y: Vec<u64>,
    /// Cumulative row offsets of the second column over the union label
    /// space, for uniform row sampling.
    y_cum: Vec<u64>,
}

/// Builds the join view over the union of the two label spaces; labels
/// absent from one column get magnitude zero there (and contribute nothing).
pub fn join_size_exact_mapping(t1: &TableColumn, t2: &TableColumn) -> JoinDegreeView {
    let mut labels: Vec<String> = t1.labels().to_vec();
    let mut x: Vec<u64> = t1.counts().to_vec();
    let mut y: Vec<u64> = vec![0; t1.label_count()];
    let index: std::collections::HashMap<&str, usize> = t1
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    for (j, label) in t2.labels().iter().enumerate() {
        match index.get(label.as_str()) {
            Some(&i) => y[i] = t2.count(j),
            None => {
                labels.push(label.clone());
                x.push(0);
                y.push(t2.count(j));
            }
        }
    }
    let mut y_cum = Vec::with_capacity(y.len() + 1);
    let mut total = 0u64;
    y_cum.push(0);
    for &count in &y {
        total += count;
        y_cum.push(total);
    }
    JoinDegreeView {
        labels,
        x,
        y,
        y_cum,
    }
}

impl JoinDegreeView {
    pub fn label(&self, item: usize) -> &str {
        &self.labels[item]
    }

    /// `(x_i, y_i)` pairs over the union label space.
    pub fn magnitudes(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.x.iter().copied().zip(self.y.iter().copied())
    }

    /// `L' = sum_i sqrt(x_i * y_i)`, computed by full scan.
    pub fn sqrt_weight_total(&self) -> f64 {
        self.magnitudes()
            .map(|(x, y)| ((x as f64) * (y as f64)).sqrt())
            .sum()
    }
}

impl PathSource for JoinDegreeView {
    fn items(&self) -> usize {
        self.labels.len()
    }

    fn sample_tail(&self, rng: &mut StarRng, ledger: &mut QueryLedger) -> Result<usize> {
        let rows = *self.y_cum.last().unwrap();
        if rows == 0 {
            return Err(Error::EmptyTable);
        }
        ledger.row_samples += 1;
        let row = rng.gen_range(0..rows);
        Ok(self.y_cum.partition_point(|&c| c <= row) - 1)
    }

    fn in_out_magnitudes(&self, item: usize, ledger: &mut QueryLedger) -> Result<(u64, u64)> {
        if item >= self.labels.len() {
            return Err(Error::invalid(format!("unknown label id {item}")));
        }
        ledger.magnitude_queries += 2;
        Ok((self.x[item], self.y[item]))
    }
}

/// One accepted square-root-weighted sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqrtSample {
    pub item: usize,
    /// `l(v) = deg_in(v) * deg_out(v)` for the accepted item.
    pub paths_through: u64,
    /// Attempts consumed, including the accepted one.
    pub attempts: u64,
}

/// Draws an item with probability `sqrt(l(v)) / L'` by rejection: sample a
/// tail (proportional to its out-magnitude), accept with probability
/// `sqrt(deg_in / (r * deg_out))`. Two magnitude queries per attempt.
///
/// Errors with [`Error::RatioViolation`] if a sampled tail has
/// `deg_in > r * deg_out`, since its acceptance probability would exceed
/// one. Requires some item with `l(v) > 0`, otherwise no sample can ever be
/// accepted; guard with `L' > 0`.
pub fn sqrt_weighted_sample<S: PathSource + ?Sized>(
    src: &S,
    r: RatioBound,
    rng: &mut StarRng,
    ledger: &mut QueryLedger,
) -> Result<SqrtSample> {
    let bound = r.get();
    let mut attempts = 0u64;
    loop {
        attempts += 1;
        let item = src.sample_tail(rng, ledger)?;
        let (din, dout) = src.in_out_magnitudes(item, ledger)?;
        debug_assert!(dout >= 1, "tails have positive out-magnitude");
        if din as f64 > bound * dout as f64 {
            return Err(Error::RatioViolation {
                vertex: item,
                deg_in: din,
                deg_out: dout,
                r: bound,
            });
        }
        let accept = (din as f64 / (bound * dout as f64)).sqrt();
        if rng.gen::<f64>() < accept {
            return Ok(SqrtSample {
                item,
                paths_through: din * dout,
                attempts,
            });
        }
    }
}

/// Estimates `L = sum_v l(v)` from `ceil(3 sqrt(n) / epsilon^2)` accepted
/// square-root-weighted samples, each contributing `Y = sqrt(l(v)) * L'`.
///
/// `L'` is an explicit input; a zero `L'` certifies that no length-two path
/// exists and short-circuits to zero without sampling.
pub fn estimate_path2<S: PathSource + ?Sized>(
    src: &S,
    params: &Path2Params,
    l_prime: LPrime,
    rng: &mut StarRng,
) -> Result<Path2Report> {
    if !l_prime.value.is_finite() || l_prime.value < 0.0 {
        return Err(Error::invalid(format!(
            "L' must be a finite nonnegative real, got {}",
            l_prime.value
        )));
    }
    let mut ledger = QueryLedger::default();
    if l_prime.value == 0.0 {
        return Ok(Path2Report {
            estimate: 0.0,
            l_prime: 0.0,
            l_prime_source: l_prime.source,
            r: params.r.get(),
            epsilon: params.epsilon,
            accepted: 0,
            rejected: 0,
            queries: ledger,
            seed: params.seed,
        });
    }
    let n = src.items();
    let k = ((3.0 * (n as f64).sqrt() / (params.epsilon * params.epsilon)).ceil() as u64).max(1);
    let mut sum = 0.0f64;
    let mut attempts = 0u64;
    for _ in 0..k {
        let sample = sqrt_weighted_sample(src, params.r, rng, &mut ledger)?;
        attempts += sample.attempts;
        sum += (sample.paths_through as f64).sqrt();
    }
    Ok(Path2Report {
        estimate: sum / k as f64 * l_prime.value,
        l_prime: l_prime.value,
        l_prime_source: l_prime.source,
        r: params.r.get(),
        epsilon: params.epsilon,
        accepted: k,
        rejected: attempts - k,
        queries: ledger,
        seed: params.seed,
    })
}

/// Median-amplified variant of [`estimate_path2`]: runs it `trials` times
/// on derived RNG streams and keeps the median estimate (ledgers summed,
/// attempt counts accumulated).
///
/// The single-shot estimator already carries a 2/3 guarantee, so this is
/// off by default everywhere; it exists for callers who want the failure
/// probability driven down exponentially.
pub fn median_path2_estimate<S: PathSource + ?Sized>(
    src: &S,
    params: &Path2Params,
    l_prime: LPrime,
    trials: u64,
    rng: &mut StarRng,
) -> Result<Path2Report> {
    if trials == 0 {
        return Err(Error::invalid("trial count must be at least 1"));
    }
    let trials = if trials.is_multiple_of(2) {
        trials + 1
    } else {
        trials
    };
    let mut reports = Vec::with_capacity(trials as usize);
    for _ in 0..trials {
        let mut stream = crate::rng::derive_rng(rng);
        reports.push(estimate_path2(src, params, l_prime, &mut stream)?);
    }
    reports.sort_by(|a, b| a.estimate.total_cmp(&b.estimate));
    let mut combined = reports[reports.len() / 2].clone();
    combined.accepted = 0;
    combined.rejected = 0;
    combined.queries = QueryLedger::default();
    for report in &reports {
        combined.accepted += report.accepted;
        combined.rejected += report.rejected;
        combined.queries.merge(&report.queries);
    }
    Ok(combined)
}

/// Estimates one-sided directed star counts `sum_v C(deg_in(v), p)` or
/// `sum_v C(deg_out(v), p)` by running the undirected machinery over a
/// one-sided degree oracle (heads of random arcs arrive proportional to
/// in-degree, tails to out-degree).
pub fn exactly_in_out_stars(
    g: &Graph,
    side: DegreeSide,
    params: &EstimatorParams,
    rng: &mut StarRng,
) -> Result<EstimateReport> {
    let oracle = DirectedDegreeOracle::new(g, side)?;
    count_stars(&oracle, g.vertex_count(), params, rng)
}

/// A vertex breaking the ratio assumption.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RatioViolationRecord {
    pub vertex: usize,
    pub deg_in: u64,
    pub deg_out: u64,
}

/// Full-scan validation of the ratio assumption: lists every non-isolated
/// vertex with `deg_in > r * deg_out` or `deg_out > r * deg_in` (vertices
/// with one side zero violate the assumption but contribute no paths; they
/// are reported, not fatal).
pub fn ratio_violations(g: &Graph, r: RatioBound) -> Result<Vec<RatioViolationRecord>> {
    if !g.is_directed() {
        return Err(Error::invalid("ratio validation needs a directed graph"));
    }
    let bound = r.get();
    let mut violations = Vec::new();
    for v in 0..g.vertex_count() {
        let din = g.in_degree(v) as u64;
        let dout = g.out_degree(v) as u64;
        if din + dout == 0 {
            continue;
        }
        if din as f64 > bound * dout as f64 || dout as f64 > bound * din as f64 {
            violations.push(RatioViolationRecord {
                vertex: v,
                deg_in: din,
                deg_out: dout,
            });
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{exact_join_cardinality, exact_path2_count, sqrt_weight_total};
    use crate::rng::rng_from_seed;
    use num_traits::ToPrimitive;

    fn directed_cycle(n: usize) -> Graph {
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::directed(n, &arcs).unwrap()
    }

    #[test]
    fn one_sided_stars_on_cycle_are_zero() {
        let g = directed_cycle(5);
        let params = EstimatorParams::new(2, 0.5, 1).unwrap();
        for side in [DegreeSide::In, DegreeSide::Out] {
            let mut rng = rng_from_seed(1);
            let report = exactly_in_out_stars(&g, side, &params, &mut rng).unwrap();
            assert_eq!(report.estimate, 0.0);
        }
    }

    #[test]
    fn one_sided_stars_on_complete_bipartite() {
        // 3 sources each pointing at 3 targets: both sides count 9 two-stars.
        let mut arcs = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                arcs.push((u, v));
            }
        }
        let g = Graph::directed(6, &arcs).unwrap();
        let params = EstimatorParams::new(2, 0.2, 4).unwrap();
        for side in [DegreeSide::Out, DegreeSide::In] {
            let mut rng = rng_from_seed(4);
            let report = exactly_in_out_stars(&g, side, &params, &mut rng).unwrap();
            // Constant magnitudes make the estimate exact.
            assert_eq!(report.estimate, 9.0);
        }
        assert!(
            exactly_in_out_stars(&g, DegreeSide::Undirected, &params, &mut rng_from_seed(0))
                .is_err()
        );
    }

    #[test]
    fn balanced_graphs_accept_every_attempt_at_ratio_one() {
        let g = directed_cycle(6);
        let r = RatioBound::new(1.0).unwrap();
        let mut rng = rng_from_seed(2);
        let mut ledger = QueryLedger::default();
        for _ in 0..200 {
            let s = sqrt_weighted_sample(&g, r, &mut rng, &mut ledger).unwrap();
            assert_eq!(s.attempts, 1);
            assert_eq!(s.paths_through, 1);
        }
        // One edge query and two degree queries per attempt.
        assert_eq!(ledger.random_edge_queries, 200);
        assert_eq!(ledger.degree_queries, 400);
    }

    #[test]
    fn acceptance_probability_reaches_one_at_the_bound() {
        // Vertex 0: in-degree 4, out-degree 1. With r = 4 its acceptance is
        // exactly 1, so every accepted sample is vertex 0.
        let g = Graph::directed(6, &[(0, 1), (2, 0), (3, 0), (4, 0), (5, 0)]).unwrap();
        let r = RatioBound::new(4.0).unwrap();
        let mut rng = rng_from_seed(8);
        let mut ledger = QueryLedger::default();
        for _ in 0..50 {
            let s = sqrt_weighted_sample(&g, r, &mut rng, &mut ledger).unwrap();
            assert_eq!(s.item, 0);
            assert_eq!(s.paths_through, 4);
        }
    }

    #[test]
    fn ratio_violation_is_reported_with_the_vertex() {
        let g = Graph::directed(6, &[(0, 1), (2, 0), (3, 0), (4, 0), (5, 0)]).unwrap();
        let r = RatioBound::new(1.0).unwrap();
        let mut rng = rng_from_seed(3);
        let mut ledger = QueryLedger::default();
        // Vertices 2..5 are rejected forever (their in-degree is zero), so
        // the sampler keeps drawing until it hits vertex 0 and errors.
        let err = sqrt_weighted_sample(&g, r, &mut rng, &mut ledger)
            .expect_err("vertex 0 must violate the bound");
        match err {
            Error::RatioViolation {
                vertex,
                deg_in,
                deg_out,
                ..
            } => {
                assert_eq!((vertex, deg_in, deg_out), (0, 4, 1));
            }
            other => panic!("expected ratio violation, got {other:?}"),
        }
    }

    #[test]
    fn cycle_path_estimate_is_exact() {
        // l(v) = 1 everywhere: L' = n and every Y = n, so the average is n.
        let g = directed_cycle(12);
        let l_prime = LPrime::exact(sqrt_weight_total(&g).unwrap());
        assert_eq!(l_prime.value, 12.0);
        let params = Path2Params::new(RatioBound::new(1.0).unwrap(), 0.2, 6).unwrap();
        let mut rng = rng_from_seed(6);
        let report = estimate_path2(&g, &params, l_prime, &mut rng).unwrap();
        assert_eq!(report.estimate, 12.0);
        assert_eq!(report.rejected, 0);
        assert_eq!(
            exact_path2_count(&g).unwrap().to_f64().unwrap(),
            report.estimate
        );
    }

    #[test]
    fn single_arc_short_circuits_to_zero() {
        let g = Graph::directed(2, &[(0, 1)]).unwrap();
        let l_prime = LPrime::exact(sqrt_weight_total(&g).unwrap());
        assert_eq!(l_prime.value, 0.0);
        let params = Path2Params::new(RatioBound::new(2.0).unwrap(), 0.2, 1).unwrap();
        let mut rng = rng_from_seed(1);
        let report = estimate_path2(&g, &params, l_prime, &mut rng).unwrap();
        assert_eq!(report.estimate, 0.0);
        assert_eq!(report.accepted, 0);
        assert_eq!(report.queries.total(), 0);
    }

    #[test]
    fn join_view_is_unbiased_and_estimates_the_join_size() {
        let t1 = TableColumn::new(vec!["a".into(), "b".into()], vec![2, 3]).unwrap();
        let t2 = TableColumn::new(vec!["a".into(), "b".into()], vec![1, 4]).unwrap();
        let view = join_size_exact_mapping(&t1, &t2);
        let l_prime = view.sqrt_weight_total();

        // Unbiasedness identity: sum over items of sqrt(l)/L' * sqrt(l) * L'
        // telescopes to the exact join size.
        let expectation: f64 = view
            .magnitudes()
            .map(|(x, y)| {
                let l = (x as f64) * (y as f64);
                (l.sqrt() / l_prime) * l.sqrt() * l_prime
            })
            .sum();
        let exact = exact_join_cardinality(&t1, &t2).to_f64().unwrap();
        assert!((expectation - exact).abs() < 1e-9);
        assert_eq!(exact, 14.0);

        // x/y ratios here are within 2.
        let params = Path2Params::new(RatioBound::new(2.0).unwrap(), 0.05, 5).unwrap();
        let mut rng = rng_from_seed(5);
        let report = estimate_path2(&view, &params, LPrime::exact(l_prime), &mut rng).unwrap();
        assert!(
            (report.estimate - exact).abs() < 1.0,
            "estimate {} too far from {exact}",
            report.estimate
        );
        assert!(report.queries.row_samples > 0);
        assert!(report.queries.magnitude_queries >= 2 * report.accepted);
    }

    #[test]
    fn disjoint_label_spaces_join_to_zero() {
        let t1 = TableColumn::new(vec!["a".into()], vec![5]).unwrap();
        let t2 = TableColumn::new(vec!["z".into()], vec![7]).unwrap();
        let view = join_size_exact_mapping(&t1, &t2);
        assert_eq!(view.sqrt_weight_total(), 0.0);
        let params = Path2Params::new(RatioBound::new(1.0).unwrap(), 0.2, 2).unwrap();
        let mut rng = rng_from_seed(2);
        let report = estimate_path2(
            &view,
            &params,
            LPrime::exact(view.sqrt_weight_total()),
            &mut rng,
        )
        .unwrap();
        assert_eq!(report.estimate, 0.0);
    }

    #[test]
    fn self_join_view_reduces_to_squares() {
        let t = TableColumn::from_counts(&[3, 1]).unwrap();
        let view = join_size_exact_mapping(&t, &t);
        let exact = exact_join_cardinality(&t, &t).to_f64().unwrap();
        assert_eq!(exact, 10.0);
        let total: f64 = view.magnitudes().map(|(x, y)| (x * y) as f64).sum();
        assert_eq!(total, exact);
    }

    #[test]
    fn median_amplification_combines_trials() {
        let g = directed_cycle(10);
        let l_prime = LPrime::exact(sqrt_weight_total(&g).unwrap());
        let params = Path2Params::new(RatioBound::new(1.0).unwrap(), 0.3, 4).unwrap();
        let mut rng = rng_from_seed(4);
        let report = median_path2_estimate(&g, &params, l_prime, 4, &mut rng).unwrap();
        // Cycles estimate exactly; an even trial count rounds up to five.
        assert_eq!(report.estimate, 10.0);
        let per_trial = ((3.0 * (10.0f64).sqrt() / (0.3 * 0.3)).ceil()) as u64;
        assert_eq!(report.accepted, 5 * per_trial);
    }

    #[test]
    fn ratio_scan_reports_one_sided_vertices() {
        let g = Graph::directed(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        // Vertex 3 has out-degree 0 but in-degree 1; vertex 0 has out 2, in 1.
        let violations = ratio_violations(&g, RatioBound::new(1.5).unwrap()).unwrap();
        let vertices: Vec<usize> = violations.iter().map(|v| v.vertex).collect();
        assert!(vertices.contains(&3));
        assert!(vertices.contains(&0));
        let clean = ratio_violations(&directed_cycle(5), RatioBound::new(1.0).unwrap()).unwrap();
        assert!(clean.is_empty());
    }
}
