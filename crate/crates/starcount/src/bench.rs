//! Benchmark sweeps: run the estimator across generated instances and
//! report measured query counts against the theoretical budget
//! `B = W log2(n) log2(log2(n)) / (epsilon^2 S_p^{1/p})`.
//!
//! Rows are sorted by `(instance id, seed)` before writing, so parallelism
//! or build order never changes output bytes; wall times are only measured
//! when explicitly requested, keeping default output byte-identical across
//! runs with the same seed.

use std::time::Instant;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimator::{count_stars, EstimatorParams};
use crate::exact::{exact_star_count, exact_star_count_table};
use crate::instances::{GeneratedInstance, GeneratorSpec};
use crate::rng::rng_from_seed;

/// One instance of a sweep: what to generate and how to estimate on it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepInstance {
    pub id: String,
    pub generator: GeneratorSpec,
    pub p: u32,
    pub epsilon: f64,
}

/// A benchmark sweep specification; serializable so sweeps are reproducible.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepSpec {
    pub instances: Vec<SweepInstance>,
}

/// One measured estimation run.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub instance_id: String,
    pub n: usize,
    /// Total oracle weight `W` (`2m` for graphs, rows for tables).
    pub w: u64,
    pub p: u32,
    pub epsilon: f64,
    /// Exact `S_p`, as a decimal string (it can exceed both u64 and f64).
    pub exact_sp: String,
    pub estimate: f64,
    /// `|estimate - exact| / exact`; empty when the exact count is zero.
    pub rel_error: Option<f64>,
    pub total_queries: u64,
    /// `W log2(n) log2(log2(n)) / (epsilon^2 S_p^{1/p})`.
    pub budget: f64,
    pub queries_per_budget: f64,
    pub seed: u64,
    /// Only measured under `--timing`; empty otherwise so output bytes are
    /// reproducible.
    pub wall_time_s: Option<f64>,
}

/// The query budget the estimator is expected to track, up to constants.
pub fn theoretical_budget(w: u64, n: usize, epsilon: f64, exact_sp: f64, p: u32) -> f64 {
    let n = n.max(4) as f64;
    let loglog = n.log2().log2();
    w as f64 * n.log2() * loglog / (epsilon * epsilon * exact_sp.powf(1.0 / f64::from(p)))
}

/// Runs every instance of the sweep `trials` times (seeds
/// `base_seed .. base_seed + trials`) and returns the sorted rows.
pub fn run_sweep(
    spec: &SweepSpec,
    trials: u32,
    base_seed: u64,
    timing: bool,
) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(spec.instances.len() * trials as usize);
    for instance in &spec.instances {
        let built = instance.generator.build()?;
        let (n, w, exact_sp) = match &built {
            GeneratedInstance::Graph(g) => {
                if g.is_directed() {
                    return Err(Error::invalid(format!(
                        "instance {:?}: sweeps cover undirected star counting",
                        instance.id
                    )));
                }
                (
                    g.vertex_count(),
                    2 * g.edge_count() as u64,
                    exact_star_count(g, instance.p)?,
                )
            }
            GeneratedInstance::Table(t) => (
                t.label_count(),
                t.rows(),
                exact_star_count_table(t, instance.p),
            ),
        };
        let exact_f64 = exact_sp.to_f64().unwrap_or(f64::INFINITY);
        for trial in 0..trials {
            let seed = base_seed + u64::from(trial);
            let params = EstimatorParams::new(instance.p, instance.epsilon, seed)?;
            let mut rng = rng_from_seed(seed);
            let started = Instant::now();
            let report = match &built {
                GeneratedInstance::Graph(g) => {
                    let oracle = g.weighted_oracle()?;
                    count_stars(&oracle, n, &params, &mut rng)?
                }
                GeneratedInstance::Table(t) => {
                    let oracle = t.weighted_oracle()?;
                    count_stars(&oracle, n, &params, &mut rng)?
                }
            };
            let wall_time_s = timing.then(|| started.elapsed().as_secs_f64());
            let budget = theoretical_budget(w, n, params.epsilon(), exact_f64, instance.p);
            let total_queries = report.queries.total();
            rows.push(BenchRow {
                instance_id: instance.id.clone(),
                n,
                w,
                p: instance.p,
                epsilon: params.epsilon(),
                exact_sp: exact_sp.to_string(),
                estimate: report.estimate,
                rel_error: (exact_f64 > 0.0)
                    .then(|| (report.estimate - exact_f64).abs() / exact_f64),
                total_queries,
                budget,
                queries_per_budget: if budget.is_finite() && budget > 0.0 {
                    total_queries as f64 / budget
                } else {
                    0.0
                },
                seed,
                wall_time_s,
            });
        }
    }
    rows.sort_by(|a, b| (a.instance_id.as_str(), a.seed).cmp(&(b.instance_id.as_str(), b.seed)));
    Ok(rows)
}

/// Writes rows as CSV with a header line.
pub fn write_csv<W: std::io::Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| Error::invalid(format!("csv write failed: {e}")))?;
    }
    writer
        .flush()
        .map_err(|e| Error::invalid(format!("csv flush failed: {e}")))?;
    Ok(())
}
