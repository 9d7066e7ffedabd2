//! The query interfaces of the sampling model, implemented over graphs and
//! table columns, with every query metered for complexity accounting.
//!
//! The model exposes four graph queries (degree, i-th neighbor, uniform
//! random edge, and the weighted vertex sample built from the last two) and
//! their database analogs (uniform row sample plus a magnitude lookup).
//! An estimator never touches an input directly; it goes through a
//! [`WeightedOracle`], which reports the total weight `W`, draws items with
//! probability `magnitude / W`, and answers point magnitude queries.
//!
//! Query counts are the measured notion of complexity, so every operation
//! takes a [`QueryLedger`] and increments exactly the counters its contract
//! states. Inputs are immutable after construction and safe to share across
//! concurrent runs; each run owns its RNG and its ledger, and ledgers merge
//! by summation.

mod graph;
mod table;

pub use graph::Graph;
pub use table::TableColumn;

use num_bigint::BigUint;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::binomial;
use crate::rng::StarRng;

pub(crate) use graph::check_vertex;

/// Which degree a graph query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeSide {
    Undirected,
    In,
    Out,
}

/// Exact per-type counts of oracle queries made during a run.
///
/// Counters only ever increase; `total` is their sum.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryLedger {
    #[serde(rename = "degree")]
    pub degree_queries: u64,
    #[serde(rename = "neighbor")]
    pub neighbor_queries: u64,
    #[serde(rename = "random_edge")]
    pub random_edge_queries: u64,
    #[serde(rename = "magnitude")]
    pub magnitude_queries: u64,
    #[serde(rename = "row_samples")]
    pub row_samples: u64,
}

impl QueryLedger {
    pub fn total(&self) -> u64 {
        self.degree_queries
            + self.neighbor_queries
            + self.random_edge_queries
            + self.magnitude_queries
            + self.row_samples
    }

    /// Adds the counts of `other`, used to combine per-trial ledgers.
    pub fn merge(&mut self, other: &QueryLedger) {
        self.degree_queries += other.degree_queries;
        self.neighbor_queries += other.neighbor_queries;
        self.random_edge_queries += other.random_edge_queries;
        self.magnitude_queries += other.magnitude_queries;
        self.row_samples += other.row_samples;
    }
}

fn check_side(g: &Graph, side: DegreeSide) -> Result<()> {
    match (g.is_directed(), side) {
        (false, DegreeSide::Undirected) | (true, DegreeSide::In) | (true, DegreeSide::Out) => {
            Ok(())
        }
        (false, _) => Err(Error::invalid(
            "in/out degree side requested on an undirected graph",
        )),
        (true, DegreeSide::Undirected) => Err(Error::invalid(
            "undirected degree side requested on a directed graph",
        )),
    }
}

/// Returns `deg(v)` (or the in/out degree) and meters one degree query.
pub fn degree_query(
    g: &Graph,
    v: usize,
    side: DegreeSide,
    ledger: &mut QueryLedger,
) -> Result<u64> {
    check_vertex(v, g.vertex_count())?;
    check_side(g, side)?;
    ledger.degree_queries += 1;
    let d = match side {
        DegreeSide::Undirected | DegreeSide::Out => g.degree(v),
        DegreeSide::In => g.in_degree(v),
    };
    Ok(d as u64)
}

/// Returns the i-th stored neighbor of `v` (1-based), or `None` when
/// `i > deg(v)`; meters one neighbor query.
pub fn neighbor_query(
    g: &Graph,
    v: usize,
    i: usize,
    side: DegreeSide,
    ledger: &mut QueryLedger,
) -> Result<Option<usize>> {
    check_vertex(v, g.vertex_count())?;
    check_side(g, side)?;
    if i == 0 {
        return Err(Error::invalid("neighbor index is 1-based; got 0"));
    }
    ledger.neighbor_queries += 1;
    let list = match side {
        DegreeSide::Undirected | DegreeSide::Out => g.neighbors(v),
        DegreeSide::In => g.in_neighbors(v),
    };
    Ok(list.get(i - 1).copied())
}

/// Returns a uniformly random edge (with its orientation, for directed
/// graphs); meters one random-edge query.
pub fn random_edge_query(
    g: &Graph,
    rng: &mut StarRng,
    ledger: &mut QueryLedger,
) -> Result<(usize, usize)> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    ledger.random_edge_queries += 1;
    Ok(g.edges()[rng.gen_range(0..m)])
}

/// Draws a vertex with probability `deg(v) / 2m` by taking a uniform random
/// edge and a fair endpoint, then queries its degree. Meters one random-edge
/// query and one degree query; returns `(v, deg(v))`.
pub fn weighted_vertex_sample(
    g: &Graph,
    rng: &mut StarRng,
    ledger: &mut QueryLedger,
) -> Result<(usize, u64)> {
    if g.is_directed() {
        return Err(Error::invalid(
            "weighted vertex sampling by total degree is defined for undirected graphs",
        ));
    }
    let (u, v) = random_edge_query(g, rng, ledger)?;
    let chosen = if rng.gen::<bool>() { u } else { v };
    let d = degree_query(g, chosen, DegreeSide::Undirected, ledger)?;
    Ok((chosen, d))
}

/// Draws a uniform row, returning its label id and the label's row count; the
/// count lookup is metered as one magnitude query.
pub fn table_sample(
    t: &TableColumn,
    rng: &mut StarRng,
    ledger: &mut QueryLedger,
) -> Result<(usize, u64)> {
    let w = t.rows();
    if w == 0 {
        return Err(Error::EmptyTable);
    }
    ledger.row_samples += 1;
    let label = t.row_label(rng.gen_range(0..w));
    ledger.magnitude_queries += 1;
    Ok((label, t.count(label)))
}

/// Estimator-facing access contract over any magnitude vector.
///
/// Implementations must satisfy: the magnitudes sum to `total_weight`, and
/// `sample` returns each item with probability exactly `magnitude / W`.
pub trait WeightedOracle: Sync {
    /// The total weight `W`: twice the edge count for undirected graphs, the
    /// arc count for one-sided directed oracles, the row count for tables.
    fn total_weight(&self) -> u64;

    /// Draws one item with probability proportional to its magnitude and
    /// returns `(item, magnitude)`, metering the underlying queries.
    fn sample(&self, rng: &mut StarRng, ledger: &mut QueryLedger) -> Result<(usize, u64)>;

    /// The magnitude of one item, metered.
    fn magnitude(&self, item: usize, ledger: &mut QueryLedger) -> Result<u64>;

    /// A certified upper bound on `S_p` for this oracle, the starting guess
    /// of the halving driver. Magnitudes summing to `W` can contribute at
    /// most `C(W, p)` stars; backends whose magnitudes are individually
    /// capped (degrees are at most `n - 1`) tighten this to
    /// `n * C(n-1, p)`, the complete-graph maximum.
    fn max_star_count(&self, p: u32) -> BigUint {
        binomial(self.total_weight(), u64::from(p))
    }
}

/// `min(C(W, p), n * C(n-1, p))` for degree-style oracles over `n` items
/// with magnitudes at most `n - 1`.
fn degree_capped_max(total_weight: u64, n: usize, p: u32) -> BigUint {
    let cap = BigUint::from(n as u64) * binomial(n as u64 - 1, u64::from(p));
    binomial(total_weight, u64::from(p)).min(cap)
}

/// [`WeightedOracle`] over an undirected graph: items are vertices,
/// magnitudes are degrees, `W = 2m`.
#[derive(Debug, Clone, Copy)]
pub struct GraphDegreeOracle<'a> {
    g: &'a Graph,
}

impl Graph {
    /// Views an undirected graph as a weighted oracle with `W = 2m`.
    pub fn weighted_oracle(&self) -> Result<GraphDegreeOracle<'_>> {
        if self.is_directed() {
            return Err(Error::invalid(
                "use a one-sided degree oracle for directed graphs",
            ));
        }
        if self.edge_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(GraphDegreeOracle { g: self })
    }
}

impl WeightedOracle for GraphDegreeOracle<'_> {
    fn total_weight(&self) -> u64 {
        2 * self.g.edge_count() as u64
    }

    fn sample(&self, rng: &mut StarRng, ledger: &mut QueryLedger) -> Result<(usize, u64)> {
        weighted_vertex_sample(self.g, rng, ledger)
    }

    fn magnitude(&self, item: usize, ledger: &mut QueryLedger) -> Result<u64> {
        degree_query(self.g, item, DegreeSide::Undirected, ledger)
    }

    fn max_star_count(&self, p: u32) -> BigUint {
        degree_capped_max(self.total_weight(), self.g.vertex_count(), p)
    }
}

/// [`WeightedOracle`] over a table column: items are labels, magnitudes are
/// row counts, `W` is the total row count.
#[derive(Debug, Clone, Copy)]
pub struct TableOracle<'a> {
    t: &'a TableColumn,
}

impl TableColumn {
    /// Views the column as a weighted oracle with `W` = row count.
    pub fn weighted_oracle(&self) -> Result<TableOracle<'_>> {
        if self.rows() == 0 {
            return Err(Error::EmptyTable);
        }
        Ok(TableOracle { t: self })
    }
}

impl WeightedOracle for TableOracle<'_> {
    fn total_weight(&self) -> u64 {
        self.t.rows()
    }

    fn sample(&self, rng: &mut StarRng, ledger: &mut QueryLedger) -> Result<(usize, u64)> {
        table_sample(self.t, rng, ledger)
    }

    fn magnitude(&self, item: usize, ledger: &mut QueryLedger) -> Result<u64> {
        if item >= self.t.label_count() {
            return Err(Error::invalid(format!("unknown label id {item}")));
        }
        ledger.magnitude_queries += 1;
        Ok(self.t.count(item))
    }
}

/// [`WeightedOracle`] over one side of a directed graph: magnitudes are
/// in-degrees (items drawn as heads of random arcs) or out-degrees (drawn as
/// tails), `W = m`.
#[derive(Debug, Clone, Copy)]
pub struct DirectedDegreeOracle<'a> {
    g: &'a Graph,
    side: DegreeSide,
}

impl<'a> DirectedDegreeOracle<'a> {
    pub fn new(g: &'a Graph, side: DegreeSide) -> Result<Self> {
        if !g.is_directed() {
            return Err(Error::invalid(
                "one-sided degree oracle requires a directed graph",
            ));
        }
        if side == DegreeSide::Undirected {
            return Err(Error::invalid("side must be `in` or `out`"));
        }
        if g.edge_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(DirectedDegreeOracle { g, side })
    }
}

impl WeightedOracle for DirectedDegreeOracle<'_> {
    fn total_weight(&self) -> u64 {
        self.g.edge_count() as u64
    }

    fn sample(&self, rng: &mut StarRng, ledger: &mut QueryLedger) -> Result<(usize, u64)> {
        let (tail, head) = random_edge_query(self.g, rng, ledger)?;
        let v = match self.side {
            DegreeSide::In => head,
            DegreeSide::Out => tail,
            DegreeSide::Undirected => unreachable!("rejected at construction"),
        };
        let d = degree_query(self.g, v, self.side, ledger)?;
        Ok((v, d))
    }

    fn magnitude(&self, item: usize, ledger: &mut QueryLedger) -> Result<u64> {
        degree_query(self.g, item, self.side, ledger)
    }

    fn max_star_count(&self, p: u32) -> BigUint {
        degree_capped_max(self.total_weight(), self.g.vertex_count(), p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    fn path3() -> Graph {
        Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::undirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn degree_query_examples() {
        let mut ledger = QueryLedger::default();
        let g = path3();
        assert_eq!(
            degree_query(&g, 1, DegreeSide::Undirected, &mut ledger).unwrap(),
            2
        );
        let lonely = Graph::undirected(2, &[]).unwrap();
        assert_eq!(
            degree_query(&lonely, 0, DegreeSide::Undirected, &mut ledger).unwrap(),
            0
        );
        for v in 0..4 {
            assert_eq!(
                degree_query(&k4(), v, DegreeSide::Undirected, &mut ledger).unwrap(),
                3
            );
        }
        assert_eq!(ledger.degree_queries, 6);
        assert_eq!(ledger.total(), 6);
    }

    #[test]
    fn degree_query_rejects_unknown_vertex_and_wrong_side() {
        let mut ledger = QueryLedger::default();
        let g = path3();
        assert!(matches!(
            degree_query(&g, 9, DegreeSide::Undirected, &mut ledger),
            Err(Error::UnknownVertex { id: 9, n: 3 })
        ));
        assert!(degree_query(&g, 0, DegreeSide::In, &mut ledger).is_err());
        assert_eq!(ledger.total(), 0);
    }

    #[test]
    fn neighbor_query_examples() {
        let mut ledger = QueryLedger::default();
        let g = path3();
        assert_eq!(
            neighbor_query(&g, 1, 1, DegreeSide::Undirected, &mut ledger).unwrap(),
            Some(0)
        );
        assert_eq!(
            neighbor_query(&g, 0, 5, DegreeSide::Undirected, &mut ledger).unwrap(),
            None
        );
        let d = Graph::directed(2, &[(0, 1)]).unwrap();
        assert_eq!(
            neighbor_query(&d, 0, 1, DegreeSide::Out, &mut ledger).unwrap(),
            Some(1)
        );
        assert_eq!(
            neighbor_query(&d, 0, 1, DegreeSide::In, &mut ledger).unwrap(),
            None
        );
        assert_eq!(ledger.neighbor_queries, 4);
    }

    #[test]
    fn random_edge_is_uniform_on_path() {
        let g = path3();
        let mut rng = rng_from_seed(7);
        let mut ledger = QueryLedger::default();
        let mut first = 0u32;
        let trials = 20_000;
        for _ in 0..trials {
            let e = random_edge_query(&g, &mut rng, &mut ledger).unwrap();
            if e == (0, 1) {
                first += 1;
            }
        }
        assert_eq!(ledger.random_edge_queries, trials as u64);
        let frac = f64::from(first) / f64::from(trials);
        assert!((frac - 0.5).abs() < 0.02, "frac = {frac}");
    }

    #[test]
    fn random_edge_on_empty_graph_fails() {
        let g = Graph::undirected(2, &[]).unwrap();
        let mut rng = rng_from_seed(1);
        let mut ledger = QueryLedger::default();
        assert!(matches!(
            random_edge_query(&g, &mut rng, &mut ledger),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn weighted_sample_matches_degree_distribution_on_path() {
        // P3: P(v=1) = 1/2, P(v=0) = P(v=2) = 1/4 (enumerate edges x endpoints).
        let g = path3();
        let mut rng = rng_from_seed(11);
        let mut ledger = QueryLedger::default();
        let mut hits = [0u32; 3];
        let trials = 40_000;
        for _ in 0..trials {
            let (v, d) = weighted_vertex_sample(&g, &mut rng, &mut ledger).unwrap();
            assert_eq!(d as usize, g.degree(v));
            hits[v] += 1;
        }
        let f = |c: u32| f64::from(c) / f64::from(trials);
        assert!((f(hits[1]) - 0.5).abs() < 0.02);
        assert!((f(hits[0]) - 0.25).abs() < 0.02);
        assert!((f(hits[2]) - 0.25).abs() < 0.02);
        // One random-edge query and one degree query per sample.
        assert_eq!(ledger.random_edge_queries, trials as u64);
        assert_eq!(ledger.degree_queries, trials as u64);
    }

    #[test]
    fn table_sample_examples() {
        let t = TableColumn::from_counts(&[3, 1]).unwrap();
        let mut rng = rng_from_seed(3);
        let mut ledger = QueryLedger::default();
        let mut zero = 0u32;
        let trials = 40_000;
        for _ in 0..trials {
            let (label, c) = table_sample(&t, &mut rng, &mut ledger).unwrap();
            assert_eq!(c, t.count(label));
            if label == 0 {
                zero += 1;
            }
        }
        assert!((f64::from(zero) / f64::from(trials) - 0.75).abs() < 0.02);
        assert_eq!(ledger.row_samples, trials as u64);
        assert_eq!(ledger.magnitude_queries, trials as u64);

        let single = TableColumn::from_counts(&[7]).unwrap();
        let (label, c) = table_sample(&single, &mut rng, &mut ledger).unwrap();
        assert_eq!((label, c), (0, 7));
    }

    #[test]
    fn oracle_total_weights() {
        assert_eq!(path3().weighted_oracle().unwrap().total_weight(), 4);
        assert_eq!(k4().weighted_oracle().unwrap().total_weight(), 12);
        let t = TableColumn::from_counts(&[3, 1]).unwrap();
        assert_eq!(t.weighted_oracle().unwrap().total_weight(), 4);
    }

    #[test]
    fn empty_sources_refuse_oracles() {
        let g = Graph::undirected(3, &[]).unwrap();
        assert!(matches!(g.weighted_oracle(), Err(Error::EmptyGraph)));
        let d = Graph::directed(3, &[]).unwrap();
        assert!(DirectedDegreeOracle::new(&d, DegreeSide::In).is_err());
    }

    #[test]
    fn directed_oracle_sides() {
        let g = Graph::directed(3, &[(0, 1), (2, 1)]).unwrap();
        let mut ledger = QueryLedger::default();
        let inc = DirectedDegreeOracle::new(&g, DegreeSide::In).unwrap();
        assert_eq!(inc.total_weight(), 2);
        assert_eq!(inc.magnitude(1, &mut ledger).unwrap(), 2);
        let out = DirectedDegreeOracle::new(&g, DegreeSide::Out).unwrap();
        assert_eq!(out.magnitude(1, &mut ledger).unwrap(), 0);
        let mut rng = rng_from_seed(5);
        // Heads of arcs are always vertex 1 here.
        let (v, d) = inc.sample(&mut rng, &mut ledger).unwrap();
        assert_eq!((v, d), (1, 2));
        assert!(DirectedDegreeOracle::new(&g, DegreeSide::Undirected).is_err());
    }
}
