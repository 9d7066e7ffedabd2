//! Brute-force ground truth and inequality validators.
//!
//! Everything here is deliberately naive — full scans and explicit
//! enumeration in big-integer arithmetic — so it can serve as an independent
//! oracle for the sampling estimators. [`exact_star_count`] evaluates the
//! degree-scan formula `S_p = sum_v C(deg(v), p)`;
//! [`exact_star_count_by_enumeration`] recounts the same quantity from the
//! definition (walking the p-subsets of each neighborhood) so the two
//! routes check each other.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::estimator::binomial;
use crate::oracle::{DegreeSide, Graph, TableColumn};

/// `S_p = sum C(magnitude, p)` over any magnitude vector.
pub fn exact_star_count_of<I>(magnitudes: I, p: u32) -> BigUint
where
    I: IntoIterator<Item = u64>,
{
    let mut total = BigUint::zero();
    for magnitude in magnitudes {
        total += binomial(magnitude, u64::from(p));
    }
    total
}

/// Exact number of p-stars of an undirected graph, by degree scan.
pub fn exact_star_count(g: &Graph, p: u32) -> Result<BigUint> {
    if g.is_directed() {
        return Err(Error::invalid(
            "star counts by total degree are defined for undirected graphs; \
             pick an in/out side instead",
        ));
    }
    Ok(exact_star_count_of(g.degrees().map(|d| d as u64), p))
}

/// Exact number of one-sided directed p-stars: `sum C(deg_in(v), p)` or
/// `sum C(deg_out(v), p)`.
pub fn exact_star_count_directed(g: &Graph, side: DegreeSide, p: u32) -> Result<BigUint> {
    if !g.is_directed() {
        return Err(Error::invalid("directed star counts need a directed graph"));
    }
    let n = g.vertex_count();
    let degrees: Vec<u64> = match side {
        DegreeSide::In => (0..n).map(|v| g.in_degree(v) as u64).collect(),
        DegreeSide::Out => (0..n).map(|v| g.out_degree(v) as u64).collect(),
        DegreeSide::Undirected => {
            return Err(Error::invalid("side must be `in` or `out`"));
        }
    };
    Ok(exact_star_count_of(degrees, p))
}

/// `S_p` of a table column: `sum C(x_i, p)` over label counts.
pub fn exact_star_count_table(t: &TableColumn, p: u32) -> BigUint {
    exact_star_count_of(t.counts().iter().copied(), p)
}

/// Work guard for [`exact_star_count_by_enumeration`].
const ENUMERATION_GUARD: u64 = 10_000_000;

/// Recounts the p-stars from the definition: one star per (center, p-subset
/// of its neighbors). Refuses graphs where more than 10^7 subsets would be
/// walked.
///
/// This path is independent of the binomial-formula scan and exists to
/// cross-check it.
pub fn exact_star_count_by_enumeration(g: &Graph, p: u32) -> Result<BigUint> {
    if g.is_directed() {
        return Err(Error::invalid(
            "star enumeration is defined for undirected graphs",
        ));
    }
    if p == 0 {
        return Err(Error::invalid("p must be positive"));
    }
    let budget = exact_star_count(g, p)?;
    if budget > BigUint::from(ENUMERATION_GUARD) {
        return Err(Error::invalid(format!(
            "enumeration would walk more than {ENUMERATION_GUARD} subsets; refusing"
        )));
    }
    let p = p as usize;
    let mut total = 0u64;
    for v in 0..g.vertex_count() {
        let d = g.neighbors(v).len();
        if d < p {
            continue;
        }
        // Lexicographic walk over index combinations
        // 0 <= c[0] < ... < c[p-1] < d; position i tops out at d - p + i.
        let mut combo: Vec<usize> = (0..p).collect();
        loop {
            total += 1;
            let mut i = p;
            while i > 0 && combo[i - 1] == d - p + (i - 1) {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..p {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    Ok(BigUint::from(total))
}

/// Exact number of directed length-two paths: `L = sum deg_in(v) * deg_out(v)`.
pub fn exact_path2_count(g: &Graph) -> Result<BigUint> {
    if !g.is_directed() {
        return Err(Error::invalid("path counting needs a directed graph"));
    }
    let mut total = BigUint::zero();
    for v in 0..g.vertex_count() {
        total += BigUint::from(g.in_degree(v) as u64) * BigUint::from(g.out_degree(v) as u64);
    }
    Ok(total)
}

/// `L' = sum_v sqrt(deg_in(v) * deg_out(v))`, the normalizer of the
/// square-root-weighted sampler.
pub fn sqrt_weight_total(g: &Graph) -> Result<f64> {
    if !g.is_directed() {
        return Err(Error::invalid("path counting needs a directed graph"));
    }
    Ok((0..g.vertex_count())
        .map(|v| ((g.in_degree(v) as f64) * (g.out_degree(v) as f64)).sqrt())
        .sum())
}

fn counts_by_label(t: &TableColumn) -> HashMap<&str, u64> {
    t.labels()
        .iter()
        .enumerate()
        .map(|(i, label)| (label.as_str(), t.count(i)))
        .collect()
}

/// Exact join cardinality `sum_i x_i * y_i` over the shared label space;
/// labels absent from one table contribute zero.
pub fn exact_join_cardinality(t1: &TableColumn, t2: &TableColumn) -> BigUint {
    let right = counts_by_label(t2);
    let mut total = BigUint::zero();
    for (i, label) in t1.labels().iter().enumerate() {
        if let Some(&y) = right.get(label.as_str()) {
            total += BigUint::from(t1.count(i)) * BigUint::from(y);
        }
    }
    total
}

/// Exact self-join cardinality `sum_i x_i^2`.
///
/// Note the relation to the pair count: `S_2 = (sum x^2 - sum x) / 2`.
pub fn exact_self_join_cardinality(t: &TableColumn) -> BigUint {
    let mut total = BigUint::zero();
    for &x in t.counts() {
        total += BigUint::from(x) * BigUint::from(x);
    }
    total
}

/// Outcome of the convexity-derived degree bounds for one graph; `None`
/// means the bound's applicability condition did not hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JensenReport {
    /// `S_p >= n * C(2m/n, p)` with the real-valued (falling factorial)
    /// binomial; applicable once the average degree reaches `p - 1`, where
    /// that extension is convex.
    pub mean_degree_bound: Option<bool>,
    /// `m <= p * n^{1-1/p} * S_p^{1/p} / 2`; applicable when `2m/n >= p`.
    pub edge_count_bound: Option<bool>,
    /// `m <= n * p / 2`; applicable when `S_p <= n`.
    pub sparse_edge_bound: Option<bool>,
}

impl JensenReport {
    /// True when every applicable bound held.
    pub fn all_hold(&self) -> bool {
        self.mean_degree_bound != Some(false)
            && self.edge_count_bound != Some(false)
            && self.sparse_edge_bound != Some(false)
    }
}

/// Real-valued binomial via falling factorials:
/// `C(z, p) = z (z-1) ... (z-p+1) / p!`.
pub fn falling_factorial_binomial(z: f64, p: u32) -> f64 {
    let mut num = 1.0f64;
    let mut den = 1.0f64;
    for i in 0..p {
        num *= z - f64::from(i);
        den *= f64::from(i + 1);
    }
    num / den
}

const REL_SLACK: f64 = 1e-9;

fn leq_with_slack(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + REL_SLACK * rhs.abs().max(1.0)
}

/// Checks the convexity-derived relations between `m`, `n` and `S_p` on an
/// undirected graph. These are theorems, so every applicable bound must
/// pass on any valid input.
pub fn validate_jensen_bounds(g: &Graph, p: u32) -> Result<JensenReport> {
    if g.is_directed() {
        return Err(Error::invalid("degree bounds apply to undirected graphs"));
    }
    if p < 2 {
        return Err(Error::invalid("p must be at least 2"));
    }
    let n = g.vertex_count() as f64;
    let m = g.edge_count() as f64;
    if g.vertex_count() == 0 {
        return Ok(JensenReport {
            mean_degree_bound: None,
            edge_count_bound: None,
            sparse_edge_bound: None,
        });
    }
    let sp = exact_star_count(g, p)?.to_f64().unwrap_or(f64::INFINITY);
    let mean_degree = 2.0 * m / n;

    let mean_degree_bound = if mean_degree >= f64::from(p - 1) {
        let lower = n * falling_factorial_binomial(mean_degree, p);
        Some(leq_with_slack(lower, sp))
    } else {
        None
    };

    let edge_count_bound = if mean_degree >= f64::from(p) {
        let upper =
            f64::from(p) * n.powf(1.0 - 1.0 / f64::from(p)) * sp.powf(1.0 / f64::from(p)) / 2.0;
        Some(leq_with_slack(m, upper))
    } else {
        None
    };

    let sparse_edge_bound = if sp <= n {
        Some(leq_with_slack(m, n * f64::from(p) / 2.0))
    } else {
        None
    };

    Ok(JensenReport {
        mean_degree_bound,
        edge_count_bound,
        sparse_edge_bound,
    })
}

fn serialize_biguint_opt<S: Serializer>(
    value: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn serialize_sp_map<S: Serializer>(
    value: &Vec<(u32, BigUint)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(value.len()))?;
    for (p, sp) in value {
        map.serialize_entry(&p.to_string(), &sp.to_string())?;
    }
    map.end()
}

/// Ground-truth summary of one input, as printed by the `exact` command.
///
/// Counts are exact big integers (serialized as decimal strings, since they
/// easily exceed 64-bit and double ranges).
#[derive(Debug, Clone, Serialize)]
pub struct ExactCounts {
    /// Vertices (graphs) or distinct labels (tables).
    pub n: usize,
    /// Edges or arcs for graphs; total rows for tables.
    pub m: u64,
    /// Total oracle weight: `2m` for undirected graphs, `m` for directed,
    /// row count for tables.
    pub total_weight: u64,
    /// `S_p` per requested p (`in`/`out` star counts for directed graphs
    /// live in their own fields).
    #[serde(serialize_with = "serialize_sp_map")]
    pub s_p: Vec<(u32, BigUint)>,
    #[serde(serialize_with = "serialize_sp_map")]
    pub s_p_in: Vec<(u32, BigUint)>,
    #[serde(serialize_with = "serialize_sp_map")]
    pub s_p_out: Vec<(u32, BigUint)>,
    /// Directed length-two path count, when directed.
    #[serde(serialize_with = "serialize_biguint_opt")]
    pub path2: Option<BigUint>,
    /// `sum x_i^2` (tables): the literal self-join record count.
    #[serde(serialize_with = "serialize_biguint_opt")]
    pub self_join_cardinality: Option<BigUint>,
    /// magnitude -> number of items with that magnitude, ascending.
    pub degree_histogram: Vec<(u64, u64)>,
}

fn histogram(magnitudes: impl IntoIterator<Item = u64>) -> Vec<(u64, u64)> {
    let mut hist: HashMap<u64, u64> = HashMap::new();
    for m in magnitudes {
        *hist.entry(m).or_insert(0) += 1;
    }
    let mut hist: Vec<(u64, u64)> = hist.into_iter().collect();
    hist.sort_unstable();
    hist
}

impl ExactCounts {
    pub fn for_graph(g: &Graph, ps: &[u32]) -> Result<Self> {
        let n = g.vertex_count();
        let m = g.edge_count() as u64;
        if g.is_directed() {
            let mut s_p_in = Vec::new();
            let mut s_p_out = Vec::new();
            for &p in ps {
                s_p_in.push((p, exact_star_count_directed(g, DegreeSide::In, p)?));
                s_p_out.push((p, exact_star_count_directed(g, DegreeSide::Out, p)?));
            }
            Ok(ExactCounts {
                n,
                m,
                total_weight: m,
                s_p: Vec::new(),
                s_p_in,
                s_p_out,
                path2: Some(exact_path2_count(g)?),
                self_join_cardinality: None,
                degree_histogram: histogram(g.degrees().map(|d| d as u64)),
            })
        } else {
            let mut s_p = Vec::new();
            for &p in ps {
                s_p.push((p, exact_star_count(g, p)?));
            }
            Ok(ExactCounts {
                n,
                m,
                total_weight: 2 * m,
                s_p,
                s_p_in: Vec::new(),
                s_p_out: Vec::new(),
                path2: None,
                self_join_cardinality: None,
                degree_histogram: histogram(g.degrees().map(|d| d as u64)),
            })
        }
    }

    pub fn for_table(t: &TableColumn, ps: &[u32]) -> Self {
        let s_p = ps
            .iter()
            .map(|&p| (p, exact_star_count_table(t, p)))
            .collect();
        ExactCounts {
            n: t.label_count(),
            m: t.rows(),
            total_weight: t.rows(),
            s_p,
            s_p_in: Vec::new(),
            s_p_out: Vec::new(),
            path2: None,
            self_join_cardinality: Some(exact_self_join_cardinality(t)),
            degree_histogram: histogram(t.counts().iter().copied()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::undirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn star_count_examples() {
        assert_eq!(exact_star_count(&path3(), 2).unwrap(), BigUint::from(1u32));
        assert_eq!(exact_star_count(&k4(), 2).unwrap(), BigUint::from(12u32));
        // K_{1,5}: only the hub contributes C(5, 3) = 10.
        let star: Vec<(usize, usize)> = (1..=5).map(|v| (0, v)).collect();
        let g = Graph::undirected(6, &star).unwrap();
        assert_eq!(exact_star_count(&g, 3).unwrap(), BigUint::from(10u32));
    }

    #[test]
    fn enumeration_agrees_with_scan() {
        for (g, p) in [
            (path3(), 2u32),
            (k4(), 2),
            (k4(), 3),
            (
                Graph::undirected(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap(),
                2,
            ),
        ] {
            assert_eq!(
                exact_star_count_by_enumeration(&g, p).unwrap(),
                exact_star_count(&g, p).unwrap(),
            );
        }
        // K5 example: 5 * C(4, 2) = 30.
        let edges: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
            .collect();
        let k5 = Graph::undirected(5, &edges).unwrap();
        assert_eq!(
            exact_star_count_by_enumeration(&k5, 2).unwrap(),
            BigUint::from(30u32)
        );
        // Max degree below p: zero stars.
        assert_eq!(
            exact_star_count_by_enumeration(&path3(), 3).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn enumeration_refuses_oversized_graphs() {
        // A star with 4000 leaves has C(4000, 2) ~ 8e6 subsets for p = 2 but
        // C(4000, 3) far beyond the guard for p = 3.
        let edges: Vec<(usize, usize)> = (1..=4000).map(|v| (0, v)).collect();
        let g = Graph::undirected(4001, &edges).unwrap();
        assert!(exact_star_count_by_enumeration(&g, 2).is_ok());
        assert!(exact_star_count_by_enumeration(&g, 3).is_err());
    }

    #[test]
    fn path2_examples() {
        let single = Graph::directed(2, &[(0, 1)]).unwrap();
        assert_eq!(exact_path2_count(&single).unwrap(), BigUint::zero());

        let cycle: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        let g = Graph::directed(7, &cycle).unwrap();
        assert_eq!(exact_path2_count(&g).unwrap(), BigUint::from(7u32));
        assert!(exact_path2_count(&path3()).is_err());
    }

    #[test]
    fn join_cardinality_examples() {
        let t1 = TableColumn::new(vec!["a".into(), "b".into()], vec![2, 3]).unwrap();
        let t2 = TableColumn::new(vec!["a".into(), "b".into()], vec![1, 4]).unwrap();
        assert_eq!(exact_join_cardinality(&t1, &t2), BigUint::from(14u32));

        let t3 = TableColumn::new(vec!["x".into()], vec![9]).unwrap();
        assert_eq!(exact_join_cardinality(&t1, &t3), BigUint::zero());

        let t = TableColumn::from_counts(&[3, 1]).unwrap();
        assert_eq!(exact_self_join_cardinality(&t), BigUint::from(10u32));
        // S_2 = (sum x^2 - sum x) / 2 = (10 - 4) / 2 = 3.
        assert_eq!(exact_star_count_table(&t, 2), BigUint::from(3u32));
        assert_eq!(exact_join_cardinality(&t, &t), BigUint::from(10u32));
    }

    #[test]
    fn jensen_bounds_tight_on_complete_graphs() {
        let report = validate_jensen_bounds(&k4(), 2).unwrap();
        assert_eq!(report.mean_degree_bound, Some(true));
        assert!(report.all_hold());
    }

    #[test]
    fn jensen_bounds_on_matchings() {
        // n/2 disjoint edges: S_2 = 0 <= n and m = n/2 <= n.
        let edges: Vec<(usize, usize)> = (0..5).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = Graph::undirected(10, &edges).unwrap();
        let report = validate_jensen_bounds(&g, 2).unwrap();
        assert_eq!(report.sparse_edge_bound, Some(true));
        assert!(report.all_hold());
    }

    #[test]
    fn falling_factorial_matches_integer_binomial() {
        assert_eq!(falling_factorial_binomial(5.0, 2), 10.0);
        assert_eq!(falling_factorial_binomial(6.0, 3), 20.0);
        assert_eq!(falling_factorial_binomial(1.0, 2), 0.0);
    }

    #[test]
    fn exact_counts_summary() {
        let counts = ExactCounts::for_graph(&k4(), &[2, 3]).unwrap();
        assert_eq!(counts.n, 4);
        assert_eq!(counts.m, 6);
        assert_eq!(counts.total_weight, 12);
        assert_eq!(counts.s_p[0].1, BigUint::from(12u32));
        assert_eq!(counts.degree_histogram, vec![(3, 4)]);

        let t = TableColumn::from_counts(&[3, 1]).unwrap();
        let counts = ExactCounts::for_table(&t, &[2]);
        assert_eq!(counts.self_join_cardinality, Some(BigUint::from(10u32)));
    }
}
