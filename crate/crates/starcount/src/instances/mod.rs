//! Deterministic and seeded generators for test graphs and tables.
//!
//! Besides everyday fixtures (circulants, uniform random graphs, hub
//! families), this module builds the adversarial constructions used by the
//! verification suite: pairs of families whose members look identical to a
//! sampling algorithm but have very different star counts, the planted
//! port-representation tables behind them, and the directed
//! bipartite-plus-back-edge family whose path count jumps from 0 to `n`
//! with a single extra arc.
//!
//! Generators are pure functions of their parameters and seed: identical
//! inputs give bit-identical graphs.

mod io;
mod ports;

pub use io::{
    load_csv, load_edge_list, read_csv_column, read_edge_list, save_edge_list, write_edge_list,
};
pub use ports::{
    check_planted_constraints, gen_planted_params, PlantedParams, PlantedRegime, Port,
    PortRepresentation,
};

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{Graph, TableColumn};
use crate::rng::{rng_from_seed, StarRng};

use ports::ceil_nth_root;

/// Circulant edges on `0..k`: distances `1..=d/2`, plus the diameter chord
/// when `d` is odd (requires `k` even).
fn circulant_edge_list(k: usize, d: usize) -> Result<Vec<(usize, usize)>> {
    if d == 0 || d >= k {
        return Err(Error::constraint(format!(
            "circulant needs 0 < d < n, got n = {k}, d = {d}"
        )));
    }
    if !(k * d).is_multiple_of(2) {
        return Err(Error::constraint(format!(
            "circulant needs n * d even, got n = {k}, d = {d}"
        )));
    }
    let mut edges = Vec::with_capacity(k * d / 2);
    for j in 1..=d / 2 {
        for i in 0..k {
            edges.push((i, (i + j) % k));
        }
    }
    if d % 2 == 1 {
        for i in 0..k / 2 {
            edges.push((i, i + k / 2));
        }
    }
    Ok(edges)
}

/// A d-regular simple graph on `n` vertices: vertex `i` is joined to
/// `i ± 1, ..., i ± d/2` (mod n), plus `i + n/2` when `d` is odd.
pub fn gen_circulant_regular(n: usize, d: usize) -> Result<Graph> {
    Graph::undirected(n, &circulant_edge_list(n, d)?)
}

/// A pair of same-shape graphs that sampling algorithms struggle to tell
/// apart: the first has no p-stars at all (every degree is `p - 1`), the
/// second hides a star with `ceil(s^{1/p})` leaves on the same small vertex
/// set, contributing `C(ceil(s^{1/p}), p)` stars. Both leave the small set
/// disconnected from the rest, which carries a `(p-1)`-regular graph.
///
/// When `p` is even the set sizes are adjusted upward by one (leaving one
/// isolated vertex) so the `(p-1)`-regular parts have even degree sums.
pub fn gen_hidden_star_pair(n: usize, p: u32, s: u64) -> Result<(Graph, Graph)> {
    if p < 2 {
        return Err(Error::invalid(format!("p must be at least 2, got {p}")));
    }
    let threshold = u64::from(p + 1).checked_pow(p);
    match threshold {
        Some(t) if s > t => {}
        _ => {
            return Err(Error::constraint(format!(
                "s must exceed (p+1)^p; got s = {s}, p = {p}"
            )));
        }
    }
    let star_size = usize::try_from(ceil_nth_root(s, p))
        .map_err(|_| Error::constraint("s too large for this platform"))?;
    let reg = (p - 1) as usize;
    let mut set_size = star_size + 1;
    if reg % 2 == 1 && !set_size.is_multiple_of(2) {
        set_size += 1;
    }
    if set_size > n {
        return Err(Error::constraint(format!(
            "star set needs {set_size} vertices but n = {n}"
        )));
    }
    let rest = n - set_size;
    if rest > 0 && rest <= reg {
        return Err(Error::constraint(format!(
            "remainder n - |S| = {rest} too small for a {reg}-regular graph"
        )));
    }
    if reg % 2 == 1 && rest % 2 == 1 {
        return Err(Error::constraint(format!(
            "remainder n - |S| = {rest} is odd, infeasible for odd degree {reg}"
        )));
    }

    let mut rest_edges = Vec::new();
    if rest > 0 {
        for (u, v) in circulant_edge_list(rest, reg)? {
            rest_edges.push((set_size + u, set_size + v));
        }
    }

    let mut starless = circulant_edge_list(set_size, reg)?;
    starless.extend_from_slice(&rest_edges);
    let f1 = Graph::undirected(n, &starless)?;

    let mut starred: Vec<(usize, usize)> = (1..=star_size).map(|v| (0, v)).collect();
    starred.extend_from_slice(&rest_edges);
    let f2 = Graph::undirected(n, &starred)?;

    Ok((f1, f2))
}

/// The base port-representation graph: `n1` vertices of degree `d1` built
/// from slab matchings plus `n2` isolated vertices.
pub fn gen_slab_representation(n1: usize, d1: usize, n2: usize) -> Result<Graph> {
    PortRepresentation::slab(n1, d1, n2)?.materialize()
}

/// The planted port-representation graph: `n1` vertices of degree `d1` and
/// `n2` vertices of degree `d2`, agreeing with the unplanted table outside
/// a window of `(d1 + d2) * n2` cells at the 1-based offset `(x, 2y - 1)`.
pub fn gen_planted_representation(
    n1: usize,
    d1: usize,
    n2: usize,
    d2: usize,
    x: usize,
    y: usize,
) -> Result<Graph> {
    PortRepresentation::planted(n1, d1, n2, d2, x, y)?.materialize()
}

/// Directed bipartite family: every vertex of the source half points to
/// every vertex of the target half, so no length-two path exists — until the
/// optional back edge `(t, s)` closes `n` of them at once.
///
/// The underlying graph is fixed; the seed only shuffles the stored
/// adjacency order.
pub fn gen_bipartite_backedge(
    n: usize,
    back_edge: Option<(usize, usize)>,
    seed: u64,
) -> Result<Graph> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "n must be positive and even, got {n}"
        )));
    }
    let half = n / 2;
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(half * half + 1);
    for u in 0..half {
        for v in half..n {
            arcs.push((u, v));
        }
    }
    if let Some((t, s)) = back_edge {
        if !(half..n).contains(&t) {
            return Err(Error::invalid(format!(
                "back edge tail t = {t} must lie in the target half [{half}, {n})"
            )));
        }
        if s >= half {
            return Err(Error::invalid(format!(
                "back edge head s = {s} must lie in the source half [0, {half})"
            )));
        }
        arcs.push((t, s));
    }
    let mut rng = rng_from_seed(seed);
    arcs.shuffle(&mut rng);
    Graph::directed(n, &arcs)
}

/// Uniform simple graph with exactly `m` edges, by rejection over sampled
/// pairs.
pub fn gen_erdos_renyi(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max = n as u64 * (n.saturating_sub(1)) as u64 / 2;
    if m as u64 > max {
        return Err(Error::constraint(format!(
            "m = {m} exceeds the {max} possible edges on {n} vertices"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push(key);
        }
    }
    Graph::undirected(n, &edges)
}

/// Uniform simple digraph with exactly `m` arcs.
pub fn gen_directed_erdos_renyi(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max = n as u64 * (n.saturating_sub(1)) as u64;
    if m as u64 > max {
        return Err(Error::constraint(format!(
            "m = {m} exceeds the {max} possible arcs on {n} vertices"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut arcs = Vec::with_capacity(m);
    while arcs.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        if seen.insert((u, v)) {
            arcs.push((u, v));
        }
    }
    Graph::directed(n, &arcs)
}

/// A digraph whose in/out degree ratio is exactly bounded by `r`: a
/// balanced directed circulant of degree `d`, plus a complete bipartite
/// block of `(r - 1) d` extra arcs into the first `(r - 1) d` vertices, so
/// their ratio reaches `r` while their sources drop to `1/r`.
pub fn gen_ratio_digraph(n: usize, d: usize, r: u32, seed: u64) -> Result<Graph> {
    if d == 0 || r == 0 {
        return Err(Error::invalid("degree and ratio must be positive"));
    }
    let extra = (r as usize - 1) * d;
    if n <= 2 * (d + extra) + 1 {
        return Err(Error::constraint(format!(
            "n = {n} too small for degree {d} and ratio {r}; need n > {}",
            2 * (d + extra) + 1
        )));
    }
    let mut arcs = Vec::with_capacity(n * d + extra * extra);
    for j in 1..=d {
        for i in 0..n {
            arcs.push((i, (i + j) % n));
        }
    }
    for b in n / 2..n / 2 + extra {
        for a in 0..extra {
            arcs.push((b, a));
        }
    }
    let mut rng = rng_from_seed(seed);
    arcs.shuffle(&mut rng);
    Graph::directed(n, &arcs)
}

/// One hub of the given degree plus a perfect matching absorbing the
/// remaining edge budget; every non-hub degree is at most 1, so
/// `S_2 = C(hub_degree, 2)` exactly. Handy for sweeping `S_2` while `n` and
/// `m` stay fixed.
pub fn gen_hub_matching(n: usize, m: usize, hub_degree: usize) -> Result<Graph> {
    if hub_degree > m {
        return Err(Error::constraint(format!(
            "hub degree {hub_degree} exceeds the edge budget {m}"
        )));
    }
    let needed = 1 + hub_degree + 2 * (m - hub_degree);
    if needed > n {
        return Err(Error::constraint(format!(
            "need at least {needed} vertices for m = {m}, hub degree {hub_degree}; got n = {n}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..=hub_degree).map(|v| (0, v)).collect();
    let base = hub_degree + 1;
    for i in 0..m - hub_degree {
        edges.push((base + 2 * i, base + 2 * i + 1));
    }
    Graph::undirected(n, &edges)
}

/// Table with the given label counts and synthetic labels.
pub fn gen_table(counts: &[u64]) -> Result<TableColumn> {
    TableColumn::from_counts(counts)
}

/// Relabels vertices: vertex `v` becomes `perm[v]`. Neighbor order and edge
/// order are preserved under the relabeling.
pub fn permute_vertices(g: &Graph, perm: &[usize]) -> Result<Graph> {
    let n = g.vertex_count();
    if perm.len() != n {
        return Err(Error::invalid(format!(
            "permutation has length {} but the graph has {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &target in perm {
        if target >= n || seen[target] {
            return Err(Error::invalid("not a permutation of the vertex ids"));
        }
        seen[target] = true;
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    if g.is_directed() {
        Graph::directed(n, &edges)
    } else {
        Graph::undirected(n, &edges)
    }
}

/// Uniformly random permutation of `0..n`.
pub fn random_permutation(n: usize, rng: &mut StarRng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// A generated input: most families are graphs, tables come from counts.
#[derive(Debug, Clone)]
pub enum GeneratedInstance {
    Graph(Graph),
    Table(TableColumn),
}

/// Serializable description of one generator invocation, used as a
/// reproducibility manifest: the same spec always rebuilds the same bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Circulant {
        n: usize,
        d: usize,
    },
    /// The starless member of the hard pair.
    HiddenStarless {
        n: usize,
        p: u32,
        s: u64,
    },
    /// The star-bearing member of the hard pair.
    HiddenStarred {
        n: usize,
        p: u32,
        s: u64,
    },
    Slab {
        n1: usize,
        d1: usize,
        n2: usize,
    },
    Planted {
        n1: usize,
        d1: usize,
        n2: usize,
        d2: usize,
        x: usize,
        y: usize,
    },
    BipartiteBackedge {
        n: usize,
        back_edge: Option<(usize, usize)>,
        seed: u64,
    },
    ErdosRenyi {
        n: usize,
        m: usize,
        seed: u64,
    },
    DirectedErdosRenyi {
        n: usize,
        m: usize,
        seed: u64,
    },
    RatioDigraph {
        n: usize,
        d: usize,
        r: u32,
        seed: u64,
    },
    HubMatching {
        n: usize,
        m: usize,
        hub_degree: usize,
    },
    Table {
        counts: Vec<u64>,
    },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<GeneratedInstance> {
        use GeneratorSpec::*;
        let graph = match *self {
            Circulant { n, d } => gen_circulant_regular(n, d)?,
            HiddenStarless { n, p, s } => gen_hidden_star_pair(n, p, s)?.0,
            HiddenStarred { n, p, s } => gen_hidden_star_pair(n, p, s)?.1,
            Slab { n1, d1, n2 } => gen_slab_representation(n1, d1, n2)?,
            Planted {
                n1,
                d1,
                n2,
                d2,
                x,
                y,
            } => gen_planted_representation(n1, d1, n2, d2, x, y)?,
            BipartiteBackedge { n, back_edge, seed } => gen_bipartite_backedge(n, back_edge, seed)?,
            ErdosRenyi { n, m, seed } => gen_erdos_renyi(n, m, seed)?,
            DirectedErdosRenyi { n, m, seed } => gen_directed_erdos_renyi(n, m, seed)?,
            RatioDigraph { n, d, r, seed } => gen_ratio_digraph(n, d, r, seed)?,
            HubMatching { n, m, hub_degree } => gen_hub_matching(n, m, hub_degree)?,
            Table { ref counts } => return Ok(GeneratedInstance::Table(gen_table(counts)?)),
        };
        Ok(GeneratedInstance::Graph(graph))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{exact_path2_count, exact_star_count};
    use num_bigint::BigUint;
    use num_traits::Zero;

    #[test]
    fn circulant_examples() {
        let c5 = gen_circulant_regular(5, 2).unwrap();
        assert!(c5.degrees().all(|d| d == 2));
        assert_eq!(c5.edge_count(), 5);

        let g = gen_circulant_regular(6, 3).unwrap();
        assert!(g.degrees().all(|d| d == 3));
        g.validate().unwrap();

        let k4 = gen_circulant_regular(4, 3).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().all(|d| d == 3));

        // Odd n with odd d violates parity.
        assert!(gen_circulant_regular(5, 3).is_err());
        assert!(gen_circulant_regular(4, 4).is_err());
    }

    #[test]
    fn hidden_star_pair_counts() {
        let (f1, f2) = gen_hidden_star_pair(1000, 2, 100).unwrap();
        assert_eq!(exact_star_count(&f1, 2).unwrap(), BigUint::zero());
        assert_eq!(exact_star_count(&f2, 2).unwrap(), BigUint::from(45u32));
        f1.validate().unwrap();
        f2.validate().unwrap();
        // Every degree in the starless member equals p - 1 = 1.
        assert!(f1.degrees().all(|d| d == 1));
    }

    #[test]
    fn hidden_star_set_is_disconnected_from_rest() {
        let (f1, f2) = gen_hidden_star_pair(200, 3, 150).unwrap();
        // star size = ceil(150^{1/3}) = 6, set size 7 (p odd: no parity fix)
        let set_size = 7;
        for g in [&f1, &f2] {
            for &(u, v) in g.edges() {
                assert_eq!(u < set_size, v < set_size, "cross edge ({u}, {v})");
            }
        }
        assert_eq!(
            exact_star_count(&f2, 3).unwrap(),
            crate::estimator::binomial(6, 3)
        );
    }

    #[test]
    fn hidden_star_infeasible_parameters_are_named() {
        // s below the threshold (p+1)^p.
        assert!(matches!(
            gen_hidden_star_pair(1000, 2, 9),
            Err(Error::Constraint(_))
        ));
        // Set larger than the graph.
        assert!(matches!(
            gen_hidden_star_pair(5, 2, 100),
            Err(Error::Constraint(_))
        ));
        // Odd remainder with p even.
        assert!(matches!(
            gen_hidden_star_pair(999, 2, 100),
            Err(Error::Constraint(_))
        ));
    }

    #[test]
    fn bipartite_backedge_path_counts() {
        let quiet = gen_bipartite_backedge(10, None, 1).unwrap();
        assert_eq!(exact_path2_count(&quiet).unwrap(), BigUint::zero());

        let noisy = gen_bipartite_backedge(10, Some((7, 2)), 1).unwrap();
        assert_eq!(exact_path2_count(&noisy).unwrap(), BigUint::from(10u32));
        // Back-edge endpoints: the head keeps its full out-degree and gains
        // one in-arc.
        assert_eq!(noisy.out_degree(2), 5);
        assert_eq!(noisy.in_degree(2), 1);

        assert!(gen_bipartite_backedge(9, None, 1).is_err());
        assert!(gen_bipartite_backedge(10, Some((2, 7)), 1).is_err());
    }

    #[test]
    fn erdos_renyi_is_forced_at_full_density() {
        let g = gen_erdos_renyi(10, 45, 3).unwrap();
        assert_eq!(g.edge_count(), 45);
        assert!(g.degrees().all(|d| d == 9));
        assert!(gen_erdos_renyi(10, 46, 3).is_err());
        // Determinism.
        assert_eq!(
            gen_erdos_renyi(30, 60, 9).unwrap(),
            gen_erdos_renyi(30, 60, 9).unwrap()
        );
    }

    #[test]
    fn ratio_digraph_hits_the_bound_exactly() {
        let g = gen_ratio_digraph(40, 2, 4, 5).unwrap();
        g.validate().unwrap();
        let mut max_ratio = 0.0f64;
        for v in 0..g.vertex_count() {
            let (din, dout) = (g.in_degree(v) as f64, g.out_degree(v) as f64);
            assert!(dout > 0.0 && din > 0.0);
            max_ratio = max_ratio.max(din / dout).max(dout / din);
        }
        assert_eq!(max_ratio, 4.0);
    }

    #[test]
    fn hub_matching_pins_star_count() {
        let g = gen_hub_matching(40, 25, 15).unwrap();
        assert_eq!(g.edge_count(), 25);
        assert_eq!(
            exact_star_count(&g, 2).unwrap(),
            BigUint::from(105u32) // C(15, 2)
        );
        assert!(gen_hub_matching(10, 25, 15).is_err());
    }

    #[test]
    fn permutation_preserves_exact_counts() {
        let g = gen_erdos_renyi(24, 50, 2).unwrap();
        let mut rng = rng_from_seed(17);
        let perm = random_permutation(24, &mut rng);
        let h = permute_vertices(&g, &perm).unwrap();
        h.validate().unwrap();
        for p in [2, 3] {
            assert_eq!(
                exact_star_count(&g, p).unwrap(),
                exact_star_count(&h, p).unwrap()
            );
        }
        assert!(permute_vertices(&g, &[0, 0]).is_err());
    }

    #[test]
    fn generator_specs_build_and_serialize() {
        let spec = GeneratorSpec::Circulant { n: 8, d: 4 };
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"family\":\"circulant\""));
        let parsed: GeneratorSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, spec);
        match spec.build().unwrap() {
            GeneratedInstance::Graph(g) => assert_eq!(g.vertex_count(), 8),
            GeneratedInstance::Table(_) => panic!("expected a graph"),
        }

        let table = GeneratorSpec::Table { counts: vec![3, 1] };
        match table.build().unwrap() {
            GeneratedInstance::Table(t) => assert_eq!(t.rows(), 4),
            GeneratedInstance::Graph(_) => panic!("expected a table"),
        }
    }
}
