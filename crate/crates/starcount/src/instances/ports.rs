//! Port-matching tables and the graphs they materialize.
//!
//! A port representation describes an adjacency list explicitly: vertex `v`
//! owns `deg(v)` numbered ports, and a perfect matching over all ports
//! pairs them up; matched ports are the two ends of one edge. Pairs of
//! consecutive columns form *slabs*, and the base table matches, in the
//! j-th slab, each left-column cell with the right-column cell `j` rows
//! below. That yields a circulant graph with distance set `{1..d1/2}` on
//! the first `n1` vertices.
//!
//! The planted variant takes `n2` extra vertices of degree `d2` and hides
//! their ports inside the base table: a `d2 x n2` *window* of cells
//! (top-left at the 1-based cell `(x, 2y-1)`, wrapping around) is rematched
//! transposed against the new `n2 x d2` block, and the base cells that lost
//! their partner are rewired at vertical distance `j + d2` instead of `j`.
//! Outside the window (extended by `d1/2` rows either way) the table is
//! untouched, which is what makes the two families hard to tell apart by
//! sampling.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::Graph;

/// A port: `(vertex, slot)` with slots `0..deg(vertex)`.
pub type Port = (usize, usize);

/// Feasibility check for the planted construction: `d1` and `n2` even,
/// `n2 <= d1 <= 2 d2` and `d1 + 2 d2 < n1`.
pub fn check_planted_constraints(n1: usize, d1: usize, n2: usize, d2: usize) -> Result<()> {
    if d1 == 0 || !d1.is_multiple_of(2) {
        return Err(Error::constraint(format!(
            "d1 must be positive and even, got {d1}"
        )));
    }
    if !n2.is_multiple_of(2) {
        return Err(Error::constraint(format!("n2 must be even, got {n2}")));
    }
    if n2 > d1 {
        return Err(Error::constraint(format!(
            "n2 <= d1 required, got n2 = {n2}, d1 = {d1}"
        )));
    }
    if d1 > 2 * d2 {
        return Err(Error::constraint(format!(
            "d1 <= 2 d2 required, got d1 = {d1}, d2 = {d2}"
        )));
    }
    if d1 + 2 * d2 >= n1 {
        return Err(Error::constraint(format!(
            "d1 + 2 d2 < n1 required, got d1 = {d1}, d2 = {d2}, n1 = {n1}"
        )));
    }
    Ok(())
}

/// Explicit port-matching table from which a graph is materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortRepresentation {
    n1: usize,
    d1: usize,
    n2: usize,
    d2: usize,
    /// 1-based `(x, y)` window offset, when planted.
    planted: Option<(usize, usize)>,
    /// `matching[v][slot]` is the partner port.
    matching: Vec<Vec<Option<Port>>>,
}

impl PortRepresentation {
    /// The base table: `n1` vertices of degree `d1` matched slab by slab,
    /// plus `n2` isolated vertices. Requires `d1` even and `d1 < n1`.
    pub fn slab(n1: usize, d1: usize, n2: usize) -> Result<Self> {
        if d1 == 0 || !d1.is_multiple_of(2) {
            return Err(Error::constraint(format!(
                "d1 must be positive and even, got {d1}"
            )));
        }
        if d1 >= n1 {
            return Err(Error::constraint(format!(
                "d1 < n1 required so slab distances stay distinct, got d1 = {d1}, n1 = {n1}"
            )));
        }
        let mut rep = PortRepresentation {
            n1,
            d1,
            n2,
            d2: 0,
            planted: None,
            matching: empty_matching(n1, d1, n2, 0),
        };
        for j in 1..=d1 / 2 {
            for i in 0..n1 {
                rep.set_pair((i, 2 * j - 2), ((i + j) % n1, 2 * j - 1));
            }
        }
        Ok(rep)
    }

    /// The planted table: same `n1` rows of width `d1`, but a `d2 x n2`
    /// window starting at the 1-based cell `(x, 2y-1)` is rematched against
    /// `n2` new rows of width `d2`, and the displaced base cells are rewired
    /// at distance `j + d2`.
    pub fn planted(n1: usize, d1: usize, n2: usize, d2: usize, x: usize, y: usize) -> Result<Self> {
        check_planted_constraints(n1, d1, n2, d2)?;
        if x == 0 || x > n1 {
            return Err(Error::invalid(format!(
                "window row x must lie in 1..={n1}, got {x}"
            )));
        }
        if y == 0 || y > d1 / 2 {
            return Err(Error::invalid(format!(
                "window slab y must lie in 1..={}, got {y}",
                d1 / 2
            )));
        }
        let mut rep = PortRepresentation {
            n1,
            d1,
            n2,
            d2,
            planted: Some((x, y)),
            matching: empty_matching(n1, d1, n2, d2),
        };
        let x0 = x - 1;
        let slabs = d1 / 2;
        // The window spans whole slabs because n2 is even and the offset
        // column 2y-1 opens a slab.
        let window_slabs: Vec<usize> = (0..n2 / 2).map(|t| ((y - 1 + t) % slabs) + 1).collect();
        let in_window_rows = |i: usize| (i + n1 - x0) % n1 < d2;

        for j in 1..=slabs {
            let overlapped = window_slabs.contains(&j);
            for i in 0..n1 {
                let partner_row = (i + j) % n1;
                if !overlapped {
                    rep.set_pair((i, 2 * j - 2), (partner_row, 2 * j - 1));
                    continue;
                }
                match (in_window_rows(i), in_window_rows(partner_row)) {
                    // Both cells keep their base partner.
                    (false, false) => {
                        rep.set_pair((i, 2 * j - 2), (partner_row, 2 * j - 1));
                    }
                    // The left cell lost its partner to the window: skip the
                    // window by rewiring at distance j + d2. The matching
                    // right cell lost its own partner symmetrically.
                    (false, true) => {
                        rep.set_pair((i, 2 * j - 2), ((i + j + d2) % n1, 2 * j - 1));
                    }
                    // Window cells are rematched against the new rows below;
                    // orphaned right cells are covered by the rewiring rule.
                    (true, _) => {}
                }
            }
        }

        // Transposed matching between the new rows and the window: new cell
        // (gi, gj) pairs with the window cell at relative (row gj, col gi).
        for gi in 0..n2 {
            let slab = window_slabs[gi / 2];
            let col = 2 * slab - 2 + (gi % 2);
            for gj in 0..d2 {
                rep.set_pair((n1 + gi, gj), ((x0 + gj) % n1, col));
            }
        }
        Ok(rep)
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    /// The 1-based `(x, y)` window offset, when planted.
    pub fn planted_offset(&self) -> Option<(usize, usize)> {
        self.planted
    }

    pub fn vertex_count(&self) -> usize {
        self.n1 + self.n2
    }

    /// Number of ports (the row width) of vertex `v`.
    pub fn width(&self, v: usize) -> usize {
        self.matching[v].len()
    }

    /// Partner of port `(v, slot)`, if assigned.
    pub fn partner(&self, v: usize, slot: usize) -> Option<Port> {
        self.matching[v][slot]
    }

    fn set_pair(&mut self, a: Port, b: Port) {
        debug_assert!(
            self.matching[a.0][a.1].is_none(),
            "port {a:?} already matched"
        );
        debug_assert!(
            self.matching[b.0][b.1].is_none(),
            "port {b:?} already matched"
        );
        self.matching[a.0][a.1] = Some(b);
        self.matching[b.0][b.1] = Some(a);
    }

    /// Full scan of the matching invariants: every port matched, the
    /// matching is a fixed-point-free involution, matched ports never share
    /// a vertex, and no two matched pairs join the same vertex pair.
    pub fn validate(&self) -> Result<()> {
        let mut vertex_pairs = std::collections::HashSet::new();
        for v in 0..self.vertex_count() {
            for slot in 0..self.width(v) {
                let Some((pv, pslot)) = self.matching[v][slot] else {
                    return Err(Error::invalid(format!("port ({v}, {slot}) unmatched")));
                };
                if (pv, pslot) == (v, slot) {
                    return Err(Error::invalid(format!(
                        "port ({v}, {slot}) matched to itself"
                    )));
                }
                if pv == v {
                    return Err(Error::invalid(format!(
                        "ports ({v}, {slot}) and ({pv}, {pslot}) share a vertex"
                    )));
                }
                if pv >= self.vertex_count() || pslot >= self.width(pv) {
                    return Err(Error::invalid(format!(
                        "port ({v}, {slot}) matched out of range"
                    )));
                }
                if self.matching[pv][pslot] != Some((v, slot)) {
                    return Err(Error::invalid(format!(
                        "matching is not an involution at ({v}, {slot})"
                    )));
                }
                if v < pv && !vertex_pairs.insert((v, pv)) {
                    return Err(Error::invalid(format!(
                        "vertices {v} and {pv} joined by two matched pairs"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Materializes the adjacency list: the neighbor in slot `i` of vertex
    /// `v` is the vertex owning the partner port.
    pub fn materialize(&self) -> Result<Graph> {
        self.validate()?;
        let adj: Vec<Vec<usize>> = self
            .matching
            .iter()
            .map(|slots| slots.iter().map(|p| p.unwrap().0).collect())
            .collect();
        Graph::from_adjacency(adj)
    }
}

fn empty_matching(n1: usize, d1: usize, n2: usize, d2: usize) -> Vec<Vec<Option<Port>>> {
    let mut rows = Vec::with_capacity(n1 + n2);
    rows.extend((0..n1).map(|_| vec![None; d1]));
    rows.extend((0..n2).map(|_| vec![None; d2]));
    rows
}

/// Which asymptotic regime the planted parameters should realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlantedRegime {
    /// Star counts up to about `n^p`: constant many planted vertices of
    /// degree about `s^{1/p}`.
    FewHeavy,
    /// Star counts beyond `n^p`: about `s / n^p` planted vertices of degree
    /// proportional to `n`.
    ManyWide,
}

/// Concrete planted-construction parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedParams {
    pub n1: usize,
    pub d1: usize,
    pub n2: usize,
    pub d2: usize,
}

/// Picks feasible planted-construction parameters of the requested shape
/// for a graph on about `n` vertices with base star count near `s`.
///
/// Targets are rounded to integers, parity-adjusted, and repaired by
/// decrementing `d1` until [`check_planted_constraints`] accepts; the
/// checker is the source of truth.
pub fn gen_planted_params(n: usize, p: u32, s: u64, case: PlantedRegime) -> Result<PlantedParams> {
    if p < 2 {
        return Err(Error::invalid(format!("p must be at least 2, got {p}")));
    }
    if n < 8 {
        return Err(Error::constraint(format!(
            "no feasible parameters: n must be at least 8, got {n}"
        )));
    }
    if s == 0 {
        return Err(Error::constraint("s must be positive"));
    }
    let per_item = s.div_ceil(n as u64).max(1);
    let d1_target = round_up_even(ceil_nth_root(per_item, p).max(1) as usize);

    let infeasible = || {
        Error::constraint(format!(
            "no feasible planted parameters at n = {n}, p = {p}, s = {s}"
        ))
    };

    match case {
        PlantedRegime::FewHeavy => {
            let n2 = 2usize;
            if n2 + 4 > n {
                return Err(infeasible());
            }
            let n1 = n - n2;
            let d2_floor = ceil_nth_root(s, p) as usize;
            let mut d1 = d1_target.max(n2);
            loop {
                let d2 = d2_floor.max(d1.div_ceil(2));
                let params = PlantedParams { n1, d1, n2, d2 };
                if check_planted_constraints(n1, d1, n2, d2).is_ok() {
                    return Ok(params);
                }
                if d1 <= n2.max(2) {
                    return Err(infeasible());
                }
                d1 -= 2;
            }
        }
        PlantedRegime::ManyWide => {
            let planted_vertices = (n as u64)
                .checked_pow(p)
                .map(|np| s.div_ceil(np))
                .unwrap_or(0)
                .max(1) as usize;
            let n2 = 2 * planted_vertices;
            if n2 + 4 > n {
                return Err(infeasible());
            }
            let n1 = n - n2;
            let mut d1 = d1_target.max(n2);
            loop {
                if d1 + 1 >= n1 {
                    if d1 <= n2.max(2) {
                        return Err(infeasible());
                    }
                    d1 -= 2;
                    continue;
                }
                // Largest window the feasibility constraint allows.
                let d2 = (n1 - d1 - 1) / 2;
                let params = PlantedParams { n1, d1, n2, d2 };
                if check_planted_constraints(n1, d1, n2, d2).is_ok() {
                    return Ok(params);
                }
                if d1 <= n2.max(2) {
                    return Err(infeasible());
                }
                d1 -= 2;
            }
        }
    }
}

/// Smallest `r` with `r^p >= s`.
pub(crate) fn ceil_nth_root(s: u64, p: u32) -> u64 {
    if s <= 1 {
        return s;
    }
    let mut r = (s as f64).powf(1.0 / f64::from(p)).ceil() as u64;
    while r > 1 && pow_at_least(r - 1, p, s) {
        r -= 1;
    }
    while !pow_at_least(r, p, s) {
        r += 1;
    }
    r
}

fn pow_at_least(base: u64, p: u32, s: u64) -> bool {
    match base.checked_pow(p) {
        Some(v) => v >= s,
        None => true,
    }
}

pub(crate) fn round_up_even(v: usize) -> usize {
    v + (v % 2)
}
