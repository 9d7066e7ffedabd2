use std::collections::HashSet;

use crate::error::{Error, Result};

/// Immutable adjacency structure backing the graph oracle.
///
/// Vertex ids are dense integers in `[0, n)`. Graphs are simple: no
/// self-loops and no parallel edges (for directed graphs, no repeated
/// `(u, v)` arcs). Neighbor lists keep the order in which edges were
/// supplied, so the "i-th neighbor" answer is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    /// Neighbors (undirected) or out-neighbors (directed), in insertion order.
    adj: Vec<Vec<usize>>,
    /// In-neighbors; empty vector for undirected graphs.
    in_adj: Vec<Vec<usize>>,
    /// Flat edge index enabling uniform edge selection. Undirected edges are
    /// stored once, in the orientation they were supplied.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple undirected graph from an edge list.
    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph {
            directed: false,
            adj,
            in_adj: Vec::new(),
            edges: edges.to_vec(),
        })
    }

    /// Builds a simple directed graph from an arc list.
    pub fn directed(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(arcs.len());
        for &(u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::invalid(format!("duplicate arc ({u}, {v})")));
            }
            adj[u].push(v);
            in_adj[v].push(u);
        }
        Ok(Graph {
            directed: true,
            adj,
            in_adj,
            edges: arcs.to_vec(),
        })
    }

    /// Builds an undirected graph from explicit neighbor lists, preserving
    /// the given per-vertex neighbor order.
    ///
    /// The edge index lists each edge once, in scan order (by lower endpoint,
    /// then position in its list).
    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        let mut edges = Vec::new();
        for (v, neighbors) in adj.iter().enumerate() {
            let mut local = HashSet::with_capacity(neighbors.len());
            for &u in neighbors {
                check_vertex(u, n)?;
                if u == v {
                    return Err(Error::invalid(format!("self-loop at vertex {v}")));
                }
                if !local.insert(u) {
                    return Err(Error::invalid(format!("duplicate edge ({v}, {u})")));
                }
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        let g = Graph {
            directed: false,
            adj,
            in_adj: Vec::new(),
            edges,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges (undirected) or arcs (directed).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Degree of `v`; out-degree for directed graphs.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// In-degree of `v`. Panics for undirected graphs.
    pub fn in_degree(&self, v: usize) -> usize {
        assert!(self.directed, "in_degree on an undirected graph");
        self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        assert!(self.directed, "out_degree on an undirected graph");
        self.adj[v].len()
    }

    /// Neighbors of `v` (out-neighbors for directed graphs), in stable order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        assert!(self.directed, "in_neighbors on an undirected graph");
        &self.in_adj[v]
    }

    /// The flat edge index; every edge or arc appears exactly once.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degrees of all vertices (out-degrees for directed graphs).
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Full-scan check of the structural invariants: simplicity, undirected
    /// symmetry, and consistency of the edge index with the degree sums.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        let degree_sum: usize = self.adj.iter().map(Vec::len).sum();
        if self.directed {
            if self.in_adj.len() != n {
                return Err(Error::invalid("in-neighbor table has wrong length"));
            }
            let in_sum: usize = self.in_adj.iter().map(Vec::len).sum();
            if degree_sum != self.edges.len() || in_sum != self.edges.len() {
                return Err(Error::invalid(
                    "edge index length disagrees with degree sums",
                ));
            }
        } else {
            if !self.in_adj.is_empty() {
                return Err(Error::invalid("undirected graph with in-neighbor table"));
            }
            if degree_sum != 2 * self.edges.len() {
                return Err(Error::invalid(
                    "edge index length disagrees with half the degree sum",
                ));
            }
        }
        let mut seen = HashSet::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            let key = if self.directed {
                (u, v)
            } else {
                (u.min(v), u.max(v))
            };
            if !seen.insert(key) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
            }
        }
        for (v, neighbors) in self.adj.iter().enumerate() {
            let mut local = HashSet::with_capacity(neighbors.len());
            for &u in neighbors {
                check_vertex(u, n)?;
                if u == v {
                    return Err(Error::invalid(format!("self-loop at vertex {v}")));
                }
                if !local.insert(u) {
                    return Err(Error::invalid(format!("parallel edge ({v}, {u})")));
                }
                if !self.directed && !self.adj[u].contains(&v) {
                    return Err(Error::invalid(format!(
                        "asymmetric adjacency: {u} missing from list of {v}"
                    )));
                }
                if self.directed && !self.in_adj[u].contains(&v) {
                    return Err(Error::invalid(format!(
                        "arc ({v}, {u}) missing from in-neighbor list of {u}"
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::UnknownVertex { id: v, n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undirected_symmetry_and_counts() {
        let g = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        g.validate().unwrap();
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(matches!(
            Graph::undirected(3, &[(1, 1)]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            Graph::undirected(3, &[(0, 1), (1, 0)]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            Graph::directed(3, &[(0, 1), (0, 1)]),
            Err(Error::InvalidArgument(_))
        ));
        // Anti-parallel arcs are two distinct arcs, not duplicates.
        assert!(Graph::directed(3, &[(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn rejects_out_of_range_vertices() {
        assert!(matches!(
            Graph::undirected(2, &[(0, 5)]),
            Err(Error::UnknownVertex { id: 5, n: 2 })
        ));
    }

    #[test]
    fn directed_tracks_both_sides() {
        let g = Graph::directed(3, &[(0, 1), (2, 1)]).unwrap();
        assert_eq!(g.out_degree(0), 1);
        assert_eq!(g.in_degree(1), 2);
        assert_eq!(g.in_neighbors(1), &[0, 2]);
        g.validate().unwrap();
    }

    #[test]
    fn from_adjacency_preserves_neighbor_order() {
        let adj = vec![vec![2, 1], vec![0], vec![0]];
        let g = Graph::from_adjacency(adj).unwrap();
        assert_eq!(g.neighbors(0), &[2, 1]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        let adj = vec![vec![1], vec![], vec![]];
        assert!(Graph::from_adjacency(adj).is_err());
    }
}
