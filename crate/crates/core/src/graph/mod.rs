//! Undirected simple graphs over dense 0-based vertex ids, the graph
//! families treated by the library, and the structural operators on them.

mod family;
mod io;
mod iso;
mod ops;
mod total;

pub use family::FamilySpec;
pub use io::{emit_graph, parse_graph};
pub use iso::{are_isomorphic, ISO_ORDER_CAP};
pub use ops::{cartesian_product, induced_subgraph, line_graph};
pub use total::{total_graph, MixedSet, ObjectId, TotalGraph};

use crate::bits::BitSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {i} {j}")]
    DuplicateEdge { i: usize, j: usize },
    #[error("{0}")]
    Family(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("isomorphism test supports order <= {cap}, got {n}")]
    IsoOrderCap { n: usize, cap: usize },
}

/// How a graph's vertices print and how coloring JSON refers to them.
///
/// Paths, cycles and complete graphs use `v_1..v_n`. Wheels put the hub
/// first as `v_0` with the rim `v_1..v_n`. Complete bipartite graphs split
/// into `v_1..v_m` and `u_1..u_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexNaming {
    OneBased,
    Hub,
    Parts { m: usize },
}

impl VertexNaming {
    pub fn name(&self, v: usize) -> String {
        match *self {
            VertexNaming::OneBased => format!("v_{}", v + 1),
            VertexNaming::Hub => format!("v_{v}"),
            VertexNaming::Parts { m } => {
                if v < m {
                    format!("v_{}", v + 1)
                } else {
                    format!("u_{}", v - m + 1)
                }
            }
        }
    }
}

/// An immutable undirected simple graph.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<BitSet>,
    edges: Vec<(usize, usize)>,
    naming: VertexNaming,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list. Endpoints may come in
    /// either order; self-loops, out-of-range ids and duplicates are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![BitSet::new(n); n];
        let mut canon = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            let (i, j) = (a.min(b), a.max(b));
            if adj[i].contains(j) {
                return Err(GraphError::DuplicateEdge { i, j });
            }
            adj[i].insert(j);
            adj[j].insert(i);
            canon.push((i, j));
        }
        canon.sort_unstable();
        Ok(Self {
            adj,
            edges: canon,
            naming: VertexNaming::OneBased,
        })
    }

    pub(crate) fn with_naming(mut self, naming: VertexNaming) -> Self {
        self.naming = naming;
        self
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.order() && b < self.order() && self.adj[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    /// Position of edge `{a, b}` in the canonical edge order.
    pub fn edge_position(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn naming(&self) -> VertexNaming {
        self.naming
    }

    pub fn vertex_name(&self, v: usize) -> String {
        self.naming.name(v)
    }

    /// Handshake identity: the edge count equals half the degree sum.
    pub fn degree_sum(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_canonicalizes_and_validates() {
        let g = Graph::from_edges(3, [(2, 0), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree_sum(), 2 * g.size());
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        assert!(!g.has_edge(0, 1));

        assert_eq!(
            Graph::from_edges(2, [(0, 0)]).unwrap_err(),
            GraphError::SelfLoop { v: 0 }
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge { i: 0, j: 1 }
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 5)]).unwrap_err(),
            GraphError::VertexOutOfRange { v: 5, n: 2 }
        );
    }

    #[test]
    fn naming_styles() {
        assert_eq!(VertexNaming::OneBased.name(0), "v_1");
        assert_eq!(VertexNaming::Hub.name(0), "v_0");
        assert_eq!(VertexNaming::Parts { m: 2 }.name(1), "v_2");
        assert_eq!(VertexNaming::Parts { m: 2 }.name(2), "u_1");
    }
}
