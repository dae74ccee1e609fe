//! Line graph, Cartesian product and induced subgraph.

use super::{Graph, GraphError};

/// L(G): one vertex per edge of `g`, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let m = g.size();
    let mut edges = Vec::new();
    for (k, &(i, j)) in g.edges().iter().enumerate() {
        for (l, &(p, q)) in g.edges().iter().enumerate().skip(k + 1) {
            if p == i || p == j || q == i || q == j {
                edges.push((k, l));
            }
        }
    }
    Graph::from_edges(m, edges).expect("line graph construction is well formed")
}

/// G □ H on the pair set, with `(g1,h1) ~ (g2,h2)` iff one coordinate is equal
/// and the other pair is an edge.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let hn = h.order();
    let idx = |a: usize, b: usize| a * hn + b;
    let mut edges = Vec::new();
    for a in 0..g.order() {
        for &(b1, b2) in h.edges() {
            edges.push((idx(a, b1), idx(a, b2)));
        }
    }
    for b in 0..hn {
        for &(a1, a2) in g.edges() {
            edges.push((idx(a1, b), idx(a2, b)));
        }
    }
    Graph::from_edges(g.order() * hn, edges).expect("product construction is well formed")
}

/// G[S] together with the index remapping table (new id -> old id).
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
    let mut back = vec![usize::MAX; g.order()];
    for (new, &old) in s.iter().enumerate() {
        if old >= g.order() {
            return Err(GraphError::VertexOutOfRange { v: old, n: g.order() });
        }
        if back[old] != usize::MAX {
            return Err(GraphError::Family(format!("vertex {old} repeated in subset")));
        }
        back[old] = new;
    }
    let mut edges = Vec::new();
    for (k, &a) in s.iter().enumerate() {
        for (l, &b) in s.iter().enumerate().skip(k + 1) {
            if g.has_edge(a, b) {
                edges.push((k, l));
            }
        }
    }
    Ok((Graph::from_edges(s.len(), edges)?, s.to_vec()))
}
