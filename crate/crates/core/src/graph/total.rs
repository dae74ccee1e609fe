//! Total graphs: the graph on V ∪ E whose vertices ("objects") are adjacent
//! whenever the underlying vertices/edges are adjacent or incident.

use super::{Graph, GraphError};
use std::fmt;

/// A vertex of a total graph named by what it is in the base graph: a base
/// vertex or a base edge with canonical endpoints `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectId {
    Vertex(usize),
    Edge(usize, usize),
}

impl ObjectId {
    pub fn edge(a: usize, b: usize) -> Self {
        ObjectId::Edge(a.min(b), a.max(b))
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ObjectId::Vertex(i) => write!(f, "V({i})"),
            ObjectId::Edge(i, j) => write!(f, "E({i},{j})"),
        }
    }
}

/// A subset of V ∪ E of a base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSet {
    pub objects: Vec<ObjectId>,
}

impl MixedSet {
    /// Checks that every member exists in `base`.
    pub fn validate(&self, base: &Graph) -> Result<(), GraphError> {
        for obj in &self.objects {
            match *obj {
                ObjectId::Vertex(i) => {
                    if i >= base.order() {
                        return Err(GraphError::VertexOutOfRange { v: i, n: base.order() });
                    }
                }
                ObjectId::Edge(i, j) => {
                    if !base.has_edge(i, j) {
                        return Err(GraphError::Family(format!(
                            "edge ({i},{j}) is not an edge of the base graph"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The total graph of a base graph, carrying the object labeling.
///
/// Object index layout: base vertex `i` is object `i`; the `k`-th base edge
/// (canonical order) is object `n + k`.
#[derive(Clone, Debug)]
pub struct TotalGraph {
    graph: Graph,
    base: Graph,
    objects: Vec<ObjectId>,
}

impl TotalGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    pub fn object(&self, index: usize) -> ObjectId {
        self.objects[index]
    }

    pub fn index_of(&self, obj: ObjectId) -> Option<usize> {
        match obj {
            ObjectId::Vertex(i) => (i < self.base.order()).then_some(i),
            ObjectId::Edge(a, b) => {
                let (i, j) = (a.min(b), a.max(b));
                self.base.edge_position(i, j).map(|k| self.base.order() + k)
            }
        }
    }

    /// Maps an object set to total-graph indices, failing on objects missing
    /// from the base graph.
    pub fn indices_of(&self, objs: &[ObjectId]) -> Result<Vec<usize>, GraphError> {
        objs.iter()
            .map(|&o| {
                self.index_of(o).ok_or_else(|| match o {
                    ObjectId::Vertex(i) => GraphError::VertexOutOfRange {
                        v: i,
                        n: self.base.order(),
                    },
                    ObjectId::Edge(i, j) => {
                        GraphError::Family(format!("edge ({i},{j}) is not an edge of the base graph"))
                    }
                })
            })
            .collect()
    }

    /// Paper-style name of an object, following the base graph's naming.
    pub fn object_name(&self, index: usize) -> String {
        match self.objects[index] {
            ObjectId::Vertex(i) => self.base.vertex_name(i),
            ObjectId::Edge(i, j) => {
                let a = self.base.vertex_name(i);
                let b = self.base.vertex_name(j);
                format!("e_{{{},{}}}", &a[2..], &b[2..])
            }
        }
    }
}

/// Builds T(G): order n + m, with objects adjacent iff the base elements are
/// adjacent or incident.
pub fn total_graph(base: &Graph) -> TotalGraph {
    let n = base.order();
    let m = base.size();
    let mut objects = Vec::with_capacity(n + m);
    objects.extend((0..n).map(ObjectId::Vertex));
    objects.extend(base.edges().iter().map(|&(i, j)| ObjectId::Edge(i, j)));

    let mut edges = Vec::new();
    // vertex-vertex: base adjacency
    edges.extend(base.edges().iter().copied());
    for (k, &(i, j)) in base.edges().iter().enumerate() {
        let e = n + k;
        // vertex-edge: incidence
        edges.push((i, e));
        edges.push((j, e));
        // edge-edge: shared endpoint (count each pair once)
        for (l, &(p, q)) in base.edges().iter().enumerate().skip(k + 1) {
            if p == i || p == j || q == i || q == j {
                edges.push((e, n + l));
            }
        }
    }
    let graph = Graph::from_edges(n + m, edges).expect("total graph construction is well formed");
    TotalGraph {
        graph,
        base: base.clone(),
        objects,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn total_of_k2_is_triangle() {
        let base = FamilySpec::CompleteBipartite { m: 1, n: 1 }.generate().unwrap();
        let t = total_graph(&base);
        assert_eq!(t.order(), 3);
        assert_eq!(t.graph().size(), 3);
        assert!(t.graph().has_edge(0, 1) && t.graph().has_edge(0, 2) && t.graph().has_edge(1, 2));
    }

    #[test]
    fn total_of_c4_order_and_size() {
        let base = FamilySpec::Cycle { n: 4 }.generate().unwrap();
        let t = total_graph(&base);
        assert_eq!(t.order(), 8);
        // size 3m + |E(L(G))|: L(C_4) = C_4 has 4 edges
        assert_eq!(t.graph().size(), 3 * 4 + 4);
    }

    #[test]
    fn total_of_complete_graphs_is_regular() {
        // K_n is (n-1)-regular, so T(K_n) is 2(n-1)-regular
        let base = FamilySpec::Complete { n: 5 }.generate().unwrap();
        let t = total_graph(&base);
        assert_eq!(t.order(), 15);
        assert!((0..15).all(|v| t.graph().degree(v) == 8));
    }

    #[test]
    fn object_indexing_round_trips() {
        let base = FamilySpec::Wheel { n: 4 }.generate().unwrap();
        let t = total_graph(&base);
        for idx in 0..t.order() {
            assert_eq!(t.index_of(t.object(idx)), Some(idx));
        }
        assert_eq!(t.index_of(ObjectId::edge(3, 1)), t.index_of(ObjectId::Edge(1, 3)));
        assert_eq!(t.index_of(ObjectId::Edge(1, 3)), None); // not a wheel edge
        assert_eq!(t.object_name(0), "v_0");
    }

    #[test]
    fn degree_identities_on_wheel() {
        let base = FamilySpec::Wheel { n: 5 }.generate().unwrap();
        let t = total_graph(&base);
        for idx in 0..t.order() {
            let expect = match t.object(idx) {
                ObjectId::Vertex(i) => 2 * base.degree(i),
                ObjectId::Edge(i, j) => base.degree(i) + base.degree(j),
            };
            assert_eq!(t.graph().degree(idx), expect);
        }
    }
}
