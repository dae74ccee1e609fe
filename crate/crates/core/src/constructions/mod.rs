//! The explicit colorings and structural decompositions stated for wheels,
//! complete bipartite graphs and complete graphs. Every coloring is
//! re-verified as a total dominator coloring of the total graph before it is
//! returned; a failure is a construction bug and surfaces as an error.

mod bipartite;
mod complete;
mod tkn;
mod wheel;

pub use bipartite::bipartite_tdtc;
pub use complete::{complete_tdtc_fixture, COMPLETE_FIXTURE_SIZES};
pub use tkn::{tkn_automorphism, tkn_parts};
pub use wheel::{wheel_tdtc, wheel_total_tds};

use crate::graph::{total_graph, Graph, GraphError, ObjectId, TotalGraph};
use crate::verify::{self, Mode, Violation};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("{0}")]
    BadParam(String),
    #[error("{name} construction failed verification: {violations:?}")]
    Verification {
        name: &'static str,
        violations: Vec<Violation>,
    },
    #[error("no fixture for K_{n}; use the tdtc solver for general n")]
    UnsupportedFixture { n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A self-verified coloring of the total graph of `base`.
#[derive(Clone, Debug)]
pub struct BuiltColoring {
    base: Graph,
    total: TotalGraph,
    classes: Vec<Vec<ObjectId>>,
}

impl BuiltColoring {
    /// Verifies `classes` as a TDC of T(base) and wraps them.
    pub(crate) fn checked(
        name: &'static str,
        base: Graph,
        classes: Vec<Vec<ObjectId>>,
    ) -> Result<Self, ConstructError> {
        let total = total_graph(&base);
        let index_classes = verify::map_object_classes(&total, &classes)?;
        let report = verify::check_coloring(total.graph(), &index_classes, Mode::Tdtc)
            .map_err(|e| ConstructError::BadParam(e.to_string()))?;
        if !report.valid {
            return Err(ConstructError::Verification {
                name,
                violations: report.violations,
            });
        }
        Ok(Self {
            base,
            total,
            classes,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn total(&self) -> &TotalGraph {
        &self.total
    }

    pub fn classes(&self) -> &[Vec<ObjectId>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// An order-N graph together with an N-class total dominator total coloring:
/// the star K_{1,N−1} with its construction.
pub fn extremal_order_n(order: usize) -> Result<BuiltColoring, ConstructError> {
    if order < 3 {
        return Err(ConstructError::BadParam(format!(
            "extremal-order-n requires N >= 3, got {order}"
        )));
    }
    bipartite_tdtc(1, order - 1)
}

/// Parses fixture entries like `"v3"` / `"e1-10"`, keeping the written
/// numbers as-is; callers map them onto internal indices.
pub(crate) fn parse_fixture_class(text: &str) -> Vec<ObjectId> {
    text.split_whitespace()
        .map(|tok| {
            if let Some(num) = tok.strip_prefix('v') {
                ObjectId::Vertex(num.parse().expect("fixture vertex"))
            } else if let Some(pair) = tok.strip_prefix('e') {
                let (a, b) = pair.split_once('-').expect("fixture edge");
                ObjectId::edge(
                    a.parse().expect("fixture endpoint"),
                    b.parse().expect("fixture endpoint"),
                )
            } else {
                panic!("bad fixture token {tok:?}")
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn extremal_orders_three_to_twelve() {
        for order in 3..=12 {
            let built = extremal_order_n(order).unwrap();
            assert_eq!(built.base().order(), order);
            assert_eq!(built.class_count(), order);
        }
        assert!(extremal_order_n(2).is_err());
    }

    #[test]
    fn checked_rejects_invalid_classes() {
        let base = FamilySpec::Complete { n: 3 }.generate().unwrap();
        use ObjectId::{Edge as E, Vertex as V};
        // merge two classes of the valid K_3 coloring: adjacency violation
        let classes = vec![vec![V(0), E(1, 2), V(1), E(0, 2)], vec![V(2), E(0, 1)]];
        let err = BuiltColoring::checked("test", base, classes).unwrap_err();
        assert!(matches!(err, ConstructError::Verification { .. }));
    }
}
