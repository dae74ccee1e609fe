//! The graph families studied here: paths, cycles, wheels, complete and
//! complete bipartite graphs.

use super::{Graph, GraphError, VertexNaming};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A named family instance. Wheel parameters count the rim, so `Wheel { n }`
/// has order `n + 1` with hub `v_0` and rim `v_1..v_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Wheel { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Wheel { n } => write!(f, "W_{n}"),
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::CompleteBipartite { m, n } => write!(f, "K_{{{m},{n}}}"),
        }
    }
}

impl FamilySpec {
    /// Builds the family member, rejecting out-of-range parameters with the
    /// violated bound named.
    pub fn generate(&self) -> Result<Graph, GraphError> {
        match *self {
            FamilySpec::Path { n } => {
                if n < 1 {
                    return Err(GraphError::Family(format!("path requires n >= 1, got {n}")));
                }
                Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return Err(GraphError::Family(format!(
                        "cycle requires n >= 3, got {n}"
                    )));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            FamilySpec::Wheel { n } => {
                if n < 3 {
                    return Err(GraphError::Family(format!(
                        "wheel requires rim size n >= 3, got {n}"
                    )));
                }
                let spokes = (1..=n).map(|i| (0, i));
                let rim = (1..=n).map(|i| (i, i % n + 1));
                Ok(Graph::from_edges(n + 1, spokes.chain(rim))?.with_naming(VertexNaming::Hub))
            }
            FamilySpec::Complete { n } => {
                if n < 1 {
                    return Err(GraphError::Family(format!(
                        "complete requires n >= 1, got {n}"
                    )));
                }
                Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            }
            FamilySpec::CompleteBipartite { m, n } => {
                if m < 1 || n < 1 {
                    return Err(GraphError::Family(format!(
                        "complete-bipartite requires m, n >= 1, got ({m},{n})"
                    )));
                }
                let edges = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j)));
                Ok(Graph::from_edges(m + n, edges)?.with_naming(VertexNaming::Parts { m }))
            }
        }
    }
}
