//! The TDS-layered constructive bound: singleton classes on a minimum total
//! dominating set S plus an exact proper coloring of G − S.
//!
//! The class count is γ_t(G) + χ(G[V−S]), so S is chosen among the minimum
//! total dominating sets to minimize the remainder's chromatic number; the
//! enumeration stops early once a set meets the clique-derived lower bound
//! max(ω̃(G) − γ_t, 0). Every vertex has a neighbor in S whose singleton
//! class it dominates, so the output is always a valid total dominator
//! coloring; it is re-verified anyway.

use super::color::{chromatic_number, greedy_clique};
use super::domination::{for_each_min_tds, min_total_dominating_set};
use super::{Budget, SolveError, SolveOptions};
use crate::graph::{induced_subgraph, Graph};
use crate::verify::{self, Mode};
use std::ops::ControlFlow;

#[derive(Clone, Debug)]
pub struct LayeredColoring {
    /// Singleton classes for the TDS first, then the remainder classes.
    pub classes: Vec<Vec<usize>>,
    pub tds: Vec<usize>,
    pub remainder_chromatic: usize,
    pub nodes: u64,
}

impl LayeredColoring {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Requires δ(g) ≥ 1.
pub fn tds_layered_coloring(g: &Graph, opts: &SolveOptions) -> Result<LayeredColoring, SolveError> {
    super::require_min_degree_one(g)?;
    let mut budget = Budget::new(opts.node_budget);
    let gamma = min_total_dominating_set(g, &mut budget)?.len();
    let target = greedy_clique(g).len().saturating_sub(gamma);

    let mut best: Option<(Vec<usize>, Vec<Vec<usize>>, usize)> = None;
    let enumeration = for_each_min_tds(g, gamma, &mut budget, |tds| {
        let keep: Vec<usize> = (0..g.order()).filter(|v| !tds.contains(v)).collect();
        let (rest, back) = induced_subgraph(g, &keep).expect("subset is valid");
        if let Some((_, _, bound)) = &best {
            if greedy_clique(&rest).len() >= *bound {
                return Ok(ControlFlow::Continue(()));
            }
        }
        let mut inner = Budget::new(u64::MAX);
        let (chi, classes) = chromatic_number(&rest, &mut inner)?;
        if best.as_ref().is_none_or(|(_, _, b)| chi < *b) {
            let mapped = classes
                .iter()
                .map(|cls| cls.iter().map(|&v| back[v]).collect())
                .collect();
            best = Some((tds.to_vec(), mapped, chi));
        }
        Ok(if best.as_ref().unwrap().2 <= target {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        })
    });
    match enumeration {
        Ok(()) => {}
        // A partial enumeration already yields a valid layered coloring.
        Err(SolveError::Budget { .. }) if best.is_some() => {}
        Err(e) => return Err(e),
    }

    let (tds, remainder_classes, chi) = best.expect("at least one minimum TDS exists");
    let mut classes: Vec<Vec<usize>> = tds.iter().map(|&v| vec![v]).collect();
    classes.extend(remainder_classes);

    let report = verify::check_coloring(g, &classes, Mode::Tdc).map_err(|e| {
        SolveError::InternalVerification {
            invariant: "tds-layered",
            detail: e.to_string(),
        }
    })?;
    super::internal("tds-layered", report.valid, || {
        format!("{:?}", report.violations)
    })?;

    Ok(LayeredColoring {
        classes,
        tds,
        remainder_chromatic: chi,
        nodes: budget.used,
    })
}
