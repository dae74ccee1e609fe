//! Exact solvers for the invariants evaluated here: α, α_mix, γ_t, γ_tm,
//! χ, χ_T, χ_d^t, χ_d^tt, and the TDS-layered constructive upper bound.
//!
//! Every search is deterministic (fixed tie-breaking) and budgeted: running
//! past the node budget is an explicit inconclusive error, never a wrong
//! answer. Every witness is re-checked against the verify module before it
//! is returned.

mod color;
mod domination;
mod layered;
mod mis;

pub use color::greedy_clique;
pub use layered::{tds_layered_coloring, LayeredColoring};

use crate::graph::{Graph, MixedSet, ObjectId, TotalGraph};
use crate::verify::{self, Mode};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Search-node budget; exceeding it aborts with [`SolveError::Budget`].
    pub node_budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            node_budget: 100_000_000,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("total domination undefined: vertex {v} is isolated")]
    IsolatedVertex { v: usize },
    #[error("node budget exhausted after {nodes} nodes; result inconclusive")]
    Budget { nodes: u64 },
    #[error("coloring search supports at most {cap} objects, got {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("solver produced an invalid witness for {invariant}: {detail}")]
    InternalVerification {
        invariant: &'static str,
        detail: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Invariant {
    Alpha,
    AlphaMix,
    GammaT,
    GammaTm,
    Chi,
    ChiT,
    ChiDt,
    ChiDtt,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Alpha => "alpha",
            Invariant::AlphaMix => "alpha-mix",
            Invariant::GammaT => "gamma-t",
            Invariant::GammaTm => "gamma-tm",
            Invariant::Chi => "chi",
            Invariant::ChiT => "chi-t",
            Invariant::ChiDt => "chi-dt",
            Invariant::ChiDtt => "chi-dtt",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "alpha" => Invariant::Alpha,
            "alpha-mix" => Invariant::AlphaMix,
            "gamma-t" => Invariant::GammaT,
            "gamma-tm" => Invariant::GammaTm,
            "chi" => Invariant::Chi,
            "chi-t" => Invariant::ChiT,
            "chi-dt" => Invariant::ChiDt,
            "chi-dtt" => Invariant::ChiDtt,
            _ => return None,
        })
    }

    /// Domination-style invariants are undefined on graphs with isolated
    /// vertices.
    pub fn needs_min_degree_one(self) -> bool {
        matches!(
            self,
            Invariant::GammaT | Invariant::GammaTm | Invariant::ChiDt | Invariant::ChiDtt
        )
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Search witness: vertex-level on the solved graph, or object-level when the
/// invariant lives on the total graph of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    VertexSet(Vec<usize>),
    MixedSet(MixedSet),
    VertexColoring(Vec<Vec<usize>>),
    ObjectColoring(Vec<Vec<ObjectId>>),
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: u64,
    pub witness: Witness,
    pub nodes: u64,
    pub verified: bool,
}

pub(crate) struct Budget {
    limit: u64,
    pub used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), SolveError> {
        self.used += 1;
        if self.used > self.limit {
            Err(SolveError::Budget { nodes: self.used })
        } else {
            Ok(())
        }
    }
}

fn require_min_degree_one(g: &Graph) -> Result<(), SolveError> {
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            return Err(SolveError::IsolatedVertex { v });
        }
    }
    Ok(())
}

fn internal(
    invariant: &'static str,
    ok: bool,
    detail: impl FnOnce() -> String,
) -> Result<(), SolveError> {
    if ok {
        Ok(())
    } else {
        Err(SolveError::InternalVerification {
            invariant,
            detail: detail(),
        })
    }
}

fn objects_of(total: &TotalGraph, indices: &[usize]) -> Vec<ObjectId> {
    indices.iter().map(|&i| total.object(i)).collect()
}

fn object_classes_of(total: &TotalGraph, classes: &[Vec<usize>]) -> Vec<Vec<ObjectId>> {
    classes.iter().map(|c| objects_of(total, c)).collect()
}

/// α: maximum independent set of `g`.
pub fn independence_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let mut budget = Budget::new(opts.node_budget);
    let set = mis::max_independent_set(g, &mut budget)?;
    internal("alpha", verify::is_independent_set(g, &set), || {
        format!("{set:?} is not independent")
    })?;
    Ok(SolveResult {
        invariant: Invariant::Alpha,
        value: set.len() as u64,
        witness: Witness::VertexSet(set),
        nodes: budget.used,
        verified: true,
    })
}

/// α_mix(G) = α(T(G)), with the witness translated back to objects of G.
pub fn mixed_independence_number(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    let total = crate::graph::total_graph(g);
    let mut budget = Budget::new(opts.node_budget);
    let set = mis::max_independent_set(total.graph(), &mut budget)?;
    internal(
        "alpha-mix",
        verify::is_independent_set(total.graph(), &set),
        || format!("{set:?} is not independent in T(G)"),
    )?;
    Ok(SolveResult {
        invariant: Invariant::AlphaMix,
        value: set.len() as u64,
        witness: Witness::MixedSet(MixedSet {
            objects: objects_of(&total, &set),
        }),
        nodes: budget.used,
        verified: true,
    })
}

/// γ_t: minimum total dominating set of `g`; requires δ(g) ≥ 1.
pub fn total_domination_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    require_min_degree_one(g)?;
    let mut budget = Budget::new(opts.node_budget);
    let set = domination::min_total_dominating_set(g, &mut budget)?;
    internal("gamma-t", verify::is_total_dominating_set(g, &set), || {
        format!("{set:?} is not a TDS")
    })?;
    Ok(SolveResult {
        invariant: Invariant::GammaT,
        value: set.len() as u64,
        witness: Witness::VertexSet(set),
        nodes: budget.used,
        verified: true,
    })
}

/// γ_tm(G) = γ_t(T(G)), with the witness as a mixed set of G.
pub fn total_mixed_domination_number(
    g: &Graph,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    require_min_degree_one(g)?;
    let total = crate::graph::total_graph(g);
    let mut budget = Budget::new(opts.node_budget);
    let set = domination::min_total_dominating_set(total.graph(), &mut budget)?;
    internal(
        "gamma-tm",
        verify::is_total_dominating_set(total.graph(), &set),
        || format!("{set:?} is not a TDS of T(G)"),
    )?;
    Ok(SolveResult {
        invariant: Invariant::GammaTm,
        value: set.len() as u64,
        witness: Witness::MixedSet(MixedSet {
            objects: objects_of(&total, &set),
        }),
        nodes: budget.used,
        verified: true,
    })
}

/// χ: chromatic number of `g`.
pub fn chromatic_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let mut budget = Budget::new(opts.node_budget);
    let (value, classes) = color::chromatic_number(g, &mut budget)?;
    let report = verify::check_coloring(g, &classes, Mode::Proper)
        .map_err(|e| SolveError::InternalVerification {
            invariant: "chi",
            detail: e.to_string(),
        })?;
    internal("chi", report.valid, || format!("{:?}", report.violations))?;
    Ok(SolveResult {
        invariant: Invariant::Chi,
        value: value as u64,
        witness: Witness::VertexColoring(classes),
        nodes: budget.used,
        verified: true,
    })
}

/// χ_T(G) = χ(T(G)).
pub fn total_chromatic_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let total = crate::graph::total_graph(g);
    let mut budget = Budget::new(opts.node_budget);
    let (value, classes) = color::chromatic_number(total.graph(), &mut budget)?;
    let report = verify::check_coloring(total.graph(), &classes, Mode::Total)
        .map_err(|e| SolveError::InternalVerification {
            invariant: "chi-t",
            detail: e.to_string(),
        })?;
    internal("chi-t", report.valid, || format!("{:?}", report.violations))?;
    Ok(SolveResult {
        invariant: Invariant::ChiT,
        value: value as u64,
        witness: Witness::ObjectColoring(object_classes_of(&total, &classes)),
        nodes: budget.used,
        verified: true,
    })
}

/// χ_d^t: minimum class count over total dominator colorings of `g`.
pub fn tdc_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    require_min_degree_one(g)?;
    let mut budget = Budget::new(opts.node_budget);
    let (value, classes) = color::dominator_chromatic_number(g, &mut budget)?;
    let report = verify::check_coloring(g, &classes, Mode::Tdc)
        .map_err(|e| SolveError::InternalVerification {
            invariant: "chi-dt",
            detail: e.to_string(),
        })?;
    internal("chi-dt", report.valid, || format!("{:?}", report.violations))?;
    Ok(SolveResult {
        invariant: Invariant::ChiDt,
        value: value as u64,
        witness: Witness::VertexColoring(classes),
        nodes: budget.used,
        verified: true,
    })
}

/// χ_d^tt(G) = χ_d^t(T(G)), witness in object form.
pub fn tdtc_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    require_min_degree_one(g)?;
    let total = crate::graph::total_graph(g);
    let mut budget = Budget::new(opts.node_budget);
    let (value, classes) = color::dominator_chromatic_number(total.graph(), &mut budget)?;
    let report = verify::check_coloring(total.graph(), &classes, Mode::Tdtc)
        .map_err(|e| SolveError::InternalVerification {
            invariant: "chi-dtt",
            detail: e.to_string(),
        })?;
    internal("chi-dtt", report.valid, || {
        format!("{:?}", report.violations)
    })?;
    Ok(SolveResult {
        invariant: Invariant::ChiDtt,
        value: value as u64,
        witness: Witness::ObjectColoring(object_classes_of(&total, &classes)),
        nodes: budget.used,
        verified: true,
    })
}
