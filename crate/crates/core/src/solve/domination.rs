//! Exact minimum total dominating sets by branch and bound, plus complete
//! enumeration of the optimal sets.
//!
//! Branching follows the covering structure: pick an undominated vertex with
//! the fewest remaining candidate dominators and split on which candidate
//! enters the set, excluding earlier candidates on later branches so every
//! solution is visited exactly once.

use super::{Budget, SolveError};
use crate::bits::BitSet;
use crate::graph::Graph;
use std::ops::ControlFlow;

struct State<'g> {
    g: &'g Graph,
    chosen: Vec<usize>,
    excluded: BitSet,
    dominated: BitSet,
}

impl State<'_> {
    fn new(g: &Graph) -> State<'_> {
        State {
            g,
            chosen: Vec::new(),
            excluded: BitSet::new(g.order()),
            dominated: BitSet::new(g.order()),
        }
    }

    fn undominated(&self) -> Vec<usize> {
        (0..self.g.order())
            .filter(|&v| !self.dominated.contains(v))
            .collect()
    }

    /// Coverage = number of currently undominated vertices a pick would fix.
    fn coverage(&self, v: usize) -> usize {
        self.g
            .neighbor_set(v)
            .iter()
            .filter(|&u| !self.dominated.contains(u))
            .count()
    }

    /// Lower bound on additional picks: each pick dominates at most the best
    /// available coverage.
    fn extra_needed(&self, undominated: &[usize]) -> usize {
        if undominated.is_empty() {
            return 0;
        }
        let maxcov = (0..self.g.order())
            .filter(|&v| !self.excluded.contains(v))
            .map(|v| self.coverage(v))
            .max()
            .unwrap_or(0);
        if maxcov == 0 {
            usize::MAX
        } else {
            undominated.len().div_ceil(maxcov)
        }
    }

    /// The undominated vertex with the fewest candidate dominators, and its
    /// candidates ordered by coverage, then degree, then id.
    fn branch_point(&self, undominated: &[usize]) -> (usize, Vec<usize>) {
        let candidates = |x: usize| -> Vec<usize> {
            self.g
                .neighbors(x)
                .filter(|&d| !self.excluded.contains(d))
                .collect()
        };
        let x = *undominated
            .iter()
            .min_by_key(|&&x| (candidates(x).len(), x))
            .unwrap();
        let mut cands = candidates(x);
        cands.sort_by_key(|&d| (usize::MAX - self.coverage(d), usize::MAX - self.g.degree(d), d));
        (x, cands)
    }

    fn choose(&mut self, d: usize) -> BitSet {
        let before = self.dominated.clone();
        self.chosen.push(d);
        self.dominated.union_with(self.g.neighbor_set(d));
        before
    }

    fn unchoose(&mut self, before: BitSet) {
        self.chosen.pop();
        self.dominated = before;
    }
}

fn greedy_tds(g: &Graph) -> Vec<usize> {
    let mut s = State::new(g);
    while let Some(&x) = s.undominated().first() {
        let best = (0..g.order())
            .max_by_key(|&v| (s.coverage(v), usize::MAX - v))
            .unwrap();
        debug_assert!(s.coverage(best) > 0, "vertex {x} cannot be dominated");
        s.choose(best);
    }
    s.chosen.sort_unstable();
    s.chosen
}

fn optimize(s: &mut State, best: &mut Vec<usize>, budget: &mut Budget) -> Result<(), SolveError> {
    budget.tick()?;
    let undominated = s.undominated();
    if undominated.is_empty() {
        if s.chosen.len() < best.len() {
            *best = s.chosen.clone();
            best.sort_unstable();
        }
        return Ok(());
    }
    let extra = s.extra_needed(&undominated);
    if extra == usize::MAX || s.chosen.len() + extra >= best.len() {
        return Ok(());
    }
    let (_, cands) = s.branch_point(&undominated);
    let mut newly_excluded = Vec::new();
    for d in cands {
        let before = s.choose(d);
        optimize(s, best, budget)?;
        s.unchoose(before);
        s.excluded.insert(d);
        newly_excluded.push(d);
    }
    for d in newly_excluded {
        s.excluded.remove(d);
    }
    Ok(())
}

/// Exact γ_t witness. The caller guarantees δ(g) ≥ 1.
pub fn min_total_dominating_set(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, SolveError> {
    let mut best = greedy_tds(g);
    let mut s = State::new(g);
    optimize(&mut s, &mut best, budget)?;
    Ok(best)
}

/// Callback for [`for_each_min_tds`]: break to stop the enumeration.
pub type TdsVisitor<'a> = &'a mut dyn FnMut(&[usize]) -> Result<ControlFlow<()>, SolveError>;

fn enumerate(
    s: &mut State,
    size: usize,
    budget: &mut Budget,
    f: TdsVisitor,
) -> Result<ControlFlow<()>, SolveError> {
    budget.tick()?;
    let undominated = s.undominated();
    if undominated.is_empty() {
        debug_assert_eq!(s.chosen.len(), size, "a TDS below the optimum cannot exist");
        let mut sol = s.chosen.clone();
        sol.sort_unstable();
        return f(&sol);
    }
    let extra = s.extra_needed(&undominated);
    if extra == usize::MAX || s.chosen.len() + extra > size {
        return Ok(ControlFlow::Continue(()));
    }
    let (_, cands) = s.branch_point(&undominated);
    let mut newly_excluded = Vec::new();
    let mut flow = ControlFlow::Continue(());
    for d in cands {
        let before = s.choose(d);
        flow = enumerate(s, size, budget, f)?;
        s.unchoose(before);
        if flow.is_break() {
            break;
        }
        s.excluded.insert(d);
        newly_excluded.push(d);
    }
    for d in newly_excluded {
        s.excluded.remove(d);
    }
    Ok(flow)
}

/// Visits every total dominating set of exactly `size` vertices (each once,
/// in a fixed order) until the callback breaks.
pub fn for_each_min_tds(
    g: &Graph,
    size: usize,
    budget: &mut Budget,
    mut f: impl FnMut(&[usize]) -> Result<ControlFlow<()>, SolveError>,
) -> Result<(), SolveError> {
    let mut s = State::new(g);
    let _ = enumerate(&mut s, size, budget, &mut f)?;
    Ok(())
}
