//! Maximum independent set by branch and bound on bit sets.

use super::{Budget, SolveError};
use crate::bits::BitSet;
use crate::graph::Graph;

struct Search<'g> {
    g: &'g Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, candidates: &BitSet, budget: &mut Budget) -> Result<(), SolveError> {
        budget.tick()?;
        let remaining = candidates.count();
        if remaining == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        }
        if self.current.len() + remaining <= self.best.len() {
            return Ok(());
        }
        // Branch on the candidate with the most candidate neighbors; the
        // include branch first so good incumbents arrive early.
        let pivot = candidates
            .iter()
            .max_by_key(|&v| (self.g.neighbor_set(v).intersection_count(candidates), usize::MAX - v))
            .unwrap();

        let mut include = candidates.clone();
        include.remove(pivot);
        include.difference_with(self.g.neighbor_set(pivot));
        self.current.push(pivot);
        self.run(&include, budget)?;
        self.current.pop();

        let mut exclude = candidates.clone();
        exclude.remove(pivot);
        self.run(&exclude, budget)
    }
}

/// Deterministic exact maximum independent set.
pub fn max_independent_set(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, SolveError> {
    let mut search = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.run(&BitSet::full(g.order()), budget)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}
