//! Exact (dominator) chromatic numbers by iterative deepening on the class
//! count with DSATUR branching.
//!
//! Feasibility for a given k is decided by exhaustive backtracking over
//! graphs of at most 64 vertices, so adjacency rows, color classes and all
//! per-vertex search state pack into single words. Symmetry is broken by
//! pre-coloring a greedily found clique and by only opening the lowest empty
//! color. In dominator mode a per-vertex "alive" mask tracks which classes a
//! vertex could still totally dominate; a vertex with no alive class prunes
//! the branch.

use super::{Budget, SolveError};
use crate::graph::Graph;

pub(crate) const COLOR_ORDER_CAP: usize = 64;

/// Deterministic greedy clique: seeded on the highest-degree vertex, grown by
/// highest degree inside the common neighborhood, ids breaking ties.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let pick = |cands: &[usize]| -> usize {
        *cands
            .iter()
            .max_by_key(|&&v| (g.degree(v), usize::MAX - v))
            .unwrap()
    };
    let all: Vec<usize> = (0..n).collect();
    let mut clique = vec![pick(&all)];
    let mut cands: Vec<usize> = g.neighbors(clique[0]).collect();
    while !cands.is_empty() {
        let v = pick(&cands);
        clique.push(v);
        cands.retain(|&u| u != v && g.has_edge(u, v));
    }
    clique
}

struct Engine<'g> {
    g: &'g Graph,
    n: usize,
    k: usize,
    dominator: bool,
    adj: Vec<u64>,
    all_vertices: u64,
    color: Vec<usize>,
    class_members: Vec<u64>,
    class_size: Vec<u32>,
    nonempty: u64,
    nonempty_count: usize,
    /// Colors present in each vertex's neighborhood (saturation).
    sat: Vec<u64>,
    /// Classes whose current members are all neighbors of the vertex.
    alive: Vec<u64>,
    uncolored_neighbors: Vec<u32>,
    uncolored: u64,
}

struct Frame {
    v: usize,
    c: usize,
    sat_changed: u64,
    alive_changed: u64,
}

const UNCOLORED: usize = usize::MAX;

impl<'g> Engine<'g> {
    fn new(g: &'g Graph, k: usize, dominator: bool) -> Self {
        let n = g.order();
        debug_assert!(n <= COLOR_ORDER_CAP && k <= COLOR_ORDER_CAP);
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).fold(0u64, |acc, u| acc | 1 << u))
            .collect();
        let all_vertices = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Engine {
            g,
            n,
            k,
            dominator,
            adj,
            all_vertices,
            color: vec![UNCOLORED; n],
            class_members: vec![0; k],
            class_size: vec![0; k],
            nonempty: 0,
            nonempty_count: 0,
            sat: vec![0; n],
            alive: vec![u64::MAX >> (64 - k.max(1)); n],
            uncolored_neighbors: (0..n).map(|v| g.degree(v) as u32).collect(),
            uncolored: all_vertices,
        }
    }

    fn assign(&mut self, v: usize, c: usize) -> Frame {
        let cbit = 1u64 << c;
        self.color[v] = c;
        self.uncolored &= !(1 << v);
        self.class_members[c] |= 1 << v;
        self.class_size[c] += 1;
        if self.class_size[c] == 1 {
            self.nonempty |= cbit;
            self.nonempty_count += 1;
        }
        let mut sat_changed = 0u64;
        let mut nbrs = self.adj[v];
        while nbrs != 0 {
            let x = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if self.sat[x] & cbit == 0 {
                self.sat[x] |= cbit;
                sat_changed |= 1 << x;
            }
            self.uncolored_neighbors[x] -= 1;
        }
        let mut alive_changed = 0u64;
        if self.dominator {
            // v joined class c, so c dies for every vertex not adjacent to v
            // (including v itself: nothing is adjacent to itself).
            let mut others = !self.adj[v] & self.all_vertices;
            while others != 0 {
                let x = others.trailing_zeros() as usize;
                others &= others - 1;
                if self.alive[x] & cbit != 0 {
                    self.alive[x] &= !cbit;
                    alive_changed |= 1 << x;
                }
            }
        }
        Frame {
            v,
            c,
            sat_changed,
            alive_changed,
        }
    }

    fn undo(&mut self, frame: Frame) {
        let Frame {
            v,
            c,
            mut sat_changed,
            mut alive_changed,
        } = frame;
        let cbit = 1u64 << c;
        self.color[v] = UNCOLORED;
        self.uncolored |= 1 << v;
        self.class_members[c] &= !(1u64 << v);
        self.class_size[c] -= 1;
        if self.class_size[c] == 0 {
            self.nonempty &= !cbit;
            self.nonempty_count -= 1;
        }
        while sat_changed != 0 {
            let x = sat_changed.trailing_zeros() as usize;
            sat_changed &= sat_changed - 1;
            self.sat[x] &= !cbit;
        }
        let mut nbrs = self.adj[v];
        while nbrs != 0 {
            let x = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            self.uncolored_neighbors[x] += 1;
        }
        while alive_changed != 0 {
            let x = alive_changed.trailing_zeros() as usize;
            alive_changed &= alive_changed - 1;
            self.alive[x] |= cbit;
        }
    }

    /// Every vertex must either dominate a nonempty class already confined to
    /// its neighborhood, or still have an uncolored neighbor that could open
    /// one of the remaining empty classes.
    fn domination_viable(&self) -> bool {
        let fresh_possible = self.nonempty_count < self.k;
        (0..self.n).all(|x| {
            self.alive[x] & self.nonempty != 0
                || (fresh_possible && self.uncolored_neighbors[x] > 0)
        })
    }

    fn fully_dominated(&self) -> bool {
        (0..self.n).all(|x| self.alive[x] & self.nonempty != 0)
    }

    /// DSATUR order: maximum saturation, then maximum degree, then lowest id.
    fn next_vertex(&self) -> usize {
        let mut best = UNCOLORED;
        let mut best_key = (0usize, 0usize, 0usize);
        let mut rest = self.uncolored;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let key = (
                self.sat[v].count_ones() as usize,
                self.g.degree(v),
                usize::MAX - v,
            );
            if best == UNCOLORED || key > best_key {
                best = v;
                best_key = key;
            }
        }
        best
    }

    fn search(&mut self, budget: &mut Budget) -> Result<bool, SolveError> {
        budget.tick()?;
        if self.uncolored == 0 {
            return Ok(!self.dominator || self.fully_dominated());
        }
        let v = self.next_vertex();
        let hi = (self.nonempty_count + 1).min(self.k);
        for c in 0..hi {
            if self.sat[v] & (1 << c) != 0 {
                continue;
            }
            let frame = self.assign(v, c);
            let viable = !self.dominator || self.domination_viable();
            if viable && self.search(budget)? {
                return Ok(true);
            }
            self.undo(frame);
        }
        Ok(false)
    }
}

/// Is there a (dominator) coloring with at most `k` classes? On success the
/// returned classes are the nonempty ones in color order.
fn feasible(
    g: &Graph,
    k: usize,
    clique: &[usize],
    dominator: bool,
    budget: &mut Budget,
) -> Result<Option<Vec<Vec<usize>>>, SolveError> {
    let mut engine = Engine::new(g, k, dominator);
    for (c, &v) in clique.iter().enumerate() {
        engine.assign(v, c);
    }
    if dominator && !engine.domination_viable() {
        return Ok(None);
    }
    if !engine.search(budget)? {
        return Ok(None);
    }
    let mut classes = vec![Vec::new(); k];
    for v in 0..g.order() {
        classes[engine.color[v]].push(v);
    }
    classes.retain(|c| !c.is_empty());
    Ok(Some(classes))
}

fn iterate(
    g: &Graph,
    dominator: bool,
    budget: &mut Budget,
) -> Result<(usize, Vec<Vec<usize>>), SolveError> {
    let n = g.order();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    if n > COLOR_ORDER_CAP {
        return Err(SolveError::TooLarge {
            n,
            cap: COLOR_ORDER_CAP,
        });
    }
    let clique = greedy_clique(g);
    for k in clique.len()..=n {
        if let Some(classes) = feasible(g, k, &clique, dominator, budget)? {
            debug_assert_eq!(classes.len(), k, "a smaller k would have been feasible");
            return Ok((classes.len(), classes));
        }
    }
    unreachable!("n singleton classes are always feasible");
}

/// Exact χ with a minimum proper coloring witness.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<(usize, Vec<Vec<usize>>), SolveError> {
    iterate(g, false, budget)
}

/// Exact χ_d^t with a minimum total dominator coloring witness. The caller
/// guarantees δ(g) ≥ 1.
pub fn dominator_chromatic_number(
    g: &Graph,
    budget: &mut Budget,
) -> Result<(usize, Vec<Vec<usize>>), SolveError> {
    iterate(g, true, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{total_graph, FamilySpec, Graph};

    fn chi(g: &Graph) -> usize {
        chromatic_number(g, &mut Budget::new(u64::MAX)).unwrap().0
    }

    fn chi_dt(g: &Graph) -> usize {
        dominator_chromatic_number(g, &mut Budget::new(u64::MAX)).unwrap().0
    }

    #[test]
    fn greedy_clique_finds_the_spoke_clique_of_total_wheels() {
        // the hub and its spokes induce K_{n+1} inside T(W_n)
        for n in [4, 6, 9] {
            let t = total_graph(&FamilySpec::Wheel { n }.generate().unwrap());
            assert_eq!(greedy_clique(t.graph()).len(), n + 1);
        }
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chi(&FamilySpec::Cycle { n: 6 }.generate().unwrap()), 2);
        assert_eq!(chi(&FamilySpec::Cycle { n: 7 }.generate().unwrap()), 3);
        assert_eq!(chi(&FamilySpec::Complete { n: 6 }.generate().unwrap()), 6);
        assert_eq!(chi(&FamilySpec::Wheel { n: 5 }.generate().unwrap()), 4);
        assert_eq!(chi(&FamilySpec::Wheel { n: 4 }.generate().unwrap()), 3);
        assert_eq!(chi(&Graph::from_edges(3, []).unwrap()), 1);
    }

    #[test]
    fn total_coloring_via_total_graph() {
        // χ_T(C_n) is 3 when 3 | n, else 4
        for n in 3..=9 {
            let t = total_graph(&FamilySpec::Cycle { n }.generate().unwrap());
            let expect = if n % 3 == 0 { 3 } else { 4 };
            assert_eq!(chi(t.graph()), expect, "cycle {n}");
        }
    }

    #[test]
    fn dominator_chromatic_small_cases() {
        assert_eq!(chi_dt(&FamilySpec::Complete { n: 3 }.generate().unwrap()), 3);
        assert_eq!(chi_dt(&FamilySpec::Complete { n: 2 }.generate().unwrap()), 2);
        // C_4 = K_{2,2}: the two sides dominate each other, so two classes do
        assert_eq!(chi_dt(&FamilySpec::Cycle { n: 4 }.generate().unwrap()), 2);
        assert_eq!(
            chi_dt(&FamilySpec::CompleteBipartite { m: 2, n: 3 }.generate().unwrap()),
            2
        );
    }

    #[test]
    fn remainder_chromatic_matches_wheel_proof() {
        // χ(T(W_8) − S_e) = 4 with S_e = {e_02, e_04, e_06, e_08, v_0}
        use crate::graph::{induced_subgraph, ObjectId};
        let w8 = FamilySpec::Wheel { n: 8 }.generate().unwrap();
        let t = total_graph(&w8);
        let s: Vec<usize> = [
            ObjectId::Vertex(0),
            ObjectId::Edge(0, 2),
            ObjectId::Edge(0, 4),
            ObjectId::Edge(0, 6),
            ObjectId::Edge(0, 8),
        ]
        .iter()
        .map(|&o| t.index_of(o).unwrap())
        .collect();
        let keep: Vec<usize> = (0..t.order()).filter(|v| !s.contains(v)).collect();
        let (rest, _) = induced_subgraph(t.graph(), &keep).unwrap();
        assert_eq!(chi(&rest), 4);
    }

    #[test]
    fn order_cap_is_reported() {
        let g = FamilySpec::Path { n: 70 }.generate().unwrap();
        assert_eq!(
            chromatic_number(&g, &mut Budget::new(u64::MAX)).unwrap_err(),
            SolveError::TooLarge { n: 70, cap: 64 }
        );
    }
}
