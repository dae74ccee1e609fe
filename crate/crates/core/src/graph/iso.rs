//! Exact isomorphism testing for small graphs by backtracking with degree
//! and neighbor-degree pruning. Supports the "≅" claims checked in tests.

use super::{Graph, GraphError};

pub const ISO_ORDER_CAP: usize = 64;

/// Returns a vertex bijection `g -> h` preserving adjacency, or `None` when
/// the graphs are not isomorphic. Both orders must be at most [`ISO_ORDER_CAP`].
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    for n in [g.order(), h.order()] {
        if n > ISO_ORDER_CAP {
            return Err(GraphError::IsoOrderCap { n, cap: ISO_ORDER_CAP });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    let n = g.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    let sig = |gr: &Graph, v: usize| {
        let mut nd: Vec<usize> = gr.neighbors(v).map(|u| gr.degree(u)).collect();
        nd.sort_unstable();
        (gr.degree(v), nd)
    };
    let gs: Vec<_> = (0..n).map(|v| sig(g, v)).collect();
    let hs: Vec<_> = (0..n).map(|v| sig(h, v)).collect();
    {
        let mut a = gs.clone();
        let mut b = hs.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(None);
        }
    }

    // Most-constrained-first: rarest signature class, then high degree.
    let mut order: Vec<usize> = (0..n).collect();
    let class_size = |v: usize| gs.iter().filter(|s| **s == gs[v]).count();
    order.sort_by_key(|&v| (class_size(v), usize::MAX - g.degree(v), v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(g, h, &gs, &hs, &order, 0, &mut mapping, &mut used) {
        Ok(Some(mapping))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    g: &Graph,
    h: &Graph,
    gs: &[(usize, Vec<usize>)],
    hs: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'cand: for w in 0..h.order() {
        if used[w] || hs[w] != gs[v] {
            continue;
        }
        for &u in &order[..depth] {
            if g.has_edge(v, u) != h.has_edge(w, mapping[u]) {
                continue 'cand;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if assign(g, h, gs, hs, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}
