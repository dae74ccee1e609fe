//! Total dominator total colorings of complete bipartite graphs K_{m,n},
//! n ≥ m ≥ 1, with the published class counts: m + n for m ≤ 2 (except
//! K_{1,1}), and m + n + 1 otherwise.

use super::{BuiltColoring, ConstructError};
use crate::graph::{FamilySpec, ObjectId};

/// Objects of K_{m,n}: part vertices v_1..v_m are indices 0..m−1, the other
/// part u_1..u_n are m..m+n−1, and e_{ij} joins v_i with u_j (1-based i, j).
fn v(i: usize) -> ObjectId {
    ObjectId::Vertex(i - 1)
}

fn u(m: usize, j: usize) -> ObjectId {
    ObjectId::Vertex(m + j - 1)
}

fn e(m: usize, i: usize, j: usize) -> ObjectId {
    ObjectId::Edge(i - 1, m + j - 1)
}

pub fn bipartite_tdtc(m: usize, n: usize) -> Result<BuiltColoring, ConstructError> {
    if m < 1 || n < m {
        return Err(ConstructError::BadParam(format!(
            "bipartite-tdtc requires n >= m >= 1, got ({m},{n})"
        )));
    }
    let base = FamilySpec::CompleteBipartite { m, n }.generate()?;

    let classes: Vec<Vec<ObjectId>> = if (m, n) == (1, 1) {
        // T(K_{1,1}) is a triangle; three singletons
        vec![vec![v(1)], vec![u(1, 1)], vec![e(1, 1, 1)]]
    } else if m == 1 {
        // V_1 = {e_11, u_n}, V_i = {e_1i, u_{i-1}}, V_{n+1} = {v_1}
        let mut classes = vec![vec![e(m, 1, 1), u(m, n)]];
        for i in 2..=n {
            classes.push(vec![e(m, 1, i), u(m, i - 1)]);
        }
        classes.push(vec![v(1)]);
        classes
    } else if m == 2 {
        // V_1 = {e_11, e_2n}, V_i = {e_1i, e_2(i-1)}, V_{n+1} = V, V_{n+2} = U
        let mut classes = vec![vec![e(m, 1, 1), e(m, 2, n)]];
        for i in 2..=n {
            classes.push(vec![e(m, 1, i), e(m, 2, i - 1)]);
        }
        classes.push(vec![v(1), v(2)]);
        classes.push((1..=n).map(|j| u(m, j)).collect());
        classes
    } else {
        // edge classes by residue j − i + 1 (mod n), each v_i a singleton,
        // all of U one class
        let mut classes: Vec<Vec<ObjectId>> = vec![Vec::new(); n];
        for i in 1..=m {
            for j in 1..=n {
                let residue = (n + j - ((i - 1) % n)) % n; // (j - i + 1) mod n
                classes[residue].push(e(m, i, j));
            }
        }
        classes.extend((1..=m).map(|i| vec![v(i)]));
        classes.push((1..=n).map(|j| u(m, j)).collect());
        classes
    };

    BuiltColoring::checked("bipartite-tdtc", base, classes)
}
