//! Structure of T(K_n): its n + 1 edge-disjoint K_n parts and the swap
//! automorphisms between them.

use super::ConstructError;
use crate::graph::{total_graph, FamilySpec, ObjectId, TotalGraph};

/// The vertex sets of the n + 1 edge-disjoint copies of K_n inside T(K_n):
/// part 0 is V itself, and part i is {v_i} ∪ {e_ij : j ≠ i} (1-based i).
pub fn tkn_parts(n: usize) -> Result<Vec<Vec<ObjectId>>, ConstructError> {
    if n < 2 {
        return Err(ConstructError::BadParam(format!(
            "tkn-parts requires n >= 2, got {n}"
        )));
    }
    let mut parts = vec![(0..n).map(ObjectId::Vertex).collect::<Vec<_>>()];
    for i in 0..n {
        let mut part = vec![ObjectId::Vertex(i)];
        part.extend((0..n).filter(|&j| j != i).map(|j| ObjectId::edge(i, j)));
        part.sort_unstable();
        parts.push(part);
    }
    Ok(parts)
}

/// The involution φ_i of T(K_n): v_i stays fixed, e_ij ↔ v_j for j ≠ i, and
/// every other edge object stays fixed. Returned as a permutation of object
/// indices alongside the total graph it acts on.
pub fn tkn_automorphism(n: usize, i: usize) -> Result<(TotalGraph, Vec<usize>), ConstructError> {
    if n < 2 {
        return Err(ConstructError::BadParam(format!(
            "tkn-automorphism requires n >= 2, got {n}"
        )));
    }
    if i < 1 || i > n {
        return Err(ConstructError::BadParam(format!(
            "tkn-automorphism index must satisfy 1 <= i <= n, got {i}"
        )));
    }
    let i = i - 1;
    let total = total_graph(&FamilySpec::Complete { n }.generate()?);
    let image = |obj: ObjectId| -> ObjectId {
        match obj {
            ObjectId::Vertex(j) if j != i => ObjectId::edge(i, j),
            ObjectId::Edge(p, q) if p == i || q == i => ObjectId::Vertex(p + q - i),
            other => other,
        }
    };
    let perm = (0..total.order())
        .map(|idx| {
            total
                .index_of(image(total.object(idx)))
                .expect("image object exists")
        })
        .collect();
    Ok((total, perm))
}
