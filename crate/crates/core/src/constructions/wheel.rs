//! Total dominator total colorings of wheels.
//!
//! Rims 3..=7 use the published five explicit colorings. Larger rims layer
//! singleton classes on the minimum total dominating set S_e (even rims) or
//! S_o (odd rims) of T(W_n) and color the remainder with ⌊n/2⌋ classes by a
//! cyclic block pattern, giving n + 1 classes in total.

use super::{parse_fixture_class, BuiltColoring, ConstructError};
use crate::graph::{FamilySpec, Graph, ObjectId};

const W3: &[&str] = &["e1-2 e0-3", "v1 e2-3", "v0 e1-3", "v2 e0-1", "v3 e0-2"];
const W4: &[&str] = &[
    "e0-1 v2",
    "e0-2 v3",
    "e0-3 v4",
    "e0-4 v1",
    "e1-2 e3-4 v0",
    "e2-3 e1-4",
];
const W5: &[&str] = &[
    "v1 v3 e0-2 e4-5",
    "v2 e3-4 e0-5",
    "e0-3 v4",
    "e0-1 e2-3",
    "e0-4 v5",
    "v0 e1-5",
    "e1-2",
];
const W6: &[&str] = &[
    "e1-2 e3-4 e5-6 v0",
    "e2-3 e4-5 e1-6",
    "e0-1 v2",
    "e0-2 v3",
    "e0-3 v4",
    "e0-4 v5",
    "e0-5 v6",
    "e0-6 v1",
];
const W7: &[&str] = &[
    "e0-1 e3-4 e5-6 v2 v7",
    "e0-2",
    "e1-2 e4-5 e6-7 e0-3",
    "e0-4",
    "e2-3 e0-5 v1 v4 v6",
    "e0-6",
    "e1-7 v3 v5",
    "v0",
    "e0-7",
];

/// Wheel numbering matches internal indexing (hub `v0` is vertex 0).
fn wheel_fixture(table: &[&str]) -> Vec<Vec<ObjectId>> {
    table.iter().map(|row| parse_fixture_class(row)).collect()
}

fn wheel_graph(rim: usize) -> Result<Graph, ConstructError> {
    if rim < 3 {
        return Err(ConstructError::BadParam(format!(
            "wheel-tdtc requires rim size n >= 3, got {rim}"
        )));
    }
    Ok(FamilySpec::Wheel { n: rim }.generate()?)
}

/// The minimum total dominating set of T(W_n) used for rims n ≥ 8: the even
/// spokes plus the hub, plus the last spoke when n is odd. Size ⌈n/2⌉ + 1.
pub fn wheel_total_tds(rim: usize) -> Result<Vec<ObjectId>, ConstructError> {
    if rim < 3 {
        return Err(ConstructError::BadParam(format!(
            "wheel TDS pattern requires rim size n >= 3, got {rim}"
        )));
    }
    let mut s: Vec<ObjectId> = (1..=rim / 2).map(|i| ObjectId::Edge(0, 2 * i)).collect();
    s.push(ObjectId::Vertex(0));
    if rim % 2 == 1 {
        s.push(ObjectId::Edge(0, rim));
    }
    Ok(s)
}

/// The ⌊n/2⌋ remainder classes on T(W_n) − S for rim n ≥ 8.
///
/// Block i (0 ≤ i < ⌊n/2⌋) colors, modulo ⌊n/2⌋ and with rim indices wrapping
/// past n back to 1:
///   e_{0(2i+1)} → i,  e_{(2i+1)(2i+2)} → i+1,  v_{2i+2} → i+2,
///   e_{(2i+2)(2i+3)} → i+3,  v_{2i+3} → i+4.
/// Odd rims leave v_1 and e_{n1} uncovered and need a reseamed wrap:
///   e_{(n−1)n} → 3,  v_n → 0,  e_{n1} → 2,  v_1 → 3.
fn wheel_remainder_classes(rim: usize) -> Vec<Vec<ObjectId>> {
    let n = rim;
    let h = n / 2;
    let wrap = |x: usize| (x - 1) % n + 1;
    let rim_edge = |a: usize| {
        let (p, q) = (wrap(a), wrap(a + 1));
        ObjectId::edge(p, q)
    };
    let mut classes = vec![Vec::new(); h];
    let mut put = |color: usize, obj: ObjectId| classes[color % h].push(obj);
    for i in 0..h {
        put(i, ObjectId::Edge(0, 2 * i + 1));
        put(i + 1, rim_edge(2 * i + 1));
        put(i + 2, ObjectId::Vertex(wrap(2 * i + 2)));
        put(i + 3, rim_edge(2 * i + 2));
        put(i + 4, ObjectId::Vertex(wrap(2 * i + 3)));
    }
    if n % 2 == 1 {
        let move_to = |classes: &mut Vec<Vec<ObjectId>>, obj: ObjectId, color: usize| {
            for class in classes.iter_mut() {
                class.retain(|&o| o != obj);
            }
            classes[color].push(obj);
        };
        move_to(&mut classes, ObjectId::edge(n - 1, n), 3);
        move_to(&mut classes, ObjectId::Vertex(n), 0);
        classes[2].push(ObjectId::edge(1, n));
        classes[3].push(ObjectId::Vertex(1));
    }
    classes
}

/// A verified min-TDTC of W_n: n + 2 classes for 3 ≤ n ≤ 7, n + 1 for n ≥ 8.
pub fn wheel_tdtc(rim: usize) -> Result<BuiltColoring, ConstructError> {
    let base = wheel_graph(rim)?;
    let classes = match rim {
        3 => wheel_fixture(W3),
        4 => wheel_fixture(W4),
        5 => wheel_fixture(W5),
        6 => wheel_fixture(W6),
        7 => wheel_fixture(W7),
        _ => {
            let mut classes: Vec<Vec<ObjectId>> = wheel_total_tds(rim)?
                .into_iter()
                .map(|obj| vec![obj])
                .collect();
            classes.extend(wheel_remainder_classes(rim));
            classes
        }
    };
    BuiltColoring::checked("wheel-tdtc", base, classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::total_graph;
    use crate::verify::is_total_dominating_set;

    #[test]
    fn fixtures_have_published_class_counts() {
        for (rim, classes) in [(3, 5), (4, 6), (5, 7), (6, 8), (7, 9)] {
            let built = wheel_tdtc(rim).unwrap();
            assert_eq!(built.class_count(), classes, "W_{rim}");
        }
    }

    #[test]
    fn fig_4_coloring_is_returned_for_rim_five() {
        use ObjectId::{Edge as E, Vertex as V};
        let built = wheel_tdtc(5).unwrap();
        assert_eq!(
            built.classes()[0],
            vec![V(1), V(3), E(0, 2), E(4, 5)],
        );
        assert_eq!(built.classes()[6], vec![E(1, 2)]);
    }

    #[test]
    fn scheme_rims_have_n_plus_one_classes() {
        for rim in 8..=14 {
            let built = wheel_tdtc(rim).unwrap();
            assert_eq!(built.class_count(), rim + 1, "W_{rim}");
        }
    }

    #[test]
    fn layered_sets_are_minimum_tds_of_the_total_graph() {
        for rim in 8..=50 {
            let t = total_graph(&FamilySpec::Wheel { n: rim }.generate().unwrap());
            let s = wheel_total_tds(rim).unwrap();
            assert_eq!(s.len(), rim.div_ceil(2) + 1);
            let idx = t.indices_of(&s).unwrap();
            assert!(is_total_dominating_set(t.graph(), &idx), "rim {rim}");
        }
    }

    #[test]
    fn rejects_small_rims() {
        assert!(wheel_tdtc(2).is_err());
    }
}
