//! The published minimum TDTC class lists for complete graphs. K_2 and K_3
//! are immediate, K_4 reuses the W_3 coloring (the graphs coincide), and
//! n = 5, 6, 7, 8, 11 are the published lists verbatim.

use super::{parse_fixture_class, wheel_tdtc, BuiltColoring, ConstructError};
use crate::graph::{FamilySpec, ObjectId};

pub const COMPLETE_FIXTURE_SIZES: &[usize] = &[2, 3, 4, 5, 6, 7, 8, 11];

const K2: &[&str] = &["v1", "v2", "e1-2"];
const K3: &[&str] = &["v1 e2-3", "v2 e1-3", "v3 e1-2"];
const K5: &[&str] = &[
    "v3 e1-2 e4-5",
    "v4 e2-3 e1-5",
    "v5 e1-3 e2-4",
    "e2-5 e3-4",
    "e3-5 e1-4",
    "v1",
    "v2",
];
const K6: &[&str] = &[
    "v3 e1-2 e4-5",
    "v4 e1-3 e2-6",
    "v5 e1-6 e2-3",
    "v6 e1-4 e2-5",
    "e3-6 e1-5 e2-4",
    "e3-4 e5-6",
    "e3-5 e4-6",
    "v1",
    "v2",
];
const K7: &[&str] = &[
    "v4 e1-6 e2-5 e3-7",
    "v5 e6-7 e1-3 e2-4",
    "v6 e1-5 e2-3 e4-7",
    "v7 e3-5 e2-6 e1-4",
    "v3 e4-6 e5-7",
    "v1 e2-7 e3-6",
    "v2 e3-4",
    "e1-2",
    "e4-5",
    "e5-6",
    "e1-7",
];
const K8: &[&str] = &[
    "v8 e1-3 e2-4 e5-6",
    "v7 e2-5 e3-6 e4-8",
    "v6 e1-8 e2-7 e3-4",
    "v5 e1-6 e2-8 e3-7",
    "v4 e1-7 e2-6 e3-5",
    "v2 e1-5 e4-7 e3-8",
    "e5-7 e6-8",
    "e4-6 e5-8",
    "e4-5 e6-7",
    "e1-4 e7-8",
    "v3 e1-2",
    "e2-3",
    "v1",
];
const K11: &[&str] = &[
    "v11 e1-10 e2-6 e3-7 e4-8 e5-9",
    "v10 e1-9 e2-8 e3-5 e4-6 e7-11",
    "v9 e1-11 e2-7 e3-4 e8-10 e5-6",
    "v8 e1-4 e2-11 e3-9 e6-10 e5-7",
    "v7 e1-8 e2-9 e3-6 e4-10 e5-11",
    "v4 e1-5 e2-10 e3-11 e6-8 e7-9",
    "v5 e1-6 e2-4 e3-10 e9-11",
    "v6 e1-7 e2-5 e3-8 e4-9",
    "v3 e1-2 e4-11 e5-8 e7-10",
    "e6-11 e9-10",
    "e4-7 e5-10",
    "e8-9 e10-11",
    "v2 e1-3",
    "e6-7 e8-11",
    "e6-9 e7-8",
    "v1",
    "e2-3",
    "e4-5",
];

fn fixture(table: &[&str]) -> Vec<Vec<ObjectId>> {
    let shift = |o: ObjectId| match o {
        ObjectId::Vertex(i) => ObjectId::Vertex(i - 1),
        ObjectId::Edge(i, j) => ObjectId::Edge(i - 1, j - 1),
    };
    table
        .iter()
        .map(|row| parse_fixture_class(row).into_iter().map(shift).collect())
        .collect()
}

/// A verified min-TDTC of K_n for n in the fixture set {2,3,4,5,6,7,8,11}.
pub fn complete_tdtc_fixture(n: usize) -> Result<BuiltColoring, ConstructError> {
    let table = match n {
        2 => K2,
        3 => K3,
        4 => {
            // K_4 and W_3 are the same graph on the same indices, so the W_3
            // classes apply unchanged.
            let classes = wheel_tdtc(3)?.classes().to_vec();
            let base = FamilySpec::Complete { n: 4 }.generate()?;
            return BuiltColoring::checked("complete-tdtc-fixture", base, classes);
        }
        5 => K5,
        6 => K6,
        7 => K7,
        8 => K8,
        11 => K11,
        _ => return Err(ConstructError::UnsupportedFixture { n }),
    };
    let base = FamilySpec::Complete { n }.generate()?;
    BuiltColoring::checked("complete-tdtc-fixture", base, fixture(table))
}
