//! Coloring validation in four modes and the common-neighborhood machinery.
//!
//! A coloring is an ordered partition of the target's vertex set into
//! nonempty classes. `proper`/`total` check that no class contains an
//! adjacent pair (for `total` the target is a total graph); `tdc`/`tdtc`
//! additionally require every object to totally dominate some class, i.e. be
//! adjacent to every member of it. Violations are enumerated exhaustively.

use crate::bits::BitSet;
use crate::graph::{Graph, ObjectId, TotalGraph};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Proper,
    Total,
    Tdc,
    Tdtc,
}

impl Mode {
    pub fn requires_domination(self) -> bool {
        matches!(self, Mode::Tdc | Mode::Tdtc)
    }

    /// Whether the CLI-level target of this mode is the total graph of the
    /// input rather than the input itself.
    pub fn on_total_graph(self) -> bool {
        matches!(self, Mode::Total | Mode::Tdtc)
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "proper" => Some(Mode::Proper),
            "total" => Some(Mode::Total),
            "tdc" => Some(Mode::Tdc),
            "tdtc" => Some(Mode::Tdtc),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::Proper => "proper",
            Mode::Total => "total",
            Mode::Tdc => "tdc",
            Mode::Tdtc => "tdtc",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("class {class} is empty")]
    EmptyClass { class: usize },
    #[error("object index {index} is not in the target (order {n})")]
    NotInTarget { index: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Target object covered by no class.
    Missing { object: usize },
    /// Target object covered by more than one class.
    Duplicated { object: usize, first: usize, second: usize },
    EmptyClass { class: usize },
    /// Two adjacent objects share a class.
    AdjacentInClass { class: usize, a: usize, b: usize },
    /// Object totally dominates no class (tdc/tdtc only).
    Undominated { object: usize },
}

impl Violation {
    /// Human-readable description, with object indices rendered by `name`
    /// (class indices print 1-based).
    pub fn describe(&self, name: &dyn Fn(usize) -> String) -> String {
        match self {
            Violation::Missing { object } => format!("object {} is in no class", name(*object)),
            Violation::Duplicated {
                object,
                first,
                second,
            } => format!(
                "object {} is in classes {} and {}",
                name(*object),
                first + 1,
                second + 1
            ),
            Violation::EmptyClass { class } => format!("class {} is empty", class + 1),
            Violation::AdjacentInClass { class, a, b } => format!(
                "adjacent objects {} and {} share class {}",
                name(*a),
                name(*b),
                class + 1
            ),
            Violation::Undominated { object } => {
                format!("object {} totally dominates no class", name(*object))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub mode: Mode,
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// For each target object, the class indices it totally dominates.
    pub domination: Vec<Vec<usize>>,
}

fn class_bits(target: &Graph, class: &[usize]) -> Result<BitSet, VerifyError> {
    let n = target.order();
    let mut bits = BitSet::new(n);
    for &x in class {
        if x >= n {
            return Err(VerifyError::NotInTarget { index: x, n });
        }
        bits.insert(x);
    }
    Ok(bits)
}

/// All objects adjacent to every member of `class` (the class's common
/// neighborhood CN). Members never appear in their own CN since no object is
/// adjacent to itself.
pub fn common_neighborhood(target: &Graph, class: &[usize]) -> Result<Vec<usize>, VerifyError> {
    if class.is_empty() {
        return Err(VerifyError::EmptyClass { class: 0 });
    }
    let _ = class_bits(target, class)?;
    let mut cn = BitSet::full(target.order());
    for &x in class {
        cn.intersect_with(target.neighbor_set(x));
    }
    Ok(cn.iter().collect())
}

pub fn totally_dominates(target: &Graph, x: usize, class: &[usize]) -> Result<bool, VerifyError> {
    if class.is_empty() {
        return Err(VerifyError::EmptyClass { class: 0 });
    }
    if x >= target.order() {
        return Err(VerifyError::NotInTarget { index: x, n: target.order() });
    }
    let bits = class_bits(target, class)?;
    Ok(bits.is_subset_of(target.neighbor_set(x)))
}

/// Checks `classes` against `target` in the given mode. Structural problems
/// (missed or repeated objects, empty classes) are reported as violations;
/// only objects outside the target are an error.
pub fn check_coloring(
    target: &Graph,
    classes: &[Vec<usize>],
    mode: Mode,
) -> Result<VerifyReport, VerifyError> {
    let n = target.order();
    let mut violations = Vec::new();

    let mut bits = Vec::with_capacity(classes.len());
    for (c, class) in classes.iter().enumerate() {
        if class.is_empty() {
            violations.push(Violation::EmptyClass { class: c });
        }
        bits.push(class_bits(target, class)?);
    }

    let mut seen: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            seen[x].push(c);
        }
    }
    for (x, owners) in seen.iter().enumerate() {
        match owners.as_slice() {
            [] => violations.push(Violation::Missing { object: x }),
            [_] => {}
            [first, second, ..] => violations.push(Violation::Duplicated {
                object: x,
                first: *first,
                second: *second,
            }),
        }
    }

    for (c, class) in classes.iter().enumerate() {
        for (k, &a) in class.iter().enumerate() {
            for &b in &class[k + 1..] {
                if target.has_edge(a, b) {
                    violations.push(Violation::AdjacentInClass {
                        class: c,
                        a: a.min(b),
                        b: a.max(b),
                    });
                }
            }
        }
    }

    let domination: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            bits.iter()
                .enumerate()
                .filter(|(c, cb)| !classes[*c].is_empty() && cb.is_subset_of(target.neighbor_set(x)))
                .map(|(c, _)| c)
                .collect()
        })
        .collect();
    if mode.requires_domination() {
        for (x, dominated) in domination.iter().enumerate() {
            if dominated.is_empty() {
                violations.push(Violation::Undominated { object: x });
            }
        }
    }

    let valid = violations.is_empty();
    Ok(VerifyReport {
        mode,
        valid,
        violations,
        domination,
    })
}

/// Maps object-level classes onto total-graph indices.
pub fn map_object_classes(
    total: &TotalGraph,
    classes: &[Vec<ObjectId>],
) -> Result<Vec<Vec<usize>>, crate::graph::GraphError> {
    classes.iter().map(|cls| total.indices_of(cls)).collect()
}

pub fn is_independent_set(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(k, &a)| set[k + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

/// Every vertex of `g` must have a neighbor in `set`.
pub fn is_total_dominating_set(g: &Graph, set: &[usize]) -> bool {
    let mut dominated = BitSet::new(g.order());
    for &s in set {
        if s >= g.order() {
            return false;
        }
        dominated.union_with(g.neighbor_set(s));
    }
    dominated.count() == g.order()
}
