//! Paper-notation JSON for objects of V ∪ E.
//!
//! A vertex serializes as `{"v": k}` (or `{"u": k}` for the second part of a
//! complete bipartite graph) and an edge as `{"e": [a, b]}`. The numbers
//! follow the base graph's display naming: wheels count the hub as 0, complete
//! bipartite edges are `[i, j]` for `v_i u_j`, and everything else is 1-based.

use crate::graph::{Graph, ObjectId, VertexNaming};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NotationError {
    #[error("object {0} is not in the target graph")]
    NotInTarget(String),
    #[error("malformed object {0}: {1}")]
    Malformed(String, String),
}

fn vertex_to_parts(naming: VertexNaming, v: usize) -> (&'static str, usize) {
    match naming {
        VertexNaming::OneBased => ("v", v + 1),
        VertexNaming::Hub => ("v", v),
        VertexNaming::Parts { m } => {
            if v < m {
                ("v", v + 1)
            } else {
                ("u", v - m + 1)
            }
        }
    }
}

fn resolve_vertex(naming: VertexNaming, n: usize, tag: &str, num: usize) -> Option<usize> {
    match naming {
        VertexNaming::OneBased => {
            (tag == "v" && (1..=n).contains(&num)).then(|| num - 1)
        }
        VertexNaming::Hub => (tag == "v" && num < n).then_some(num),
        VertexNaming::Parts { m } => match tag {
            "v" => (1..=m).contains(&num).then(|| num - 1),
            "u" => (1..=n - m).contains(&num).then(|| m + num - 1),
            _ => None,
        },
    }
}

/// Display tag and number of a vertex, e.g. `("v", 0)` for a wheel hub or
/// `("u", 3)` in a bipartite second part.
pub fn vertex_to_display(base: &Graph, v: usize) -> (&'static str, usize) {
    vertex_to_parts(base.naming(), v)
}

/// Inverse of [`vertex_to_display`].
pub fn vertex_from_display(base: &Graph, tag: &str, num: usize) -> Option<usize> {
    resolve_vertex(base.naming(), base.order(), tag, num)
}

/// Display endpoint numbers of an edge: part-ordered `(v_i, u_j)` numbers for
/// bipartite naming, ascending vertex numbers otherwise.
pub fn edge_to_display(base: &Graph, i: usize, j: usize) -> (usize, usize) {
    let (lo, hi) = (i.min(j), i.max(j));
    match base.naming() {
        VertexNaming::Parts { m } => (lo + 1, hi - m + 1),
        naming => (vertex_to_parts(naming, lo).1, vertex_to_parts(naming, hi).1),
    }
}

/// Inverse of [`edge_to_display`]; `None` when the pair is not an edge.
pub fn edge_from_display(base: &Graph, a: usize, b: usize) -> Option<(usize, usize)> {
    let (i, j) = match base.naming() {
        VertexNaming::Parts { .. } => (
            resolve_vertex(base.naming(), base.order(), "v", a)?,
            resolve_vertex(base.naming(), base.order(), "u", b)?,
        ),
        naming => {
            if a >= b {
                return None;
            }
            (
                resolve_vertex(naming, base.order(), "v", a)?,
                resolve_vertex(naming, base.order(), "v", b)?,
            )
        }
    };
    base.has_edge(i, j).then_some((i.min(j), i.max(j)))
}

pub fn object_to_json(base: &Graph, obj: ObjectId) -> Value {
    match obj {
        ObjectId::Vertex(i) => {
            let (tag, num) = vertex_to_parts(base.naming(), i);
            json!({ tag: num })
        }
        ObjectId::Edge(i, j) => match base.naming() {
            VertexNaming::Parts { m } => {
                let (lo, hi) = (i.min(j), i.max(j));
                json!({ "e": [lo + 1, hi - m + 1] })
            }
            naming => {
                let (_, a) = vertex_to_parts(naming, i.min(j));
                let (_, b) = vertex_to_parts(naming, i.max(j));
                json!({ "e": [a, b] })
            }
        },
    }
}

pub fn object_from_json(base: &Graph, value: &Value) -> Result<ObjectId, NotationError> {
    let malformed = |why: &str| NotationError::Malformed(value.to_string(), why.into());
    let obj = value
        .as_object()
        .ok_or_else(|| malformed("expected a JSON object"))?;
    if obj.len() != 1 {
        return Err(malformed("expected exactly one of \"v\", \"u\", \"e\""));
    }
    let (key, val) = obj.iter().next().unwrap();
    let n = base.order();
    match key.as_str() {
        "v" | "u" => {
            let num = val
                .as_u64()
                .ok_or_else(|| malformed("vertex number must be a nonnegative integer"))?
                as usize;
            let idx = resolve_vertex(base.naming(), n, key, num)
                .ok_or_else(|| NotationError::NotInTarget(value.to_string()))?;
            Ok(ObjectId::Vertex(idx))
        }
        "e" => {
            let pair = val
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| malformed("edge must be a pair [a, b]"))?;
            let nums: Vec<usize> = pair
                .iter()
                .map(|x| x.as_u64().map(|u| u as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| malformed("edge endpoints must be nonnegative integers"))?;
            let (a, b) = match base.naming() {
                VertexNaming::Parts { .. } => {
                    let a = resolve_vertex(base.naming(), n, "v", nums[0])
                        .ok_or_else(|| NotationError::NotInTarget(value.to_string()))?;
                    let b = resolve_vertex(base.naming(), n, "u", nums[1])
                        .ok_or_else(|| NotationError::NotInTarget(value.to_string()))?;
                    (a, b)
                }
                naming => {
                    if nums[0] >= nums[1] {
                        return Err(malformed("edge endpoints must satisfy a < b"));
                    }
                    let a = resolve_vertex(naming, n, "v", nums[0])
                        .ok_or_else(|| NotationError::NotInTarget(value.to_string()))?;
                    let b = resolve_vertex(naming, n, "v", nums[1])
                        .ok_or_else(|| NotationError::NotInTarget(value.to_string()))?;
                    (a, b)
                }
            };
            if !base.has_edge(a, b) {
                return Err(NotationError::NotInTarget(value.to_string()));
            }
            Ok(ObjectId::edge(a, b))
        }
        other => Err(malformed(&format!("unknown object tag {other:?}"))),
    }
}

/// Paper-style display name, e.g. `v_0`, `u_3`, `e_{0,2}`.
pub fn object_display(base: &Graph, obj: ObjectId) -> String {
    match obj {
        ObjectId::Vertex(i) => {
            let (tag, num) = vertex_to_parts(base.naming(), i);
            format!("{tag}_{num}")
        }
        ObjectId::Edge(i, j) => match base.naming() {
            VertexNaming::Parts { m } => format!("e_{{{},{}}}", i.min(j) + 1, i.max(j) - m + 1),
            naming => {
                let (_, a) = vertex_to_parts(naming, i.min(j));
                let (_, b) = vertex_to_parts(naming, i.max(j));
                format!("e_{{{a},{b}}}")
            }
        },
    }
}

pub fn classes_to_json(base: &Graph, classes: &[Vec<ObjectId>]) -> Value {
    Value::Array(
        classes
            .iter()
            .map(|cls| Value::Array(cls.iter().map(|&o| object_to_json(base, o)).collect()))
            .collect(),
    )
}

pub fn classes_from_json(base: &Graph, value: &Value) -> Result<Vec<Vec<ObjectId>>, NotationError> {
    let arr = value.as_array().ok_or_else(|| {
        NotationError::Malformed(value.to_string(), "classes must be an array".into())
    })?;
    arr.iter()
        .map(|cls| {
            let objs = cls.as_array().ok_or_else(|| {
                NotationError::Malformed(cls.to_string(), "class must be an array".into())
            })?;
            objs.iter().map(|o| object_from_json(base, o)).collect()
        })
        .collect()
}
