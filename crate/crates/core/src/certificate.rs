//! Machine-readable certificates tying an instance, a claimed value, a
//! computed value and a re-verified witness together.

use crate::graph::{emit_graph, FamilySpec, Graph, MixedSet, ObjectId};
use crate::notation;
use crate::solve::Witness;
use crate::verify::Mode;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Instance {
    Family(FamilySpec),
    EdgeList {
        digest: String,
        order: usize,
        size: usize,
    },
}

impl Instance {
    /// Digest of the canonical edge-list emission, for user-supplied graphs.
    pub fn from_graph(g: &Graph) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(emit_graph(g).as_bytes());
        let hex: String = hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        Instance::EdgeList {
            digest: format!("sha256:{hex}"),
            order: g.order(),
            size: g.size(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    VerifiedOnly,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EffortReport {
    pub nodes: u64,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub instance: Instance,
    pub invariant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<u64>,
    pub witness: Value,
    pub verdict: Verdict,
    pub effort: EffortReport,
}

impl Certificate {
    /// Match needs an agreeing claim; a lone computed value is verified-only.
    pub fn verdict_for(claimed: Option<u64>, computed: u64) -> Verdict {
        match claimed {
            Some(c) if c == computed => Verdict::Match,
            Some(_) => Verdict::Mismatch,
            None => Verdict::VerifiedOnly,
        }
    }
}

fn object_set_json(base: &Graph, objects: &[ObjectId]) -> Value {
    Value::Array(
        objects
            .iter()
            .map(|&o| notation::object_to_json(base, o))
            .collect(),
    )
}

/// Serializes a solver witness in paper notation against `base`'s naming.
pub fn witness_json(base: &Graph, witness: &Witness, mode: Mode) -> Value {
    match witness {
        Witness::VertexSet(set) => json!({
            "kind": "vertex-set",
            "objects": object_set_json(base, &set.iter().map(|&v| ObjectId::Vertex(v)).collect::<Vec<_>>()),
        }),
        Witness::MixedSet(MixedSet { objects }) => json!({
            "kind": "mixed-set",
            "objects": object_set_json(base, objects),
        }),
        Witness::VertexColoring(classes) => {
            let obj_classes: Vec<Vec<ObjectId>> = classes
                .iter()
                .map(|c| c.iter().map(|&v| ObjectId::Vertex(v)).collect())
                .collect();
            json!({
                "mode": mode.to_string(),
                "classes": notation::classes_to_json(base, &obj_classes),
            })
        }
        Witness::ObjectColoring(classes) => json!({
            "mode": mode.to_string(),
            "classes": notation::classes_to_json(base, classes),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn family_instance_serializes_with_tag() {
        let inst = Instance::Family(FamilySpec::Wheel { n: 5 });
        let v = serde_json::to_value(&inst).unwrap();
        assert_eq!(v, serde_json::json!({"family": "wheel", "n": 5}));
        let back: Instance = serde_json::from_value(v).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn digest_is_stable_under_reparse() {
        let g = FamilySpec::Cycle { n: 5 }.generate().unwrap();
        let a = Instance::from_graph(&g);
        let reparsed = crate::graph::parse_graph(&emit_graph(&g)).unwrap();
        let b = Instance::from_graph(&reparsed);
        assert_eq!(a, b);
    }

    #[test]
    fn verdicts() {
        assert_eq!(Certificate::verdict_for(Some(7), 7), Verdict::Match);
        assert_eq!(Certificate::verdict_for(Some(7), 8), Verdict::Mismatch);
        assert_eq!(Certificate::verdict_for(None, 8), Verdict::VerifiedOnly);
    }
}
