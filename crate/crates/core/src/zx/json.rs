// zxopt - quantum circuit optimisation by search over ZX-calculus
//         congruences
// Copyright (C) 2026 - The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! JSON dump of diagrams.
//!
//! ```json
//! {"vertices": [{"id": 0, "kind": "Boundary", "phase": {"num": 0, "den": 1}}, ...],
//!  "edges": [{"source": 0, "target": 2, "type": "Hadamard"}, ...],
//!  "inputs": [0], "outputs": [1]}
//! ```
//!
//! Parallel edges appear once per copy. Vertex ids are preserved.

use super::{EdgeType, VertexKind, ZxDiagram, ZxError, V};
use crate::phase::Phase;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: V,
    pub kind: VertexKind,
    pub phase: Phase,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub source: V,
    pub target: V,
    #[serde(rename = "type")]
    pub ty: EdgeType,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub inputs: Vec<V>,
    pub outputs: Vec<V>,
}

impl From<&ZxDiagram> for DiagramJson {
    fn from(d: &ZxDiagram) -> DiagramJson {
        DiagramJson {
            vertices: d
                .vertices()
                .map(|v| VertexJson {
                    id: v,
                    kind: d.kind(v),
                    phase: d.phase(v),
                })
                .collect(),
            edges: d
                .edge_list()
                .into_iter()
                .map(|(source, target, ty)| EdgeJson { source, target, ty })
                .collect(),
            inputs: d.inputs().to_vec(),
            outputs: d.outputs().to_vec(),
        }
    }
}

impl TryFrom<&DiagramJson> for ZxDiagram {
    type Error = ZxError;

    fn try_from(j: &DiagramJson) -> Result<ZxDiagram, ZxError> {
        let bound = j.vertices.iter().map(|v| v.id + 1).max().unwrap_or(0);
        let mut d = ZxDiagram::new();
        let mut present = vec![false; bound];
        for v in &j.vertices {
            if present[v.id] {
                return Err(ZxError::Malformed(format!("duplicate vertex {}", v.id)));
            }
            present[v.id] = true;
        }
        for (id, &p) in present.iter().enumerate() {
            let data = j.vertices.iter().find(|v| v.id == id);
            let (kind, phase) = data.map_or((VertexKind::Z, Phase::zero()), |v| (v.kind, v.phase));
            d.add_vertex(kind, phase);
            if !p {
                d.remove_vertex(id);
            }
        }
        for e in &j.edges {
            if !d.contains(e.source) || !d.contains(e.target) {
                return Err(ZxError::Malformed(format!(
                    "edge {}-{} has a missing endpoint",
                    e.source, e.target
                )));
            }
            d.add_edge(e.source, e.target, e.ty);
        }
        for &b in j.inputs.iter().chain(&j.outputs) {
            if !d.contains(b) || !d.is_boundary(b) {
                return Err(ZxError::Malformed(format!(
                    "{} is not a boundary vertex",
                    b
                )));
            }
        }
        d.set_inputs(j.inputs.clone());
        d.set_outputs(j.outputs.clone());
        Ok(d)
    }
}

pub fn to_json(d: &ZxDiagram) -> String {
    serde_json::to_string_pretty(&DiagramJson::from(d)).expect("diagrams always serialise")
}

pub fn from_json(s: &str) -> Result<ZxDiagram, ZxError> {
    let j: DiagramJson = serde_json::from_str(s).map_err(|e| ZxError::Malformed(e.to_string()))?;
    ZxDiagram::try_from(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{random_circuit, CircuitParams};
    use crate::zx::{from_circuit, to_graph_like};

    #[test]
    fn round_trip_keeps_ids() {
        let c = random_circuit(&CircuitParams::new(3, 25), 11).unwrap();
        // graph-like normalisation leaves holes in the id space
        let d = to_graph_like(&from_circuit(&c));
        let back = from_json(&to_json(&d)).unwrap();
        assert_eq!(DiagramJson::from(&back), DiagramJson::from(&d));
        assert_eq!(back.edge_list(), d.edge_list());
    }

    #[test]
    fn field_names() {
        let d = from_circuit(&crate::circuit::Circuit::new(1));
        let v: serde_json::Value = serde_json::from_str(&to_json(&d)).unwrap();
        assert_eq!(v["edges"][0]["type"], "Simple");
        assert_eq!(v["vertices"][0]["kind"], "Boundary");
        assert_eq!(v["vertices"][0]["phase"]["den"], 1);
        assert!(from_json(r#"{"vertices":[],"edges":[{"source":0,"target":1,"type":"Simple"}],"inputs":[],"outputs":[]}"#).is_err());
    }
}
