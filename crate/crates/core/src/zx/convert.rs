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

use super::{EdgeType, VertexKind, ZxDiagram, V};
use crate::circuit::{Circuit, Gate};
use crate::phase::Phase;

/// Translate a circuit gate by gate. Hadamards become Hadamard edges,
/// phase gates become single spiders and each CNOT becomes a Z spider on the
/// control joined to an X spider on the target.
pub fn from_circuit(c: &Circuit) -> ZxDiagram {
    let n = c.n_qubits();
    let mut d = ZxDiagram::new();
    let inputs: Vec<V> = (0..n)
        .map(|_| d.add_vertex(VertexKind::Boundary, Phase::zero()))
        .collect();
    // the open end of each qubit line and the type of the edge to attach next
    let mut last: Vec<(V, EdgeType)> = inputs.iter().map(|&b| (b, EdgeType::Simple)).collect();

    let place = |d: &mut ZxDiagram, last: &mut Vec<(V, EdgeType)>, q: usize, kind, phase| {
        let v = d.add_vertex(kind, phase);
        let (prev, ty) = last[q];
        d.add_edge(prev, v, ty);
        last[q] = (v, EdgeType::Simple);
        v
    };

    for g in c.gates() {
        match *g {
            Gate::H(q) => last[q].1 = last[q].1.toggle(),
            Gate::ZPhase(q, p) => {
                place(&mut d, &mut last, q, VertexKind::Z, p);
            }
            Gate::XPhase(q, p) => {
                place(&mut d, &mut last, q, VertexKind::X, p);
            }
            Gate::Cnot { control, target } => {
                let z = place(&mut d, &mut last, control, VertexKind::Z, Phase::zero());
                let x = place(&mut d, &mut last, target, VertexKind::X, Phase::zero());
                d.add_edge(z, x, EdgeType::Simple);
            }
            Gate::Cz(a, b) => {
                let za = place(&mut d, &mut last, a, VertexKind::Z, Phase::zero());
                let zb = place(&mut d, &mut last, b, VertexKind::Z, Phase::zero());
                d.add_edge(za, zb, EdgeType::Hadamard);
            }
        }
    }

    let outputs: Vec<V> = (0..n)
        .map(|q| {
            let o = d.add_vertex(VertexKind::Boundary, Phase::zero());
            let (prev, ty) = last[q];
            d.add_edge(prev, o, ty);
            o
        })
        .collect();
    d.set_inputs(inputs);
    d.set_outputs(outputs);
    d
}
