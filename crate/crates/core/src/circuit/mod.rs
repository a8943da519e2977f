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

//! Circuits over `{H, Z(a), X(a), CNOT, CZ}` and the complexity metric.

mod optimize;
mod qasm;
mod random;

pub use optimize::basic_optimize;
pub use qasm::{emit_circuit, parse_circuit};
pub use random::{random_circuit, CircuitParams};

use crate::phase::Phase;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CircuitError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown gate `{name}`")]
    UnknownGate { line: usize, name: String },
    #[error("line {line}: qubit {qubit} out of range for register of size {size}")]
    QubitOutOfRange {
        line: usize,
        qubit: usize,
        size: usize,
    },
    #[error("invalid gate {gate:?} on {n_qubits} qubits")]
    InvalidGate { gate: Gate, n_qubits: usize },
    #[error("invalid probabilities p_t={p_t}, p_had={p_had}")]
    InvalidProbability { p_t: f64, p_had: f64 },
    #[error("random circuits need at least 2 qubits, got {0}")]
    TooFewQubits(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gate {
    H(usize),
    ZPhase(usize, Phase),
    XPhase(usize, Phase),
    Cnot { control: usize, target: usize },
    Cz(usize, usize),
}

impl Gate {
    /// Qubits acted on, control first for CNOT.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::ZPhase(q, _) | Gate::XPhase(q, _) => vec![q],
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz(a, b) => vec![a, b],
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Cnot { .. } | Gate::Cz(..))
    }

    pub fn phase(&self) -> Option<Phase> {
        match *self {
            Gate::ZPhase(_, p) | Gate::XPhase(_, p) => Some(p),
            _ => None,
        }
    }

    pub fn acts_on(&self, q: usize) -> bool {
        self.qubits().contains(&q)
    }

    fn valid_for(&self, n: usize) -> bool {
        let qs = self.qubits();
        qs.iter().all(|&q| q < n) && (qs.len() < 2 || qs[0] != qs[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Circuit {
        Circuit {
            n_qubits,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<Gate>) -> Result<Circuit, CircuitError> {
        let mut c = Circuit::new(n_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, g: Gate) -> Result<(), CircuitError> {
        if !g.valid_for(self.n_qubits) {
            return Err(CircuitError::InvalidGate {
                gate: g,
                n_qubits: self.n_qubits,
            });
        }
        self.gates.push(g);
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Append the gates of `other`, which must have the same width.
    pub fn append(&mut self, other: &Circuit) {
        assert_eq!(self.n_qubits, other.n_qubits);
        self.gates.extend_from_slice(&other.gates);
    }

    pub(crate) fn from_parts_unchecked(n_qubits: usize, gates: Vec<Gate>) -> Circuit {
        Circuit { n_qubits, gates }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub two_qubit_count: usize,
    pub single_qubit_count: usize,
    pub t_count: usize,
    pub comp: usize,
}

/// Gate counts and `Comp = 10 * two-qubit + single-qubit`.
pub fn complexity(c: &Circuit) -> ComplexityReport {
    let mut two = 0;
    let mut one = 0;
    let mut t = 0;
    for g in c.gates() {
        if g.is_two_qubit() {
            two += 1;
        } else {
            one += 1;
        }
        if g.phase().is_some_and(|p| p.is_t_like()) {
            t += 1;
        }
    }
    ComplexityReport {
        two_qubit_count: two,
        single_qubit_count: one,
        t_count: t,
        comp: 10 * two + one,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comp_of_empty() {
        assert_eq!(complexity(&Circuit::new(3)).comp, 0);
    }

    #[test]
    fn comp_weights() {
        let c = Circuit::from_gates(
            2,
            vec![
                Gate::H(0),
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
                Gate::H(1),
            ],
        )
        .unwrap();
        assert_eq!(complexity(&c).comp, 12);
    }

    #[test]
    fn comp_mod5_sized() {
        let mut gates = vec![Gate::Cz(0, 1); 28];
        gates.extend(vec![Gate::H(2); 35]);
        let r = complexity(&Circuit::from_gates(3, gates).unwrap());
        assert_eq!(
            (r.two_qubit_count, r.single_qubit_count, r.comp),
            (28, 35, 315)
        );
    }

    #[test]
    fn t_count_odd_quarters() {
        let c = Circuit::from_gates(
            1,
            vec![
                Gate::ZPhase(0, Phase::new(1, 4)),
                Gate::ZPhase(0, Phase::new(1, 2)),
                Gate::XPhase(0, Phase::new(7, 4)),
                Gate::ZPhase(0, Phase::new(1, 8)),
            ],
        )
        .unwrap();
        assert_eq!(complexity(&c).t_count, 2);
    }

    #[test]
    fn rejects_bad_gates() {
        let mut c = Circuit::new(2);
        assert!(c.push(Gate::H(2)).is_err());
        assert!(c.push(Gate::Cz(1, 1)).is_err());
        assert!(c
            .push(Gate::Cnot {
                control: 1,
                target: 0
            })
            .is_ok());
    }
}
