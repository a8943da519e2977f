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

//! Random `{CNOT, H, T}` circuits.

use super::{Circuit, CircuitError, Gate};
use crate::phase::Phase;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircuitParams {
    pub n_qubits: usize,
    pub n_gates: usize,
    pub p_t: f64,
    pub p_had: f64,
}

impl CircuitParams {
    /// Default gate mix: 20% T, 20% H, the rest CNOT.
    pub fn new(n_qubits: usize, n_gates: usize) -> CircuitParams {
        CircuitParams {
            n_qubits,
            n_gates,
            p_t: 0.2,
            p_had: 0.2,
        }
    }
}

/// Draw each gate independently: H with probability `p_had`, T with `p_t`,
/// otherwise a CNOT on a uniformly random ordered pair of distinct qubits.
pub fn random_circuit(params: &CircuitParams, seed: u64) -> Result<Circuit, CircuitError> {
    let CircuitParams {
        n_qubits,
        n_gates,
        p_t,
        p_had,
    } = *params;
    let bad = |p: f64| !(0.0..=1.0).contains(&p);
    if bad(p_t) || bad(p_had) || p_t + p_had > 1.0 {
        return Err(CircuitError::InvalidProbability { p_t, p_had });
    }
    if n_qubits < 2 {
        return Err(CircuitError::TooFewQubits(n_qubits));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gates = Vec::with_capacity(n_gates);
    for _ in 0..n_gates {
        let r: f64 = rng.gen();
        let g = if r < p_had {
            Gate::H(rng.gen_range(0..n_qubits))
        } else if r < p_had + p_t {
            Gate::ZPhase(rng.gen_range(0..n_qubits), Phase::new(1, 4))
        } else {
            let control = rng.gen_range(0..n_qubits);
            let target = (control + rng.gen_range(1..n_qubits)) % n_qubits;
            Gate::Cnot { control, target }
        };
        gates.push(g);
    }
    Ok(Circuit::from_parts_unchecked(n_qubits, gates))
}
