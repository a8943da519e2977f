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

//! Quantum circuit optimisation with the ZX-calculus.
//!
//! Circuits are translated to graph-like ZX-diagrams, simplified, and then
//! searched over with local complementation and pivot congruences, scoring
//! each candidate by the complexity of the circuit extracted from it. A dense
//! tensor oracle checks every rewrite on small instances.

pub mod circuit;
pub mod extract;
pub mod fixtures;
pub mod oracle;
pub mod phase;
pub mod rewrite;
pub mod search;
pub mod verify;
pub mod zx;
