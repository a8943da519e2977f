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

//! Small benchmark circuits shipped with the crate.

use crate::circuit::{parse_circuit, Circuit};

pub const MOD5_4: &str = include_str!("../fixtures/mod5_4.qasm");
pub const TOF_3: &str = include_str!("../fixtures/tof_3.qasm");
pub const BARENCO_TOF_3: &str = include_str!("../fixtures/barenco_tof_3.qasm");

/// `(name, source)` for every fixture.
pub const ALL: [(&str, &str); 3] = [
    ("mod5_4", MOD5_4),
    ("tof_3", TOF_3),
    ("barenco_tof_3", BARENCO_TOF_3),
];

/// Parse the named fixture.
pub fn load(name: &str) -> Option<Circuit> {
    ALL.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| parse_circuit(src).expect("fixtures parse"))
}
