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

use super::Objective;
use crate::circuit::{basic_optimize, complexity, Circuit};
use crate::extract::{extract_circuit, ExtractError};
use crate::rewrite::simplify_to_fixpoint;
use crate::zx::{graph_stats, ZxDiagram};

/// Simplify a copy of `d`, extract a circuit and clean it up.
pub fn pipeline_circuit(d: &ZxDiagram) -> Result<Circuit, ExtractError> {
    let (s, _) = simplify_to_fixpoint(d);
    Ok(basic_optimize(&extract_circuit(&s)?))
}

/// Objective value of `d`; lower is better. Only `ExtractedComplexity`
/// extracts, so only it can fail.
pub fn score(d: &ZxDiagram, objective: Objective) -> Result<f64, ExtractError> {
    Ok(match objective {
        Objective::ExtractedComplexity => complexity(&pipeline_circuit(d)?).comp as f64,
        Objective::EdgeCount => graph_stats(d).edge_count as f64,
        Objective::Density => graph_stats(d).density,
        Objective::Centrality => graph_stats(d).centrality,
    })
}
