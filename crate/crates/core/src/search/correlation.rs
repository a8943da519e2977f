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

use super::{score, Objective, SearchError};
use crate::circuit::{random_circuit, CircuitParams};
use crate::zx::{from_circuit, graph_stats, to_graph_like};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};

/// A diagram property compared against extracted complexity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    EdgeCount,
    Centrality,
    Density,
}

impl Property {
    pub const ALL: [Property; 3] = [Property::EdgeCount, Property::Centrality, Property::Density];

    pub fn label(self) -> &'static str {
        match self {
            Property::EdgeCount => "# Edges",
            Property::Centrality => "Centrality",
            Property::Density => "Density",
        }
    }
}

/// Measurements of one random circuit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationSample {
    pub complexity: f64,
    pub edge_count: f64,
    pub centrality: f64,
    pub density: f64,
}

impl CorrelationSample {
    pub fn get(&self, p: Property) -> f64 {
        match p {
            Property::EdgeCount => self.edge_count,
            Property::Centrality => self.centrality,
            Property::Density => self.density,
        }
    }
}

/// Pearson correlation of one property with complexity. `r` and `p_value`
/// are `None` when either variable has zero variance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationRow {
    pub property: Property,
    pub r: Option<f64>,
    pub p_value: Option<f64>,
    pub n: usize,
}

/// Pearson's r, or `None` for fewer than two points or zero variance.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return None;
    }
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Two-tailed p-value of `r` over `n` samples under the null of no
/// correlation, from Student's t with `n - 2` degrees of freedom.
pub fn two_tailed_p(r: f64, n: usize) -> f64 {
    assert!(n >= 3, "need at least 3 samples");
    if r.abs() >= 1.0 {
        return 0.0;
    }
    let df = (n - 2) as f64;
    let t = r * (df / (1.0 - r * r)).sqrt();
    let dist = StudentsT::new(0.0, 1.0, df).expect("positive degrees of freedom");
    2.0 * dist.sf(t.abs())
}

/// Generate `n_samples` random circuits, convert each straight to a
/// diagram, and measure its properties and the complexity of the circuit
/// extracted from it. Properties are read off the unfused diagram, before
/// any rewriting; extraction goes through its graph-like form. Samples whose
/// extraction fails are dropped.
pub fn correlation_samples(
    n_samples: usize,
    qubits: usize,
    gates: usize,
    rng_seed: u64,
) -> Vec<CorrelationSample> {
    let params = CircuitParams::new(qubits, gates);
    (0..n_samples)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
            rng.set_stream(i as u64);
            let c = random_circuit(&params, rng.next_u64()).ok()?;
            let d = from_circuit(&c);
            let complexity = score(&to_graph_like(&d), Objective::ExtractedComplexity).ok()?;
            let s = graph_stats(&d);
            Some(CorrelationSample {
                complexity,
                edge_count: s.edge_count as f64,
                centrality: s.centrality,
                density: s.density,
            })
        })
        .collect()
}

/// Correlate each property of [`correlation_samples`] with extracted
/// complexity.
pub fn correlation_study(
    n_samples: usize,
    qubits: usize,
    gates: usize,
    rng_seed: u64,
) -> Result<Vec<CorrelationRow>, SearchError> {
    if n_samples < 3 {
        return Err(SearchError::TooFewSamples(n_samples));
    }
    let samples = correlation_samples(n_samples, qubits, gates, rng_seed);
    if samples.len() < 3 {
        return Err(SearchError::TooFewSamples(samples.len()));
    }
    Ok(rows_for(&samples))
}

pub(crate) fn rows_for(samples: &[CorrelationSample]) -> Vec<CorrelationRow> {
    let ys: Vec<f64> = samples.iter().map(|s| s.complexity).collect();
    Property::ALL
        .iter()
        .map(|&property| {
            let xs: Vec<f64> = samples.iter().map(|s| s.get(property)).collect();
            let r = pearson(&xs, &ys);
            CorrelationRow {
                property,
                r,
                p_value: r.map(|r| two_tailed_p(r, samples.len())),
                n: samples.len(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_correlation() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(pearson(&xs, &[2.0, 4.0, 6.0, 8.0]), Some(1.0));
        assert_eq!(pearson(&xs, &[8.0, 6.0, 4.0, 2.0]), Some(-1.0));
        assert_eq!(two_tailed_p(1.0, 4), 0.0);
    }

    #[test]
    fn degenerate_variance() {
        assert_eq!(pearson(&[1.0, 2.0, 3.0], &[5.0, 5.0, 5.0]), None);
        let s = CorrelationSample {
            complexity: 3.0,
            edge_count: 1.0,
            centrality: 0.0,
            density: 0.5,
        };
        let rows = rows_for(&[s, s, s]);
        assert!(rows.iter().all(|r| r.r.is_none() && r.p_value.is_none()));
    }

    #[test]
    fn p_value_reference_points() {
        // r = 0 gives p = 1; with 3 samples t has one degree of freedom and
        // r = 1/sqrt(2) gives t = 1, p = 1/2
        assert!((two_tailed_p(0.0, 10) - 1.0).abs() < 1e-12);
        assert!((two_tailed_p(0.5f64.sqrt(), 3) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn study_is_deterministic() {
        let a = correlation_study(12, 3, 20, 5).unwrap();
        let b = correlation_study(12, 3, 20, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert!(correlation_study(2, 3, 20, 5).is_err());
    }
}
