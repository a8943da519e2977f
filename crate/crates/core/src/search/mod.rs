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

//! Simulated annealing and a mutation-only genetic algorithm over congruence
//! applications, with pluggable objectives and subject weightings.

mod anneal;
mod correlation;
mod evolve;
mod neighbor;
mod score;

pub use anneal::{acceptance_probability, anneal, Temperature};
pub use correlation::{
    correlation_samples, correlation_study, pearson, two_tailed_p, CorrelationRow,
    CorrelationSample, Property,
};
pub use evolve::{evolve, tournament};
pub use neighbor::{neighbor, selection_probabilities, subject_weights};
pub use score::{pipeline_circuit, score};

use crate::circuit::Circuit;
use crate::extract::ExtractError;
use crate::rewrite::RewriteStep;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SearchError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("no eligible subject for either congruence")]
    NoEligibleSubject,
    #[error("seed diagram cannot be scored: {0}")]
    Seed(#[from] ExtractError),
    #[error("need at least 3 samples, got {0}")]
    TooFewSamples(usize),
}

/// What the search minimises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    /// `Comp` of the circuit extracted after simplification.
    ExtractedComplexity,
    EdgeCount,
    Density,
    Centrality,
}

/// How congruence subjects are weighted when sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubjectWeighting {
    Uniform,
    Degree,
    NeighborDegreeSum,
    NeighborDegreeAvg,
    LoadCentrality,
    EdgeBetweenness,
}

/// Temperature update applied after every annealing step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoolingSchedule {
    /// `T <- T * (1 - c)`.
    Geometric,
    /// `T <- T * c`, which freezes almost immediately for small `c`.
    Literal,
}

macro_rules! kebab_enum {
    ($ty:ident { $($var:ident => $name:literal),* $(,)? }) => {
        impl $ty {
            pub const ALL: &'static [$ty] = &[$($ty::$var),*];

            pub fn name(self) -> &'static str {
                match self {
                    $($ty::$var => $name),*
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                $ty::ALL
                    .iter()
                    .copied()
                    .find(|x| x.name() == s)
                    .ok_or_else(|| {
                        let names: Vec<&str> = $ty::ALL.iter().map(|x| x.name()).collect();
                        format!("unknown value {s:?}, expected one of {}", names.join(", "))
                    })
            }
        }
    };
}

kebab_enum!(Objective {
    ExtractedComplexity => "extracted-complexity",
    EdgeCount => "edge-count",
    Density => "density",
    Centrality => "centrality",
});

kebab_enum!(SubjectWeighting {
    Uniform => "uniform",
    Degree => "degree",
    NeighborDegreeSum => "neighbor-degree-sum",
    NeighborDegreeAvg => "neighbor-degree-avg",
    LoadCentrality => "load-centrality",
    EdgeBetweenness => "edge-betweenness",
});

kebab_enum!(CoolingSchedule {
    Geometric => "geometric",
    Literal => "literal",
});

/// Parameters shared by both search strategies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub t_initial: f64,
    pub cooling: f64,
    pub schedule: CoolingSchedule,
    pub k_max: usize,
    pub p_lc: f64,
    pub p_pivot: f64,
    pub p_fr: f64,
    pub objective: Objective,
    pub subject_weighting: SubjectWeighting,
    pub rng_seed: u64,
    pub restarts: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            t_initial: 25.0,
            cooling: 0.005,
            schedule: CoolingSchedule::Geometric,
            k_max: 1000,
            p_lc: 0.5,
            p_pivot: 0.5,
            p_fr: 0.1,
            objective: Objective::ExtractedComplexity,
            subject_weighting: SubjectWeighting::Uniform,
            rng_seed: 0,
            restarts: 1,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |msg: &str| Err(SearchError::InvalidConfig(msg.to_string()));
        let unit = |p: f64| (0.0..=1.0).contains(&p);
        if !unit(self.p_lc) || !unit(self.p_pivot) || !unit(self.p_fr) {
            return bad("probabilities must lie in [0, 1]");
        }
        if (self.p_lc + self.p_pivot - 1.0).abs() > 1e-9 {
            return bad("p_lc + p_pivot must equal 1");
        }
        if !(self.t_initial > 0.0 && self.t_initial.is_finite()) {
            return bad("initial temperature must be positive");
        }
        if !(0.0..1.0).contains(&self.cooling) {
            return bad("cooling must lie in [0, 1)");
        }
        if self.restarts == 0 {
            return bad("restarts must be at least 1");
        }
        Ok(())
    }
}

/// Genetic algorithm parameters. Tournaments always have two entrants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaConfig {
    pub n_mutants: usize,
    pub n_gens: usize,
    pub search: SearchConfig,
}

impl GaConfig {
    pub const K_TOURN: usize = 2;

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.n_mutants < 2 {
            return Err(SearchError::InvalidConfig(
                "n_mutants must be at least 2".to_string(),
            ));
        }
        self.search.validate()
    }
}

impl Default for GaConfig {
    fn default() -> Self {
        GaConfig {
            n_mutants: 20,
            n_gens: 40,
            search: SearchConfig::default(),
        }
    }
}

/// Outcome of a search run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizationResult {
    pub best_circuit: Circuit,
    /// `Comp` of `best_circuit`.
    pub best_score: usize,
    /// `Comp` of the circuit extracted from the seed.
    pub seed_score: usize,
    /// Objective value of the best state found.
    pub best_energy: f64,
    /// `(step, objective)` of the current state (annealing) or the best
    /// population member (evolution) at every step.
    pub score_trace: Vec<(usize, f64)>,
    /// Rewrites leading from the seed to the best state.
    pub rewrite_log: Vec<RewriteStep>,
    /// Candidates rejected because extraction failed.
    pub score_failures: usize,
    pub wall_time: f64,
}

/// A search state with its cached objective value.
#[derive(Debug, Clone)]
struct State {
    d: crate::zx::ZxDiagram,
    energy: f64,
    log: Vec<RewriteStep>,
}

/// Extract the circuit for the best state, falling back to the seed's circuit
/// when a proxy objective led somewhere worse.
fn finalize(
    best: &State,
    seed_circuit: Circuit,
    objective: Objective,
) -> (Circuit, Vec<RewriteStep>) {
    let seed_comp = crate::circuit::complexity(&seed_circuit).comp;
    match pipeline_circuit(&best.d) {
        Ok(c) if objective == Objective::ExtractedComplexity => (c, best.log.clone()),
        Ok(c) if crate::circuit::complexity(&c).comp <= seed_comp => (c, best.log.clone()),
        _ => (seed_circuit, Vec::new()),
    }
}

/// Re-stamp `steps` with the search step `t` and append them to `log`.
fn extend_log(log: &mut Vec<RewriteStep>, steps: Vec<RewriteStep>, t: usize) {
    log.extend(steps.into_iter().map(|mut s| {
        s.timestamp = t;
        s
    }));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        assert!(SearchConfig::default().validate().is_ok());
        assert!(GaConfig::default().validate().is_ok());
        assert_eq!(GaConfig::default().n_mutants, 20);
        assert_eq!(GaConfig::default().n_gens, 40);
    }

    #[test]
    fn invalid_configs() {
        let base = SearchConfig::default();
        for cfg in [
            SearchConfig {
                p_lc: 0.7,
                ..base.clone()
            },
            SearchConfig {
                t_initial: 0.0,
                ..base.clone()
            },
            SearchConfig {
                cooling: 1.0,
                ..base.clone()
            },
            SearchConfig {
                p_fr: 1.5,
                ..base.clone()
            },
        ] {
            assert!(matches!(cfg.validate(), Err(SearchError::InvalidConfig(_))));
        }
        let ga = GaConfig {
            n_mutants: 1,
            ..GaConfig::default()
        };
        assert!(ga.validate().is_err());
    }

    #[test]
    fn enum_names_round_trip() {
        for &o in Objective::ALL {
            assert_eq!(o.name().parse::<Objective>().unwrap(), o);
        }
        for &w in SubjectWeighting::ALL {
            assert_eq!(w.to_string().parse::<SubjectWeighting>().unwrap(), w);
        }
        assert!("nope".parse::<CoolingSchedule>().is_err());
    }
}
