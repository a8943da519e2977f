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

use super::neighbor::neighbor_logged;
use super::{
    extend_log, finalize, pipeline_circuit, score, CoolingSchedule, Objective, OptimizationResult,
    SearchConfig, SearchError, State,
};
use crate::circuit::complexity;
use crate::zx::ZxDiagram;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Probability of moving to a state whose energy is higher by `delta` at
/// temperature `t`. Downhill and level moves are always taken.
pub fn acceptance_probability(delta: f64, t: f64) -> f64 {
    if delta <= 0.0 {
        1.0
    } else {
        (-delta / t).exp()
    }
}

/// The annealing temperature and its cooling rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Temperature {
    t: f64,
    c: f64,
    schedule: CoolingSchedule,
}

impl Temperature {
    pub fn new(cfg: &SearchConfig) -> Temperature {
        Temperature {
            t: cfg.t_initial,
            c: cfg.cooling,
            schedule: cfg.schedule,
        }
    }

    pub fn value(&self) -> f64 {
        self.t
    }

    pub fn cool(&mut self) {
        self.t *= match self.schedule {
            CoolingSchedule::Geometric => 1.0 - self.c,
            CoolingSchedule::Literal => self.c,
        };
    }
}

/// Simulated annealing from `seed` for `k_max` steps per restart. Every
/// restart starts from the seed with its own random stream; the best state
/// seen over all restarts is returned, so the result is never worse than the
/// seed. Candidates that fail to extract are skipped and counted.
pub fn anneal(seed: &ZxDiagram, cfg: &SearchConfig) -> Result<OptimizationResult, SearchError> {
    cfg.validate()?;
    let start = Instant::now();
    let seed_circuit = pipeline_circuit(seed)?;
    let seed_score = complexity(&seed_circuit).comp;
    let seed_energy = match cfg.objective {
        Objective::ExtractedComplexity => seed_score as f64,
        o => score(seed, o)?,
    };
    let origin = State {
        d: seed.clone(),
        energy: seed_energy,
        log: Vec::new(),
    };
    let mut best = origin.clone();
    let mut trace = Vec::new();
    let mut failures = 0;

    for r in 0..cfg.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
        rng.set_stream(r as u64);
        let mut temp = Temperature::new(cfg);
        let mut cur = origin.clone();
        let offset = r * (cfg.k_max + 1);
        trace.push((offset, cur.energy));
        for k in 1..=cfg.k_max {
            let (d, steps) = match neighbor_logged(&cur.d, cfg, &mut rng) {
                Ok(x) => x,
                Err(SearchError::NoEligibleSubject) => break,
                Err(e) => return Err(e),
            };
            match score(&d, cfg.objective) {
                Err(_) => failures += 1,
                Ok(e) => {
                    let delta = e - cur.energy;
                    if delta < 0.0 || rng.gen::<f64>() < acceptance_probability(delta, temp.value())
                    {
                        let mut log = std::mem::take(&mut cur.log);
                        extend_log(&mut log, steps, k);
                        cur = State { d, energy: e, log };
                        if cur.energy < best.energy {
                            best = cur.clone();
                        }
                    }
                }
            }
            trace.push((offset + k, cur.energy));
            temp.cool();
        }
    }

    let (best_circuit, rewrite_log) = finalize(&best, seed_circuit, cfg.objective);
    Ok(OptimizationResult {
        best_score: complexity(&best_circuit).comp,
        best_circuit,
        seed_score,
        best_energy: best.energy,
        score_trace: trace,
        rewrite_log,
        score_failures: failures,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{random_circuit, CircuitParams};
    use crate::oracle::{equal_up_to_scalar, evaluate_circuit};
    use crate::rewrite::{simplify_to_fixpoint, RewriteRule};
    use crate::zx::from_circuit;

    fn seed_diagram(n: usize, g: usize, s: u64) -> (crate::circuit::Circuit, ZxDiagram) {
        let c = random_circuit(&CircuitParams::new(n, g), s).unwrap();
        let d = simplify_to_fixpoint(&from_circuit(&c)).0;
        (c, d)
    }

    #[test]
    fn acceptance_at_delta_t() {
        let p = acceptance_probability(25.0, 25.0);
        assert!((p - (-1.0f64).exp()).abs() < 1e-12);
        assert_eq!(acceptance_probability(-3.0, 1.0), 1.0);
        assert_eq!(acceptance_probability(0.0, 0.0), 1.0);
    }

    #[test]
    fn geometric_temperature_decreases() {
        let cfg = SearchConfig {
            k_max: 2500,
            ..SearchConfig::default()
        };
        let mut t = Temperature::new(&cfg);
        for _ in 0..cfg.k_max {
            let before = t.value();
            t.cool();
            assert!(t.value() > 0.0 && t.value() < before);
        }
    }

    #[test]
    fn literal_schedule_freezes() {
        let cfg = SearchConfig {
            schedule: CoolingSchedule::Literal,
            ..SearchConfig::default()
        };
        let mut t = Temperature::new(&cfg);
        t.cool();
        assert!((t.value() - 0.125).abs() < 1e-12);
    }

    #[test]
    fn zero_steps_returns_seed() {
        let (_, d) = seed_diagram(3, 30, 1);
        let cfg = SearchConfig {
            k_max: 0,
            ..SearchConfig::default()
        };
        let r = anneal(&d, &cfg).unwrap();
        assert_eq!(r.best_circuit, pipeline_circuit(&d).unwrap());
        assert_eq!(r.best_score, r.seed_score);
        assert_eq!(r.score_trace, vec![(0, r.seed_score as f64)]);
        assert!(r.rewrite_log.is_empty());
    }

    #[test]
    fn never_worse_and_sound() {
        let (c, d) = seed_diagram(4, 40, 2);
        let cfg = SearchConfig {
            k_max: 150,
            rng_seed: 9,
            ..SearchConfig::default()
        };
        let r = anneal(&d, &cfg).unwrap();
        assert!(r.best_score <= r.seed_score);
        assert_eq!(r.best_score, complexity(&r.best_circuit).comp);
        let min = r
            .score_trace
            .iter()
            .map(|&(_, e)| e)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(min, r.best_score as f64);
        let (a, b) = (
            evaluate_circuit(&c).unwrap(),
            evaluate_circuit(&r.best_circuit).unwrap(),
        );
        assert!(equal_up_to_scalar(&a, &b, 1e-8).unwrap());
    }

    #[test]
    fn deterministic_under_seed() {
        let (_, d) = seed_diagram(4, 40, 3);
        let cfg = SearchConfig {
            k_max: 80,
            rng_seed: 4,
            restarts: 2,
            ..SearchConfig::default()
        };
        let (a, b) = (anneal(&d, &cfg).unwrap(), anneal(&d, &cfg).unwrap());
        assert_eq!(a.score_trace, b.score_trace);
        assert_eq!(a.best_circuit, b.best_circuit);
        assert_eq!(a.rewrite_log, b.rewrite_log);
        assert_eq!(a.score_trace.len(), 2 * 81);
    }

    #[test]
    fn lc_only_log_has_no_pivots() {
        let (_, d) = seed_diagram(4, 40, 5);
        let cfg = SearchConfig {
            k_max: 60,
            p_lc: 1.0,
            p_pivot: 0.0,
            p_fr: 0.0,
            t_initial: 1e6,
            ..SearchConfig::default()
        };
        let r = anneal(&d, &cfg).unwrap();
        assert!(r
            .rewrite_log
            .iter()
            .all(|s| s.rule != RewriteRule::CongruencePivot));
    }

    #[test]
    fn proxy_objective_never_worse() {
        let (_, d) = seed_diagram(4, 40, 6);
        for &objective in &[
            Objective::EdgeCount,
            Objective::Density,
            Objective::Centrality,
        ] {
            let cfg = SearchConfig {
                k_max: 40,
                objective,
                ..SearchConfig::default()
            };
            let r = anneal(&d, &cfg).unwrap();
            assert!(r.best_score <= r.seed_score, "{objective}");
            assert!(r.best_energy <= score(&d, objective).unwrap());
        }
    }
}
