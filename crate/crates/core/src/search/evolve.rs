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
    extend_log, finalize, pipeline_circuit, score, GaConfig, Objective, OptimizationResult,
    SearchConfig, SearchError, State,
};
use crate::circuit::complexity;
use crate::zx::ZxDiagram;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::Instant;

/// Draw two entrants with replacement and return the index of the fitter
/// (lower) one; ties go to the first draw.
pub fn tournament<R: Rng>(fitness: &[f64], rng: &mut R) -> usize {
    let a = rng.gen_range(0..fitness.len());
    let b = rng.gen_range(0..fitness.len());
    if fitness[b] < fitness[a] {
        b
    } else {
        a
    }
}

/// One congruence mutation of `parent` using its own random stream. A
/// mutant that cannot be built or scored is replaced by its parent; the
/// flag reports a scoring failure.
fn mutate(parent: &State, cfg: &SearchConfig, gen: usize, idx: usize) -> (State, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    rng.set_stream(((gen as u64 + 1) << 32) | idx as u64);
    let Ok((d, steps)) = neighbor_logged(&parent.d, cfg, &mut rng) else {
        return (parent.clone(), false);
    };
    match score(&d, cfg.objective) {
        Ok(energy) => {
            let mut log = parent.log.clone();
            extend_log(&mut log, steps, gen);
            (State { d, energy, log }, false)
        }
        Err(_) => (parent.clone(), true),
    }
}

/// Mutation-only evolution with tournament selection. The initial population
/// holds `n_mutants` single mutations of the seed; each generation selects
/// survivors by tournament and mutates every survivor once. Mutants are
/// scored in parallel but every mutant draws from a stream fixed by its
/// generation and index, so runs are reproducible.
///
/// The trace starts with the seed at step 0, followed by the best fitness of
/// the initial population (step 1) and of each later generation.
pub fn evolve(seed: &ZxDiagram, cfg: &GaConfig) -> Result<OptimizationResult, SearchError> {
    cfg.validate()?;
    let sc = &cfg.search;
    let start = Instant::now();
    let seed_circuit = pipeline_circuit(seed)?;
    let seed_score = complexity(&seed_circuit).comp;
    let seed_energy = match sc.objective {
        Objective::ExtractedComplexity => seed_score as f64,
        o => score(seed, o)?,
    };
    let origin = State {
        d: seed.clone(),
        energy: seed_energy,
        log: Vec::new(),
    };
    let mut best = origin.clone();
    let mut trace = vec![(0, seed_energy)];
    let mut failures = 0;
    let mut selector = ChaCha8Rng::seed_from_u64(sc.rng_seed);

    let mut parents: Vec<State> = vec![origin; cfg.n_mutants];
    for gen in 0..=cfg.n_gens {
        if gen > 0 {
            let fitness: Vec<f64> = parents.iter().map(|s| s.energy).collect();
            let picks: Vec<usize> = (0..cfg.n_mutants)
                .map(|_| tournament(&fitness, &mut selector))
                .collect();
            parents = picks.iter().map(|&i| parents[i].clone()).collect();
        }
        let next: Vec<(State, bool)> = parents
            .par_iter()
            .enumerate()
            .map(|(i, p)| mutate(p, sc, gen, i))
            .collect();
        failures += next.iter().filter(|(_, f)| *f).count();
        parents = next.into_iter().map(|(s, _)| s).collect();
        let fittest = (0..parents.len())
            .min_by(|&a, &b| parents[a].energy.total_cmp(&parents[b].energy))
            .expect("non-empty population");
        trace.push((gen + 1, parents[fittest].energy));
        if parents[fittest].energy < best.energy {
            best = parents[fittest].clone();
        }
    }

    let (best_circuit, rewrite_log) = finalize(&best, seed_circuit, sc.objective);
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
    use crate::rewrite::simplify_to_fixpoint;
    use crate::zx::from_circuit;

    fn setup(s: u64) -> (crate::circuit::Circuit, ZxDiagram) {
        let c = random_circuit(&CircuitParams::new(4, 40), s).unwrap();
        let d = simplify_to_fixpoint(&from_circuit(&c)).0;
        (c, d)
    }

    #[test]
    fn tournament_prefers_lower_fitness() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let fitness = [5.0, 9.0];
        let mut wins = [0; 2];
        for _ in 0..1000 {
            wins[tournament(&fitness, &mut rng)] += 1;
        }
        // 9 only wins when drawn twice
        assert!(wins[0] > 650 && wins[1] > 150, "{wins:?}");
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let i = tournament(&[7.0], &mut rng);
            assert_eq!(i, 0);
        }
    }

    #[test]
    fn zero_generations_uses_initial_population() {
        let (_, d) = setup(1);
        let cfg = GaConfig {
            n_mutants: 6,
            n_gens: 0,
            ..GaConfig::default()
        };
        let r = evolve(&d, &cfg).unwrap();
        assert_eq!(r.score_trace.len(), 2);
        let expect = r.score_trace[0].1.min(r.score_trace[1].1);
        assert_eq!(r.best_energy, expect);
    }

    #[test]
    fn never_worse_sound_and_deterministic() {
        let (c, d) = setup(2);
        let cfg = GaConfig {
            n_mutants: 6,
            n_gens: 5,
            search: SearchConfig {
                rng_seed: 11,
                ..SearchConfig::default()
            },
        };
        let a = evolve(&d, &cfg).unwrap();
        let b = evolve(&d, &cfg).unwrap();
        assert_eq!(a.score_trace, b.score_trace);
        assert_eq!(a.best_circuit, b.best_circuit);
        assert!(a.best_score <= a.seed_score);
        let min = a
            .score_trace
            .iter()
            .map(|&(_, e)| e)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(min, a.best_score as f64);
        let (u, v) = (
            evaluate_circuit(&c).unwrap(),
            evaluate_circuit(&a.best_circuit).unwrap(),
        );
        assert!(equal_up_to_scalar(&u, &v, 1e-8).unwrap());
    }
}
