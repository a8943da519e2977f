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

//! Pieces shared by the subcommands: exit codes, search flags, seed
//! streams and run manifests.

use anyhow::Context;
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use zxopt::circuit::Circuit;
use zxopt::rewrite::simplify_to_fixpoint;
use zxopt::search::{
    anneal, evolve, pipeline_circuit, CoolingSchedule, GaConfig, Objective, SearchConfig,
    SearchError, SubjectWeighting,
};
use zxopt::zx::{from_circuit, to_graph_like, ZxDiagram};

pub const EXIT_INPUT: u8 = 1;
pub const EXIT_EXTRACTION: u8 = 2;
pub const EXIT_VERIFICATION: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_OUTPUT: u8 = 74;

/// An error together with the process exit code it maps to.
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

pub type CmdResult = Result<(), Failure>;

pub trait WithCode<T> {
    fn code(self, code: u8) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> WithCode<T> for Result<T, E> {
    fn code(self, code: u8) -> Result<T, Failure> {
        self.map_err(|e| Failure {
            code,
            error: e.into(),
        })
    }
}

pub fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        error: anyhow::anyhow!(msg.into()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Simplify to a fixpoint, extract and clean up, with no search.
    Baseline,
    /// Simulated annealing.
    Sa,
    /// Genetic algorithm.
    Ga,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Baseline => "baseline",
            Method::Sa => "sa",
            Method::Ga => "ga",
        }
    }
}

/// Search hyperparameters, named after the usual symbols.
#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    /// Annealing steps per restart (k_max).
    #[arg(long, default_value_t = 2500)]
    pub kmax: usize,
    /// Initial temperature T.
    #[arg(long, default_value_t = 25.0)]
    pub temp: f64,
    /// Cooling rate c.
    #[arg(long, default_value_t = 0.005)]
    pub cool: f64,
    /// How c is applied: geometric is T <- T(1 - c), literal is T <- T c.
    #[arg(long, default_value_t = CoolingSchedule::Geometric)]
    pub schedule: CoolingSchedule,
    /// Probability of choosing local complementation (p_LC).
    #[arg(long = "p-lc", default_value_t = 0.5)]
    pub p_lc: f64,
    /// Probability of choosing a pivot (p_pivot); defaults to 1 - p_LC.
    #[arg(long = "p-pivot")]
    pub p_pivot: Option<f64>,
    /// Probability of simplifying after each congruence (p_fr).
    #[arg(long = "p-fr", default_value_t = 0.1)]
    pub p_fr: f64,
    /// Population size of the genetic algorithm.
    #[arg(long, default_value_t = 20)]
    pub mutants: usize,
    /// Generations of the genetic algorithm.
    #[arg(long, default_value_t = 40)]
    pub gens: usize,
    /// Independent annealing restarts.
    #[arg(long, default_value_t = 1)]
    pub restarts: usize,
    #[arg(long, default_value_t = Objective::ExtractedComplexity)]
    pub objective: Objective,
    /// How congruence subjects are weighted when sampled.
    #[arg(long, default_value_t = SubjectWeighting::Uniform)]
    pub weighting: SubjectWeighting,
}

impl SearchArgs {
    pub fn config(&self, rng_seed: u64) -> SearchConfig {
        SearchConfig {
            t_initial: self.temp,
            cooling: self.cool,
            schedule: self.schedule,
            k_max: self.kmax,
            p_lc: self.p_lc,
            p_pivot: self.p_pivot.unwrap_or(1.0 - self.p_lc),
            p_fr: self.p_fr,
            objective: self.objective,
            subject_weighting: self.weighting,
            rng_seed,
            restarts: self.restarts,
        }
    }

    pub fn ga_config(&self, rng_seed: u64) -> GaConfig {
        GaConfig {
            n_mutants: self.mutants,
            n_gens: self.gens,
            search: self.config(rng_seed),
        }
    }

    /// Reject bad settings up front rather than per run.
    pub fn validate(&self, method: Method) -> CmdResult {
        let res = match method {
            Method::Ga => self.ga_config(0).validate(),
            _ => self.config(0).validate(),
        };
        res.code(EXIT_USAGE)
    }
}

/// A seed for the named sub-stream of `seed`, so that every random choice
/// in a run derives from one user-supplied number.
pub fn sub_seed(seed: u64, name: &str) -> u64 {
    let h = Sha256::digest(format!("{seed}/{name}").as_bytes());
    u64::from_le_bytes(h[..8].try_into().expect("digest is 32 bytes"))
}

/// Content hash in the style of a git blob id, over SHA-256.
pub fn content_hash(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(format!("blob {}\0", bytes.len()).as_bytes());
    h.update(bytes);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Everything needed to repeat a run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub command: String,
    /// Full command line; rerunning it reproduces every output except
    /// wall-clock timings.
    pub argv: Vec<String>,
    pub input_path: Option<String>,
    pub input_hash: Option<String>,
    pub config: serde_json::Value,
    pub outputs: Vec<String>,
    pub rng_seeds: BTreeMap<String, u64>,
}

impl RunManifest {
    pub fn new(command: &str, argv: &[String], config: serde_json::Value) -> RunManifest {
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            argv: argv.to_vec(),
            input_path: None,
            input_hash: None,
            config,
            outputs: Vec::new(),
            rng_seeds: BTreeMap::new(),
        }
    }

    pub fn write(&mut self, path: &Path) -> CmdResult {
        let text = serde_json::to_string_pretty(self).code(EXIT_OUTPUT)?;
        write_file(path, &(text + "\n"))
    }
}

/// `<primary>.manifest.json` if the command has a primary output file,
/// otherwise `zxopt-<command>.manifest.json` in the working directory.
pub fn manifest_path(explicit: &Option<PathBuf>, primary: Option<&Path>, command: &str) -> PathBuf {
    if let Some(p) = explicit {
        return p.clone();
    }
    match primary {
        Some(p) => with_suffix(p, "manifest.json"),
        None => PathBuf::from(format!("zxopt-{command}.manifest.json")),
    }
}

/// `out.qasm` becomes `out.qasm.<suffix>`.
pub fn with_suffix(p: &Path, suffix: &str) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

pub fn write_file(path: &Path, text: &str) -> CmdResult {
    std::fs::write(path, text)
        .with_context(|| format!("cannot write {}", path.display()))
        .code(EXIT_OUTPUT)
}

pub fn to_json<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("plain data serialises")
}

/// The simplified graph-like diagram that search starts from.
pub fn seed_diagram(c: &Circuit) -> ZxDiagram {
    simplify_to_fixpoint(&to_graph_like(&from_circuit(c))).0
}

/// Output of one method on one circuit.
pub struct MethodRun {
    pub circuit: Circuit,
    pub seed_comp: usize,
    pub score_failures: usize,
    pub rewrite_steps: usize,
    pub wall_time: f64,
}

/// Run `method` from `seed`. Extraction failures on the seed map to exit
/// code 2 and bad configurations to 64.
pub fn run_method(
    method: Method,
    seed: &ZxDiagram,
    args: &SearchArgs,
    rng_seed: u64,
) -> Result<MethodRun, Failure> {
    let start = std::time::Instant::now();
    let res = match method {
        Method::Baseline => {
            let circuit = pipeline_circuit(seed).code(EXIT_EXTRACTION)?;
            let comp = zxopt::circuit::complexity(&circuit).comp;
            return Ok(MethodRun {
                circuit,
                seed_comp: comp,
                score_failures: 0,
                rewrite_steps: 0,
                wall_time: start.elapsed().as_secs_f64(),
            });
        }
        Method::Sa => anneal(seed, &args.config(rng_seed)),
        Method::Ga => evolve(seed, &args.ga_config(rng_seed)),
    };
    match res {
        Ok(r) => Ok(MethodRun {
            circuit: r.best_circuit,
            seed_comp: r.seed_score,
            score_failures: r.score_failures,
            rewrite_steps: r.rewrite_log.len(),
            wall_time: r.wall_time,
        }),
        Err(e @ SearchError::Seed(_)) => Err(Failure {
            code: EXIT_EXTRACTION,
            error: e.into(),
        }),
        Err(e) => Err(Failure {
            code: EXIT_USAGE,
            error: e.into(),
        }),
    }
}

/// Percentage drop from `before` to `after`.
pub fn reduction_pct(before: usize, after: usize) -> f64 {
    if before == 0 {
        0.0
    } else {
        100.0 * (before as f64 - after as f64) / before as f64
    }
}
