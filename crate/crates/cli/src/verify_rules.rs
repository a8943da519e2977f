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

//! `zxopt verify-rules`: the oracle soundness sweep.

use crate::common::*;
use clap::Args;
use std::path::PathBuf;
use zxopt::oracle::OracleConfig;
use zxopt::verify::{faults, standard_rules, sweep, SweepConfig};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Only sweep rules whose name contains this text; may be repeated.
    #[arg(long)]
    pub rule: Vec<String>,
    /// Largest diagram of the exhaustive part, in spiders.
    #[arg(long, default_value_t = 4)]
    pub exhaustive: usize,
    /// Most boundary wires of the exhaustive part.
    #[arg(long, default_value_t = 2)]
    pub wires: usize,
    /// Randomised applications per rule.
    #[arg(long, default_value_t = 200)]
    pub random: usize,
    /// Largest circuit width of the randomised part.
    #[arg(long, default_value_t = 5)]
    pub max_qubits: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Replace a rule with a known-broken version, to check that the sweep
    /// catches it.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(faults::NAMES))]
    pub inject: Option<String>,
    /// Write the per-rule report as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

pub fn run(args: &VerifyArgs, argv: &[String]) -> CmdResult {
    let mut rules = standard_rules();
    if let Some(name) = &args.inject {
        let fault = faults::by_name(name).expect("clap checked the name");
        for r in rules.iter_mut().filter(|r| r.rule == fault.rule) {
            *r = fault;
        }
    }
    rules.retain(|r| args.rule.is_empty() || args.rule.iter().any(|f| r.rule.name().contains(f)));
    if rules.is_empty() {
        return Err(fail(EXIT_USAGE, "no rule matches the --rule filter"));
    }

    let rng_seed = sub_seed(args.seed, "verify");
    let cfg = SweepConfig {
        max_spiders: args.exhaustive,
        max_wires: args.wires,
        random_cases: args.random,
        max_qubits: args.max_qubits,
        seed: rng_seed,
        tol: args.tol,
        oracle: OracleConfig::from_env(),
    };
    let reports = sweep(&rules, &cfg);
    for r in &reports {
        println!(
            "{:<17} {}  {} exhaustive, {} random",
            r.rule.name(),
            if r.passed() { "PASS" } else { "FAIL" },
            r.exhaustive_cases,
            r.random_cases
        );
        if let Some(f) = &r.first_failure {
            println!("    {} failures, first: {f}", r.failures);
        }
    }

    let mut manifest = RunManifest::new(
        "verify-rules",
        argv,
        serde_json::json!({
            "rules": reports.iter().map(|r| r.rule.name()).collect::<Vec<_>>(),
            "max_spiders": cfg.max_spiders,
            "max_wires": cfg.max_wires,
            "random_cases": cfg.random_cases,
            "max_qubits": cfg.max_qubits,
            "tol": cfg.tol,
            "inject": args.inject,
        }),
    );
    manifest.rng_seeds.insert("seed".into(), args.seed);
    manifest.rng_seeds.insert("verify".into(), rng_seed);
    if let Some(p) = &args.report {
        let text = serde_json::to_string_pretty(&reports).code(EXIT_OUTPUT)? + "\n";
        write_file(p, &text)?;
        manifest.outputs.push(p.display().to_string());
    }
    manifest.write(&manifest_path(
        &args.manifest,
        args.report.as_deref(),
        "verify-rules",
    ))?;

    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(fail(
            EXIT_VERIFICATION,
            format!("{failed} rule(s) failed the soundness sweep"),
        ));
    }
    Ok(())
}
