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

//! `zxopt optimize`: parse, simplify, search, extract and write out.

use crate::common::*;
use anyhow::Context;
use clap::Args;
use serde::Serialize;
use std::path::PathBuf;
use zxopt::circuit::{complexity, emit_circuit, parse_circuit, Circuit};
use zxopt::oracle::{equal_up_to_scalar, evaluate_circuit_with, OracleConfig};

#[derive(Args, Debug)]
pub struct OptimizeArgs {
    /// Input circuit in the OpenQASM 2 subset.
    pub input: PathBuf,
    /// Output circuit; written to stdout if absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Method::Sa)]
    pub method: Method,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Check the output against the input with the tensor oracle.
    #[arg(long)]
    pub verify: bool,
    /// Stats JSON path; defaults to `<output>.stats.json`, or stderr.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Manifest path; defaults to `<output>.manifest.json`.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Record wall time as null so that stats files are reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Serialize)]
struct OptimizeStats {
    input: String,
    method: &'static str,
    seed: u64,
    qubits: usize,
    gates_before: usize,
    gates_after: usize,
    comp_before: usize,
    comp_after: usize,
    /// `Comp` of the circuit extracted from the simplified seed diagram.
    seed_comp: usize,
    two_qubit_before: usize,
    two_qubit_after: usize,
    single_qubit_before: usize,
    single_qubit_after: usize,
    t_count_before: usize,
    t_count_after: usize,
    reduction_pct: f64,
    score_failures: usize,
    rewrite_steps: usize,
    wall_time_s: Option<f64>,
    /// `null` unless the check was requested and the circuit fits the
    /// oracle cap.
    equivalent_up_to_scalar: Option<bool>,
    verification: String,
}

pub fn run(args: &OptimizeArgs, argv: &[String]) -> CmdResult {
    args.search.validate(args.method)?;
    let bytes = std::fs::read(&args.input)
        .with_context(|| format!("cannot read {}", args.input.display()))
        .code(EXIT_INPUT)?;
    let text = String::from_utf8(bytes.clone())
        .context("input is not UTF-8")
        .code(EXIT_INPUT)?;
    let circuit = parse_circuit(&text)
        .with_context(|| format!("cannot parse {}", args.input.display()))
        .code(EXIT_INPUT)?;

    let rng_seed = sub_seed(args.seed, "search");
    let seed = seed_diagram(&circuit);
    let out = run_method(args.method, &seed, &args.search, rng_seed)?;

    let (equivalent, verification) = if args.verify {
        verify(&circuit, &out.circuit)
    } else {
        (None, "not requested".to_string())
    };

    let before = complexity(&circuit);
    let after = complexity(&out.circuit);
    let stats = OptimizeStats {
        input: args.input.display().to_string(),
        method: args.method.name(),
        seed: args.seed,
        qubits: circuit.n_qubits(),
        gates_before: circuit.len(),
        gates_after: out.circuit.len(),
        comp_before: before.comp,
        comp_after: after.comp,
        seed_comp: out.seed_comp,
        two_qubit_before: before.two_qubit_count,
        two_qubit_after: after.two_qubit_count,
        single_qubit_before: before.single_qubit_count,
        single_qubit_after: after.single_qubit_count,
        t_count_before: before.t_count,
        t_count_after: after.t_count,
        reduction_pct: reduction_pct(before.comp, after.comp),
        score_failures: out.score_failures,
        rewrite_steps: out.rewrite_steps,
        wall_time_s: (!args.no_timing).then_some(out.wall_time),
        equivalent_up_to_scalar: equivalent,
        verification,
    };

    let mut manifest = RunManifest::new(
        "optimize",
        argv,
        serde_json::json!({
            "method": args.method,
            "search": to_json(&args.search.config(rng_seed)),
            "ga": { "n_mutants": args.search.mutants, "n_gens": args.search.gens },
            "verify": args.verify,
            "oracle_max_qubits": OracleConfig::from_env().max_qubits,
        }),
    );
    manifest.input_path = Some(args.input.display().to_string());
    manifest.input_hash = Some(content_hash(&bytes));
    manifest.rng_seeds.insert("seed".into(), args.seed);
    manifest.rng_seeds.insert("search".into(), rng_seed);

    let qasm = emit_circuit(&out.circuit);
    let stats_json = serde_json::to_string_pretty(&stats).code(EXIT_OUTPUT)? + "\n";
    match &args.output {
        Some(p) => {
            write_file(p, &qasm)?;
            manifest.outputs.push(p.display().to_string());
        }
        None => print!("{qasm}"),
    }
    let stats_path = args
        .stats
        .clone()
        .or_else(|| args.output.as_ref().map(|p| with_suffix(p, "stats.json")));
    match &stats_path {
        Some(p) => {
            write_file(p, &stats_json)?;
            manifest.outputs.push(p.display().to_string());
        }
        None => eprint!("{stats_json}"),
    }
    let mpath = manifest_path(&args.manifest, args.output.as_deref(), "optimize");
    manifest.write(&mpath)?;

    if equivalent == Some(false) {
        return Err(fail(
            EXIT_VERIFICATION,
            "optimised circuit is not equivalent to the input",
        ));
    }
    Ok(())
}

/// Oracle comparison of input and output, skipped above the qubit cap.
fn verify(a: &Circuit, b: &Circuit) -> (Option<bool>, String) {
    let cfg = OracleConfig::from_env();
    if a.n_qubits() > cfg.max_qubits {
        return (
            None,
            format!(
                "skipped: {} qubits exceeds the oracle cap of {}",
                a.n_qubits(),
                cfg.max_qubits
            ),
        );
    }
    let res = evaluate_circuit_with(a, &cfg).and_then(|ma| {
        let mb = evaluate_circuit_with(b, &cfg)?;
        equal_up_to_scalar(&ma, &mb, 1e-8)
    });
    match res {
        Ok(eq) => (Some(eq), "checked".to_string()),
        Err(e) => (None, format!("skipped: {e}")),
    }
}
