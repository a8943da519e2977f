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

//! `zxopt correlate`: how well do cheap diagram properties predict the
//! complexity of the extracted circuit?

use crate::common::*;
use clap::Args;
use serde::Serialize;
use std::path::PathBuf;
use zxopt::search::{correlation_study, CorrelationRow};

#[derive(Args, Debug)]
pub struct CorrelateArgs {
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long, default_value_t = 10)]
    pub qubits: usize,
    #[arg(long, default_value_t = 100)]
    pub gates: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the table as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    property: &'a str,
    r: Option<f64>,
    p_value: Option<f64>,
    n: usize,
}

fn cell(x: Option<f64>, f: impl Fn(f64) -> String) -> String {
    x.map_or_else(|| "undefined".to_string(), f)
}

pub fn table(rows: &[CorrelationRow]) -> String {
    let mut out = format!("{:<12} {:>10} {:>12}\n", "Property", "r", "p");
    for row in rows {
        out += &format!(
            "{:<12} {:>10} {:>12}\n",
            row.property.label(),
            cell(row.r, |r| format!("{r:.3}")),
            cell(row.p_value, |p| format!("{p:.3e}")),
        );
    }
    out
}

pub fn run(args: &CorrelateArgs, argv: &[String]) -> CmdResult {
    let rng_seed = sub_seed(args.seed, "correlate");
    let rows =
        correlation_study(args.samples, args.qubits, args.gates, rng_seed).code(EXIT_USAGE)?;
    print!("{}", table(&rows));
    if let Some(n) = rows.first().map(|r| r.n) {
        println!(
            "({n} samples, {} qubits, {} gates)",
            args.qubits, args.gates
        );
    }

    let mut manifest = RunManifest::new(
        "correlate",
        argv,
        serde_json::json!({
            "samples": args.samples,
            "qubits": args.qubits,
            "gates": args.gates,
        }),
    );
    manifest.rng_seeds.insert("seed".into(), args.seed);
    manifest.rng_seeds.insert("correlate".into(), rng_seed);
    if let Some(p) = &args.report {
        let json: Vec<JsonRow> = rows
            .iter()
            .map(|r| JsonRow {
                property: r.property.label(),
                r: r.r,
                p_value: r.p_value,
                n: r.n,
            })
            .collect();
        let text = serde_json::to_string_pretty(&json).code(EXIT_OUTPUT)? + "\n";
        write_file(p, &text)?;
        manifest.outputs.push(p.display().to_string());
    }
    manifest.write(&manifest_path(
        &args.manifest,
        args.report.as_deref(),
        "correlate",
    ))
}
