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

//! `zxopt benchmark`: run methods over a grid of random circuits and the
//! bundled fixtures, writing one CSV row per circuit and method.

use crate::common::*;
use clap::Args;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;
use zxopt::circuit::{complexity, random_circuit, Circuit, CircuitParams};
use zxopt::fixtures;

#[derive(Args, Debug)]
pub struct BenchmarkArgs {
    /// Qubit counts of the random-circuit grid; pass an empty list to skip it.
    #[arg(long, value_delimiter = ',', default_value = "4,6,8")]
    pub qubits: Vec<usize>,
    #[arg(long, default_value_t = 15)]
    pub gates_per_qubit: usize,
    /// Random circuits per qubit count.
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "baseline,sa")]
    pub methods: Vec<Method>,
    /// Bundled fixture circuits to include, by name, or `all`.
    #[arg(long = "fixture")]
    pub fixtures: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(short, long, default_value = "benchmark.csv")]
    pub output: PathBuf,
    /// Manifest path; defaults to `<output>.manifest.json`.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Leave the wall time column empty so that reruns are byte-identical.
    #[arg(long)]
    pub no_timing: bool,
}

/// One circuit of the grid.
struct Cell {
    name: String,
    group: String,
    circuit: Circuit,
    search_seed: u64,
}

#[derive(Debug, Serialize)]
struct Row {
    circuit: String,
    qubits: usize,
    gates: usize,
    method: &'static str,
    seed: u64,
    comp_before: usize,
    comp_after: Option<usize>,
    two_qubit_before: usize,
    two_qubit_after: Option<usize>,
    t_count: Option<usize>,
    reduction_pct: Option<f64>,
    wall_time_s: Option<f64>,
}

pub fn run(args: &BenchmarkArgs, argv: &[String]) -> CmdResult {
    for &m in &args.methods {
        args.search.validate(m)?;
    }
    let mut manifest = RunManifest::new(
        "benchmark",
        argv,
        serde_json::json!({
            "qubits": args.qubits,
            "gates_per_qubit": args.gates_per_qubit,
            "trials": args.trials,
            "methods": args.methods,
            "fixtures": args.fixtures,
            "search": to_json(&args.search.config(0)),
            "ga": { "n_mutants": args.search.mutants, "n_gens": args.search.gens },
        }),
    );
    manifest.rng_seeds.insert("seed".into(), args.seed);

    let mut cells = Vec::new();
    for &q in &args.qubits {
        for t in 0..args.trials {
            let name = format!("random-q{q}-t{t}");
            let cseed = sub_seed(args.seed, &format!("circuit/{name}"));
            let params = CircuitParams::new(q, args.gates_per_qubit * q);
            let circuit = random_circuit(&params, cseed).code(EXIT_USAGE)?;
            let search_seed = sub_seed(args.seed, &format!("search/{name}"));
            manifest.rng_seeds.insert(format!("circuit/{name}"), cseed);
            manifest
                .rng_seeds
                .insert(format!("search/{name}"), search_seed);
            cells.push(Cell {
                name,
                group: format!("{q} qubits"),
                circuit,
                search_seed,
            });
        }
    }
    for name in fixture_names(&args.fixtures) {
        match fixtures::load(&name) {
            Some(circuit) => {
                let search_seed = sub_seed(args.seed, &format!("search/{name}"));
                manifest
                    .rng_seeds
                    .insert(format!("search/{name}"), search_seed);
                cells.push(Cell {
                    group: name.clone(),
                    name,
                    circuit,
                    search_seed,
                });
            }
            None => eprintln!("zxopt: no fixture named {name:?}, skipping"),
        }
    }

    let jobs: Vec<(&Cell, Method)> = cells
        .iter()
        .flat_map(|c| args.methods.iter().map(move |&m| (c, m)))
        .collect();
    // rayon keeps the input order, whatever order the jobs finish in
    let rows: Vec<Row> = jobs
        .par_iter()
        .map(|&(cell, method)| run_cell(cell, method, args))
        .collect();

    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &rows {
        w.serialize(r).code(EXIT_OUTPUT)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| e.into_error())
        .code(EXIT_OUTPUT)?;
    let text = String::from_utf8(bytes).expect("csv output is UTF-8");
    write_file(&args.output, &text)?;
    manifest.outputs.push(args.output.display().to_string());
    let mpath = manifest_path(&args.manifest, Some(&args.output), "benchmark");
    manifest.write(&mpath)?;

    print!("{}", summary(&cells, &rows));
    Ok(())
}

fn fixture_names(requested: &[String]) -> Vec<String> {
    if requested.iter().any(|n| n == "all") {
        return fixtures::ALL.iter().map(|(n, _)| n.to_string()).collect();
    }
    requested.to_vec()
}

fn run_cell(cell: &Cell, method: Method, args: &BenchmarkArgs) -> Row {
    let before = complexity(&cell.circuit);
    let mut row = Row {
        circuit: cell.name.clone(),
        qubits: cell.circuit.n_qubits(),
        gates: cell.circuit.len(),
        method: method.name(),
        seed: args.seed,
        comp_before: before.comp,
        comp_after: None,
        two_qubit_before: before.two_qubit_count,
        two_qubit_after: None,
        t_count: None,
        reduction_pct: None,
        wall_time_s: None,
    };
    let seed = seed_diagram(&cell.circuit);
    match run_method(method, &seed, &args.search, cell.search_seed) {
        Ok(out) => {
            let after = complexity(&out.circuit);
            row.comp_after = Some(after.comp);
            row.two_qubit_after = Some(after.two_qubit_count);
            row.t_count = Some(after.t_count);
            row.reduction_pct = Some(reduction_pct(before.comp, after.comp));
            row.wall_time_s = (!args.no_timing).then_some(out.wall_time);
        }
        Err(f) => eprintln!(
            "zxopt: {} with {} failed: {:#}",
            cell.name,
            method.name(),
            f.error
        ),
    }
    row
}

/// Mean reduction and two-qubit count per group and method, in grid order.
fn summary(cells: &[Cell], rows: &[Row]) -> String {
    let mut order: Vec<&str> = Vec::new();
    for c in cells {
        if !order.contains(&c.group.as_str()) {
            order.push(&c.group);
        }
    }
    let group_of: BTreeMap<&str, &str> = cells
        .iter()
        .map(|c| (c.name.as_str(), c.group.as_str()))
        .collect();
    let mut out = format!(
        "{:<16} {:<9} {:>5} {:>6} {:>14} {:>14}\n",
        "circuits", "method", "runs", "failed", "reduction_pct", "two_qubit"
    );
    for g in order {
        let mut methods: Vec<&str> = Vec::new();
        for r in rows.iter().filter(|r| group_of[r.circuit.as_str()] == g) {
            if !methods.contains(&r.method) {
                methods.push(r.method);
            }
        }
        for m in methods {
            let sel: Vec<&Row> = rows
                .iter()
                .filter(|r| group_of[r.circuit.as_str()] == g && r.method == m)
                .collect();
            let ok: Vec<&&Row> = sel.iter().filter(|r| r.comp_after.is_some()).collect();
            let mean = |f: &dyn Fn(&Row) -> f64| {
                if ok.is_empty() {
                    f64::NAN
                } else {
                    ok.iter().map(|r| f(r)).sum::<f64>() / ok.len() as f64
                }
            };
            out += &format!(
                "{:<16} {:<9} {:>5} {:>6} {:>14.1} {:>14.1}\n",
                g,
                m,
                sel.len(),
                sel.len() - ok.len(),
                mean(&|r| r.reduction_pct.unwrap_or(0.0)),
                mean(&|r| r.two_qubit_after.unwrap_or(0) as f64),
            );
        }
    }
    out
}
