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

//! `zxopt` command-line tool.
//!
//! Exit codes: 0 success, 1 unreadable or unparsable input, 2 extraction
//! failure, 3 verification failure, 64 bad arguments, 74 output error.

mod benchmark;
mod common;
mod correlate;
mod optimize;
mod verify_rules;

use clap::{Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "zxopt",
    version,
    about = "Optimise quantum circuits with ZX-calculus search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Optimise one circuit file.
    Optimize(optimize::OptimizeArgs),
    /// Run the random-circuit and fixture benchmark grid.
    Benchmark(benchmark::BenchmarkArgs),
    /// Check every rewrite rule against the tensor oracle.
    VerifyRules(verify_rules::VerifyArgs),
    /// Correlate diagram properties with extracted circuit complexity.
    Correlate(correlate::CorrelateArgs),
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(common::EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let res = match &cli.command {
        Command::Optimize(a) => optimize::run(a, &argv),
        Command::Benchmark(a) => benchmark::run(a, &argv),
        Command::VerifyRules(a) => verify_rules::run(a, &argv),
        Command::Correlate(a) => correlate::run(a, &argv),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("zxopt: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
