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

//! Semantics-preserving rewrites: the basic ZX rules, the lc/pivot
//! simplifications and the two congruences used as search moves.

mod basic;
mod congruence;
mod simp;

pub use basic::{
    check_color_change, check_fuse, check_hopf, check_remove_identity, color_change,
    color_change_unchecked, fuse, fuse_unchecked, hopf, hopf_unchecked, remove_identity,
    remove_identity_unchecked,
};
pub use congruence::{
    congruence_lc, congruence_lc_unchecked, congruence_pivot, congruence_pivot_unchecked,
    eligible_subjects, CongruenceKind, Subject,
};
pub use simp::{
    check_lc_simp, check_pivot_simp, lc_simp, lc_simp_unchecked, pivot_simp, pivot_simp_unchecked,
    simplify_to_fixpoint, simplify_with, SimpRules,
};

use crate::zx::V;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RewriteRule {
    Fusion,
    Identity,
    ColorChange,
    Hopf,
    LcSimp,
    PivotSimp,
    CongruenceLC,
    CongruencePivot,
}

impl RewriteRule {
    pub const ALL: [RewriteRule; 8] = [
        RewriteRule::Fusion,
        RewriteRule::Identity,
        RewriteRule::ColorChange,
        RewriteRule::Hopf,
        RewriteRule::LcSimp,
        RewriteRule::PivotSimp,
        RewriteRule::CongruenceLC,
        RewriteRule::CongruencePivot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RewriteRule::Fusion => "fusion",
            RewriteRule::Identity => "identity",
            RewriteRule::ColorChange => "color-change",
            RewriteRule::Hopf => "hopf",
            RewriteRule::LcSimp => "lc-simp",
            RewriteRule::PivotSimp => "pivot-simp",
            RewriteRule::CongruenceLC => "congruence-lc",
            RewriteRule::CongruencePivot => "congruence-pivot",
        }
    }
}

impl std::fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("{rule:?} does not apply to {subjects:?}: {reason}")]
    Precondition {
        rule: RewriteRule,
        subjects: Vec<V>,
        reason: &'static str,
    },
}

pub(crate) fn precondition(
    ok: bool,
    rule: RewriteRule,
    subjects: &[V],
    reason: &'static str,
) -> Result<(), RewriteError> {
    if ok {
        Ok(())
    } else {
        Err(RewriteError::Precondition {
            rule,
            subjects: subjects.to_vec(),
            reason,
        })
    }
}

/// One rule application, as recorded in traces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteStep {
    pub rule: RewriteRule,
    pub subjects: Vec<V>,
    pub timestamp: usize,
}

/// A trace of rewrite steps with consecutive timestamps.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RewriteLog {
    steps: Vec<RewriteStep>,
}

impl RewriteLog {
    pub fn new() -> RewriteLog {
        RewriteLog::default()
    }

    pub fn push(&mut self, rule: RewriteRule, subjects: &[V]) {
        let timestamp = self.steps.len();
        self.steps.push(RewriteStep {
            rule,
            subjects: subjects.to_vec(),
            timestamp,
        });
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[RewriteStep] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<RewriteStep> {
        self.steps
    }
}

/// Serialise steps as JSON lines.
pub fn steps_to_json_lines(steps: &[RewriteStep]) -> String {
    let mut s = String::new();
    for st in steps {
        s.push_str(&serde_json::to_string(st).expect("steps always serialise"));
        s.push('\n');
    }
    s
}

pub fn steps_from_json_lines(s: &str) -> Result<Vec<RewriteStep>, serde_json::Error> {
    s.lines()
        .filter(|l| !l.trim().is_empty())
        .map(serde_json::from_str)
        .collect()
}
