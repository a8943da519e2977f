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

//! Soundness sweep: every rewrite rule is applied to small diagrams and the
//! result is compared with the original under the tensor oracle.
//!
//! Rules are passed in as plain function pointers, so a deliberately broken
//! implementation can be swept to check that the sweep notices.

use crate::circuit::{Circuit, Gate};
use crate::oracle::{
    equal_up_to_scalar, evaluate_diagram_with, LinearMap, OracleConfig, OracleError,
};
use crate::phase::Phase;
use crate::rewrite::{
    check_color_change, check_fuse, check_hopf, check_lc_simp, check_pivot_simp,
    check_remove_identity, color_change_unchecked, congruence_lc_unchecked,
    congruence_pivot_unchecked, eligible_subjects, fuse_unchecked, hopf_unchecked,
    lc_simp_unchecked, pivot_simp_unchecked, remove_identity_unchecked, CongruenceKind,
    RewriteRule,
};
use crate::zx::{from_circuit, is_graph_like, to_graph_like, EdgeMult, VertexKind, ZxDiagram, V};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A rule implementation to check. `apply` may assume its subjects are
/// eligible in the sense of the rule's standard precondition.
#[derive(Clone, Copy)]
pub struct RuleUnderTest {
    pub rule: RewriteRule,
    pub apply: fn(&mut ZxDiagram, &[V]),
}

impl std::fmt::Debug for RuleUnderTest {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RuleUnderTest({:?})", self.rule)
    }
}

/// The library's own implementation of `rule`.
pub fn standard_rule(rule: RewriteRule) -> RuleUnderTest {
    let apply: fn(&mut ZxDiagram, &[V]) = match rule {
        RewriteRule::Fusion => |d, s| fuse_unchecked(d, s[0], s[1]),
        RewriteRule::Identity => |d, s| remove_identity_unchecked(d, s[0]),
        RewriteRule::ColorChange => |d, s| color_change_unchecked(d, s[0]),
        RewriteRule::Hopf => |d, s| hopf_unchecked(d, s[0], s[1]),
        RewriteRule::LcSimp => |d, s| lc_simp_unchecked(d, s[0]),
        RewriteRule::PivotSimp => |d, s| pivot_simp_unchecked(d, s[0], s[1]),
        RewriteRule::CongruenceLC => |d, s| {
            congruence_lc_unchecked(d, s[0]);
        },
        RewriteRule::CongruencePivot => |d, s| {
            congruence_pivot_unchecked(d, s[0], s[1]);
        },
    };
    RuleUnderTest { rule, apply }
}

pub fn standard_rules() -> Vec<RuleUnderTest> {
    RewriteRule::ALL.iter().map(|&r| standard_rule(r)).collect()
}

/// Whether `rule` works on graph-like diagrams only.
fn needs_graph_like(rule: RewriteRule) -> bool {
    matches!(
        rule,
        RewriteRule::LcSimp
            | RewriteRule::PivotSimp
            | RewriteRule::CongruenceLC
            | RewriteRule::CongruencePivot
    )
}

/// All places in `d` where `rule` may be applied.
pub fn rule_subjects(d: &ZxDiagram, rule: RewriteRule) -> Vec<Vec<V>> {
    if needs_graph_like(rule) && !is_graph_like(d) {
        return Vec::new();
    }
    let sp: Vec<V> = d.spiders().collect();
    let singles = |f: fn(&ZxDiagram, V) -> bool| -> Vec<Vec<V>> {
        sp.iter().filter(|&&v| f(d, v)).map(|&v| vec![v]).collect()
    };
    let pairs = |f: fn(&ZxDiagram, V, V) -> bool| -> Vec<Vec<V>> {
        let mut out = Vec::new();
        for &u in &sp {
            for &v in &sp {
                if u < v && f(d, u, v) {
                    out.push(vec![u, v]);
                }
            }
        }
        out
    };
    match rule {
        RewriteRule::Fusion => pairs(check_fuse),
        RewriteRule::Identity => singles(check_remove_identity),
        RewriteRule::ColorChange => singles(check_color_change),
        RewriteRule::Hopf => pairs(check_hopf),
        RewriteRule::LcSimp => singles(check_lc_simp),
        RewriteRule::PivotSimp => pairs(check_pivot_simp),
        RewriteRule::CongruenceLC => eligible_subjects(d, CongruenceKind::Lc)
            .iter()
            .map(|s| s.vertices())
            .collect(),
        RewriteRule::CongruencePivot => eligible_subjects(d, CongruenceKind::Pivot)
            .iter()
            .map(|s| s.vertices())
            .collect(),
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Largest diagram in the exhaustive part, in spiders.
    pub max_spiders: usize,
    /// Most boundary wires in the exhaustive part.
    pub max_wires: usize,
    /// Randomised applications per rule.
    pub random_cases: usize,
    /// Largest circuit width for the randomised part.
    pub max_qubits: usize,
    pub seed: u64,
    pub tol: f64,
    pub oracle: OracleConfig,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_spiders: 4,
            max_wires: 2,
            random_cases: 200,
            max_qubits: 5,
            seed: 0,
            tol: 1e-8,
            oracle: OracleConfig::default(),
        }
    }
}

/// Outcome of sweeping one rule.
#[derive(Debug, Clone, Serialize)]
pub struct RuleReport {
    pub rule: RewriteRule,
    pub exhaustive_cases: usize,
    pub random_cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl RuleReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn sweep(rules: &[RuleUnderTest], cfg: &SweepConfig) -> Vec<RuleReport> {
    rules.iter().map(|r| sweep_rule(r, cfg)).collect()
}

pub fn sweep_rule(rule: &RuleUnderTest, cfg: &SweepConfig) -> RuleReport {
    let mut report = RuleReport {
        rule: rule.rule,
        exhaustive_cases: 0,
        random_cases: 0,
        failures: 0,
        first_failure: None,
    };
    for k in 1..=cfg.max_spiders {
        for_each_small_diagram(rule.rule, k, cfg.max_wires, |d| {
            let n = check_all(rule, d, cfg, &mut report, "exhaustive");
            report.exhaustive_cases += n;
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // some rules are rarely eligible on a given circuit, so give up after a
    // generous number of draws rather than loop forever
    let mut attempts = 0;
    while report.random_cases < cfg.random_cases && attempts < 50 * cfg.random_cases {
        attempts += 1;
        let d = random_diagram(rule.rule, cfg.max_qubits, &mut rng);
        let subjects = rule_subjects(&d, rule.rule);
        if subjects.is_empty() {
            continue;
        }
        let s = &subjects[rng.gen_range(0..subjects.len())];
        let label = format!("random case {}", report.random_cases);
        if let Some(msg) = check_one(rule, &d, s, cfg) {
            record(&mut report, format!("{label}: {msg}"));
        }
        report.random_cases += 1;
    }
    report
}

/// Entries below this are rounding noise. Diagrams in the sweep are small,
/// so their non-zero entries are far larger.
const ZERO_NORM: f64 = 1e-9;

/// Equality up to a non-zero scalar, where two numerically zero maps agree
/// and a zero map never equals a non-zero one.
fn same_map(a: &LinearMap, b: &LinearMap, tol: f64) -> Result<bool, OracleError> {
    match (a.max_norm() <= ZERO_NORM, b.max_norm() <= ZERO_NORM) {
        (true, true) => Ok(true),
        (false, false) => equal_up_to_scalar(a, b, tol),
        _ => Ok(false),
    }
}

fn record(report: &mut RuleReport, msg: String) {
    report.failures += 1;
    report.first_failure.get_or_insert(msg);
}

/// Check every eligible subject of `d`, returning how many were checked.
fn check_all(
    rule: &RuleUnderTest,
    d: &ZxDiagram,
    cfg: &SweepConfig,
    report: &mut RuleReport,
    mode: &str,
) -> usize {
    let subjects = rule_subjects(d, rule.rule);
    if subjects.is_empty() {
        return 0;
    }
    let before = match evaluate_diagram_with(d, &cfg.oracle) {
        Ok(m) => m,
        Err(e) => {
            record(report, format!("{mode}: oracle failed on input: {e}"));
            return 0;
        }
    };
    for s in &subjects {
        let mut after = d.clone();
        (rule.apply)(&mut after, s);
        let ok = evaluate_diagram_with(&after, &cfg.oracle)
            .map_err(|e| e.to_string())
            .and_then(|m| same_map(&before, &m, cfg.tol).map_err(|e| e.to_string()));
        match ok {
            Ok(true) => {}
            Ok(false) => record(report, format!("{mode}: maps differ at {s:?} in {d:?}")),
            Err(e) => record(report, format!("{mode}: {e} at {s:?}")),
        }
    }
    subjects.len()
}

fn check_one(rule: &RuleUnderTest, d: &ZxDiagram, s: &[V], cfg: &SweepConfig) -> Option<String> {
    let mut after = d.clone();
    (rule.apply)(&mut after, s);
    let res = evaluate_diagram_with(d, &cfg.oracle).and_then(|a| {
        let b = evaluate_diagram_with(&after, &cfg.oracle)?;
        same_map(&a, &b, cfg.tol)
    });
    match res {
        Ok(true) => None,
        Ok(false) => Some(format!("maps differ at {s:?}")),
        Err(e) => Some(e.to_string()),
    }
}

/// One letter of the edge alphabet between a pair of spiders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Wire {
    None,
    Plain,
    Had,
    /// Two parallel edges that Hopf cancels: plain between opposite
    /// colours, Hadamard between equal ones.
    Pair,
}

/// Edge alphabet of the exhaustive part, per rule family.
fn edge_alphabet(rule: RewriteRule) -> &'static [Wire] {
    match rule {
        RewriteRule::Hopf => &[Wire::None, Wire::Plain, Wire::Pair],
        r if needs_graph_like(r) => &[Wire::None, Wire::Had],
        _ => &[Wire::None, Wire::Plain, Wire::Had],
    }
}

fn wire_edges(w: Wire, same_colour: bool) -> EdgeMult {
    let (simple, hadamard) = match w {
        Wire::None => (0, 0),
        Wire::Plain => (1, 0),
        Wire::Had => (0, 1),
        Wire::Pair if same_colour => (0, 2),
        Wire::Pair => (2, 0),
    };
    EdgeMult { simple, hadamard }
}

/// Phases tried on graph-like diagrams. Every assignment is enumerated.
fn graph_palette(rule: RewriteRule) -> [Phase; 3] {
    match rule {
        RewriteRule::LcSimp => [Phase::new(1, 2), Phase::new(3, 2), Phase::new(1, 4)],
        RewriteRule::PivotSimp => [Phase::zero(), Phase::pi(), Phase::new(1, 4)],
        _ => [Phase::zero(), Phase::new(1, 2), Phase::new(1, 4)],
    }
}

/// Phases for the basic rules, assigned by rotating through the list so
/// that each shape sees a zero-phase spider somewhere.
const BASIC_PALETTE: [(i64, i64); 4] = [(0, 1), (1, 4), (1, 2), (1, 1)];

/// Call `f` on every diagram with `k` spiders and at most `max_wires`
/// boundary wires drawn from the rule's family. All boundaries are outputs.
fn for_each_small_diagram(
    rule: RewriteRule,
    k: usize,
    max_wires: usize,
    mut f: impl FnMut(&ZxDiagram),
) {
    let graph = needs_graph_like(rule);
    let alphabet = edge_alphabet(rule);
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .collect();
    let kinds: &[VertexKind] = if graph {
        &[VertexKind::Z]
    } else {
        &[VertexKind::Z, VertexKind::X]
    };
    // graph-like diagrams allow at most one boundary per spider
    let placements = boundary_placements(k, max_wires, graph);
    let n_phase = if graph { 3usize.pow(k as u32) } else { 1 };
    let palette = graph_palette(rule);
    let mut shape = 0usize;

    for kind_code in 0..kinds.len().pow(k as u32) {
        for edge_code in 0..alphabet.len().pow(pairs.len() as u32) {
            for bs in &placements {
                for phase_code in 0..n_phase {
                    shape += 1;
                    let mut d = ZxDiagram::new();
                    let mut kc = kind_code;
                    let mut pc = phase_code;
                    let vs: Vec<V> = (0..k)
                        .map(|i| {
                            let kind = kinds[kc % kinds.len()];
                            kc /= kinds.len();
                            let phase = if graph {
                                let p = palette[pc % 3];
                                pc /= 3;
                                p
                            } else {
                                let (n, m) = BASIC_PALETTE[(shape + i) % BASIC_PALETTE.len()];
                                Phase::new(n, m)
                            };
                            d.add_vertex(kind, phase)
                        })
                        .collect();
                    let mut ec = edge_code;
                    for &(a, b) in &pairs {
                        let w = alphabet[ec % alphabet.len()];
                        ec /= alphabet.len();
                        let same = d.kind(vs[a]) == d.kind(vs[b]);
                        d.add_edges(vs[a], vs[b], wire_edges(w, same));
                    }
                    let outs: Vec<V> = bs
                        .iter()
                        .map(|&i| {
                            let b = d.add_vertex(VertexKind::Boundary, Phase::zero());
                            d.add_edge(vs[i], b, crate::zx::EdgeType::Simple);
                            b
                        })
                        .collect();
                    d.set_outputs(outs);
                    f(&d);
                }
            }
        }
    }
}

/// Multisets (or sets, if `distinct`) of at most `max` spider indices.
fn boundary_placements(k: usize, max: usize, distinct: bool) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for p in &frontier {
            let start = match p.last() {
                Some(&l) if distinct => l + 1,
                Some(&l) => l,
                None => 0,
            };
            for i in start..k {
                let mut q: Vec<usize> = p.clone();
                q.push(i);
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// A diagram from a random circuit of 1 to `max_qubits` qubits, put in
/// graph-like form when the rule needs it and partly fused otherwise. Phases are multiples of pi/4 so
/// that Clifford spiders are common.
pub fn random_diagram(rule: RewriteRule, max_qubits: usize, rng: &mut impl Rng) -> ZxDiagram {
    let n = rng.gen_range(1..=max_qubits.max(1));
    let n_gates = rng.gen_range(n..=4 * n);
    let mut c = Circuit::new(n);
    for _ in 0..n_gates {
        let q = rng.gen_range(0..n);
        let phase = Phase::new(rng.gen_range(0..8), 4);
        let choice = if n == 1 {
            rng.gen_range(0..3)
        } else {
            rng.gen_range(0..5)
        };
        let g = match choice {
            0 => Gate::H(q),
            1 => Gate::ZPhase(q, phase),
            2 => Gate::XPhase(q, phase),
            other => {
                let t = (q + rng.gen_range(1..n)) % n;
                if other == 3 {
                    Gate::Cnot {
                        control: q,
                        target: t,
                    }
                } else {
                    Gate::Cz(q, t)
                }
            }
        };
        c.push(g).expect("qubits in range");
    }
    let mut d = from_circuit(&c);
    if needs_graph_like(rule) {
        return to_graph_like(&d);
    }
    // fusing a few pairs creates parallel edges and bare wires
    for _ in 0..rng.gen_range(0..=n_gates) {
        let fusable = rule_subjects(&d, RewriteRule::Fusion);
        if fusable.is_empty() {
            break;
        }
        let s = &fusable[rng.gen_range(0..fusable.len())];
        fuse_unchecked(&mut d, s[0], s[1]);
    }
    d
}

/// Deliberately wrong rule implementations, for checking that the sweep
/// catches mistakes.
pub mod faults {
    use super::RuleUnderTest;
    use crate::rewrite::RewriteRule;
    use crate::zx::{graph_ops::complement_pairs, VertexKind};

    /// `lc_simp` adding the removed spider's phase to its neighbours
    /// instead of subtracting it.
    pub fn lc_simp_sign_flip() -> RuleUnderTest {
        RuleUnderTest {
            rule: RewriteRule::LcSimp,
            apply: |d, s| {
                let u = s[0];
                let a = d.phase(u);
                let nu = d.neighbor_vec(u);
                complement_pairs(d, &nu);
                for &w in &nu {
                    d.add_to_phase(w, a);
                }
                d.remove_vertex(u);
            },
        }
    }

    /// Colour change that forgets to toggle the incident edges.
    pub fn color_change_keeps_edges() -> RuleUnderTest {
        RuleUnderTest {
            rule: RewriteRule::ColorChange,
            apply: |d, s| {
                let k = match d.kind(s[0]) {
                    VertexKind::Z => VertexKind::X,
                    _ => VertexKind::Z,
                };
                d.set_kind(s[0], k);
            },
        }
    }

    /// Look up a fault by name.
    pub fn by_name(name: &str) -> Option<RuleUnderTest> {
        match name {
            "lc-simp-sign-flip" => Some(lc_simp_sign_flip()),
            "color-change-keeps-edges" => Some(color_change_keeps_edges()),
            _ => None,
        }
    }

    pub const NAMES: [&str; 2] = ["lc-simp-sign-flip", "color-change-keeps-edges"];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SweepConfig {
        SweepConfig {
            max_spiders: 3,
            random_cases: 20,
            max_qubits: 3,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn placements() {
        assert_eq!(boundary_placements(3, 2, false).len(), 1 + 3 + 6);
        assert_eq!(boundary_placements(3, 2, true).len(), 1 + 3 + 3);
    }

    #[test]
    fn standard_rules_pass_quick_sweep() {
        for r in sweep(&standard_rules(), &quick()) {
            assert!(r.passed(), "{:?}: {:?}", r.rule, r.first_failure);
            assert!(r.exhaustive_cases > 0, "{:?}", r.rule);
            assert_eq!(r.random_cases, 20, "{:?}", r.rule);
        }
    }

    #[test]
    fn detects_sign_flip_in_lc_simp() {
        let r = sweep_rule(&faults::lc_simp_sign_flip(), &quick());
        assert!(!r.passed());
        assert!(r.first_failure.is_some());
    }

    #[test]
    fn detects_missing_colour_toggle() {
        assert!(!sweep_rule(&faults::color_change_keeps_edges(), &quick()).passed());
    }
}
