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

//! Local complementation and pivoting simplifications, and the fixpoint
//! simplifier built from them.

use super::{precondition, RewriteError, RewriteLog, RewriteRule, RewriteStep};
use crate::phase::Phase;
use crate::zx::{is_graph_like, to_graph_like_logged, EdgeType, ZxDiagram, V};

use crate::zx::graph_ops::{complement_between, complement_pairs, pivot_classes};

pub fn check_lc_simp(d: &ZxDiagram, u: V) -> bool {
    d.contains(u) && d.is_interior(u) && d.phase(u).is_proper_clifford()
}

/// Remove an interior spider with phase `+-pi/2`, complementing its
/// neighbourhood and subtracting its phase from every neighbour.
pub fn lc_simp_unchecked(d: &mut ZxDiagram, u: V) {
    let a = d.phase(u);
    let nu = d.neighbor_vec(u);
    complement_pairs(d, &nu);
    for &w in &nu {
        d.add_to_phase(w, -a);
    }
    d.remove_vertex(u);
}

pub fn lc_simp(d: &ZxDiagram, u: V) -> Result<ZxDiagram, RewriteError> {
    let r = RewriteRule::LcSimp;
    precondition(is_graph_like(d), r, &[u], "diagram is not graph-like")?;
    precondition(
        check_lc_simp(d, u),
        r,
        &[u],
        "needs an interior spider with phase +-pi/2",
    )?;
    let mut d = d.clone();
    lc_simp_unchecked(&mut d, u);
    Ok(d)
}

pub fn check_pivot_simp(d: &ZxDiagram, u: V, v: V) -> bool {
    u != v
        && d.contains(u)
        && d.contains(v)
        && d.is_interior(u)
        && d.is_interior(v)
        && d.phase(u).is_pauli()
        && d.phase(v).is_pauli()
        && d.edge_type(u, v) == Some(EdgeType::Hadamard)
}

/// Remove an adjacent pair of interior Pauli spiders, complementing the
/// edges between their neighbourhood classes.
pub fn pivot_simp_unchecked(d: &mut ZxDiagram, u: V, v: V) {
    let (pu, pv) = (d.phase(u), d.phase(v));
    let (a, b, c) = pivot_classes(d, u, v);
    complement_between(d, &a, &b);
    complement_between(d, &a, &c);
    complement_between(d, &b, &c);
    for &w in &a {
        d.add_to_phase(w, pv);
    }
    for &w in &b {
        d.add_to_phase(w, pu);
    }
    for &w in &c {
        d.add_to_phase(w, pu + pv + Phase::pi());
    }
    d.remove_vertex(u);
    d.remove_vertex(v);
}

pub fn pivot_simp(d: &ZxDiagram, u: V, v: V) -> Result<ZxDiagram, RewriteError> {
    let r = RewriteRule::PivotSimp;
    precondition(is_graph_like(d), r, &[u, v], "diagram is not graph-like")?;
    precondition(
        check_pivot_simp(d, u, v),
        r,
        &[u, v],
        "needs adjacent interior spiders with phases 0 or pi",
    )?;
    let mut d = d.clone();
    pivot_simp_unchecked(&mut d, u, v);
    Ok(d)
}

/// An interior phase-free spider with two neighbours that can be removed and
/// its neighbours fused without putting two boundaries on one spider.
fn identity_candidate(d: &ZxDiagram, v: V) -> Option<(V, V)> {
    if !d.phase(v).is_zero() || !d.is_interior(v) || d.degree(v) != 2 {
        return None;
    }
    let ns = d.neighbor_vec(v);
    if ns.len() != 2 {
        return None;
    }
    let (a, b) = (ns[0], ns[1]);
    if !d.boundary_neighbors(a).is_empty() && !d.boundary_neighbors(b).is_empty() {
        return None;
    }
    // keep the boundary, if any, on the surviving spider
    if d.boundary_neighbors(b).is_empty() {
        Some((a, b))
    } else {
        Some((b, a))
    }
}

/// Remove `v` and fuse `b` into `a` in graph-like form.
fn remove_identity_graph_like(d: &mut ZxDiagram, v: V, a: V, b: V, log: &mut RewriteLog) {
    d.remove_vertex(v);
    log.push(RewriteRule::Identity, &[v]);
    d.add_to_phase(a, d.phase(b));
    if d.connected(a, b) {
        // becomes a Hadamard self-loop
        d.remove_all_edges(a, b);
        d.add_to_phase(a, Phase::pi());
    }
    for x in d.neighbor_vec(b) {
        let t = d.edge_type(b, x).expect("graph-like");
        if d.is_boundary(x) {
            d.add_edge(a, x, t);
        } else {
            d.toggle_hadamard(a, x);
        }
    }
    d.remove_vertex(b);
    log.push(RewriteRule::Fusion, &[a, b]);
}

/// Which simplifications the fixpoint loop may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimpRules {
    pub identity: bool,
    pub pivot: bool,
    pub lc: bool,
}

impl Default for SimpRules {
    fn default() -> Self {
        SimpRules {
            identity: true,
            pivot: true,
            lc: true,
        }
    }
}

/// Normalise to graph-like form, then remove interior identities and apply
/// pivot and local complementation simplifications until none applies.
/// Candidates are always taken in increasing id order.
pub fn simplify_to_fixpoint(d: &ZxDiagram) -> (ZxDiagram, Vec<RewriteStep>) {
    simplify_with(d, SimpRules::default())
}

pub fn simplify_with(d: &ZxDiagram, rules: SimpRules) -> (ZxDiagram, Vec<RewriteStep>) {
    let mut log = RewriteLog::new();
    let mut d = to_graph_like_logged(d, &mut log);
    loop {
        let mut changed = false;
        let spiders: Vec<V> = d.spiders().collect();

        if rules.identity {
            for &v in &spiders {
                if d.contains(v) {
                    if let Some((a, b)) = identity_candidate(&d, v) {
                        remove_identity_graph_like(&mut d, v, a, b, &mut log);
                        changed = true;
                    }
                }
            }
        }
        if rules.pivot {
            for &u in &spiders {
                if !d.contains(u) || !d.phase(u).is_pauli() || !d.is_interior(u) {
                    continue;
                }
                let partner = d.neighbors(u).find(|&v| check_pivot_simp(&d, u, v));
                if let Some(v) = partner {
                    pivot_simp_unchecked(&mut d, u, v);
                    log.push(RewriteRule::PivotSimp, &[u, v]);
                    changed = true;
                }
            }
        }
        if rules.lc {
            for &u in &spiders {
                if d.contains(u) && check_lc_simp(&d, u) {
                    lc_simp_unchecked(&mut d, u);
                    log.push(RewriteRule::LcSimp, &[u]);
                    changed = true;
                }
            }
        }
        if !changed {
            return (d, log.into_steps());
        }
    }
}
