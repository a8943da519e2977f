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

//! Spider fusion, identity removal, colour change and the Hopf rule. These
//! work on arbitrary diagrams, including ones with parallel edges.

use super::{precondition, RewriteError, RewriteRule};
use crate::phase::Phase;
use crate::zx::{EdgeType, VertexKind, ZxDiagram, V};

fn is_spider(d: &ZxDiagram, v: V) -> bool {
    d.contains(v) && !d.is_boundary(v)
}

/// Drop plain self-loops at `v`; each Hadamard self-loop contributes pi.
pub(crate) fn resolve_loops(d: &mut ZxDiagram, v: V) {
    let m = d.remove_all_edges(v, v);
    if m.hadamard % 2 == 1 {
        d.add_to_phase(v, Phase::pi());
    }
}

pub fn check_fuse(d: &ZxDiagram, u: V, v: V) -> bool {
    u != v
        && is_spider(d, u)
        && is_spider(d, v)
        && d.kind(u) == d.kind(v)
        && d.edge_mult(u, v).simple > 0
}

/// Merge `v` into `u` along a plain edge. Any other edges between them
/// become self-loops on `u` and are resolved immediately.
pub fn fuse_unchecked(d: &mut ZxDiagram, u: V, v: V) {
    d.remove_edge(u, v, EdgeType::Simple);
    d.add_to_phase(u, d.phase(v));
    let incident: Vec<_> = d.incident(v).collect();
    for (w, m) in incident {
        let target = if w == v { u } else { w };
        d.add_edges(u, target, m);
    }
    d.remove_vertex(v);
    resolve_loops(d, u);
}

pub fn fuse(d: &ZxDiagram, u: V, v: V) -> Result<ZxDiagram, RewriteError> {
    precondition(
        check_fuse(d, u, v),
        RewriteRule::Fusion,
        &[u, v],
        "needs two same-coloured spiders joined by a plain edge",
    )?;
    let mut d = d.clone();
    fuse_unchecked(&mut d, u, v);
    Ok(d)
}

pub fn check_color_change(d: &ZxDiagram, v: V) -> bool {
    is_spider(d, v)
}

/// Swap Z and X, toggling the type of every incident edge.
pub fn color_change_unchecked(d: &mut ZxDiagram, v: V) {
    let k = match d.kind(v) {
        VertexKind::Z => VertexKind::X,
        _ => VertexKind::Z,
    };
    d.set_kind(v, k);
    for w in d.neighbor_vec(v) {
        let m = d.remove_all_edges(v, w);
        for _ in 0..m.simple {
            d.add_edge(v, w, EdgeType::Hadamard);
        }
        for _ in 0..m.hadamard {
            d.add_edge(v, w, EdgeType::Simple);
        }
    }
}

pub fn color_change(d: &ZxDiagram, v: V) -> Result<ZxDiagram, RewriteError> {
    precondition(
        check_color_change(d, v),
        RewriteRule::ColorChange,
        &[v],
        "not a spider",
    )?;
    let mut d = d.clone();
    color_change_unchecked(&mut d, v);
    Ok(d)
}

/// The two edge ends of a phase-free arity-2 spider.
fn identity_legs(d: &ZxDiagram, v: V) -> Option<[(V, EdgeType); 2]> {
    if !is_spider(d, v) || !d.phase(v).is_zero() || d.degree(v) != 2 || d.connected(v, v) {
        return None;
    }
    let mut legs = Vec::new();
    for (w, m) in d.incident(v) {
        for _ in 0..m.simple {
            legs.push((w, EdgeType::Simple));
        }
        for _ in 0..m.hadamard {
            legs.push((w, EdgeType::Hadamard));
        }
    }
    Some([legs[0], legs[1]])
}

pub fn check_remove_identity(d: &ZxDiagram, v: V) -> bool {
    match identity_legs(d, v) {
        // a boundary cannot take a self-loop
        Some([(a, _), (b, _)]) => a != b || !d.is_boundary(a),
        None => false,
    }
}

/// Replace a phase-free spider with two legs by a single wire.
pub fn remove_identity_unchecked(d: &mut ZxDiagram, v: V) {
    let [(a, ta), (b, tb)] = identity_legs(d, v).expect("not an identity spider");
    d.remove_vertex(v);
    d.add_edge(a, b, ta.compose(tb));
    if a == b {
        resolve_loops(d, a);
    }
}

pub fn remove_identity(d: &ZxDiagram, v: V) -> Result<ZxDiagram, RewriteError> {
    precondition(
        check_remove_identity(d, v),
        RewriteRule::Identity,
        &[v],
        "needs a phase-free spider with exactly two legs",
    )?;
    let mut d = d.clone();
    remove_identity_unchecked(&mut d, v);
    Ok(d)
}

fn hopf_type(d: &ZxDiagram, u: V, v: V) -> EdgeType {
    if d.kind(u) == d.kind(v) {
        EdgeType::Hadamard
    } else {
        EdgeType::Simple
    }
}

pub fn check_hopf(d: &ZxDiagram, u: V, v: V) -> bool {
    if u == v || !is_spider(d, u) || !is_spider(d, v) {
        return false;
    }
    let m = d.edge_mult(u, v);
    match hopf_type(d, u, v) {
        EdgeType::Hadamard => m.hadamard >= 2,
        EdgeType::Simple => m.simple >= 2,
    }
}

/// Cancel a pair of parallel edges: plain edges between opposite colours or
/// Hadamard edges between equal colours.
pub fn hopf_unchecked(d: &mut ZxDiagram, u: V, v: V) {
    let ty = hopf_type(d, u, v);
    d.remove_edge(u, v, ty);
    d.remove_edge(u, v, ty);
}

pub fn hopf(d: &ZxDiagram, u: V, v: V) -> Result<ZxDiagram, RewriteError> {
    precondition(
        check_hopf(d, u, v),
        RewriteRule::Hopf,
        &[u, v],
        "needs a cancellable pair of parallel edges",
    )?;
    let mut d = d.clone();
    hopf_unchecked(&mut d, u, v);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{equal_up_to_scalar, evaluate_diagram};

    fn same(a: &ZxDiagram, b: &ZxDiagram) -> bool {
        equal_up_to_scalar(
            &evaluate_diagram(a).unwrap(),
            &evaluate_diagram(b).unwrap(),
            1e-8,
        )
        .unwrap()
    }

    /// in - a - b - out with a chosen edge between a and b
    fn pair(ka: VertexKind, kb: VertexKind, m: &[EdgeType]) -> (ZxDiagram, V, V) {
        let mut d = ZxDiagram::new();
        let i = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let o = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let a = d.add_vertex(ka, Phase::new(1, 4));
        let b = d.add_vertex(kb, Phase::new(1, 2));
        d.add_edge(i, a, EdgeType::Simple);
        d.add_edge(b, o, EdgeType::Hadamard);
        for &t in m {
            d.add_edge(a, b, t);
        }
        d.set_inputs(vec![i]);
        d.set_outputs(vec![o]);
        (d, a, b)
    }

    #[test]
    fn fusion_adds_phases() {
        let (d, a, b) = pair(VertexKind::Z, VertexKind::Z, &[EdgeType::Simple]);
        let f = fuse(&d, a, b).unwrap();
        assert_eq!(f.phase(a), Phase::new(3, 4));
        assert!(same(&d, &f));
    }

    #[test]
    fn fusion_with_extra_hadamard_edge() {
        let (d, a, b) = pair(
            VertexKind::X,
            VertexKind::X,
            &[EdgeType::Simple, EdgeType::Hadamard],
        );
        let f = fuse(&d, a, b).unwrap();
        assert!(!f.connected(a, a));
        assert!(same(&d, &f));
    }

    #[test]
    fn fusion_rejects_mixed_colours() {
        let (d, a, b) = pair(VertexKind::Z, VertexKind::X, &[EdgeType::Simple]);
        assert!(fuse(&d, a, b).is_err());
    }

    #[test]
    fn hopf_both_forms() {
        let (d, a, b) = pair(VertexKind::Z, VertexKind::Z, &[EdgeType::Hadamard; 2]);
        let h = hopf(&d, a, b).unwrap();
        assert!(!h.connected(a, b));
        assert!(same(&d, &h));
        let (d, a, b) = pair(VertexKind::Z, VertexKind::X, &[EdgeType::Simple; 3]);
        let h = hopf(&d, a, b).unwrap();
        assert_eq!(h.edge_mult(a, b).simple, 1);
        assert!(same(&d, &h));
        let (d, a, b) = pair(VertexKind::Z, VertexKind::X, &[EdgeType::Hadamard; 2]);
        assert!(hopf(&d, a, b).is_err());
    }

    #[test]
    fn colour_change_and_identity() {
        let (d, a, b) = pair(VertexKind::X, VertexKind::Z, &[EdgeType::Hadamard]);
        let c = color_change(&d, a).unwrap();
        assert_eq!(c.kind(a), VertexKind::Z);
        assert_eq!(c.edge_type(a, b), Some(EdgeType::Simple));
        assert!(same(&d, &c));

        let mut d = ZxDiagram::new();
        let i = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let o = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let z = d.add_vertex(VertexKind::X, Phase::zero());
        d.add_edge(i, z, EdgeType::Hadamard);
        d.add_edge(z, o, EdgeType::Simple);
        d.set_inputs(vec![i]);
        d.set_outputs(vec![o]);
        let r = remove_identity(&d, z).unwrap();
        assert_eq!(r.edge_type(i, o), Some(EdgeType::Hadamard));
        assert!(same(&d, &r));
        assert!(remove_identity(&r, i).is_err());
    }

    #[test]
    fn hadamard_self_loop_is_pi() {
        let (mut d, a, _) = pair(VertexKind::Z, VertexKind::Z, &[EdgeType::Hadamard]);
        let before = d.clone();
        d.add_edge(a, a, EdgeType::Hadamard);
        let mut r = d.clone();
        resolve_loops(&mut r, a);
        assert_eq!(r.phase(a), Phase::new(5, 4));
        assert!(same(&d, &r));
        assert!(!same(&before, &d));
    }
}
