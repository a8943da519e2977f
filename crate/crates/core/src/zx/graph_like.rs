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

//! Normalisation into graph-like form.

use super::{EdgeType, VertexKind, ZxDiagram, V};
use crate::phase::Phase;
use crate::rewrite::{color_change_unchecked, fuse_unchecked, RewriteLog, RewriteRule};

/// Which of the four graph-like conditions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphLikeCertificate {
    /// Every spider is a Z spider.
    pub all_z: bool,
    /// Every edge between two spiders is a Hadamard edge.
    pub hadamard_only: bool,
    /// No parallel edges and no self-loops.
    pub simple_graph: bool,
    /// Every boundary has one edge, to a Z spider, and no spider touches more
    /// than one boundary.
    pub boundaries_ok: bool,
}

impl GraphLikeCertificate {
    pub fn all(&self) -> bool {
        self.all_z && self.hadamard_only && self.simple_graph && self.boundaries_ok
    }
}

pub fn graph_like_certificate(d: &ZxDiagram) -> GraphLikeCertificate {
    let mut cert = GraphLikeCertificate {
        all_z: true,
        hadamard_only: true,
        simple_graph: true,
        boundaries_ok: true,
    };
    for v in d.vertices() {
        let boundary = d.is_boundary(v);
        if !boundary && d.kind(v) != VertexKind::Z {
            cert.all_z = false;
        }
        let mut boundary_nbrs = 0;
        for (w, m) in d.incident(v) {
            if w == v || m.total() > 1 {
                cert.simple_graph = false;
            }
            if w == v {
                continue;
            }
            match (boundary, d.is_boundary(w)) {
                (false, false) if m.simple > 0 => cert.hadamard_only = false,
                (false, true) => boundary_nbrs += 1,
                (true, true) => cert.boundaries_ok = false,
                (true, false) if d.kind(w) != VertexKind::Z => cert.boundaries_ok = false,
                _ => {}
            }
        }
        if (boundary && d.degree(v) != 1) || boundary_nbrs > 1 {
            cert.boundaries_ok = false;
        }
    }
    cert
}

pub fn is_graph_like(d: &ZxDiagram) -> bool {
    graph_like_certificate(d).all()
}

/// Bring a diagram into graph-like form: colour-change every X spider, fuse
/// along plain edges, cancel parallel Hadamard pairs and insert identity
/// spiders where boundaries break the boundary condition. Diagrams that are
/// already graph-like are returned unchanged.
pub fn to_graph_like(d: &ZxDiagram) -> ZxDiagram {
    to_graph_like_logged(d, &mut RewriteLog::new())
}

pub fn to_graph_like_logged(d: &ZxDiagram, log: &mut RewriteLog) -> ZxDiagram {
    let mut d = d.clone();

    let xs: Vec<V> = d
        .spiders()
        .filter(|&v| d.kind(v) == VertexKind::X)
        .collect();
    for v in xs {
        color_change_unchecked(&mut d, v);
        log.push(RewriteRule::ColorChange, &[v]);
    }

    let spiders: Vec<V> = d.spiders().collect();
    for v in spiders {
        if !d.contains(v) {
            continue;
        }
        loop {
            let w = d
                .neighbors(v)
                .find(|&w| !d.is_boundary(w) && d.edge_mult(v, w).simple > 0);
            let Some(w) = w else { break };
            fuse_unchecked(&mut d, v, w);
            log.push(RewriteRule::Fusion, &[v, w]);
        }
    }

    for v in d.spiders().collect::<Vec<_>>() {
        for w in d.neighbor_vec(v) {
            if w > v && d.edge_mult(v, w).hadamard >= 2 {
                let m = d.remove_all_edges(v, w);
                if m.hadamard % 2 == 1 {
                    d.add_edge(v, w, EdgeType::Hadamard);
                }
                for _ in 0..m.hadamard / 2 {
                    log.push(RewriteRule::Hopf, &[v, w]);
                }
            }
        }
    }

    repair_boundaries(&mut d, log);
    d
}

/// `b - t - n` becomes `b - (t.H) - z - H - n` for a fresh phase-free `z`.
fn insert_identity(d: &mut ZxDiagram, b: V, n: V, log: &mut RewriteLog) -> V {
    let t = d.edge_type(b, n).expect("boundary edges are single");
    d.remove_all_edges(b, n);
    let z = d.add_spider(Phase::zero());
    d.add_edge(b, z, t.toggle());
    d.add_edge(z, n, EdgeType::Hadamard);
    log.push(RewriteRule::Identity, &[z]);
    z
}

fn repair_boundaries(d: &mut ZxDiagram, log: &mut RewriteLog) {
    let boundaries: Vec<V> = d.inputs().iter().chain(d.outputs()).copied().collect();
    for &b in &boundaries {
        let n = match d.neighbors(b).next() {
            Some(n) => n,
            None => continue,
        };
        if d.is_boundary(n) {
            // bare wire: b - t - n becomes b - z1 - H - z2 - (t.H) - n
            let t = d.edge_type(b, n).unwrap();
            d.remove_all_edges(b, n);
            let z1 = d.add_spider(Phase::zero());
            let z2 = d.add_spider(Phase::zero());
            d.add_edge(b, z1, EdgeType::Simple);
            d.add_edge(z1, z2, EdgeType::Hadamard);
            d.add_edge(z2, n, t.toggle());
            log.push(RewriteRule::Identity, &[z1, z2]);
        }
    }
    for &b in &boundaries {
        let n = match d.neighbors(b).next() {
            Some(n) => n,
            None => continue,
        };
        // keep the first boundary in input/output order on each spider
        let first = boundaries.iter().find(|&&c| d.connected(c, n)).copied();
        if first != Some(b) {
            insert_identity(d, b, n, log);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{random_circuit, Circuit, CircuitParams, Gate};
    use crate::oracle::{equal_up_to_scalar, evaluate_diagram};
    use crate::zx::from_circuit;
    use proptest::prelude::*;

    fn same(a: &ZxDiagram, b: &ZxDiagram) -> bool {
        equal_up_to_scalar(
            &evaluate_diagram(a).unwrap(),
            &evaluate_diagram(b).unwrap(),
            1e-8,
        )
        .unwrap()
    }

    #[test]
    fn fuses_plain_pair() {
        let mut d = ZxDiagram::new();
        let a = d.add_spider(Phase::new(1, 4));
        let b = d.add_spider(Phase::new(1, 2));
        d.add_edge(a, b, EdgeType::Simple);
        let g = to_graph_like(&d);
        assert_eq!(g.num_vertices(), 1);
        assert_eq!(g.phase(g.spiders().next().unwrap()), Phase::new(3, 4));
    }

    #[test]
    fn cancels_parallel_hadamards() {
        let mut d = ZxDiagram::new();
        let i = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let o = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let a = d.add_spider(Phase::new(1, 4));
        let b = d.add_spider(Phase::new(1, 2));
        d.add_edge(i, a, EdgeType::Simple);
        d.add_edge(b, o, EdgeType::Simple);
        d.add_edge(a, b, EdgeType::Hadamard);
        d.add_edge(a, b, EdgeType::Hadamard);
        d.set_inputs(vec![i]);
        d.set_outputs(vec![o]);
        let g = to_graph_like(&d);
        assert!(!g.connected(a, b));
        assert!(same(&d, &g));
    }

    #[test]
    fn idempotent_on_graph_like() {
        let c = random_circuit(&CircuitParams::new(4, 40), 3).unwrap();
        let g = to_graph_like(&from_circuit(&c));
        let mut log = RewriteLog::new();
        assert_eq!(to_graph_like_logged(&g, &mut log), g);
        assert!(log.is_empty());
    }

    #[test]
    fn repairs_bare_wires_and_shared_boundaries() {
        // identity circuit, a Hadamard wire, and a single spider touching
        // two boundaries
        for gates in [vec![], vec![Gate::H(0)], vec![Gate::H(1), Gate::H(0)]] {
            let d = from_circuit(&Circuit::from_gates(2, gates).unwrap());
            let g = to_graph_like(&d);
            assert!(is_graph_like(&g));
            assert!(same(&d, &g));
        }
        let c = Circuit::from_gates(1, vec![Gate::ZPhase(0, Phase::new(1, 4))]).unwrap();
        let d = from_circuit(&c);
        let g = to_graph_like(&d);
        assert!(is_graph_like(&g));
        assert!(same(&d, &g));
    }

    #[test]
    fn certificate_flags() {
        let c = Circuit::from_gates(
            2,
            vec![Gate::Cnot {
                control: 0,
                target: 1,
            }],
        )
        .unwrap();
        let cert = graph_like_certificate(&from_circuit(&c));
        // the target boundary touches an X spider
        assert!(!cert.all_z && !cert.hadamard_only && cert.simple_graph && !cert.boundaries_ok);
        assert!(!cert.all());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn normalises_and_preserves(seed in 0u64..100_000, n in 1usize..6, len in 0usize..40) {
            let n = n.max(2);
            let c = random_circuit(&CircuitParams::new(n, len), seed).unwrap();
            let d = from_circuit(&c);
            let g = to_graph_like(&d);
            prop_assert!(is_graph_like(&g));
            prop_assert!(same(&d, &g));
            prop_assert_eq!(to_graph_like(&g), g);
        }
    }
}
