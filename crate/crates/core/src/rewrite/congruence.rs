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

//! The generalised local complementation and pivot congruences. Both apply
//! to spiders of any phase: the subject is unfused into a Clifford core,
//! which is complemented (or pivoted) exactly, and a leg spider that keeps
//! the original phase and any boundary wires.

use super::{precondition, RewriteError, RewriteRule};
use crate::phase::Phase;
use crate::zx::graph_ops::{complement_pairs, pivot_classes};
use crate::zx::{is_graph_like, pivot_in_place, EdgeType, ZxDiagram, V};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CongruenceKind {
    Lc,
    Pivot,
}

/// Where a congruence is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subject {
    Lc(V),
    Pivot(V, V),
}

impl Subject {
    pub fn vertices(&self) -> Vec<V> {
        match *self {
            Subject::Lc(u) => vec![u],
            Subject::Pivot(u, v) => vec![u, v],
        }
    }
}

/// Every vertex (for `Lc`) with degree above one, or every Hadamard edge
/// between two spiders (for `Pivot`), in increasing id order.
pub fn eligible_subjects(d: &ZxDiagram, kind: CongruenceKind) -> Vec<Subject> {
    match kind {
        CongruenceKind::Lc => d
            .spiders()
            .filter(|&u| d.degree(u) > 1)
            .map(Subject::Lc)
            .collect(),
        CongruenceKind::Pivot => {
            let mut out = Vec::new();
            for u in d.spiders() {
                for v in d.neighbors(u) {
                    if v > u && !d.is_boundary(v) && d.edge_type(u, v) == Some(EdgeType::Hadamard) {
                        out.push(Subject::Pivot(u, v));
                    }
                }
            }
            out
        }
    }
}

/// Split off a new spider holding `phase` and all boundary wires of `u`,
/// joined to `u` by a Hadamard edge.
fn attach_leg(d: &mut ZxDiagram, u: V, phase: Phase) -> V {
    let leg = d.add_spider(phase);
    for b in d.boundary_neighbors(u) {
        let t = d.edge_type(u, b).expect("graph-like");
        d.remove_all_edges(u, b);
        d.add_edge(leg, b, t);
    }
    d.add_edge(u, leg, EdgeType::Hadamard);
    leg
}

/// Complement the neighbourhood of `u`, add pi/2 to each neighbour, and move
/// the phase of `u` (shifted by pi/2) and its boundary wires onto a new leg
/// spider. `u` keeps phase pi/2. Returns the leg.
pub fn congruence_lc_unchecked(d: &mut ZxDiagram, u: V) -> V {
    let alpha = d.phase(u);
    let half = Phase::new(1, 2);
    let nu: Vec<V> = d.neighbors(u).filter(|&w| !d.is_boundary(w)).collect();
    complement_pairs(d, &nu);
    for &w in &nu {
        d.add_to_phase(w, half);
    }
    let leg = attach_leg(d, u, alpha + half);
    d.set_phase(u, half);
    leg
}

pub fn congruence_lc(d: &ZxDiagram, u: V) -> Result<ZxDiagram, RewriteError> {
    let r = RewriteRule::CongruenceLC;
    precondition(is_graph_like(d), r, &[u], "diagram is not graph-like")?;
    precondition(
        d.contains(u) && !d.is_boundary(u) && d.degree(u) > 1,
        r,
        &[u],
        "needs a spider of degree at least 2",
    )?;
    let mut d = d.clone();
    congruence_lc_unchecked(&mut d, u);
    Ok(d)
}

/// Pivot the graph along `uv`, add pi to the common neighbours, and move the
/// phases and boundary wires of `u` and `v` onto new leg spiders. Returns the
/// two legs.
pub fn congruence_pivot_unchecked(d: &mut ZxDiagram, u: V, v: V) -> (V, V) {
    let (pu, pv) = (d.phase(u), d.phase(v));
    let (_, _, common) = pivot_classes(d, u, v);
    pivot_in_place(d, u, v);
    for &w in &common {
        d.add_to_phase(w, Phase::pi());
    }
    let lu = attach_leg(d, u, pu);
    let lv = attach_leg(d, v, pv);
    d.set_phase(u, Phase::zero());
    d.set_phase(v, Phase::zero());
    (lu, lv)
}

pub fn congruence_pivot(d: &ZxDiagram, u: V, v: V) -> Result<ZxDiagram, RewriteError> {
    let r = RewriteRule::CongruencePivot;
    precondition(is_graph_like(d), r, &[u, v], "diagram is not graph-like")?;
    precondition(
        u != v
            && d.contains(u)
            && d.contains(v)
            && !d.is_boundary(u)
            && !d.is_boundary(v)
            && d.edge_type(u, v) == Some(EdgeType::Hadamard),
        r,
        &[u, v],
        "needs two spiders joined by a Hadamard edge",
    )?;
    let mut d = d.clone();
    congruence_pivot_unchecked(&mut d, u, v);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{random_circuit, CircuitParams};
    use crate::oracle::{equal_up_to_scalar, evaluate_diagram};
    use crate::rewrite::simplify_to_fixpoint;
    use crate::zx::{from_circuit, pivot_graph, to_graph_like, VertexKind};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn same(a: &ZxDiagram, b: &ZxDiagram) -> bool {
        equal_up_to_scalar(
            &evaluate_diagram(a).unwrap(),
            &evaluate_diagram(b).unwrap(),
            1e-8,
        )
        .unwrap()
    }

    fn triangle() -> ZxDiagram {
        let mut d = ZxDiagram::new();
        let vs: Vec<V> = (0..3).map(|k| d.add_spider(Phase::new(k, 4))).collect();
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            d.add_edge(vs[a], vs[b], EdgeType::Hadamard);
        }
        d
    }

    fn non_clifford_residues(d: &ZxDiagram) -> Vec<Phase> {
        let mut r: Vec<Phase> = d
            .spider_phases()
            .into_iter()
            .filter(|p| !p.is_clifford())
            .map(|p| Phase::from_rational(p.to_rational() % num_rational::Rational64::new(1, 2)))
            .collect();
        r.sort();
        r
    }

    fn sample_diagram(rng: &mut ChaCha8Rng) -> ZxDiagram {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(5..30);
        let c = random_circuit(&CircuitParams::new(n, len), rng.gen()).unwrap();
        let d = to_graph_like(&from_circuit(&c));
        if rng.gen_bool(0.5) {
            simplify_to_fixpoint(&d).0
        } else {
            d
        }
    }

    #[test]
    fn eligible_counts() {
        let mut d = ZxDiagram::new();
        d.add_spider(Phase::zero());
        d.add_spider(Phase::pi());
        assert!(eligible_subjects(&d, CongruenceKind::Lc).is_empty());
        assert!(eligible_subjects(&d, CongruenceKind::Pivot).is_empty());
        let t = triangle();
        assert_eq!(eligible_subjects(&t, CongruenceKind::Lc).len(), 3);
        assert_eq!(eligible_subjects(&t, CongruenceKind::Pivot).len(), 3);
    }

    #[test]
    fn lc_on_path_connects_ends() {
        let mut d = ZxDiagram::new();
        let i = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let o = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let a = d.add_spider(Phase::new(1, 4));
        let u = d.add_spider(Phase::new(1, 8));
        let b = d.add_spider(Phase::new(3, 4));
        d.add_edge(i, a, EdgeType::Simple);
        d.add_edge(a, u, EdgeType::Hadamard);
        d.add_edge(u, b, EdgeType::Hadamard);
        d.add_edge(b, o, EdgeType::Simple);
        d.set_inputs(vec![i]);
        d.set_outputs(vec![o]);
        let r = to_graph_like(&congruence_lc(&d, u).unwrap());
        assert!(r.connected(a, b));
        assert!(same(&d, &r));
        assert!(r.num_vertices() <= d.num_vertices() + 1);
        assert!(congruence_lc(&d, i).is_err());
    }

    #[test]
    fn randomised_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut done = 0;
        while done < 60 {
            let d = sample_diagram(&mut rng);
            let lcs = eligible_subjects(&d, CongruenceKind::Lc);
            let pivs = eligible_subjects(&d, CongruenceKind::Pivot);
            if lcs.is_empty() || pivs.is_empty() {
                continue;
            }
            let Subject::Lc(u) = lcs[rng.gen_range(0..lcs.len())] else {
                unreachable!()
            };
            let r = congruence_lc(&d, u).unwrap();
            assert!(is_graph_like(&r));
            assert!(same(&d, &r), "lc at {u}");
            assert_eq!(non_clifford_residues(&d), non_clifford_residues(&r));

            let Subject::Pivot(u, v) = pivs[rng.gen_range(0..pivs.len())] else {
                unreachable!()
            };
            let r = congruence_pivot(&d, u, v).unwrap();
            assert!(is_graph_like(&r));
            assert!(same(&d, &r), "pivot at {u} {v}");
            assert_eq!(non_clifford_residues(&d), non_clifford_residues(&r));
            assert_eq!(r.num_vertices(), d.num_vertices() + 2);

            // connectivity among the original ids is the graph pivot
            let g = pivot_graph(&d, u, v).unwrap();
            for a in d.spiders() {
                for b in d.spiders() {
                    assert_eq!(g.connected(a, b), r.connected(a, b));
                }
            }

            // three local complementations give the same map
            let mut t = d.clone();
            for w in [u, v, u] {
                congruence_lc_unchecked(&mut t, w);
            }
            assert!(same(&t, &r));
            done += 1;
        }
    }

    #[test]
    fn double_lc_is_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let d = sample_diagram(&mut rng);
            let lcs = eligible_subjects(&d, CongruenceKind::Lc);
            if let Some(&Subject::Lc(u)) = lcs.first() {
                let r = congruence_lc(&congruence_lc(&d, u).unwrap(), u).unwrap();
                assert!(same(&to_graph_like(&r), &to_graph_like(&d)));
            }
        }
    }
}
